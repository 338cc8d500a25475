#include "rlk/fiblinks.hpp"

#include <stdexcept>
#include <utility>

namespace rlk {

namespace {

// The (-2, 2, ..., -2, 2) block of 2k entries.
void append_pairs(std::vector<Int>& out, int k) {
    for (int i = 0; i < k; ++i) {
        out.emplace_back(-2);
        out.emplace_back(2);
    }
}

std::vector<Int> negated(const std::vector<Int>& v) {
    std::vector<Int> out;
    out.reserve(v.size());
    for (const Int& q : v) out.push_back(-q);
    return out;
}

// Quotients of the recursion, without the postcondition check.
std::vector<Int> recursion_quotients(int n, int j) {
    const int k = (n - 1) / 2;
    if (j % 3 == 1) {
        // s-image ladder: s([n]_1) = [(-2,2) x k], then
        // s([n]_{j}) = [(-2,2) x k, -(n+1), -(n+1), -s([n]_{j-3})].
        if (n == 1 && j > 1)
            throw std::domain_error(
                "recursive_even_expansion: no recursion base for n = 1, j = 1 mod 3, j > 1");
        std::vector<Int> out;
        if (j == 1) {
            append_pairs(out, k);
            return out;
        }
        append_pairs(out, k);
        out.emplace_back(-(n + 1));
        out.emplace_back(-(n + 1));
        std::vector<Int> tail = negated(recursion_quotients(n, j - 3));
        out.insert(out.end(), tail.begin(), tail.end());
        return out;
    }
    // Direct ladder: [n]_2 = [n+1, (-2,2) x k],
    // [n]_3 = [n+1, (-2,2) x k, -(n+1)], and
    // [n]_j = [n+1, (-2,2) x k, -(n+1), -[n]_{j-3}].
    std::vector<Int> out;
    out.emplace_back(n + 1);
    append_pairs(out, k);
    if (j == 2) return out;
    out.emplace_back(-(n + 1));
    if (j == 3) return out;
    std::vector<Int> tail = negated(recursion_quotients(n, j - 3));
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

// [2,2, -2,-2, 2,2, ...]: m same-sign pairs with alternating sign.
std::vector<Int> family_a_quotients(int m) {
    std::vector<Int> out;
    out.reserve(2 * static_cast<std::size_t>(m));
    for (int p = 0; p < m; ++p) {
        const int s = p % 2 == 0 ? 2 : -2;
        out.emplace_back(s);
        out.emplace_back(s);
    }
    return out;
}

}  // namespace

FibLinkParams::FibLinkParams(int n, int j) : n(n), j(j) {
    if (n < 1) throw std::domain_error("FibLinkParams: n must be >= 1, got " + std::to_string(n));
    if (j < 1) throw std::domain_error("FibLinkParams: j must be >= 1, got " + std::to_string(j));
}

int FibLinkParams::half_twists() const {
    if (n % 2 == 0) throw std::logic_error("FibLinkParams: k is defined only for odd n");
    return (n - 1) / 2;
}

RationalLink fib_link(const FibLinkParams& params) {
    return RationalLink(
        ContinuedFraction::repeated(Int(params.n), static_cast<std::size_t>(params.j)));
}

LinkKind classify(const FibLinkParams& params) {
    bool knot = params.n % 2 == 0 ? params.j % 2 == 0 : params.j % 3 != 2;
    return knot ? LinkKind::knot : LinkKind::two_component;
}

RecursiveExpansion recursive_even_expansion(const FibLinkParams& params) {
    if (params.n % 2 == 0)
        throw std::domain_error(
            "recursive_even_expansion: n must be odd (even n is already an even notation)");
    RecursiveExpansion out;
    out.s_applied = params.j % 3 == 1;
    out.quotients = ContinuedFraction(recursion_quotients(params.n, params.j));
    return out;
}

FamilyExpansion fibonacci_ratio_family(int m, RatioFamily family) {
    if (m < 1) throw std::domain_error("fibonacci_ratio_family: m must be >= 1");
    const auto f = [](int i) { return fibonacci_number(static_cast<unsigned long>(i)); };
    FamilyExpansion out;
    switch (family) {
        case RatioFamily::A:
            out.fraction = Fraction(f(3 * m + 2), f(3 * m));
            out.quotients = ContinuedFraction(family_a_quotients(m));
            break;
        case RatioFamily::B: {
            // [2, -2,-2, 2,2, ..., final single (-1)^m * 2], length 2m.
            out.fraction = Fraction(f(3 * m + 1), f(3 * m));
            std::vector<Int> q;
            q.emplace_back(2);
            for (int p = 1; p < m; ++p) {
                const int s = p % 2 == 1 ? -2 : 2;
                q.emplace_back(s);
                q.emplace_back(s);
            }
            q.emplace_back(m % 2 == 1 ? -2 : 2);
            out.quotients = ContinuedFraction(std::move(q));
            break;
        }
        case RatioFamily::C: {
            // [2, -(family A)], unrolled: length 2m+1.
            out.fraction = Fraction(f(3 * m + 3), f(3 * m + 2));
            std::vector<Int> q;
            q.emplace_back(2);
            std::vector<Int> tail = negated(family_a_quotients(m));
            q.insert(q.end(), tail.begin(), tail.end());
            out.quotients = ContinuedFraction(std::move(q));
            break;
        }
    }
    if (evaluate(out.quotients) != out.fraction)
        throw std::logic_error("fibonacci_ratio_family: expansion does not match its fraction");
    return out;
}

std::string to_string(ExpansionRoute route) {
    switch (route) {
        case ExpansionRoute::direct_notation: return "direct";
        case ExpansionRoute::recursive: return "recursive";
        case ExpansionRoute::ratio_family: return "ratio-family";
    }
    return "?";
}

FibExpansion even_form(const FibLinkParams& params) {
    FibExpansion out;
    if (params.n % 2 == 0) {
        out.quotients =
            ContinuedFraction::repeated(Int(params.n), static_cast<std::size_t>(params.j));
        out.route = ExpansionRoute::direct_notation;
        out.s_applied = false;
    } else if (params.n == 1 && params.j % 3 == 1 && params.j > 1) {
        // The recursion has no base here; the negated family-A expansion
        // gives s(F_{j+1}/F_j) = F_{j+1}/-F_{j-1} directly.
        FamilyExpansion a = fibonacci_ratio_family((params.j - 1) / 3, RatioFamily::A);
        out.quotients = a.quotients.negated();
        out.route = ExpansionRoute::ratio_family;
        out.s_applied = true;
    } else {
        RecursiveExpansion r = recursive_even_expansion(params);
        out.quotients = std::move(r.quotients);
        out.route = ExpansionRoute::recursive;
        out.s_applied = r.s_applied;
    }

    Fraction target = fib_link(params).fraction();
    out.expanded = out.s_applied ? s_transform(target) : target;
    if (evaluate(out.quotients) != out.expanded || !out.quotients.all_even_nonzero())
        throw std::logic_error("even_form: expansion postcondition failed for n = " +
                               std::to_string(params.n) + ", j = " + std::to_string(params.j));
    return out;
}

ClosedFormN closed_form_index(const FibLinkParams& params) {
    const long n = params.n, j = params.j;
    switch (n % 4) {
        case 1:
            return {static_cast<unsigned long>((j + 2) / 3 * (n - 2) + j + 1),
                    ClosedFormBranch::one_mod4};
        case 3:
            return {static_cast<unsigned long>((j + 2) / 3 * (n + 2) - (j + 1)),
                    ClosedFormBranch::three_mod4};
        case 2:
            return {static_cast<unsigned long>(j + 1), ClosedFormBranch::two_mod4};
        default:
            return {j % 2 == 1 ? 0ul : 1ul, ClosedFormBranch::zero_mod4};
    }
}

GF2Poly mod2_closed_form(const FibLinkParams& params) {
    return mod2(fibonacci_poly(closed_form_index(params).N));
}

bool MatrixIdentityReport::all_pass() const {
    for (const IdentityCheck& c : checks)
        if (!c.pass) return false;
    return true;
}

MatrixIdentityReport verify_matrix_identities(int n) {
    if (n < 3 || n % 2 == 0)
        throw std::domain_error("verify_matrix_identities: n must be odd and >= 3");
    const int k = (n - 1) / 2;

    const Mobius g(3, 2, -2, -1);
    const Mobius l(n + 1, 1, 1, 0);
    const Mobius t(1, 1, 0, -1);
    const Mobius q(-(n + 1), 1, 1, 0);
    const Mobius r(1, 0, 0, -1);
    const Mobius s(1, 0, -1, 1);
    const Mobius p(n, 1, 1, 0);

    const Mobius gk = g.pow(static_cast<unsigned>(k));
    const Mobius m = l * gk * t;
    const Mobius h = gk * q.pow(2) * r;

    MatrixIdentityReport report{n, {}};
    report.checks.push_back(
        {"G^k = (1+2k, 2k / -2k, 1-2k)",
         gk == Mobius(1 + 2 * k, 2 * k, -2 * k, 1 - 2 * k)});
    report.checks.push_back({"L G^k T = P^2", projectively_equal(m, p.pow(2))});
    report.checks.push_back({"S P^3 = (G^k Q^2 R) S", projectively_equal(s * p.pow(3), h * s)});
    return report;
}

}  // namespace rlk
