#include "rlk/verify.hpp"

#include <random>
#include <utility>

#include "rlk/fiblinks.hpp"
#include "rlk/links.hpp"
#include "rlk/lissajous.hpp"
#include "rlk/poly.hpp"
#include "rlk/render.hpp"

namespace rlk {

namespace {

class Checker {
public:
    explicit Checker(std::string name) { result_.name = std::move(name); }

    void expect(bool ok, const std::string& what) {
        ++result_.cases;
        if (!ok) {
            ++result_.failures;
            if (result_.detail.empty()) result_.detail = what;
        }
    }

    CheckResult take() { return std::move(result_); }

private:
    CheckResult result_;
};

std::string cell(int n, int j) {
    return "n = " + std::to_string(n) + ", j = " + std::to_string(j);
}

// Uniform draw in [1, bound]; modulo bias is irrelevant here.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound + 1; }

CheckResult closed_form_sweep(const VerifyOptions& opt, bool odd) {
    Checker check(odd ? "mod-2 conway closed form, odd n" : "mod-2 conway closed form, even n");
    for (int n = odd ? 1 : 2; n <= opt.max_n; n += 2) {
        for (int j = 1; j <= opt.max_j; ++j) {
            FibLinkParams params(n, j);
            FibExpansion e = even_form(params);
            GF2Poly lhs = mod2(conway_polynomial(e.quotients));
            GF2Poly rhs = mod2_closed_form(params);
            check.expect(lhs == rhs, cell(n, j) + ": " + to_text(lhs) + " vs " + to_text(rhs));
        }
    }
    return check.take();
}

CheckResult torus_identities() {
    Checker check("torus conway polynomials and matrix-power identity");
    const PolyMat x{IntPoly::monomial(1, 1), IntPoly::constant(1), IntPoly::constant(1),
                    IntPoly()};
    PolyMat power = x;
    for (unsigned long m = 1; m <= 40; ++m) {
        check.expect(torus_conway(m) == fibonacci_poly(m),
                     "torus m = " + std::to_string(m));
        bool entries = power.a == fibonacci_poly(m + 1) && power.b == fibonacci_poly(m) &&
                       power.c == fibonacci_poly(m) && power.d == fibonacci_poly(m - 1);
        check.expect(entries, "matrix power m = " + std::to_string(m));
        power = power * x;
    }
    return check.take();
}

CheckResult alexander_forms(const VerifyOptions& opt) {
    Checker check("alexander alternating form, symmetry, value at 1");
    for (int k = 0; k <= 8; ++k) {
        LaurentPoly got = alexander_polynomial(fibonacci_poly(2ul * k + 1));
        LaurentPoly want;
        for (int i = 0; i <= k; ++i) {
            Int sign = (k - i) % 2 == 0 ? 1 : -1;
            want = want + LaurentPoly(i, {sign});
            if (i > 0) want = want + LaurentPoly(-i, {sign});
        }
        check.expect(got == want, "alternating form k = " + std::to_string(k) + ": " +
                                      to_text(got) + " vs " + to_text(want));
    }
    std::mt19937_64 rng(opt.seed + 4);
    for (int trial = 0; trial < 200; ++trial) {
        Int alpha(draw(rng, 4999) * 2 + 1);  // odd, 3..9999
        Int beta(draw(rng, 9998));
        Int g;
        mpz_gcd(g.get_mpz_t(), alpha.get_mpz_t(), beta.get_mpz_t());
        if (beta >= alpha || g != 1) {
            --trial;
            continue;
        }
        Fraction f(alpha, beta);
        LaurentPoly delta =
            alexander_polynomial(conway_polynomial(link_even_expansion(f).quotients));
        check.expect(delta == delta.reciprocal_image(), "symmetry for " + f.str());
        check.expect(abs(delta.at_one()) == 1, "value at 1 for " + f.str());
    }
    return check.take();
}

CheckResult matrix_identities() {
    Checker check("moebius matrix identities");
    for (int n = 3; n <= 19; n += 2) {
        MatrixIdentityReport report = verify_matrix_identities(n);
        for (const IdentityCheck& c : report.checks)
            check.expect(c.pass, "n = " + std::to_string(n) + ": " + c.name);
    }
    return check.take();
}

CheckResult ratio_families() {
    Checker check("fibonacci ratio families");
    for (int m = 1; m <= 10; ++m) {
        const auto f = [](int i) { return fibonacci_number(static_cast<unsigned long>(i)); };
        FamilyExpansion a = fibonacci_ratio_family(m, RatioFamily::A);
        FamilyExpansion b = fibonacci_ratio_family(m, RatioFamily::B);
        FamilyExpansion c = fibonacci_ratio_family(m, RatioFamily::C);
        std::string at = "m = " + std::to_string(m);
        check.expect(a.fraction == Fraction(f(3 * m + 2), f(3 * m)) &&
                         evaluate(a.quotients) == a.fraction &&
                         a.quotients.size() == 2 * static_cast<std::size_t>(m),
                     "family A " + at);
        check.expect(b.fraction == Fraction(f(3 * m + 1), f(3 * m)) &&
                         evaluate(b.quotients) == b.fraction &&
                         b.quotients.size() == 2 * static_cast<std::size_t>(m),
                     "family B " + at);
        check.expect(c.fraction == Fraction(f(3 * m + 3), f(3 * m + 2)) &&
                         evaluate(c.quotients) == c.fraction &&
                         c.quotients.size() == 2 * static_cast<std::size_t>(m) + 1,
                     "family C " + at);
    }
    return check.take();
}

CheckResult expansion_round_trip(const VerifyOptions& opt) {
    Checker check("even expansion round trip");
    std::mt19937_64 rng(opt.seed + 7);
    for (int trial = 0; trial < 1000; ++trial) {
        Int alpha(draw(rng, 1000000));
        Int beta(draw(rng, static_cast<std::uint64_t>(alpha.get_ui())));
        Int g;
        mpz_gcd(g.get_mpz_t(), alpha.get_mpz_t(), beta.get_mpz_t());
        if (g != 1) {
            --trial;
            continue;
        }
        Fraction f(alpha, beta);
        EvenExpansion e = even_expansion(f);
        Fraction expect = e.s_applied ? s_transform(f) : f;
        Fraction value = evaluate(e.quotients);
        std::string at = f.str();
        check.expect(value == expect && e.expanded == expect, "round trip for " + at);
        check.expect(e.quotients.all_even_nonzero(), "even quotients for " + at);
        // Parity law: length m even <=> (num, den) = (1, 0) mod 2.
        bool num_odd = mpz_odd_p(value.num().get_mpz_t());
        bool den_odd = mpz_odd_p(value.den().get_mpz_t());
        bool m_even = e.quotients.size() % 2 == 0;
        check.expect(m_even ? (num_odd && !den_odd) : (!num_odd && den_odd),
                     "parity law for " + at);
    }
    return check.take();
}

CheckResult classification_sweep() {
    Checker check("classification against determinant parity");
    for (int n = 1; n <= 10; ++n) {
        for (int j = 1; j <= 20; ++j) {
            FibLinkParams params(n, j);
            int expected = classify(params) == LinkKind::knot ? 1 : 2;
            check.expect(component_count(fib_link(params).fraction()) == expected, cell(n, j));
        }
    }
    return check.take();
}

CheckResult obstruction_coverage(const VerifyOptions& opt) {
    Checker check("lissajous obstruction coverage");

    LissajousVerdict trefoil = obstruction(from_notation(ContinuedFraction({1, 1, 1})));
    check.expect(trefoil.status == LissajousStatus::obstructed &&
                     trefoil.witness == mod2(fibonacci_poly(3)),
                 "trefoil");

    LissajousVerdict f33 = obstruction(fib_link(FibLinkParams(3, 3)));
    check.expect(f33.status == LissajousStatus::inconclusive && f33.witness.is_one(),
                 "C(3,3,3)");

    LissajousVerdict c44 = obstruction(from_notation(ContinuedFraction({4, 4})));
    check.expect(c44.status == LissajousStatus::inconclusive && c44.witness.is_one(), "C(4,4)");

    for (int n = 1; n <= opt.max_n; ++n) {
        for (int j = 1; j <= opt.max_j; ++j) {
            FibLinkParams params(n, j);
            if (classify(params) != LinkKind::knot) continue;
            LissajousVerdict verdict = obstruction(fib_link(params));
            check.expect(verdict.witness == mod2_closed_form(params),
                         "witness vs closed form at " + cell(n, j));
            if (fibonacci_non_lissajous(params))
                check.expect(verdict.status == LissajousStatus::obstructed,
                             "expected obstruction at " + cell(n, j));
        }
    }
    return check.take();
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    std::vector<CheckResult> out;
    out.push_back(closed_form_sweep(options, /*odd=*/true));
    out.push_back(closed_form_sweep(options, /*odd=*/false));
    out.push_back(torus_identities());
    out.push_back(alexander_forms(options));
    out.push_back(matrix_identities());
    out.push_back(ratio_families());
    out.push_back(expansion_round_trip(options));
    out.push_back(classification_sweep());
    out.push_back(obstruction_coverage(options));
    return out;
}

}  // namespace rlk
