#include "rlk/contfrac.hpp"

#include <stdexcept>
#include <utility>

namespace rlk {

ContinuedFraction::ContinuedFraction(std::vector<Int> quotients)
    : quotients_(std::move(quotients)) {
    for (std::size_t i = 1; i < quotients_.size(); ++i) {
        if (quotients_[i] == 0)
            throw std::invalid_argument("ContinuedFraction: zero quotient at position " +
                                        std::to_string(i + 1));
    }
}

ContinuedFraction ContinuedFraction::repeated(const Int& value, std::size_t count) {
    return ContinuedFraction(std::vector<Int>(count, value));
}

bool ContinuedFraction::all_even_nonzero() const {
    for (const Int& q : quotients_) {
        if (q == 0 || mpz_odd_p(q.get_mpz_t())) return false;
    }
    return true;
}

ContinuedFraction ContinuedFraction::negated() const {
    std::vector<Int> out;
    out.reserve(quotients_.size());
    for (const Int& q : quotients_) out.push_back(-q);
    return ContinuedFraction(std::move(out));
}

ContinuedFraction ContinuedFraction::concat(const ContinuedFraction& tail) const {
    std::vector<Int> out = quotients_;
    out.insert(out.end(), tail.quotients_.begin(), tail.quotients_.end());
    return ContinuedFraction(std::move(out));
}

Fraction evaluate(const ContinuedFraction& cf) {
    Mobius m = Mobius::identity();
    for (const Int& q : cf.quotients()) m = m * Mobius::quotient_step(q);
    return m.apply_to_infinity();
}

namespace {

// Even integer nearest to num/den (den != 0), exact arithmetic.  A tie
// between the two flanking evens would force num/den to be an odd integer,
// which the caller's parity invariant excludes; break it toward the
// smaller magnitude, then toward the positive one.
Int nearest_even_quotient(const Int& num, const Int& den) {
    Int twice_den = 2 * den;
    Int t;
    mpz_fdiv_q(t.get_mpz_t(), num.get_mpz_t(), twice_den.get_mpz_t());
    Int lo = 2 * t, hi = 2 * t + 2;
    Int rlo = abs(num - lo * den), rhi = abs(num - hi * den);
    if (rlo < rhi) return lo;
    if (rhi < rlo) return hi;
    if (abs(lo) != abs(hi)) return abs(lo) < abs(hi) ? lo : hi;
    return lo > hi ? lo : hi;
}

}  // namespace

EvenExpansion even_expansion(const Fraction& f) {
    if (!f.is_infinite() && f.num() < 1)
        throw std::domain_error("even_expansion: numerator must be positive, got " + f.str());

    EvenExpansion result;
    result.s_applied = f.odd_odd();
    result.expanded = result.s_applied ? s_transform(f) : f;

    // Greedy projective Euclidean descent.  Each step peels the even
    // quotient nearest to num/den and recurses on den/(num - q*den);
    // |den| strictly decreases, and quotients stay nonzero as long as
    // |num| > |den| holds, which the entry check guarantees.
    Int num = result.expanded.num(), den = result.expanded.den();
    if (den != 0 && abs(num) <= abs(den))
        throw std::domain_error("even_expansion: " + result.expanded.str() +
                                " admits no all-even expansion (|num| <= |den|); "
                                "not a canonical Schubert representative");

    std::vector<Int> quotients;
    while (den != 0) {
        Int q = nearest_even_quotient(num, den);
        Int rem = num - q * den;
        quotients.push_back(std::move(q));
        num = std::move(den);
        den = std::move(rem);
    }
    result.quotients = ContinuedFraction(std::move(quotients));

    if (evaluate(result.quotients) != result.expanded)
        throw std::logic_error("even_expansion: round-trip postcondition failed for " + f.str());
    return result;
}

}  // namespace rlk
