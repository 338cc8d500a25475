#pragma once

#include <cstddef>
#include <vector>

#include "rlk/fraction.hpp"
#include "rlk/mobius.hpp"

namespace rlk {

/**
 * Finite integer continued fraction [a_1, ..., a_m], doubling as the twist
 * notation C(a_1, ..., a_m) of a rational link.  The empty sequence denotes
 * the point at infinity.  Every quotient after the first must be nonzero;
 * a_1 may be any integer.
 */
class ContinuedFraction {
public:
    ContinuedFraction() = default;
    explicit ContinuedFraction(std::vector<Int> quotients);

    /// [v, v, ..., v] with `count` entries.
    static ContinuedFraction repeated(const Int& value, std::size_t count);

    const std::vector<Int>& quotients() const { return quotients_; }
    std::size_t size() const { return quotients_.size(); }
    bool empty() const { return quotients_.empty(); }

    bool all_even_nonzero() const;

    /// Negating every quotient negates the value.
    ContinuedFraction negated() const;

    /// [this..., tail...]; the value composes as nested fractions.
    ContinuedFraction concat(const ContinuedFraction& tail) const;

    friend bool operator==(const ContinuedFraction& lhs, const ContinuedFraction& rhs) {
        return lhs.quotients_ == rhs.quotients_;
    }
    friend bool operator!=(const ContinuedFraction& lhs, const ContinuedFraction& rhs) {
        return !(lhs == rhs);
    }

private:
    std::vector<Int> quotients_;
};

/**
 * Projective value of [a_1, ..., a_m]: the product of the matrices
 * (a_i 1 / 1 0) applied to the point at infinity.  Total; never divides,
 * and the empty sequence gives infinity.
 */
Fraction evaluate(const ContinuedFraction& cf);

/// Result of even_expansion.  `expanded` is the fraction the quotients
/// actually evaluate to: the input itself, or its s-transform image when
/// the input had odd numerator and odd denominator (s_applied == true).
struct EvenExpansion {
    ContinuedFraction quotients;
    bool s_applied = false;
    Fraction expanded;
};

/**
 * All-even, all-nonzero expansion of a canonical Schubert fraction a/b,
 * a >= 1.  Fractions with both parts odd are first replaced by their
 * s-transform image a/(b-a) (same link class); in particular 1/1 becomes
 * infinity and yields the empty expansion.
 *
 * Throws std::domain_error when a < 1, or when no all-even expansion
 * exists (|value| <= 1 after the parity substitution, e.g. 2/5): such
 * inputs are not canonical Schubert representatives of their link.
 */
EvenExpansion even_expansion(const Fraction& f);

}  // namespace rlk
