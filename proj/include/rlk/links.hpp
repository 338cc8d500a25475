#pragma once

#include "rlk/contfrac.hpp"
#include "rlk/fraction.hpp"

namespace rlk {

/**
 * A rational (two-bridge) link, identified by the Schubert fraction of its
 * defining twist notation.  The numerator is the determinant of the link:
 * odd for a knot, even for a two-component link, 1 for the unknot class.
 */
class RationalLink {
public:
    /// Throws std::domain_error when the notation evaluates to 0 (not a
    /// link).  Infinity and determinant-1 values are accepted: the unknot.
    explicit RationalLink(ContinuedFraction notation);

    const ContinuedFraction& notation() const { return notation_; }
    const Fraction& fraction() const { return fraction_; }

    const Int& determinant() const { return fraction_.num(); }
    int components() const;
    bool is_unknot() const { return fraction_.num() == 1; }

private:
    ContinuedFraction notation_;
    Fraction fraction_;
};

inline RationalLink from_notation(ContinuedFraction cf) {
    return RationalLink(std::move(cf));
}

/// Unoriented equivalence of canonical Schubert fractions: equal
/// determinants a, and denominators congruent directly or as inverses
/// mod a.  Determinant 1 (the unknot class) compares equal throughout.
bool equivalent(const Fraction& f1, const Fraction& f2);

/// 1 when the determinant is odd (knot), 2 when even.
int component_count(const Fraction& f);

inline const Int& determinant(const RationalLink& link) { return link.determinant(); }

/// Even expansion attached to a link-class fraction.  Falls back to the
/// equivalent representative with denominator in (0, det) when the fraction
/// itself admits no all-even expansion; `representative` records that.
struct LinkExpansion {
    ContinuedFraction quotients;
    Fraction expanded;  // what the quotients evaluate to
    bool s_applied = false;
    bool representative = false;
};

/// Total for every fraction with num >= 1.
LinkExpansion link_even_expansion(const Fraction& f);

}  // namespace rlk
