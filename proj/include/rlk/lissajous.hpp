#pragma once

#include "rlk/fiblinks.hpp"
#include "rlk/links.hpp"
#include "rlk/poly.hpp"

namespace rlk {

/// Outcome of the necessary condition "a rational Lissajous knot has
/// Alexander polynomial 1 mod 2".  There is deliberately no "is Lissajous"
/// state: the test is one-directional.
enum class LissajousStatus { obstructed, inconclusive };

struct LissajousVerdict {
    LissajousStatus status;
    GF2Poly witness;  // the mod-2 Conway polynomial used
};

std::string to_string(LissajousStatus status);

/**
 * Lissajous obstruction for a rational knot: computes the mod-2 Conway
 * polynomial through an even expansion of the link class (for knots this
 * image does not depend on the expansion chosen).  Obstructed when the
 * witness differs from 1, inconclusive otherwise.
 *
 * Throws std::domain_error on a two-component link.
 */
LissajousVerdict obstruction(const RationalLink& link);

/**
 * True when the generalized Fibonacci knot C(n, ..., n) is provably not
 * Lissajous: n not 0 mod 4 and (n, j) not (3, 3), excluding the unknot
 * (n, j) = (1, 1), for which the witness is 1 and nothing is provable.
 * Implies obstruction(...).status == obstructed.
 *
 * Throws std::domain_error when the parameters give a two-component link.
 */
bool fibonacci_non_lissajous(const FibLinkParams& params);

}  // namespace rlk
