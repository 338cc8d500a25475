#include "rlk/lissajous.hpp"

#include <stdexcept>

namespace rlk {

std::string to_string(LissajousStatus status) {
    return status == LissajousStatus::obstructed ? "obstructed" : "inconclusive";
}

LissajousVerdict obstruction(const RationalLink& link) {
    if (link.components() != 1)
        throw std::domain_error("obstruction: the test applies to knots; " +
                                link.fraction().str() + " is a two-component link");
    GF2Poly witness = mod2(conway_polynomial(link_even_expansion(link.fraction()).quotients));
    LissajousStatus status =
        witness.is_one() ? LissajousStatus::inconclusive : LissajousStatus::obstructed;
    return {status, std::move(witness)};
}

bool fibonacci_non_lissajous(const FibLinkParams& params) {
    if (classify(params) != LinkKind::knot)
        throw std::domain_error("fibonacci_non_lissajous: C(n x j) with n = " +
                                std::to_string(params.n) + ", j = " + std::to_string(params.j) +
                                " is a two-component link, not a knot");
    if (params.n % 4 == 0) return false;
    if (params.n == 3 && params.j == 3) return false;
    if (params.n == 1 && params.j == 1) return false;  // unknot: witness is 1
    return true;
}

}  // namespace rlk
