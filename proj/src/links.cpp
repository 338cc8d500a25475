#include "rlk/links.hpp"

#include <stdexcept>
#include <utility>

namespace rlk {

RationalLink::RationalLink(ContinuedFraction notation)
    : notation_(std::move(notation)), fraction_(evaluate(notation_)) {
    if (fraction_.is_zero())
        throw std::domain_error("RationalLink: notation evaluates to 0, not a link");
}

int RationalLink::components() const { return component_count(fraction_); }

bool equivalent(const Fraction& f1, const Fraction& f2) {
    if (f1.num() != f2.num()) return false;
    const Int& alpha = f1.num();
    if (alpha == 1) return true;
    Int b1, b2;
    mpz_mod(b1.get_mpz_t(), f1.den().get_mpz_t(), alpha.get_mpz_t());
    mpz_mod(b2.get_mpz_t(), f2.den().get_mpz_t(), alpha.get_mpz_t());
    if (b1 == b2) return true;
    Int prod;
    mpz_mod(prod.get_mpz_t(), Int(b1 * b2).get_mpz_t(), alpha.get_mpz_t());
    return prod == 1;
}

int component_count(const Fraction& f) {
    return mpz_even_p(f.num().get_mpz_t()) ? 2 : 1;
}

LinkExpansion link_even_expansion(const Fraction& f) {
    if (f.num() < 1)
        throw std::domain_error("link_even_expansion: numerator must be positive, got " +
                                f.str());
    try {
        EvenExpansion e = even_expansion(f);
        return {std::move(e.quotients), std::move(e.expanded), e.s_applied, false};
    } catch (const std::domain_error&) {
        // The fraction itself has no all-even form; expand the equivalent
        // representative with denominator reduced into (0, det).
        if (f.num() == 1) return {ContinuedFraction(), Fraction::infinity(), false, true};
        Int b;
        mpz_mod(b.get_mpz_t(), f.den().get_mpz_t(), f.num().get_mpz_t());
        EvenExpansion e = even_expansion(Fraction(f.num(), std::move(b)));
        return {std::move(e.quotients), std::move(e.expanded), e.s_applied, true};
    }
}

}  // namespace rlk
