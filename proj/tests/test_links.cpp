#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rlk/links.hpp"
#include "rlk/poly.hpp"

using namespace rlk;

TEST_CASE("from notation") {
    CHECK(from_notation(ContinuedFraction({1, 1, 1})).fraction() == Fraction(3, 2));
    CHECK(from_notation(ContinuedFraction({7})).fraction() == Fraction(7, 1));
    CHECK(from_notation(ContinuedFraction({3, 3})).fraction() == Fraction(10, 3));
    CHECK_THROWS_AS(from_notation(ContinuedFraction({1, -1})), std::domain_error);

    RationalLink unknot = from_notation(ContinuedFraction());
    CHECK(unknot.is_unknot());
    CHECK(unknot.fraction() == Fraction::infinity());
    CHECK(from_notation(ContinuedFraction({1})).is_unknot());
}

TEST_CASE("equivalence") {
    CHECK(equivalent(Fraction(5, 2), Fraction(5, 3)));  // 2*3 = 1 mod 5
    CHECK(equivalent(Fraction(7, 5), Fraction(7, 5)));
    CHECK_FALSE(equivalent(Fraction(3, 1), Fraction(5, 1)));
    // Mirror trefoils are inequivalent as unoriented links.
    CHECK_FALSE(equivalent(Fraction(3, 1), Fraction(3, 2)));
    // Determinant 1 is the unknot class, whatever the denominator.
    CHECK(equivalent(Fraction::infinity(), Fraction(1, 1)));
    CHECK(equivalent(Fraction(1, 5), Fraction(1, -3)));
}

TEST_CASE("equivalence properties, randomized") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        Int alpha(rng() % 9999 + 1);
        Int beta1(rng() % 20001 - 10000);
        Int beta2(rng() % 20001 - 10000);
        Int g1, g2;
        mpz_gcd(g1.get_mpz_t(), alpha.get_mpz_t(), beta1.get_mpz_t());
        mpz_gcd(g2.get_mpz_t(), alpha.get_mpz_t(), beta2.get_mpz_t());
        if (g1 != 1 || g2 != 1) continue;
        Fraction f1(alpha, beta1), f2(alpha, beta2);
        CHECK(equivalent(f1, f1));
        CHECK(equivalent(f1, f2) == equivalent(f2, f1));
        // beta - alpha is congruent to beta, so the s-image is equivalent.
        CHECK(equivalent(f1, s_transform(f1)));
    }
}

TEST_CASE("component count and determinant") {
    CHECK(component_count(Fraction(3, 2)) == 1);
    CHECK(component_count(Fraction(2, 1)) == 2);
    CHECK(component_count(Fraction::infinity()) == 1);

    CHECK(determinant(from_notation(ContinuedFraction({1, 1, 1, 1}))) == 5);
    CHECK(determinant(from_notation(ContinuedFraction({6}))) == 6);
    CHECK(determinant(from_notation(ContinuedFraction())) == 1);
    CHECK(from_notation(ContinuedFraction({1, 1, 1, 1})).components() == 1);
}

TEST_CASE("link-level even expansion falls back to a representative") {
    // [1,-3,2] evaluates to 3/5; both parts odd, so the s-image 3/2 is
    // expanded and no representative is needed.  Same mod-2 image as the
    // trefoil.
    Fraction f = from_notation(ContinuedFraction({1, -3, 2})).fraction();
    CHECK(f == Fraction(3, 5));
    LinkExpansion e = link_even_expansion(f);
    CHECK_FALSE(e.representative);
    CHECK(e.s_applied);
    CHECK(e.expanded == Fraction(3, 2));
    CHECK(evaluate(e.quotients) == e.expanded);
    CHECK(mod2(conway_polynomial(e.quotients)) == mod2(fibonacci_poly(3)));

    // 2/5 has no all-even expansion and no usable s-image; the equivalent
    // representative 2/1 (5 = 1 mod 2) takes over.
    LinkExpansion hopf = link_even_expansion(Fraction(2, 5));
    CHECK(hopf.representative);
    CHECK(hopf.expanded == Fraction(2, 1));
    CHECK(hopf.quotients == ContinuedFraction({2}));
    CHECK(equivalent(Fraction(2, 5), hopf.expanded));

    LinkExpansion direct = link_even_expansion(Fraction(10, 3));
    CHECK_FALSE(direct.representative);
    CHECK(evaluate(direct.quotients) == Fraction(10, 3));

    LinkExpansion unknot = link_even_expansion(Fraction(1, 4));
    CHECK(unknot.representative);
    CHECK(unknot.quotients.empty());
}
