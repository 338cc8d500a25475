#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rlk/fiblinks.hpp"

using namespace rlk;

TEST_CASE("fib link construction") {
    CHECK(fib_link(FibLinkParams(1, 4)).fraction() == Fraction(5, 3));
    CHECK(fib_link(FibLinkParams(3, 1)).fraction() == Fraction(3, 1));
    CHECK(fib_link(FibLinkParams(3, 2)).fraction() == Fraction(10, 3));
    CHECK(fib_link(FibLinkParams(1, 4)).determinant() == fibonacci_number(5));
    CHECK_THROWS_AS(FibLinkParams(0, 1), std::domain_error);
    CHECK_THROWS_AS(FibLinkParams(-3, 2), std::domain_error);
    CHECK(FibLinkParams(7, 1).half_twists() == 3);
    CHECK_THROWS_AS(FibLinkParams(4, 1).half_twists(), std::logic_error);
}

TEST_CASE("classification") {
    CHECK(classify(FibLinkParams(2, 2)) == LinkKind::knot);
    CHECK(classify(FibLinkParams(1, 2)) == LinkKind::two_component);
    CHECK(classify(FibLinkParams(3, 3)) == LinkKind::knot);
    for (int n = 1; n <= 10; ++n) {
        for (int j = 1; j <= 20; ++j) {
            FibLinkParams params(n, j);
            int expected = classify(params) == LinkKind::knot ? 1 : 2;
            CHECK(fib_link(params).components() == expected);
        }
    }
}

TEST_CASE("recursive even expansion") {
    RecursiveExpansion e = recursive_even_expansion(FibLinkParams(3, 2));
    CHECK(e.quotients == ContinuedFraction({4, -2, 2}));
    CHECK_FALSE(e.s_applied);
    CHECK(evaluate(e.quotients) == Fraction(10, 3));

    e = recursive_even_expansion(FibLinkParams(3, 3));
    CHECK(e.quotients == ContinuedFraction({4, -2, 2, -4}));
    CHECK(evaluate(e.quotients) == Fraction(33, 10));

    e = recursive_even_expansion(FibLinkParams(5, 1));
    CHECK(e.quotients == ContinuedFraction({-2, 2, -2, 2}));
    CHECK(e.s_applied);
    CHECK(evaluate(e.quotients) == Fraction(5, -4));

    CHECK_THROWS_AS(recursive_even_expansion(FibLinkParams(2, 3)), std::domain_error);
    CHECK_THROWS_AS(recursive_even_expansion(FibLinkParams(1, 4)), std::domain_error);
    CHECK_NOTHROW(recursive_even_expansion(FibLinkParams(1, 1)));
}

TEST_CASE("even form covers every cell") {
    FibExpansion e = even_form(FibLinkParams(1, 4));
    CHECK(e.route == ExpansionRoute::ratio_family);
    CHECK(e.s_applied);
    CHECK(e.quotients == ContinuedFraction({-2, -2}));
    CHECK(e.expanded == Fraction(5, -2));

    e = even_form(FibLinkParams(2, 3));
    CHECK(e.route == ExpansionRoute::direct_notation);
    CHECK(e.quotients == ContinuedFraction({2, 2, 2}));

    e = even_form(FibLinkParams(1, 1));
    CHECK(e.quotients.empty());
    CHECK(e.expanded == Fraction::infinity());

    for (int n = 1; n <= 9; ++n)
        for (int j = 1; j <= 15; ++j) CHECK_NOTHROW(even_form(FibLinkParams(n, j)));
}

TEST_CASE("fibonacci ratio families") {
    FamilyExpansion a = fibonacci_ratio_family(1, RatioFamily::A);
    CHECK(a.fraction == Fraction(5, 2));
    CHECK(a.quotients == ContinuedFraction({2, 2}));

    FamilyExpansion b = fibonacci_ratio_family(1, RatioFamily::B);
    CHECK(b.fraction == Fraction(3, 2));
    CHECK(b.quotients == ContinuedFraction({2, -2}));

    FamilyExpansion c = fibonacci_ratio_family(1, RatioFamily::C);
    CHECK(c.fraction == Fraction(8, 5));
    CHECK(c.quotients == ContinuedFraction({2, -2, -2}));

    for (int m = 1; m <= 10; ++m) {
        const auto f = [](int i) { return fibonacci_number(static_cast<unsigned long>(i)); };
        a = fibonacci_ratio_family(m, RatioFamily::A);
        b = fibonacci_ratio_family(m, RatioFamily::B);
        c = fibonacci_ratio_family(m, RatioFamily::C);
        CHECK(a.fraction == Fraction(f(3 * m + 2), f(3 * m)));
        CHECK(b.fraction == Fraction(f(3 * m + 1), f(3 * m)));
        CHECK(c.fraction == Fraction(f(3 * m + 3), f(3 * m + 2)));
        CHECK(a.quotients.size() == 2 * static_cast<std::size_t>(m));
        CHECK(b.quotients.size() == 2 * static_cast<std::size_t>(m));
        CHECK(c.quotients.size() == 2 * static_cast<std::size_t>(m) + 1);
    }
}

TEST_CASE("closed form index") {
    CHECK(closed_form_index(FibLinkParams(1, 3)).N == 3);
    CHECK(closed_form_index(FibLinkParams(1, 4)).N == 3);
    CHECK(closed_form_index(FibLinkParams(1, 6)).N == 5);  // floor, not ceiling
    CHECK(closed_form_index(FibLinkParams(3, 3)).N == 1);
    CHECK(closed_form_index(FibLinkParams(2, 1)).N == 2);
    CHECK(closed_form_index(FibLinkParams(4, 2)).N == 1);
    CHECK(closed_form_index(FibLinkParams(4, 3)).N == 0);
    CHECK(closed_form_index(FibLinkParams(5, 1)).branch == ClosedFormBranch::one_mod4);
    CHECK(closed_form_index(FibLinkParams(7, 1)).branch == ClosedFormBranch::three_mod4);
}

TEST_CASE("mod-2 closed form equals the computed conway polynomial") {
    CHECK(mod2_closed_form(FibLinkParams(1, 3)) == mod2(fibonacci_poly(3)));
    CHECK(mod2_closed_form(FibLinkParams(3, 3)).is_one());
    CHECK(mod2_closed_form(FibLinkParams(2, 1)) == mod2(fibonacci_poly(2)));
    CHECK(mod2_closed_form(FibLinkParams(4, 2)).is_one());

    for (int n = 1; n <= 10; ++n) {
        for (int j = 1; j <= 15; ++j) {
            FibLinkParams params(n, j);
            GF2Poly computed = mod2(conway_polynomial(even_form(params).quotients));
            CHECK(computed == mod2_closed_form(params));
            if (n % 4 == 2) CHECK(computed == mod2(fibonacci_poly(1ul + j)));
            if (n % 4 == 0) CHECK(computed == (j % 2 == 1 ? GF2Poly::zero() : GF2Poly::one()));
        }
    }
}

TEST_CASE("matrix identities") {
    for (int n : {3, 5, 19}) {
        MatrixIdentityReport report = verify_matrix_identities(n);
        CHECK(report.all_pass());
        CHECK(report.checks.size() == 3);
    }
    CHECK_THROWS_AS(verify_matrix_identities(4), std::domain_error);
    CHECK_THROWS_AS(verify_matrix_identities(1), std::domain_error);
}
