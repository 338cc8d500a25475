#pragma once

#include <string>
#include <vector>

#include "rlk/links.hpp"
#include "rlk/poly.hpp"

namespace rlk {

/// Parameters of the generalized Fibonacci link: the twist notation
/// C(n, ..., n) with j entries, n >= 1.  For odd n = 2k+1 the half-twist
/// count k drives the even expansions below.
struct FibLinkParams {
    FibLinkParams(int n, int j);

    int half_twists() const;  // k with n == 2k+1; requires odd n

    int n;
    int j;
};

enum class LinkKind { knot, two_component };

RationalLink fib_link(const FibLinkParams& params);

/// Knot when n and j are both even, or n is odd and j is not 2 mod 3;
/// two-component link otherwise.  Agrees with determinant parity.
LinkKind classify(const FibLinkParams& params);

/// All-even expansion of [n]_j (n odd) built by the +3 recursion on j.
/// For j = 1 mod 3 the expansion is of the s-transform image instead
/// (those fractions have odd numerator and denominator), and s_applied
/// is true.  Throws std::domain_error for even n, and for the uncovered
/// base case n = 1, j = 1 mod 3, j > 1 (see even_form for the fallback).
struct RecursiveExpansion {
    ContinuedFraction quotients;
    bool s_applied = false;
};
RecursiveExpansion recursive_even_expansion(const FibLinkParams& params);

/// The three Fibonacci-ratio continued-fraction families:
///   A: F_{3m+2}/F_{3m},   length 2m
///   B: F_{3m+1}/F_{3m},   length 2m
///   C: F_{3m+3}/F_{3m+2}, length 2m+1
enum class RatioFamily { A, B, C };
struct FamilyExpansion {
    Fraction fraction;
    ContinuedFraction quotients;
};
FamilyExpansion fibonacci_ratio_family(int m, RatioFamily family);

/// How even_form obtained its expansion.
enum class ExpansionRoute {
    direct_notation,  // n even: C(n, ..., n) is already all-even
    recursive,        // odd n, the +3 recursion
    ratio_family,     // n = 1, j = 1 mod 3, j > 1: negated family A
};
std::string to_string(ExpansionRoute route);

/// Even expansion for every (n, j), with the route recorded.  The result
/// evaluates to `expanded`, which is the link's fraction or its s-image.
struct FibExpansion {
    ContinuedFraction quotients;
    Fraction expanded;
    bool s_applied = false;
    ExpansionRoute route = ExpansionRoute::direct_notation;
};
FibExpansion even_form(const FibLinkParams& params);

/// Which residue of n mod 4 selects the closed form.
enum class ClosedFormBranch { one_mod4, three_mod4, two_mod4, zero_mod4 };

/// Index N such that the mod-2 Conway polynomial of the link is f_N:
///   n = 1 mod 4: N = floor((j+2)/3)*(n-2) + j + 1
///   n = 3 mod 4: N = floor((j+2)/3)*(n+2) - (j+1)
///   n = 2 mod 4: N = j + 1
///   n = 0 mod 4: N = 0 (j odd) or 1 (j even)
struct ClosedFormN {
    unsigned long N;
    ClosedFormBranch branch;
};
ClosedFormN closed_form_index(const FibLinkParams& params);

/// f_N mod 2 with N from closed_form_index.
GF2Poly mod2_closed_form(const FibLinkParams& params);

/// Mechanical check of the matrix identities behind the recursion, for odd
/// n = 2k+1 >= 3: with G = (3 2 / -2 -1), L = (n+1 1 / 1 0),
/// T = (1 1 / 0 -1), Q = (-(n+1) 1 / 1 0), R = (1 0 / 0 -1),
/// S = (1 0 / -1 1) and P = (n 1 / 1 0), verifies projectively that
///   G^k = (1+2k, 2k / -2k, 1-2k),
///   L G^k T = P^2,
///   S P^3 = (G^k Q^2 R) S.
/// Failures are reported, not thrown.
struct IdentityCheck {
    std::string name;
    bool pass;
};
struct MatrixIdentityReport {
    int n;
    std::vector<IdentityCheck> checks;
    bool all_pass() const;
};
MatrixIdentityReport verify_matrix_identities(int n);

}  // namespace rlk
