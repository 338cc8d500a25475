#pragma once

#include <cstddef>
#include <vector>

#include "rlk/contfrac.hpp"
#include "rlk/fraction.hpp"

namespace rlk {

/// Dense polynomial in z over the integers, little-endian coefficients.
/// The zero polynomial stores no coefficients.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static IntPoly constant(Int c);
    static IntPoly monomial(Int coeff, std::size_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree, or -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Int coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    Int operator()(const Int& x) const;

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& lhs, const IntPoly& rhs);
    friend IntPoly operator-(const IntPoly& lhs, const IntPoly& rhs);
    friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);

    friend bool operator==(const IntPoly& lhs, const IntPoly& rhs) {
        return lhs.coeffs_ == rhs.coeffs_;
    }
    friend bool operator!=(const IntPoly& lhs, const IntPoly& rhs) { return !(lhs == rhs); }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Int> coeffs_;
};

/// Dense polynomial in z over GF(2); bit i is the coefficient of z^i.
class GF2Poly {
public:
    GF2Poly() = default;
    explicit GF2Poly(std::vector<bool> bits) : bits_(std::move(bits)) { normalize(); }

    static GF2Poly zero() { return GF2Poly(); }
    static GF2Poly one() { return GF2Poly({true}); }

    bool is_zero() const { return bits_.empty(); }
    bool is_one() const { return bits_.size() == 1 && bits_[0]; }
    long degree() const { return static_cast<long>(bits_.size()) - 1; }
    bool coeff(std::size_t i) const { return i < bits_.size() && bits_[i]; }
    const std::vector<bool>& bits() const { return bits_; }

    friend bool operator==(const GF2Poly& lhs, const GF2Poly& rhs) {
        return lhs.bits_ == rhs.bits_;
    }
    friend bool operator!=(const GF2Poly& lhs, const GF2Poly& rhs) { return !(lhs == rhs); }

private:
    void normalize() {
        while (!bits_.empty() && !bits_.back()) bits_.pop_back();
    }

    std::vector<bool> bits_;
};

/// Laurent polynomial in t: coefficients for t^min_degree upward.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long min_degree, std::vector<Int> coeffs)
        : min_degree_(min_degree), coeffs_(std::move(coeffs)) {
        normalize();
    }

    static LaurentPoly constant(Int c) { return LaurentPoly(0, {std::move(c)}); }

    bool is_zero() const { return coeffs_.empty(); }
    long min_degree() const { return min_degree_; }
    long max_degree() const { return min_degree_ + static_cast<long>(coeffs_.size()) - 1; }
    Int coeff(long power) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    /// Value at t = 1 (the coefficient sum).
    Int at_one() const;

    /// Coefficients mirrored around t^0: the image under t -> 1/t.
    LaurentPoly reciprocal_image() const;

    friend LaurentPoly operator+(const LaurentPoly& lhs, const LaurentPoly& rhs);
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);

    friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) {
        return (lhs.is_zero() && rhs.is_zero()) ||
               (lhs.min_degree_ == rhs.min_degree_ && lhs.coeffs_ == rhs.coeffs_);
    }
    friend bool operator!=(const LaurentPoly& lhs, const LaurentPoly& rhs) {
        return !(lhs == rhs);
    }

private:
    void normalize();

    long min_degree_ = 0;
    std::vector<Int> coeffs_;
};

/// 2x2 matrix over IntPoly, used for the twist-product formula.
struct PolyMat {
    IntPoly a, b, c, d;

    static PolyMat identity();
    friend PolyMat operator*(const PolyMat& lhs, const PolyMat& rhs);
};

/// f_0 = 0, f_1 = 1, f_{m+1} = z f_m + f_{m-1}.
IntPoly fibonacci_poly(unsigned long m);

/// F_0 = 0, F_1 = 1, F_{j+1} = F_j + F_{j-1}.
Int fibonacci_number(unsigned long j);

/**
 * Conway polynomial of the rational link with all-even twist notation
 * C(2a_1, ..., 2a_m): the (1,1) entry of the product of the matrices
 * ((-1)^i a_i z, 1 / 1, 0), i = 1..m.  The first factor carries the minus.
 *
 * The integer-coefficient result is tied to the expansion supplied: for a
 * two-component link (even determinant) different even expansions of the
 * same unoriented link may give different polynomials, and even for knots
 * the overall sign depends on the expansion.  Only the mod-2 image is
 * expansion-independent for knots.
 *
 * Throws std::domain_error on any odd or zero quotient.
 */
IntPoly conway_polynomial(const ContinuedFraction& cf);

/**
 * Alexander polynomial from a Conway polynomial with even powers only
 * (the knot case): substitutes z^2 = t - 2 + 1/t exactly.  Throws
 * std::domain_error if any odd-degree coefficient is nonzero (that signals
 * a two-component link, out of scope here).
 */
LaurentPoly alexander_polynomial(const IntPoly& nabla);

/// Coefficient-wise reduction into GF(2).
GF2Poly mod2(const IntPoly& p);

/// Conway polynomial of the torus link T(2,m) through the alternating
/// expansion [-2, 2, ..., (-1)^{m-1}*2] of m/(1-m); equals fibonacci_poly(m).
IntPoly torus_conway(unsigned long m);

}  // namespace rlk
