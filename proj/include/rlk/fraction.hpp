#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace rlk {

/// Arbitrary-precision integer used throughout the library.
using Int = mpz_class;

/**
 * Reduced rational number used projectively: den == 0 denotes the point at
 * infinity, which is a legal value everywhere (written "inf", stored 1/0).
 *
 * Canonical form after construction:
 *   - gcd(num, den) == 1
 *   - num >= 0, and num > 0 unless the value is zero (sign lives in den)
 *   - zero is 0/1, infinity is 1/0; 0/0 is rejected
 */
class Fraction {
public:
    Fraction() : num_(0), den_(1) {}

    Fraction(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
        if (num_ == 0 && den_ == 0)
            throw std::domain_error("Fraction: 0/0 is not a projective point");
        canonicalize();
    }

    static Fraction infinity() { return Fraction(1, 0); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_infinite() const { return den_ == 0; }
    bool is_zero() const { return num_ == 0; }

    /// Both parts odd; such fractions admit no all-even expansion.
    bool odd_odd() const { return mpz_odd_p(num_.get_mpz_t()) && mpz_odd_p(den_.get_mpz_t()); }

    /// Rendered "num/den" ("5/-2"), or "inf" for 1/0.
    std::string str() const {
        if (is_infinite()) return "inf";
        return num_.get_str() + "/" + den_.get_str();
    }

    friend bool operator==(const Fraction& lhs, const Fraction& rhs) {
        return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
    }
    friend bool operator!=(const Fraction& lhs, const Fraction& rhs) { return !(lhs == rhs); }

private:
    void canonicalize() {
        Int g;
        mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ < 0) {
            num_ = -num_;
            den_ = -den_;
        } else if (num_ == 0) {
            den_ = 1;
        }
        if (den_ == 0) num_ = 1;
    }

    Int num_;
    Int den_;
};

/// x -> x/(1-x): sends a/b to a/(b-a).  A fraction of the same link class.
inline Fraction s_transform(const Fraction& f) {
    return Fraction(f.num(), f.den() - f.num());
}

}  // namespace rlk
