#pragma once

#include <stdexcept>
#include <string>

#include "rlk/fraction.hpp"

namespace rlk {

/// Integer 2x2 matrix (a b / c d) with determinant +-1, acting projectively.
class Mobius {
public:
    Mobius(Int a, Int b, Int c, Int d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
        Int det = a_ * d_ - b_ * c_;
        if (det != 1 && det != -1)
            throw std::domain_error("Mobius: determinant must be +1 or -1, got " + det.get_str());
    }

    static Mobius identity() { return Mobius(1, 0, 0, 1); }

    /// Matrix of the map x -> q + 1/x, the continued-fraction step.
    static Mobius quotient_step(const Int& q) { return Mobius(q, 1, 1, 0); }

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    const Int& d() const { return d_; }

    Int det() const { return a_ * d_ - b_ * c_; }

    /// Image of the projective point at infinity, i.e. the first column.
    Fraction apply_to_infinity() const { return Fraction(a_, c_); }

    Mobius pow(unsigned e) const {
        Mobius r = identity();
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    friend Mobius operator*(const Mobius& p, const Mobius& q) {
        return Mobius(p.a_ * q.a_ + p.b_ * q.c_, p.a_ * q.b_ + p.b_ * q.d_,
                      p.c_ * q.a_ + p.d_ * q.c_, p.c_ * q.b_ + p.d_ * q.d_);
    }

    /// Entry-wise equality; projective equality is a separate predicate.
    friend bool operator==(const Mobius& p, const Mobius& q) {
        return p.a_ == q.a_ && p.b_ == q.b_ && p.c_ == q.c_ && p.d_ == q.d_;
    }
    friend bool operator!=(const Mobius& p, const Mobius& q) { return !(p == q); }

private:
    Int a_, b_, c_, d_;
};

/// Equal as projective transformations: identical or entry-wise negated.
inline bool projectively_equal(const Mobius& p, const Mobius& q) {
    if (p == q) return true;
    return p.a() == -q.a() && p.b() == -q.b() && p.c() == -q.c() && p.d() == -q.d();
}

inline Mobius mobius_compose(const Mobius& p, const Mobius& q) { return p * q; }

}  // namespace rlk
