#include "rlk/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace rlk {

IntPoly IntPoly::constant(Int c) {
    std::vector<Int> v;
    v.push_back(std::move(c));
    return IntPoly(std::move(v));
}

IntPoly IntPoly::monomial(Int coeff, std::size_t degree) {
    std::vector<Int> v(degree + 1, Int(0));
    v[degree] = std::move(coeff);
    return IntPoly(std::move(v));
}

Int IntPoly::operator()(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> out;
    out.reserve(coeffs_.size());
    for (const Int& c : coeffs_) out.push_back(-c);
    return IntPoly(std::move(out));
}

IntPoly operator+(const IntPoly& lhs, const IntPoly& rhs) {
    std::vector<Int> out(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) out[i] += lhs.coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
    return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& lhs, const IntPoly& rhs) { return lhs + (-rhs); }

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return IntPoly();
    std::vector<Int> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return IntPoly(std::move(out));
}

Int LaurentPoly::coeff(long power) const {
    long i = power - min_degree_;
    if (i < 0 || i >= static_cast<long>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

Int LaurentPoly::at_one() const {
    Int acc = 0;
    for (const Int& c : coeffs_) acc += c;
    return acc;
}

LaurentPoly LaurentPoly::reciprocal_image() const {
    std::vector<Int> rev(coeffs_.rbegin(), coeffs_.rend());
    return LaurentPoly(-max_degree(), std::move(rev));
}

void LaurentPoly::normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        min_degree_ = 0;
        return;
    }
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    min_degree_ += static_cast<long>(lead);
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

LaurentPoly operator+(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    if (lhs.is_zero()) return rhs;
    if (rhs.is_zero()) return lhs;
    long lo = std::min(lhs.min_degree_, rhs.min_degree_);
    long hi = std::max(lhs.max_degree(), rhs.max_degree());
    std::vector<Int> out(static_cast<std::size_t>(hi - lo + 1), Int(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
        out[static_cast<std::size_t>(lhs.min_degree_ - lo) + i] += lhs.coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        out[static_cast<std::size_t>(rhs.min_degree_ - lo) + i] += rhs.coeffs_[i];
    return LaurentPoly(lo, std::move(out));
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return LaurentPoly();
    std::vector<Int> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return LaurentPoly(lhs.min_degree_ + rhs.min_degree_, std::move(out));
}

PolyMat PolyMat::identity() {
    return {IntPoly::constant(1), IntPoly(), IntPoly(), IntPoly::constant(1)};
}

PolyMat operator*(const PolyMat& lhs, const PolyMat& rhs) {
    return {lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
            lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d};
}

IntPoly fibonacci_poly(unsigned long m) {
    IntPoly prev;                        // f_0
    IntPoly cur = IntPoly::constant(1);  // f_1
    const IntPoly z = IntPoly::monomial(1, 1);
    for (unsigned long i = 0; i < m; ++i) {
        IntPoly next = z * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return prev;
}

Int fibonacci_number(unsigned long j) {
    Int r;
    mpz_fib_ui(r.get_mpz_t(), j);
    return r;
}

IntPoly conway_polynomial(const ContinuedFraction& cf) {
    PolyMat m = PolyMat::identity();
    int sign = -1;  // (-1)^i for i = 1
    for (const Int& q : cf.quotients()) {
        if (q == 0 || mpz_odd_p(q.get_mpz_t()))
            throw std::domain_error(
                "conway_polynomial: quotients must be even and nonzero, got " + q.get_str());
        Int half = q / 2;
        PolyMat step{IntPoly::monomial(sign * half, 1), IntPoly::constant(1),
                     IntPoly::constant(1), IntPoly()};
        m = m * step;
        sign = -sign;
    }
    return m.a;
}

LaurentPoly alexander_polynomial(const IntPoly& nabla) {
    for (long i = 1; i <= nabla.degree(); i += 2) {
        if (nabla.coeff(static_cast<std::size_t>(i)) != 0)
            throw std::domain_error(
                "alexander_polynomial: Conway polynomial has odd powers of z; "
                "this is a two-component link, not a knot");
    }
    // z^2 = t - 2 + 1/t, accumulated exactly power by power.
    const LaurentPoly base(-1, {Int(1), Int(-2), Int(1)});
    LaurentPoly power = LaurentPoly::constant(1);
    LaurentPoly out;
    for (long d = 0; 2 * d <= nabla.degree() || d == 0; ++d) {
        Int c = nabla.coeff(static_cast<std::size_t>(2 * d));
        if (c != 0) out = out + LaurentPoly::constant(std::move(c)) * power;
        power = power * base;
    }
    return out;
}

GF2Poly mod2(const IntPoly& p) {
    std::vector<bool> bits(p.coeffs().size());
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        bits[i] = mpz_odd_p(p.coeffs()[i].get_mpz_t());
    return GF2Poly(std::move(bits));
}

IntPoly torus_conway(unsigned long m) {
    if (m < 1) throw std::domain_error("torus_conway: m must be >= 1");
    std::vector<Int> quotients;
    quotients.reserve(m - 1);
    for (unsigned long i = 1; i < m; ++i) quotients.emplace_back(i % 2 == 1 ? -2 : 2);
    return conway_polynomial(ContinuedFraction(std::move(quotients)));
}

}  // namespace rlk
