#include "rlk/render.hpp"

#include <sstream>

namespace rlk {

namespace {

// Renders one term into an accumulating stream: "z^3", "2z", "4", with
// " + " / " - " separators after the first term.
void append_term(std::ostringstream& out, bool first, bool negative, const std::string& magnitude,
                 long power, const std::string& var) {
    if (first) {
        if (negative) out << '-';
    } else {
        out << (negative ? " - " : " + ");
    }
    const bool unit = magnitude == "1";
    if (power == 0) {
        out << magnitude;
        return;
    }
    if (!unit) out << magnitude;
    out << var;
    if (power != 1) out << '^' << power;
}

}  // namespace

std::string to_text(const IntPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long i = p.degree(); i >= 0; --i) {
        Int c = p.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        append_term(out, first, c < 0, Int(abs(c)).get_str(), i, var);
        first = false;
    }
    return out.str();
}

std::string to_text(const GF2Poly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long i = p.degree(); i >= 0; --i) {
        if (!p.coeff(static_cast<std::size_t>(i))) continue;
        append_term(out, first, false, "1", i, var);
        first = false;
    }
    return out.str();
}

std::string to_text(const LaurentPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long i = p.max_degree(); i >= p.min_degree(); --i) {
        Int c = p.coeff(i);
        if (c == 0) continue;
        append_term(out, first, c < 0, Int(abs(c)).get_str(), i, var);
        first = false;
    }
    return out.str();
}

std::string to_text(const ContinuedFraction& cf) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < cf.size(); ++i) {
        if (i) out << ',';
        out << cf.quotients()[i].get_str();
    }
    out << ']';
    return out.str();
}

std::string to_plain_text(const ContinuedFraction& cf) {
    std::ostringstream out;
    for (std::size_t i = 0; i < cf.size(); ++i) {
        if (i) out << ' ';
        out << cf.quotients()[i].get_str();
    }
    return out.str();
}

json to_json(const Int& v) {
    if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
    return json(v.get_str());
}

json to_json(const IntPoly& p) {
    json coeffs = json::array();
    for (const Int& c : p.coeffs()) coeffs.push_back(to_json(c));
    return json{{"variable", "z"}, {"coeffs", coeffs}};
}

json to_json(const GF2Poly& p) {
    json coeffs = json::array();
    for (bool b : p.bits()) coeffs.push_back(b ? 1 : 0);
    return json{{"variable", "z"}, {"coeffs", coeffs}};
}

json to_json(const LaurentPoly& p) {
    json coeffs = json::array();
    for (const Int& c : p.coeffs()) coeffs.push_back(to_json(c));
    return json{{"variable", "t"}, {"min_degree", p.min_degree()}, {"coeffs", coeffs}};
}

json to_json(const ContinuedFraction& cf) {
    json out = json::array();
    for (const Int& q : cf.quotients()) out.push_back(to_json(q));
    return out;
}

}  // namespace rlk
