#include "knotsim/laurent.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>

namespace knotsim {

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // highest exponent first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool show_coeff = (mag != 1) || (e == 0);
        if (show_coeff) out << mag;
        if (e != 0) {
            if (show_coeff) out << "*";
            out << "A";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

void RationalFn::normalize_light() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    int shift = std::min(num_.terms().begin()->first, den_.terms().begin()->first);
    BigInt content = 0;
    for (const auto& [e, c] : num_.terms()) content = boost::multiprecision::gcd(content, c);
    for (const auto& [e, c] : den_.terms()) content = boost::multiprecision::gcd(content, c);
    if (content < 0) content = -content;
    if (shift == 0 && content == 1) return;
    LaurentPoly n, d;
    for (const auto& [e, c] : num_.terms()) n += LaurentPoly::monomial(c / content, e - shift);
    for (const auto& [e, c] : den_.terms()) d += LaurentPoly::monomial(c / content, e - shift);
    num_ = std::move(n);
    den_ = std::move(d);
}

} // namespace knotsim
