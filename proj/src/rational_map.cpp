#include "fullerene/rational_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace fullerene {

RationalMap::RationalMap(GaussRat scalar, UniPoly num, UniPoly den) {
    if (scalar.is_zero() || num.is_zero()) throw std::invalid_argument("RationalMap: zero map");
    if (den.is_zero()) throw std::invalid_argument("RationalMap: zero denominator");
    UniPoly g = poly_gcd(num, den);
    if (!g.is_constant()) {
        num = poly_exact_div(num, g);
        den = poly_exact_div(den, g);
    }
    scalar_ = scalar * num.leading() / den.leading();
    num_ = num.monic();
    den_ = den.monic();
}

std::size_t RationalMap::degree() const { return std::max(num_.deg(), den_.deg()); }

std::string RationalMap::str(const std::string& var) const {
    return "(" + scalar_.str() + ") * (" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

RationalMap ratmap_substitute_power(const RationalMap& f, unsigned n) {
    if (n == 0) throw std::invalid_argument("ratmap_substitute_power: n must be positive");
    return {f.scalar(), poly_substitute_power(f.num(), n), poly_substitute_power(f.den(), n)};
}

}  // namespace fullerene
