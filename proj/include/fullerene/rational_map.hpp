#pragma once

#include "fullerene/uni_poly.hpp"

#include <string>

namespace fullerene {

/// scalar * num / den with num, den monic and coprime, scalar nonzero.
class RationalMap {
public:
    /// Canonicalizes: cancels the gcd, makes both sides monic and folds the
    /// leading coefficients into the scalar. Throws std::invalid_argument on a
    /// zero numerator, zero denominator or zero scalar.
    RationalMap(GaussRat scalar, UniPoly num, UniPoly den);
    RationalMap(UniPoly num, UniPoly den) : RationalMap(GaussRat(1), std::move(num), std::move(den)) {}

    static RationalMap identity() { return {UniPoly::z(), UniPoly::constant(GaussRat(1))}; }

    const GaussRat& scalar() const { return scalar_; }
    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }

    /// deg = max(deg num, deg den)
    std::size_t degree() const;

    friend bool operator==(const RationalMap&, const RationalMap&) = default;

    std::string str(const std::string& var = "z") const;

private:
    GaussRat scalar_;
    UniPoly num_;
    UniPoly den_;
};

/// f(z^n) in canonical form.
RationalMap ratmap_substitute_power(const RationalMap& f, unsigned n);

}  // namespace fullerene
