#pragma once

#include "fullerene/belyi.hpp"
#include "fullerene/rational_map.hpp"

#include <optional>
#include <string>

namespace fullerene {

/// A point of the projective line over Q(i); nullopt is infinity.
struct ExtPoint {
    std::optional<GaussRat> value;

    ExtPoint() = default;  // infinity
    ExtPoint(GaussRat v) : value(std::move(v)) {}  // NOLINT(google-explicit-constructor)
    ExtPoint(long v) : value(GaussRat(v)) {}       // NOLINT(google-explicit-constructor)
    static ExtPoint infinity() { return {}; }

    bool is_infinity() const { return !value.has_value(); }
    friend bool operator==(const ExtPoint&, const ExtPoint&) = default;
    std::string str() const;
};

/// z -> (a z + b) / (c z + d) with ad - bc != 0, stored up to a scalar: the
/// first nonzero entry of (a, b, c, d) is 1, so == compares maps.
class Moebius {
public:
    /// Throws std::invalid_argument when ad - bc = 0.
    Moebius(GaussRat a, GaussRat b, GaussRat c, GaussRat d);
    static Moebius identity() { return {1, 0, 0, 1}; }

    const GaussRat& a() const { return a_; }
    const GaussRat& b() const { return b_; }
    const GaussRat& c() const { return c_; }
    const GaussRat& d() const { return d_; }
    GaussRat det() const { return a_ * d_ - b_ * c_; }

    ExtPoint apply(const ExtPoint& z) const;
    Moebius inverse() const;
    /// (f * g)(z) = f(g(z)); the 2x2 matrix product.
    friend Moebius operator*(const Moebius& f, const Moebius& g);
    friend bool operator==(const Moebius&, const Moebius&) = default;

    RationalMap to_map() const;
    std::string str() const;

private:
    GaussRat a_, b_, c_, d_;
};

/// The unique map sending z1, z2, z3 to w1, w2, w3. Throws
/// std::invalid_argument if either triple has a repeated point.
Moebius moebius_from_three_points(const ExtPoint& z1, const ExtPoint& z2, const ExtPoint& z3,
                                  const ExtPoint& w1, const ExtPoint& w2, const ExtPoint& w3);

enum class Side {
    Pre,   ///< f(m(z))
    Post,  ///< m(f(z))
};

RationalMap ratmap_compose_moebius(const RationalMap& f, const Moebius& m, Side side);
/// f(g(z)), computed on homogenized numerator/denominator pairs.
RationalMap ratmap_compose(const RationalMap& f, const RationalMap& g);

/// -125i (z - 1) / ((2 + 11i) z + (2 - 11i)): 0, 1, inf -> -11+2i, 0, -11-2i.
Moebius mu1();
/// (i z - 1) / (i z + 1): 0 -> -1, inf -> 1.
Moebius mu2();

/// beta_6 as the map (z^2 + 10 z + 5)^3 / (1728 z).
RationalMap beta6_map();
/// beta_6(mu1(mu2(z)^2)).
RationalMap beta12_map();

FactoredBelyi build_beta6();
FactoredBelyi build_beta12();
/// beta_12(z^5), the dodecahedron.
FactoredBelyi build_beta60();
/// beta_12(z^6), the barrel.
FactoredBelyi build_beta72();

/// Preset by id: "d6", "d12", "d60", "d72". Throws std::invalid_argument otherwise.
FactoredBelyi preset(const std::string& id);

struct SchwarzForms {
    UniPoly phi12;
    UniPoly phi20;
    UniPoly phi30;
};

/// phi_12 = s(1 - 11 s^5 - s^10), phi_20, phi_30 in the variable s. The
/// z^10 and z^20 coefficient of phi_30 is -c30; the correct value is 10005.
SchwarzForms schwarz_forms(long c30 = 10005);

/// phi20^3 - phi30^2 - 1728 phi12^5
UniPoly schwarz_residual(const SchwarzForms& f);

struct SchwarzReport {
    bool identity = false;         ///< schwarz_residual vanishes
    bool matches_beta60 = false;   ///< beta_60(-s) = phi20^3 / (1728 phi12^5)
    bool passed() const { return identity && matches_beta60; }
};

SchwarzReport schwarz_check(const SchwarzForms& f = schwarz_forms());

}  // namespace fullerene
