#include "fullerene/compose.hpp"

#include "fullerene/derive.hpp"

#include <stdexcept>

namespace fullerene {

std::string ExtPoint::str() const { return value ? value->str() : "inf"; }

Moebius::Moebius(GaussRat a, GaussRat b, GaussRat c, GaussRat d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (det().is_zero()) throw std::invalid_argument("Moebius: ad - bc = 0");
    const GaussRat& first = !a_.is_zero() ? a_ : b_;
    const GaussRat inv = first.inverse();
    a_ *= inv;
    b_ *= inv;
    c_ *= inv;
    d_ *= inv;
}

ExtPoint Moebius::apply(const ExtPoint& z) const {
    if (z.is_infinity()) {
        if (c_.is_zero()) return ExtPoint::infinity();
        return a_ / c_;
    }
    const GaussRat den = c_ * *z.value + d_;
    if (den.is_zero()) return ExtPoint::infinity();
    return (a_ * *z.value + b_) / den;
}

Moebius Moebius::inverse() const { return {d_, -b_, -c_, a_}; }

Moebius operator*(const Moebius& f, const Moebius& g) {
    return {f.a_ * g.a_ + f.b_ * g.c_, f.a_ * g.b_ + f.b_ * g.d_, f.c_ * g.a_ + f.d_ * g.c_,
            f.c_ * g.b_ + f.d_ * g.d_};
}

RationalMap Moebius::to_map() const { return {UniPoly{b_, a_}, UniPoly{d_, c_}}; }

std::string Moebius::str() const {
    return "(" + UniPoly{b_, a_}.str() + ") / (" + UniPoly{d_, c_}.str() + ")";
}

namespace {

/// Sends p1, p2, p3 to 0, 1, infinity.
Moebius to_zero_one_inf(const ExtPoint& p1, const ExtPoint& p2, const ExtPoint& p3) {
    if (p1 == p2 || p2 == p3 || p1 == p3) {
        throw std::invalid_argument("moebius_from_three_points: repeated point " +
                                    (p1 == p2 || p1 == p3 ? p1 : p2).str());
    }
    if (p1.is_infinity()) return {0, *p2.value - *p3.value, 1, -*p3.value};
    if (p2.is_infinity()) return {1, -*p1.value, 1, -*p3.value};
    if (p3.is_infinity()) return {1, -*p1.value, 0, *p2.value - *p1.value};
    const GaussRat& z1 = *p1.value;
    const GaussRat& z2 = *p2.value;
    const GaussRat& z3 = *p3.value;
    return {z2 - z3, -z1 * (z2 - z3), z2 - z1, -z3 * (z2 - z1)};
}

/// sum_i c_i x^i y^(e - i)
UniPoly homogenize(const UniPoly& p, const UniPoly& x, const UniPoly& y, std::size_t e) {
    UniPoly out;
    UniPoly xi = UniPoly::constant(GaussRat(1));
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (!p.coeffs()[i].is_zero()) out += xi * y.pow(static_cast<unsigned>(e - i)) * p.coeffs()[i];
        xi *= x;
    }
    return out;
}

}  // namespace

Moebius moebius_from_three_points(const ExtPoint& z1, const ExtPoint& z2, const ExtPoint& z3,
                                  const ExtPoint& w1, const ExtPoint& w2, const ExtPoint& w3) {
    return to_zero_one_inf(w1, w2, w3).inverse() * to_zero_one_inf(z1, z2, z3);
}

RationalMap ratmap_compose(const RationalMap& f, const RationalMap& g) {
    const std::size_t e = std::max(f.num().deg(), f.den().deg());
    const UniPoly x = g.num() * g.scalar();
    return {f.scalar(), homogenize(f.num(), x, g.den(), e), homogenize(f.den(), x, g.den(), e)};
}

RationalMap ratmap_compose_moebius(const RationalMap& f, const Moebius& m, Side side) {
    if (side == Side::Pre) return ratmap_compose(f, m.to_map());
    const UniPoly sn = f.num() * f.scalar();
    return {sn * m.a() + f.den() * m.b(), sn * m.c() + f.den() * m.d()};
}

Moebius mu1() {
    const GaussRat i = GaussRat::i();
    return {GaussRat(-125) * i, GaussRat(125) * i, GaussRat(2) + GaussRat(11) * i, GaussRat(2) - GaussRat(11) * i};
}

Moebius mu2() { return {GaussRat::i(), -1, GaussRat::i(), 1}; }

RationalMap beta6_map() { return d6_solve().beta6.to_map(); }

RationalMap beta12_map() {
    RationalMap f = ratmap_compose_moebius(beta6_map(), mu1(), Side::Pre);
    f = ratmap_substitute_power(f, 2);
    return ratmap_compose_moebius(f, mu2(), Side::Pre);
}

FactoredBelyi build_beta6() { return d6_solve().beta6; }

FactoredBelyi build_beta12() { return factor_belyi(beta12_map(), "d12"); }

FactoredBelyi build_beta60() { return factor_belyi(ratmap_substitute_power(beta12_map(), 5), "d60"); }

FactoredBelyi build_beta72() { return factor_belyi(ratmap_substitute_power(beta12_map(), 6), "d72"); }

FactoredBelyi preset(const std::string& id) {
    if (id == "d6") return build_beta6();
    if (id == "d12") return build_beta12();
    if (id == "d60") return build_beta60();
    if (id == "d72") return build_beta72();
    throw std::invalid_argument("unknown preset '" + id + "' (expected d6, d12, d60 or d72)");
}

SchwarzForms schwarz_forms(long c30) {
    auto mono = [](std::initializer_list<std::pair<std::size_t, long>> terms) {
        UniPoly p;
        for (const auto& [n, c] : terms) p += UniPoly::monomial(n, GaussRat(c));
        return p;
    };
    return {mono({{1, 1}, {6, -11}, {11, -1}}),
            mono({{0, 1}, {5, 228}, {10, 494}, {15, -228}, {20, 1}}),
            mono({{0, 1}, {5, -522}, {10, -c30}, {20, -c30}, {25, 522}, {30, 1}})};
}

UniPoly schwarz_residual(const SchwarzForms& f) {
    return f.phi20.pow(3) - f.phi30 * f.phi30 - f.phi12.pow(5) * GaussRat(1728);
}

SchwarzReport schwarz_check(const SchwarzForms& f) {
    SchwarzReport r;
    r.identity = schwarz_residual(f).is_zero();
    const RationalMap reflected =
        ratmap_compose_moebius(ratmap_substitute_power(beta12_map(), 5), Moebius(-1, 0, 0, 1), Side::Pre);
    r.matches_beta60 = reflected == RationalMap(GaussRat(Rational(1, 1728)), f.phi20.pow(3), f.phi12.pow(5));
    return r;
}

}  // namespace fullerene
