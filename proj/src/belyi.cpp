#include "fullerene/belyi.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace fullerene {

namespace {

void sort_desc(std::vector<unsigned>& v) { std::sort(v.begin(), v.end(), std::greater<>()); }

unsigned sum(const std::vector<unsigned>& v) { return std::accumulate(v.begin(), v.end(), 0U); }

std::string partition_str(const std::vector<unsigned>& parts) {
    std::vector<std::pair<unsigned, unsigned>> runs;
    for (unsigned p : parts) {
        if (!runs.empty() && runs.back().first == p) {
            ++runs.back().second;
        } else {
            runs.emplace_back(p, 1U);
        }
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (i != 0) os << " ";
        os << runs[i].first << "^" << runs[i].second;
    }
    return os.str();
}

UniPoly product(const std::vector<BelyiFactor>& fs) {
    UniPoly out = UniPoly::constant(GaussRat(1));
    for (const auto& f : fs) out *= f.poly.pow(f.exponent);
    return out;
}

unsigned weighted_degree(const std::vector<BelyiFactor>& fs) {
    unsigned n = 0;
    for (const auto& f : fs) n += static_cast<unsigned>(f.poly.deg()) * f.exponent;
    return n;
}

std::vector<BelyiFactor> to_factors(const std::vector<std::pair<UniPoly, unsigned>>& sqf) {
    std::vector<BelyiFactor> out;
    out.reserve(sqf.size());
    for (const auto& [p, e] : sqf) out.push_back({p, e});
    return out;
}

/// Behaviour at infinity implied by the degrees of the three products.
InfinityTag infinity_from_degrees(std::size_t deg_zero, std::size_t deg_pole, std::size_t deg_one) {
    if (deg_zero > deg_pole) return {CriticalClass::Pole, static_cast<unsigned>(deg_zero - deg_pole)};
    if (deg_zero < deg_pole) return {CriticalClass::Zero, static_cast<unsigned>(deg_pole - deg_zero)};
    if (deg_one < deg_pole) return {CriticalClass::One, static_cast<unsigned>(deg_pole - deg_one)};
    return {};
}

}  // namespace

Passport::Passport(std::vector<unsigned> b, std::vector<unsigned> w, std::vector<unsigned> f)
    : black(std::move(b)), white(std::move(w)), faces(std::move(f)) {
    sort_desc(black);
    sort_desc(white);
    sort_desc(faces);
}

unsigned Passport::black_sum() const { return sum(black); }
unsigned Passport::white_sum() const { return sum(white); }
unsigned Passport::faces_sum() const { return sum(faces); }

bool Passport::balanced() const { return black_sum() == white_sum() && white_sum() == faces_sum(); }

std::string Passport::str() const {
    return "(" + partition_str(black) + " | " + partition_str(white) + " | " + partition_str(faces) + ")";
}

std::vector<unsigned> partition(std::initializer_list<std::pair<unsigned, unsigned>> parts) {
    std::vector<unsigned> out;
    for (const auto& [part, count] : parts) out.insert(out.end(), count, part);
    sort_desc(out);
    return out;
}

FullereneParams face_vector(unsigned p6) {
    FullereneParams f;
    f.p6 = p6;
    f.f0 = 20 + 2L * p6;
    f.f1 = 30 + 3L * p6;
    f.f2 = 12 + static_cast<long>(p6);
    f.dessin_edges = 60 + 6L * p6;
    f.realizable = p6 != 1;
    return f;
}

Passport fullerene_passport(unsigned p6) {
    const unsigned n = 10 + p6;
    return {partition({{3, 2 * n}}), partition({{2, 3 * n}}), partition({{5, 12}, {6, n - 10}})};
}

EquationCount counting(unsigned p6) {
    const long h = p6;
    EquationCount c;
    // k, V, P, H monic, M of degree 30 + 3 p6 with all coefficients free.
    c.unknowns = 1 + (20 + 2 * h) + 12 + h + (31 + 3 * h);
    // Coefficients of z^0 .. z^{2 deg M} of the main equation.
    c.equations = 1 + 2 * (30 + 3 * h);
    c.excess = c.unknowns - c.equations;
    return c;
}

UniPoly main_equation_residual(const GaussRat& k, const UniPoly& v, const UniPoly& p, const UniPoly& h,
                               const UniPoly& m, ScalarConvention convention) {
    UniPoly faces = p.pow(5) * h.pow(6);
    UniPoly cube = v.pow(3);
    if (convention == ScalarConvention::OnVertices) {
        cube *= k;
    } else {
        faces *= k;
    }
    return cube - faces - m * m;
}

const char* to_string(CriticalClass c) {
    switch (c) {
        case CriticalClass::Zero: return "zero";
        case CriticalClass::One: return "one";
        case CriticalClass::Pole: return "pole";
        case CriticalClass::Regular: return "regular";
    }
    return "?";
}

const char* to_string(BelyiErrorKind kind) {
    switch (kind) {
        case BelyiErrorKind::IdentityFailed: return "IdentityFailed";
        case BelyiErrorKind::FactorNotSquarefree: return "FactorNotSquarefree";
        case BelyiErrorKind::FactorsShareRoot: return "FactorsShareRoot";
        case BelyiErrorKind::DegreeImbalance: return "DegreeImbalance";
    }
    return "?";
}

UniPoly FactoredBelyi::zero_product() const { return product(zeros); }
UniPoly FactoredBelyi::one_product() const { return product(ones); }
UniPoly FactoredBelyi::pole_product() const { return product(poles); }

RationalMap FactoredBelyi::to_map() const { return {k, zero_product(), pole_product()}; }

Passport verify_belyi(const FactoredBelyi& f) {
    struct Named {
        std::string label;
        const BelyiFactor* factor;
    };
    std::vector<Named> all;
    auto collect = [&](const std::vector<BelyiFactor>& fs, const char* side) {
        for (std::size_t i = 0; i < fs.size(); ++i) {
            all.push_back({std::string(side) + " factor #" + std::to_string(i + 1) + " (" + fs[i].poly.str() + ")",
                           &fs[i]});
        }
    };
    collect(f.zeros, "zero");
    collect(f.ones, "one");
    collect(f.poles, "pole");
    for (const auto& n : all) {
        if (!n.factor->poly.is_monic() || n.factor->poly.is_constant() || n.factor->exponent == 0) {
            throw std::invalid_argument("verify_belyi: malformed " + n.label +
                                        "; factors must be monic, nonconstant, with positive exponent");
        }
    }
    if (f.k.is_zero()) throw std::invalid_argument("verify_belyi: k must be nonzero");

    // (a) k Z - P = c O
    const UniPoly z = f.zero_product();
    const UniPoly p = f.pole_product();
    const UniPoly o = f.one_product();
    const UniPoly lhs = z * f.k - p;
    if (lhs.is_zero()) throw BelyiError(BelyiErrorKind::IdentityFailed, "beta is identically 1");
    if (!(lhs == o * lhs.leading())) {
        throw BelyiError(BelyiErrorKind::IdentityFailed,
                         "k*prod(zeros) - prod(poles) is not a constant multiple of prod(ones)");
    }

    // (b) squarefree, pairwise coprime
    for (const auto& n : all) {
        if (!squarefree_check(n.factor->poly)) {
            throw BelyiError(BelyiErrorKind::FactorNotSquarefree, n.label);
        }
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            if (!poly_coprime(all[i].factor->poly, all[j].factor->poly)) {
                throw BelyiError(BelyiErrorKind::FactorsShareRoot, all[i].label + " and " + all[j].label);
            }
        }
    }

    // (c) degree balance with the point at infinity
    const InfinityTag actual = infinity_from_degrees(z.deg(), p.deg(), o.deg());
    if (!(actual == f.infinity)) {
        throw BelyiError(BelyiErrorKind::DegreeImbalance,
                         std::string("declared infinity ") + to_string(f.infinity.cls) + " of order " +
                             std::to_string(f.infinity.order) + ", but degrees give " + to_string(actual.cls) +
                             " of order " + std::to_string(actual.order));
    }
    auto at_inf = [&](CriticalClass c) { return f.infinity.cls == c ? f.infinity.order : 0U; };
    const unsigned n_zero = weighted_degree(f.zeros) + at_inf(CriticalClass::Zero);
    const unsigned n_one = weighted_degree(f.ones) + at_inf(CriticalClass::One);
    const unsigned n_pole = weighted_degree(f.poles) + at_inf(CriticalClass::Pole);
    if (n_zero != n_one || n_one != n_pole) {
        throw BelyiError(BelyiErrorKind::DegreeImbalance,
                         "preimage counts over 0, 1, infinity are " + std::to_string(n_zero) + ", " +
                             std::to_string(n_one) + ", " + std::to_string(n_pole));
    }

    auto parts = [&](const std::vector<BelyiFactor>& fs, CriticalClass c) {
        std::vector<unsigned> out;
        for (const auto& x : fs) out.insert(out.end(), x.poly.deg(), x.exponent);
        if (f.infinity.cls == c) out.push_back(f.infinity.order);
        return out;
    };
    return {parts(f.zeros, CriticalClass::Zero), parts(f.ones, CriticalClass::One),
            parts(f.poles, CriticalClass::Pole)};
}

FactoredBelyi factor_belyi(const RationalMap& f, std::string name) {
    FactoredBelyi out;
    out.name = std::move(name);
    out.k = f.scalar();
    out.zeros = to_factors(squarefree_decomposition(f.num()));
    out.poles = to_factors(squarefree_decomposition(f.den()));
    const UniPoly shifted = f.num() * f.scalar() - f.den();
    if (shifted.is_zero()) throw std::invalid_argument("factor_belyi: map is identically 1");
    out.ones = to_factors(squarefree_decomposition(shifted));
    out.infinity = infinity_from_degrees(f.num().deg(), f.den().deg(), shifted.deg());
    return out;
}

Passport predict_power_passport(const FactoredBelyi& f, unsigned n) {
    const UniPoly z = UniPoly::z();
    auto parts = [&](const std::vector<BelyiFactor>& fs, CriticalClass c) {
        std::vector<unsigned> out;
        for (const auto& x : fs) {
            if (x.poly == z) {
                out.push_back(x.exponent * n);
            } else {
                out.insert(out.end(), x.poly.deg() * n, x.exponent);
            }
        }
        if (f.infinity.cls == c) out.push_back(f.infinity.order * n);
        return out;
    };
    return {parts(f.zeros, CriticalClass::Zero), parts(f.ones, CriticalClass::One),
            parts(f.poles, CriticalClass::Pole)};
}

}  // namespace fullerene
