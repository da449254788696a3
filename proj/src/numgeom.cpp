#include "fullerene/numgeom.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace fullerene {

namespace {

using cld = std::complex<long double>;

constexpr long double kPi = std::numbers::pi_v<long double>;

cld to_cld(const GaussRat& c) { return {c.re().get_d(), c.im().get_d()}; }

struct Eval {
    cld value;
    cld deriv;
};

Eval horner(const std::vector<cld>& c, cld z) {
    cld v = 0, d = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        d = d * z + v;
        v = v * z + c[i];
    }
    return {v, d};
}

long double residual_scale(const std::vector<cld>& c, cld z) {
    const long double r = std::max<long double>(1.0L, std::abs(z));
    long double s = 0, rp = 1;
    for (const auto& x : c) {
        s += std::abs(x) * rp;
        rp *= r;
    }
    return s;
}

double normalized_arg(ComplexPoint z) {
    double a = std::arg(z);
    if (a < 0) a += 2 * std::numbers::pi;
    if (a >= 2 * std::numbers::pi - 1e-12) a = 0;
    return a;
}

}  // namespace

std::vector<ComplexPoint> roots(const UniPoly& p, const RootOptions& options) {
    if (!(options.tol > 0)) throw std::invalid_argument("roots: tolerance must be positive");
    if (p.is_zero()) throw std::invalid_argument("roots: zero polynomial");
    if (p.is_constant()) return {};
    if (!squarefree_check(p)) throw std::invalid_argument("roots: polynomial is not squarefree");

    const UniPoly monic = p.monic();
    std::vector<cld> c;
    for (const auto& x : monic.coeffs()) c.push_back(to_cld(x));
    // A root at 0 is exact (and simple); split it off so the start circle is not degenerate.
    const bool zero_root = monic.coeff(0).is_zero();
    if (zero_root) c.erase(c.begin());
    const std::size_t n = c.size() - 1;

    // Start on a circle whose radius is the geometric mean of the root moduli.
    long double radius = std::pow(std::max(std::abs(c[0]), 1e-300L), 1.0L / static_cast<long double>(n));
    if (!(radius > 0) || !std::isfinite(radius)) radius = 1;
    std::vector<cld> z(n);
    for (std::size_t k = 0; k < n; ++k) {
        z[k] = std::polar(radius, 2 * kPi * static_cast<long double>(k) / static_cast<long double>(n) + 0.4L);
    }

    const long double eps = std::numeric_limits<long double>::epsilon();
    bool converged = false;
    for (int it = 0; it < options.max_iterations && !converged; ++it) {
        converged = true;
        for (std::size_t k = 0; k < n; ++k) {
            auto [v, d] = horner(c, z[k]);
            if (v == cld(0)) continue;
            const cld ratio = v / d;
            cld sum = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != k) sum += 1.0L / (z[k] - z[j]);
            }
            const cld step = ratio / (1.0L - ratio * sum);
            z[k] -= step;
            if (std::abs(step) > 8 * eps * std::max<long double>(1.0L, std::abs(z[k]))) converged = false;
        }
    }

    std::vector<ComplexPoint> out;
    out.reserve(n + 1);
    if (zero_root) out.emplace_back(0.0, 0.0);
    for (auto& r : z) {
        for (int i = 0; i < 5; ++i) {
            auto [v, d] = horner(c, r);
            if (d == cld(0)) break;
            r -= v / d;
        }
        const long double res = std::abs(horner(c, r).value);
        if (!std::isfinite(res) || res > options.tol * residual_scale(c, r)) {
            throw RootError("roots: no convergence after " + std::to_string(options.max_iterations) +
                            " iterations (residual " + std::to_string(static_cast<double>(res)) + ")");
        }
        out.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
    }
    // p is squarefree, so two iterates on the same root mean one root was missed.
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t j = i + 1; j < out.size(); ++j) {
            if (std::abs(out[i] - out[j]) <= 1e-13 * std::max(1.0, std::abs(out[i]))) {
                throw RootError("roots: two iterates converged to the same root");
            }
        }
    }

    std::sort(out.begin(), out.end(), [](ComplexPoint a, ComplexPoint b) { return std::abs(a) < std::abs(b); });
    // Group moduli into clusters, then order each cluster by argument.
    std::size_t start = 0;
    for (std::size_t i = 1; i <= out.size(); ++i) {
        if (i == out.size() ||
            std::abs(out[i]) - std::abs(out[i - 1]) > 1e-9 * std::max(1.0, std::abs(out[i]))) {
            std::sort(out.begin() + static_cast<long>(start), out.begin() + static_cast<long>(i),
                      [](ComplexPoint a, ComplexPoint b) { return normalized_arg(a) < normalized_arg(b); });
            start = i;
        }
    }
    return out;
}

UniPoly barrel_vertex_polynomial() {
    UniPoly v;
    for (auto [n, c] : {std::pair{24, 1}, {18, 228}, {12, 494}, {6, -228}, {0, 1}}) {
        v += UniPoly::monomial(static_cast<std::size_t>(n), GaussRat(c));
    }
    return v;
}

UniPoly barrel_quartic() { return UniPoly{1, -228, 494, 228, 1}; }

BarrelVertices barrel_vertices(const RootOptions& options) {
    const std::vector<ComplexPoint> r = roots(barrel_vertex_polynomial(), options);
    if (r.size() != 24) throw RootError("barrel_vertices: expected 24 roots");

    BarrelVertices out;
    for (std::size_t ring = 0; ring < 4; ++ring) {
        double lo = std::abs(r[6 * ring]);
        double hi = lo;
        for (std::size_t j = 0; j < 6; ++j) {
            lo = std::min(lo, std::abs(r[6 * ring + j]));
            hi = std::max(hi, std::abs(r[6 * ring + j]));
        }
        if (hi - lo > 1e-9 * hi) {
            throw RootError("barrel_vertices: ring " + std::to_string(ring + 1) + " moduli do not cluster");
        }
        const double a = (lo + hi) / 2;
        if (ring > 0 && a <= out.moduli[ring - 1] * (1 + 1e-6)) {
            throw RootError("barrel_vertices: ring moduli are not distinct");
        }
        out.moduli[ring] = a;
        const double phase = ring < 2 ? 0.0 : std::numbers::pi / 6;
        for (std::size_t k = 0; k < 6; ++k) {
            const ComplexPoint expected = std::polar(a, phase + static_cast<double>(k) * std::numbers::pi / 3);
            const auto best = std::min_element(r.begin() + static_cast<long>(6 * ring),
                                               r.begin() + static_cast<long>(6 * ring + 6),
                                               [&](ComplexPoint x, ComplexPoint y) {
                                                   return std::abs(x - expected) < std::abs(y - expected);
                                               });
            const double err = std::abs(*best - expected);
            if (err > 1e-8 * a) {
                throw RootError("barrel_vertices: no root at the expected position of A" +
                                std::to_string(6 * ring + k + 1));
            }
            out.layout_error = std::max(out.layout_error, err);
            out.a[6 * ring + k] = *best;
        }
    }
    return out;
}

SpherePoint inverse_stereographic(ComplexPoint w) {
    const double x = w.real();
    const double y = w.imag();
    const double r2 = x * x + y * y;
    const double d = r2 + 1.0;
    return {2 * x / d, 2 * y / d, (r2 - 1.0) / d};
}

double distance(const SpherePoint& a, const SpherePoint& b) {
    return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

Plane plane_through(const SpherePoint& a, const SpherePoint& b, const SpherePoint& c) {
    const Eigen::Vector3d pa(a.x, a.y, a.z), pb(b.x, b.y, b.z), pc(c.x, c.y, c.z);
    const Eigen::Vector3d normal = (pb - pa).cross(pc - pa);
    const double scale = std::max({(pb - pa).norm(), (pc - pa).norm(), 1e-300});
    if (normal.norm() <= 1e-12 * scale * scale) {
        throw std::invalid_argument("plane_through: points are collinear");
    }
    if (std::abs(normal.dot(pa)) <= 1e-12 * normal.norm()) {
        throw std::invalid_argument("plane_through: plane passes through the origin");
    }
    Eigen::Matrix3d m;
    m.row(0) = pa;
    m.row(1) = pb;
    m.row(2) = pc;
    const Eigen::Vector3d coef = m.fullPivLu().solve(Eigen::Vector3d::Ones());
    return {coef.x(), coef.y(), coef.z()};
}

double dihedral_degrees(const Plane& a, const Plane& b) {
    const Eigen::Vector3d na = Eigen::Vector3d(a.p, a.q, a.r).normalized();
    const Eigen::Vector3d nb = Eigen::Vector3d(b.p, b.q, b.r).normalized();
    const double c = std::clamp(std::abs(na.dot(nb)), 0.0, 1.0);
    return std::acos(c) * 180.0 / std::numbers::pi;
}

double angle_degrees(const SpherePoint& a, const SpherePoint& b, const SpherePoint& c) {
    const Eigen::Vector3d u(a.x - b.x, a.y - b.y, a.z - b.z);
    const Eigen::Vector3d v(c.x - b.x, c.y - b.y, c.z - b.z);
    // atan2 of |u x v| and u.v stays accurate near 0 and 180 degrees.
    return std::atan2(u.cross(v).norm(), u.dot(v)) * 180.0 / std::numbers::pi;
}

FaceGeometryReport face_geometry(const std::vector<int>& labels, std::size_t apex, const RootOptions& options) {
    if (labels.size() != 5) throw std::invalid_argument("face_geometry: a pentagon needs five labels");
    if (apex >= labels.size()) throw std::invalid_argument("face_geometry: apex index out of range");
    if (std::set<int>(labels.begin(), labels.end()).size() != labels.size()) {
        throw std::invalid_argument("face_geometry: repeated label");
    }
    for (int l : labels) {
        if (l < 1 || l > 24) throw std::invalid_argument("face_geometry: no barrel vertex A" + std::to_string(l));
    }

    const BarrelVertices bv = barrel_vertices(options);
    FaceGeometryReport r;
    r.labels = labels;
    r.apex = apex;
    for (int l : labels) {
        r.plane_points.push_back(bv.a[static_cast<std::size_t>(l - 1)]);
        r.points.push_back(inverse_stereographic(r.plane_points.back()));
    }
    const std::size_t n = labels.size();
    for (std::size_t i = 0; i < n; ++i) {
        r.lengths.push_back(distance(r.points[i], r.points[(i + 1) % n]));
        r.angles.push_back(angle_degrees(r.points[(i + n - 1) % n], r.points[i], r.points[(i + 1) % n]));
    }
    auto at = [&](std::size_t offset) -> const SpherePoint& { return r.points[(apex + offset) % n]; };
    r.apex_plane = plane_through(at(n - 1), at(1), at(0));
    // The three vertices away from the apex span the base plane; the apex's
    // other neighbour is tested against it.
    r.base_plane = plane_through(at(3), at(2), at(4));
    r.base_residual = r.base_plane.residual(at(1));
    r.dihedral = dihedral_degrees(r.base_plane, r.apex_plane);
    return r;
}

}  // namespace fullerene
