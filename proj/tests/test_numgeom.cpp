#include "fullerene/numgeom.hpp"
#include "oracles.hpp"

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

using namespace fullerene;

namespace {

UniPoly zpoly(std::initializer_list<std::pair<unsigned, long>> terms) { return oracle::to_poly(oracle::dense(terms)); }

/// Eigenvalues of the companion matrix of a monic real polynomial.
std::vector<std::complex<double>> companion_roots(const UniPoly& p) {
    const std::size_t n = p.deg();
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 1; i < n; ++i) c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n - 1)) = -p.coeff(i).re().get_d();
    }
    Eigen::EigenSolver<Eigen::MatrixXd> es(c);
    std::vector<std::complex<double>> out(es.eigenvalues().begin(), es.eigenvalues().end());
    return out;
}

double nearest(const std::vector<ComplexPoint>& pts, ComplexPoint z) {
    double best = 1e300;
    for (const auto& p : pts) best = std::min(best, std::abs(p - z));
    return best;
}

SpherePoint sp(double x, double y, double z) { return {x, y, z}; }

}  // namespace

TEST(Roots, Gaussian) {
    const auto r = roots(zpoly({{2, 1}, {0, 1}}));
    ASSERT_EQ(r.size(), 2U);
    EXPECT_NEAR(std::abs(r[0] - ComplexPoint(0, 1)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(r[1] - ComplexPoint(0, -1)), 0.0, 1e-14);
}

TEST(Roots, OnesOfBeta6) {
    const auto r = roots(zpoly({{2, 1}, {1, 22}, {0, 125}}));
    ASSERT_EQ(r.size(), 2U);
    EXPECT_NEAR(std::abs(r[0] - ComplexPoint(-11, 2)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(r[1] - ComplexPoint(-11, -2)), 0.0, 1e-12);
}

TEST(Roots, RejectsRepeatedRoots) {
    EXPECT_THROW(roots(zpoly({{2, 1}, {1, 2}, {0, 1}})), std::invalid_argument);
    EXPECT_THROW(roots(UniPoly()), std::invalid_argument);
}

TEST(Roots, QuarticAgainstCompanionMatrix) {
    const UniPoly q = barrel_quartic();
    EXPECT_EQ(q, zpoly({{4, 1}, {3, 228}, {2, 494}, {1, -228}, {0, 1}}));
    const auto r = roots(q);
    const auto oracle_roots = companion_roots(q);
    ASSERT_EQ(r.size(), 4U);
    for (const auto& z : oracle_roots) EXPECT_LT(nearest(r, z), 1e-9 * std::max(1.0, std::abs(z)));
    for (const auto& z : r) EXPECT_LT(std::abs(z.imag()), 1e-12);
}

TEST(Roots, RandomPolynomialsAgainstCompanionMatrix) {
    std::mt19937 rng(3);
    int checked = 0;
    while (checked < 200) {
        UniPoly p = oracle::random_poly(rng, 10, true);
        if (p.is_zero() || p.deg() < 1 || !squarefree_check(p)) continue;
        p = p.monic();
        const auto r = roots(p);
        const auto o = companion_roots(p);
        ASSERT_EQ(r.size(), o.size());
        for (const auto& z : o) ASSERT_LT(nearest(r, z), 1e-6 * std::max(1.0, std::abs(z))) << p.str();
        for (std::size_t i = 1; i < r.size(); ++i) ASSERT_LE(std::abs(r[i - 1]), std::abs(r[i]) * (1 + 1e-9));
        ++checked;
    }
}

TEST(Barrel, VertexPolynomial) {
    EXPECT_EQ(barrel_vertex_polynomial(), poly_substitute_power(barrel_quartic(), 6));
}

TEST(Barrel, Moduli) {
    const BarrelVertices b = barrel_vertices();
    const std::array<double, 4> tabulated = {0.405, 0.853, 1.171, 2.467};
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(b.moduli[i], tabulated[i], 5e-3) << i;
    EXPECT_NEAR(b.moduli[0] * b.moduli[3], 1.0, 1e-9);
    EXPECT_NEAR(b.moduli[1] * b.moduli[2], 1.0, 1e-9);
    EXPECT_LT(b.layout_error, 1e-9);
}

TEST(Barrel, ClosedFormModuli) {
    // The quartic splits over Q(sqrt 5) as (Z^2 + (114 + 50 sqrt5) Z - 1)(Z^2 + (114 - 50 sqrt5) Z - 1),
    // so the outer pair carries sqrt(255 + 114 sqrt5) and the inner pair sqrt(255 - 114 sqrt5).
    const double s5 = std::sqrt(5.0), plus = 5 * std::sqrt(255 + 114 * s5), minus = 5 * std::sqrt(255 - 114 * s5);
    const BarrelVertices b = barrel_vertices();
    EXPECT_NEAR(b.moduli[0], std::pow(-57 - 25 * s5 + plus, 1.0 / 6), 1e-9);
    EXPECT_NEAR(b.moduli[1], std::pow(-57 + 25 * s5 + minus, 1.0 / 6), 1e-12);
    EXPECT_NEAR(b.moduli[2], std::pow(57 - 25 * s5 + minus, 1.0 / 6), 1e-12);
    EXPECT_NEAR(b.moduli[3], std::pow(57 + 25 * s5 + plus, 1.0 / 6), 1e-12);
    // As printed, the first radicand is negative.
    EXPECT_LT(-57 - 25 * s5 + minus, 0.0);
}

TEST(Barrel, Symmetry) {
    const BarrelVertices b = barrel_vertices();
    const ComplexPoint w = std::polar(1.0, std::numbers::pi / 6);
    // A19 = e^{i pi/6} / A1 and A13 = e^{i pi/6} / A7 (conjugated argument on the unit circle).
    EXPECT_NEAR(std::abs(b.a[18] - w / std::conj(b.a[0])), 0.0, 1e-9);
    EXPECT_NEAR(std::abs(b.a[12] - w / std::conj(b.a[6])), 0.0, 1e-9);
    EXPECT_NEAR(std::abs(b.a[1] - std::polar(b.moduli[0], std::numbers::pi / 3)), 0.0, 1e-9);
    EXPECT_NEAR(std::abs(b.a[7] - std::polar(b.moduli[1], std::numbers::pi / 3)), 0.0, 1e-9);
}

TEST(Stereographic, PoleAndEquator) {
    const SpherePoint s = inverse_stereographic(0);
    EXPECT_DOUBLE_EQ(s.z, -1.0);
    const SpherePoint e = inverse_stereographic(ComplexPoint(0, 1));
    EXPECT_NEAR(e.y, 1.0, 1e-15);
    EXPECT_NEAR(e.z, 0.0, 1e-15);
}

TEST(Stereographic, SphereResidualProperty) {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 10000; ++i) {
        const ComplexPoint w(std::sinh(3 * u(rng)), std::sinh(3 * u(rng)));
        ASSERT_LE(std::abs(inverse_stereographic(w).norm2() - 1.0), 1e-12) << w;
    }
    for (const auto& z : barrel_vertices().a) EXPECT_LE(std::abs(inverse_stereographic(z).norm2() - 1.0), 1e-12);
}

TEST(Planes, Errors) {
    EXPECT_THROW(plane_through(sp(1, 0, 0), sp(2, 0, 0), sp(3, 0, 0)), std::invalid_argument);
    EXPECT_THROW(plane_through(sp(1, 0, 0), sp(0, 1, 0), sp(-1, -1, 0)), std::invalid_argument);
    const Plane p = plane_through(sp(1, 0, 0), sp(0, 1, 0), sp(0, 0, 1));
    EXPECT_NEAR(p.p, 1.0, 1e-15);
    EXPECT_NEAR(p.q, 1.0, 1e-15);
    EXPECT_NEAR(p.r, 1.0, 1e-15);
}

TEST(Angles, Elementary) {
    EXPECT_NEAR(angle_degrees(sp(1, 0, 0), sp(0, 0, 0), sp(0, 1, 0)), 90.0, 1e-12);
    EXPECT_NEAR(angle_degrees(sp(1, 0, 0), sp(0, 0, 0), sp(-1, 1e-9, 0)), 180.0, 1e-6);
    EXPECT_NEAR(dihedral_degrees({1, 0, 0}, {2, 0, 0}), 0.0, 1e-12);
    EXPECT_NEAR(dihedral_degrees({1, 0, 0}, {0, 1, 0}), 90.0, 1e-12);
    // Opposite normals describe the same unoriented plane direction.
    EXPECT_NEAR(dihedral_degrees({1, 0, 0}, {-1, 0, 0}), 0.0, 1e-12);
}

TEST(FaceGeometry, Coordinates) {
    const FaceGeometryReport f = face_geometry();
    ASSERT_EQ(f.labels, (std::vector<int>{1, 7, 13, 8, 2}));
    // X, Y, Z of A1, A7, A13, A8, A2 as tabulated (three digits).
    const std::vector<std::array<double, 3>> table = {
        {0.696, 0, -0.717}, {0.987, 0, -0.156}, {0.855, 0.493, 0.156}, {0.493, 0.855, -0.156}, {0.348, 0.602, -0.717}};
    for (std::size_t i = 0; i < 5; ++i) {
        EXPECT_NEAR(f.points[i].x, table[i][0], 5e-3) << i;
        EXPECT_NEAR(f.points[i].y, table[i][1], 5e-3) << i;
        EXPECT_NEAR(f.points[i].z, table[i][2], 5e-3) << i;
    }
}

TEST(FaceGeometry, LengthsAndPlanes) {
    const FaceGeometryReport f = face_geometry();
    const std::vector<double> lengths = {0.632, 0.599, 0.599, 0.632, 0.696};
    for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(f.lengths[i], lengths[i], 5e-3) << i;
    EXPECT_NEAR(f.lengths[1], f.lengths[2], 1e-12);
    EXPECT_NEAR(f.lengths[0], f.lengths[3], 1e-12);
    EXPECT_NEAR(f.base_plane.p, 0.935, 2e-3);
    EXPECT_NEAR(f.base_plane.q, 0.540, 2e-3);
    EXPECT_NEAR(f.base_plane.r, -0.485, 2e-3);
    EXPECT_NEAR(f.apex_plane.p, 0.939, 2e-3);
    EXPECT_NEAR(f.apex_plane.q, 0.542, 2e-3);
    EXPECT_NEAR(f.apex_plane.r, -0.457, 2e-3);
    EXPECT_LT(std::abs(f.base_residual), 1e-12);
    EXPECT_NEAR(f.dihedral, 1.36, 0.05);
}

TEST(FaceGeometry, AnglesAgainstDotProductOracle) {
    const FaceGeometryReport f = face_geometry();
    for (std::size_t i = 0; i < 5; ++i) {
        const auto& a = f.points[(i + 4) % 5];
        const auto& b = f.points[i];
        const auto& c = f.points[(i + 1) % 5];
        const Eigen::Vector3d u(a.x - b.x, a.y - b.y, a.z - b.z), v(c.x - b.x, c.y - b.y, c.z - b.z);
        const double oracle_deg = std::acos(u.dot(v) / (u.norm() * v.norm())) * 180.0 / std::numbers::pi;
        EXPECT_NEAR(f.angles[i], oracle_deg, 1e-9) << i;
    }
    // Printed angles are truncated: 103.3..., 111.2..., 110.8...
    EXPECT_EQ(std::floor(f.angles[0] * 10), 1033);
    EXPECT_EQ(std::floor(f.angles[1] * 10), 1112);
    EXPECT_EQ(std::floor(f.angles[2] * 10), 1108);
    EXPECT_NEAR(f.angles[1], f.angles[3], 1e-9);
    EXPECT_NEAR(f.angles[0], f.angles[4], 1e-9);
    double sum = 0;
    for (double a : f.angles) sum += a;
    // Non-planar, so the angle sum falls just short of 540.
    EXPECT_LT(sum, 540.0);
    EXPECT_GT(sum, 539.0);
}

TEST(FaceGeometry, BadLabels) {
    EXPECT_THROW(face_geometry({1, 7, 13}, 5), std::invalid_argument);
    EXPECT_THROW(face_geometry({1, 7, 13, 8, 25}, 2), std::invalid_argument);
}
