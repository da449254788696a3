#pragma once

#include "fullerene/uni_poly.hpp"

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace fullerene {

using ComplexPoint = std::complex<double>;

struct RootOptions {
    /// Accept a root once |p(r)| <= tol * sum |c_i| max(1, |r|)^i.
    double tol = 1e-12;
    int max_iterations = 500;
};

class RootError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// All deg(p) complex roots of a squarefree p (checked exactly first;
/// std::invalid_argument otherwise). Aberth iteration followed by Newton
/// polishing, both in long double. Sorted by modulus, with moduli equal to
/// within 1e-9 (relative) treated as equal, then by argument in [0, 2 pi).
/// Throws RootError if some root misses the residual bound or two iterates
/// land on the same root; std::invalid_argument for the zero polynomial.
std::vector<ComplexPoint> roots(const UniPoly& p, const RootOptions& options = {});

/// z^24 + 228 z^18 + 494 z^12 - 228 z^6 + 1
UniPoly barrel_vertex_polynomial();
/// Z^4 + 228 Z^3 + 494 Z^2 - 228 Z + 1; its roots are a1^6, a7^6, -a13^6, -a19^6.
UniPoly barrel_quartic();

struct BarrelVertices {
    /// A[k - 1] is the vertex A_k.
    std::array<ComplexPoint, 24> a{};
    /// a1, a7, a13, a19.
    std::array<double, 4> moduli{};
    /// Largest |root - modulus * e^{i theta}| over the ring layout.
    double layout_error = 0.0;
};

/// Roots of the barrel vertex polynomial labelled A1..A24: four rings of six
/// with moduli a1 < a7 < a13 < a19, arguments k pi/3 on the first two rings
/// and pi/6 + k pi/3 on the last two. Throws RootError if the roots do not
/// have this structure.
BarrelVertices barrel_vertices(const RootOptions& options = {});

struct SpherePoint {
    double x = 0, y = 0, z = 0;
    double norm2() const { return x * x + y * y + z * z; }
};

/// X = 2x / (|w|^2 + 1), Y = 2y / (|w|^2 + 1), Z = (|w|^2 - 1) / (|w|^2 + 1)
SpherePoint inverse_stereographic(ComplexPoint w);

double distance(const SpherePoint& a, const SpherePoint& b);

/// p X + q Y + r Z = 1
struct Plane {
    double p = 0, q = 0, r = 0;
    /// p X + q Y + r Z - 1
    double residual(const SpherePoint& s) const { return p * s.x + q * s.y + r * s.z - 1.0; }
};

/// Throws std::invalid_argument when the points are collinear or their plane
/// passes through the origin.
Plane plane_through(const SpherePoint& a, const SpherePoint& b, const SpherePoint& c);

/// Angle between the planes' normals, in degrees, in [0, 90].
double dihedral_degrees(const Plane& a, const Plane& b);

/// Interior angle at b of the chords b->a and b->c, in degrees.
double angle_degrees(const SpherePoint& a, const SpherePoint& b, const SpherePoint& c);

struct FaceGeometryReport {
    /// Vertex labels k of A_k, in cycle order.
    std::vector<int> labels;
    std::vector<ComplexPoint> plane_points;
    std::vector<SpherePoint> points;
    /// lengths[i] = |points[i] points[i+1]| (cyclically).
    std::vector<double> lengths;
    /// angles[i] is the interior angle at points[i], degrees.
    std::vector<double> angles;
    /// Index of the apex vertex in the cycle.
    std::size_t apex = 0;
    /// Plane through the apex and its two neighbours.
    Plane apex_plane;
    /// Plane through three of the other four vertices...
    Plane base_plane;
    /// ...and the residual of the fourth one in it.
    double base_residual = 0.0;
    double dihedral = 0.0;
};

/// Metric data of a pentagonal face of the barrel, given as a cycle of labels
/// A_k and the position of the apex in that cycle. The default is the face
/// A1 A7 A13 A8 A2 with apex A13.
FaceGeometryReport face_geometry(const std::vector<int>& labels = {1, 7, 13, 8, 2}, std::size_t apex = 2,
                                 const RootOptions& options = {});

}  // namespace fullerene
