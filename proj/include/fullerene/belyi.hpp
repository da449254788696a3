#pragma once

#include "fullerene/rational_map.hpp"
#include "fullerene/uni_poly.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace fullerene {

/// Ramification data of a Belyi function: the multiplicities of the
/// preimages of 0 (black vertices), 1 (white vertices) and infinity (faces).
/// Each partition is stored in non-increasing order.
struct Passport {
    std::vector<unsigned> black;
    std::vector<unsigned> white;
    std::vector<unsigned> faces;

    Passport() = default;
    Passport(std::vector<unsigned> black, std::vector<unsigned> white, std::vector<unsigned> faces);

    unsigned black_sum() const;
    unsigned white_sum() const;
    unsigned faces_sum() const;
    /// True iff the three partitions have the same sum.
    bool balanced() const;

    /// Exponential notation, e.g. "(3^2 | 2^2 1^2 | 5^1 1^1)".
    std::string str() const;

    friend bool operator==(const Passport&, const Passport&) = default;
};

/// Builds a partition from (part, count) pairs, e.g. {{5, 12}, {6, 2}}.
std::vector<unsigned> partition(std::initializer_list<std::pair<unsigned, unsigned>> parts);

struct FullereneParams {
    unsigned p6 = 0;
    long p5 = 12;
    long f0 = 0;  ///< vertices
    long f1 = 0;  ///< edges
    long f2 = 0;  ///< faces
    long dessin_edges = 0;
    /// False only for p6 = 1, the hexagon count no fullerene has.
    bool realizable = true;
};

FullereneParams face_vector(unsigned p6);
/// (3^{2n} | 2^{3n} | 5^{12} 6^{n-10}) with n = 10 + p6.
Passport fullerene_passport(unsigned p6);

struct EquationCount {
    long unknowns = 0;
    long equations = 0;
    /// unknowns - equations; the dimension of the fractional-linear gauge group.
    long excess = 0;
};

/// Unknowns and equations of the main equation with monic V, P, H.
EquationCount counting(unsigned p6);

/// Where the scalar k sits in the main equation.
enum class ScalarConvention {
    OnVertices,  ///< k V^3 - P^5 H^6 = M^2
    OnFaces,     ///< V^3 - k P^5 H^6 = M^2 (monic V and M)
};

/// Residual of the main equation; the zero polynomial iff the identity holds.
UniPoly main_equation_residual(const GaussRat& k, const UniPoly& v, const UniPoly& p, const UniPoly& h,
                               const UniPoly& m,
                               ScalarConvention convention = ScalarConvention::OnVertices);

enum class CriticalClass { Zero, One, Pole, Regular };

const char* to_string(CriticalClass c);

struct BelyiFactor {
    UniPoly poly;
    unsigned exponent = 1;
};

/// Behaviour of beta at the point z = infinity.
struct InfinityTag {
    CriticalClass cls = CriticalClass::Regular;
    unsigned order = 0;
    friend bool operator==(const InfinityTag&, const InfinityTag&) = default;
};

/// beta = k * prod(zeros) / prod(poles), with
/// beta - 1 = c * prod(ones) / prod(poles) for the constant c fixed by degrees.
///
/// Every factor is monic and squarefree; all factors are pairwise coprime.
struct FactoredBelyi {
    std::string name;
    GaussRat k{1};
    std::vector<BelyiFactor> zeros;
    std::vector<BelyiFactor> ones;
    std::vector<BelyiFactor> poles;
    InfinityTag infinity;

    UniPoly zero_product() const;
    UniPoly one_product() const;
    UniPoly pole_product() const;
    RationalMap to_map() const;
};

enum class BelyiErrorKind { IdentityFailed, FactorNotSquarefree, FactorsShareRoot, DegreeImbalance };

const char* to_string(BelyiErrorKind kind);

class BelyiError : public std::runtime_error {
public:
    BelyiError(BelyiErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    BelyiErrorKind kind() const { return kind_; }

private:
    BelyiErrorKind kind_;
};

/// Certifies that f is a Belyi function with exactly the declared
/// factorization and returns its passport. Checks, in order: the identity
/// k*Z - P = c*O (Z, P, O the zero, pole and one products), squarefreeness and
/// pairwise coprimality of every factor, and degree balance including the
/// infinity tag. Throws BelyiError naming the offending factor(s).
///
/// Connectedness of the dessin is not checked.
Passport verify_belyi(const FactoredBelyi& f);

/// Factored form of a rational map read off by squarefree decomposition of
/// the numerator, the denominator and of k*num - den. The result passes
/// verify_belyi iff the map is a Belyi function (up to connectedness).
FactoredBelyi factor_belyi(const RationalMap& f, std::string name = {});

/// Passport of f(z^n) predicted from f alone: a factor equal to z keeps a
/// single part multiplied by n, every other finite part is repeated n times,
/// and the part at infinity is multiplied by n.
Passport predict_power_passport(const FactoredBelyi& f, unsigned n);

}  // namespace fullerene
