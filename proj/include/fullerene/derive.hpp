#pragma once

#include "fullerene/belyi.hpp"
#include "fullerene/elimination.hpp"
#include "fullerene/multi_poly.hpp"
#include "fullerene/uni_poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fullerene {

/// Vertex and midpoint polynomials expressed through the pentagon polynomial.
template <class Poly>
struct VertexMidpoint {
    Poly v;
    Poly m;
};

/// V = 25/(11 s^2) (-12 P P'' + 11 P'^2),
/// M = 25/(11 s^3) (90 P P' P'' - 36 P^2 P''' - 55 P'^3).
VertexMidpoint<UniPoly> vm_from_p(const UniPoly& p, unsigned s);
VertexMidpoint<ParamPoly> vm_from_p(const ParamPoly& p, unsigned s);

/// 22 P P'''' + 45 P''^2 - 66 P' P'''
UniPoly ode_residual(const UniPoly& p);
ParamPoly ode_residual(const ParamPoly& p);

/// (s-6)(s-5)(s+5)(s+6), cross-checked against m(m-1)(m-11)(m-12) with
/// m = 6 + s; throws std::logic_error if the two disagree. s >= 1.
Rational ode_leading_coeff(unsigned s);

/// Degrees attached to the passport (3^k | 2^l | 5^m s^1).
struct CaseDegrees {
    unsigned n = 0;      ///< edges, 30 + 6s
    unsigned k_deg = 0;  ///< deg V, 10 + 2s
    unsigned l_deg = 0;  ///< deg M, 15 + 3s
    unsigned m = 0;      ///< deg P, 6 + s
};
CaseDegrees case_degrees(unsigned s);
/// (3^{10+2s} | 2^{15+3s} | 5^{6+s} s^1)
Passport case_passport(unsigned s);

enum class Verdict { Solved, NoSolutionLeadingCoeff, NoSolutionDegreeDeficit };

const char* to_string(Verdict v);

struct CaseReport {
    unsigned s = 0;
    CaseDegrees degrees;
    Verdict verdict = Verdict::NoSolutionLeadingCoeff;
    /// Top coefficient of the ODE residual for a monic P of degree m.
    Rational leading_coeff;
    /// Elimination of the ODE coefficient system (partial when it stopped early).
    EliminationTrace trace;
    std::optional<EliminationErrorKind> engine_stop;

    // Solved case.
    std::optional<UniPoly> p;
    std::optional<UniPoly> v;
    std::optional<UniPoly> m;
    std::optional<Rational> k;
    std::optional<bool> residual_zero;

    // Degree-deficit case: the parametric family and the vanishing top terms.
    std::optional<ParamPoly> family_p;
    std::optional<ParamPoly> family_v;
    std::optional<ParamPoly> family_m;
    std::optional<MultiPoly> family_k;
    std::optional<bool> family_identity;
    std::optional<MultiPoly> v_top_coeff;  ///< coefficient of z^{k_deg} in V
    std::optional<MultiPoly> m_top_coeff;  ///< coefficient of z^{l_deg} in M

    std::vector<std::string> notes;
};

struct DeriveOptions {
    unsigned max_s = 12;
    /// Verify V^3 = M^2 + k P^5 symbolically over the whole s = 6 family.
    bool symbolic_family_check = true;
};

/// Runs the differential-trick pipeline for the passport (3^k | 2^l | 5^m s^1)
/// with the face of degree s at infinity. Throws std::out_of_range for s = 0 or
/// s above options.max_s.
CaseReport derive_case(unsigned s, const DeriveOptions& options = {});

/// Parametric monic P of degree 6 + s with a_{m-1} = 0, its ODE system (one
/// equation per power of z, highest first), and the elimination of that system.
struct OdeSystem {
    VarSetPtr vars;
    ParamPoly p;
    std::vector<SystemEquation> equations;
    std::vector<std::size_t> unknowns;
};
OdeSystem ode_system(unsigned s);

struct IdentityCheck {
    std::string name;
    bool holds = false;
};

struct HalphenReport {
    std::vector<IdentityCheck> identities;
    /// deg R <= deg P - 2 for R = -190 P'' / 11.
    bool r_degree_bound = false;
    bool passed() const;
    /// Name of the first identity that fails, or empty.
    std::string first_failure() const;
};

/// Checks the intermediate identities of the differential trick (sM, sV2,
/// ODE-1, ODE-2, VR, PR, ODE-4) exactly on concrete data.
HalphenReport halphen_intermediates_check(const UniPoly& p, const UniPoly& v, const UniPoly& m, unsigned s);

struct FamilyPoint {
    UniPoly p;
    UniPoly v;
    UniPoly m;
    Rational k;
    bool identity_holds = false;
};

/// k = -5^4 (2^3 5^2 a10^3 + 3^3 11 a9^2) / (3^3 11^3)
Rational family_k_formula(const Rational& a9, const Rational& a10);

/// Evaluates the s = 6 family at (a9, a10) and checks V^3 = M^2 + k P^5 with
/// k from family_k_formula. Throws std::invalid_argument at (0, 0).
FamilyPoint family_k(const Rational& a9, const Rational& a10);

struct D6Result {
    EliminationTrace trace;
    /// beta_6 = (z^2 + 10 z + 5)^3 / (1728 z), stored with k = 1/1728.
    FactoredBelyi beta6;
    /// The constant of S = A^3 - B^2 C - k z after normalization (1728).
    Rational s_constant;
};

/// Eliminates the coefficient system of
/// S = (z^2+a1 z+a0)^3 - (z^2+b1 z+b0)^2 (z^2+c1 z+c0) - k z
/// under a1 - b1 != 0, then normalizes a1 = 10.
D6Result d6_solve();

}  // namespace fullerene
