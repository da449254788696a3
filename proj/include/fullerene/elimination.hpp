#pragma once

#include "fullerene/multi_poly.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace fullerene {

/// One polynomial equation `poly = 0` of a system, tagged with where it came
/// from (the power of z whose coefficient produced it).
struct SystemEquation {
    int origin = 0;
    MultiPoly poly;
};

struct EliminationStep {
    int origin = 0;
    /// The equation after all earlier substitutions, before any division.
    MultiPoly equation;
    /// Assumed-nonzero factors divided out of `equation`, with multiplicity.
    std::vector<MultiPoly> divided_by;
    std::size_t variable = 0;
    /// variable = substitution, in terms of variables still unsolved at this step.
    MultiPoly substitution;
};

/// A free variable fixed to a value after elimination (the scaling freedom).
struct Normalization {
    std::size_t variable = 0;
    Rational value;
};

/// Record of a sequential linear elimination.
///
/// Invariants: replaying the steps in order annihilates every source equation,
/// and a solved variable never occurs in a later step's equation.
struct EliminationTrace {
    VarSetPtr vars;
    std::vector<SystemEquation> source;
    std::vector<EliminationStep> steps;
    /// Factors declared nonzero by the caller.
    std::vector<MultiPoly> assumptions;
    std::vector<std::size_t> free_vars;
    std::vector<Normalization> normalizations;

    /// Substitutes every step, in order.
    MultiPoly apply_steps(const MultiPoly& p) const;
    /// apply_steps followed by the normalizations.
    MultiPoly apply(const MultiPoly& p) const;
    ParamPoly apply(const ParamPoly& p) const;
    /// Value of `var` in terms of the free variables only.
    MultiPoly solution(std::size_t var) const;
    const EliminationStep* step_for(std::size_t var) const;
    /// True iff apply_steps annihilates every source equation.
    bool replay() const;
    /// Records var := value; var must be free.
    void normalize(std::size_t var, const Rational& value);

    std::string name(std::size_t var) const { return vars->name(var); }
};

enum class EliminationErrorKind { NonLinearStep, InconsistentSystem, NotDivisible };

const char* to_string(EliminationErrorKind kind);

/// Carries the partial trace so a failed elimination can be inspected.
class EliminationError : public std::runtime_error {
public:
    EliminationError(EliminationErrorKind kind, const std::string& what, EliminationTrace trace)
        : std::runtime_error(what), kind_(kind), trace_(std::move(trace)) {}

    EliminationErrorKind kind() const { return kind_; }
    const EliminationTrace& trace() const { return trace_; }

private:
    EliminationErrorKind kind_;
    EliminationTrace trace_;
};

/// eq / factor, registering factor among trace.assumptions. Throws
/// EliminationError(NotDivisible) if the division is not exact, which means
/// the assumption does not apply to this equation.
MultiPoly divide_out_assumed_nonzero(const MultiPoly& eq, const MultiPoly& factor,
                                     EliminationTrace& trace);

/// Solves a polynomial system by repeatedly picking an equation that is linear
/// in some unsolved unknown and substituting the solution everywhere.
///
/// Equations are visited in the given order. Before looking for a linear
/// unknown, every assumed-nonzero factor is divided out of the equation as
/// often as it divides. Among the unknowns that occur linearly with a nonzero
/// constant coefficient (or a coefficient made only of assumed-nonzero
/// factors that divides the rest of the equation), the one latest in
/// `unknowns` is solved for. An equation that cannot be used yet is deferred
/// until a later substitution makes it usable.
///
/// Throws EliminationError with kind InconsistentSystem when a nonzero
/// constant equation appears, and NonLinearStep when nonzero equations remain
/// but none is linear in an unsolved unknown.
EliminationTrace sequential_linear_solve(std::vector<SystemEquation> system,
                                         const std::vector<std::size_t>& unknowns,
                                         std::vector<MultiPoly> assumptions = {});

}  // namespace fullerene
