#include "fullerene/elimination.hpp"

#include <algorithm>
#include <optional>

namespace fullerene {

const char* to_string(EliminationErrorKind kind) {
    switch (kind) {
        case EliminationErrorKind::NonLinearStep: return "NonLinearStep";
        case EliminationErrorKind::InconsistentSystem: return "InconsistentSystem";
        case EliminationErrorKind::NotDivisible: return "NotDivisible";
    }
    return "?";
}

MultiPoly EliminationTrace::apply_steps(const MultiPoly& p) const {
    MultiPoly out = p;
    for (const auto& s : steps) out = out.substitute(s.variable, s.substitution);
    return out;
}

MultiPoly EliminationTrace::apply(const MultiPoly& p) const {
    MultiPoly out = apply_steps(p);
    for (const auto& n : normalizations) out = out.substitute(n.variable, MultiPoly::constant(vars, n.value));
    return out;
}

ParamPoly EliminationTrace::apply(const ParamPoly& p) const {
    std::vector<MultiPoly> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.push_back(apply(x));
    return {p.vars(), std::move(c)};
}

MultiPoly EliminationTrace::solution(std::size_t var) const {
    return apply_steps(MultiPoly::variable(vars, var));
}

const EliminationStep* EliminationTrace::step_for(std::size_t var) const {
    auto it = std::find_if(steps.begin(), steps.end(), [&](const auto& s) { return s.variable == var; });
    return it == steps.end() ? nullptr : &*it;
}

bool EliminationTrace::replay() const {
    return std::all_of(source.begin(), source.end(),
                       [&](const SystemEquation& e) { return apply_steps(e.poly).is_zero(); });
}

void EliminationTrace::normalize(std::size_t var, const Rational& value) {
    if (std::find(free_vars.begin(), free_vars.end(), var) == free_vars.end()) {
        throw std::invalid_argument("normalize: " + name(var) + " is not a free variable");
    }
    normalizations.push_back({var, value});
}

MultiPoly divide_out_assumed_nonzero(const MultiPoly& eq, const MultiPoly& factor,
                                     EliminationTrace& trace) {
    auto q = exact_divide(eq, factor);
    if (!q) {
        throw EliminationError(EliminationErrorKind::NotDivisible,
                               "assumed-nonzero factor " + factor.str() + " does not divide " + eq.str(),
                               trace);
    }
    if (std::find(trace.assumptions.begin(), trace.assumptions.end(), factor) == trace.assumptions.end()) {
        trace.assumptions.push_back(factor);
    }
    return *q;
}

namespace {

struct Pending {
    int origin;
    MultiPoly poly;
};

/// Strips assumed-nonzero factors from `p` until a constant remains.
/// Returns nullopt if something other than those factors is left.
std::optional<std::vector<MultiPoly>> split_assumption_product(MultiPoly p,
                                                              const std::vector<MultiPoly>& current) {
    std::vector<MultiPoly> used;
    bool progress = true;
    while (!p.is_constant() && progress) {
        progress = false;
        for (const auto& a : current) {
            if (a.is_constant()) continue;
            if (auto q = exact_divide(p, a)) {
                p = std::move(*q);
                used.push_back(a);
                progress = true;
                break;
            }
        }
    }
    if (!p.is_constant() || p.is_zero()) return std::nullopt;
    return used;
}

}  // namespace

EliminationTrace sequential_linear_solve(std::vector<SystemEquation> system,
                                         const std::vector<std::size_t>& unknowns,
                                         std::vector<MultiPoly> assumptions) {
    EliminationTrace trace;
    for (const auto& e : system) {
        if (e.poly.vars()) {
            trace.vars = e.poly.vars();
            break;
        }
    }
    if (!trace.vars) {
        for (const auto& a : assumptions) {
            if (a.vars()) trace.vars = a.vars();
        }
    }
    trace.source = system;
    trace.assumptions = assumptions;

    std::vector<Pending> pending;
    pending.reserve(system.size());
    for (auto& e : system) pending.push_back({e.origin, std::move(e.poly)});
    std::vector<MultiPoly> current_assumptions = std::move(assumptions);
    std::vector<bool> solved(trace.vars ? trace.vars->size() : 0, false);

    auto finish_free_vars = [&] {
        trace.free_vars.clear();
        for (std::size_t v : unknowns) {
            if (!solved[v]) trace.free_vars.push_back(v);
        }
    };

    while (true) {
        std::erase_if(pending, [](const Pending& p) { return p.poly.is_zero(); });
        if (pending.empty()) break;

        bool solved_one = false;
        for (auto it = pending.begin(); it != pending.end(); ++it) {
            MultiPoly eq = it->poly;
            std::vector<MultiPoly> divided;
            for (const auto& a : current_assumptions) {
                if (a.is_constant()) continue;
                while (!eq.is_constant()) {
                    auto q = exact_divide(eq, a);
                    if (!q) break;
                    eq = std::move(*q);
                    divided.push_back(a);
                }
            }
            if (eq.is_constant()) {
                finish_free_vars();
                throw EliminationError(EliminationErrorKind::InconsistentSystem,
                                       "equation from z^" + std::to_string(it->origin) +
                                           " reduces to the nonzero constant " +
                                           eq.constant_value().get_str(),
                                       trace);
            }

            std::optional<std::size_t> chosen;
            MultiPoly substitution;
            for (auto u = unknowns.rbegin(); u != unknowns.rend() && !chosen; ++u) {
                if (solved[*u] || eq.degree_in(*u) != 1) continue;
                MultiPoly coeff = eq.coefficient_in(*u, 1);
                MultiPoly rest = eq.coefficient_in(*u, 0);
                if (coeff.is_constant()) {
                    chosen = *u;
                    substitution = -rest / coeff.constant_value();
                    continue;
                }
                auto factors = split_assumption_product(coeff, current_assumptions);
                if (!factors) continue;
                if (auto q = exact_divide(rest, coeff)) {
                    chosen = *u;
                    substitution = -*q;
                    divided.insert(divided.end(), factors->begin(), factors->end());
                }
            }
            if (!chosen) continue;

            trace.steps.push_back({it->origin, it->poly, std::move(divided), *chosen, substitution});
            solved[*chosen] = true;
            pending.erase(it);
            for (auto& p : pending) p.poly = p.poly.substitute(*chosen, substitution);
            for (auto& a : current_assumptions) a = a.substitute(*chosen, substitution);
            solved_one = true;
            break;
        }
        if (!solved_one) {
            finish_free_vars();
            throw EliminationError(EliminationErrorKind::NonLinearStep,
                                   "no remaining equation is linear in an unsolved unknown; first is " +
                                       pending.front().poly.str(),
                                   trace);
        }
    }
    finish_free_vars();
    return trace;
}

}  // namespace fullerene
