#include "fullerene/derive.hpp"

#include <stdexcept>

namespace fullerene {

namespace {

UniPoly scaled(const UniPoly& p, const Rational& c) { return p * GaussRat(c); }
ParamPoly scaled(const ParamPoly& p, const Rational& c) { return p * c; }

template <class Poly>
VertexMidpoint<Poly> vm_impl(const Poly& p, unsigned s) {
    if (s == 0) throw std::invalid_argument("vm_from_p: s must be positive");
    const Poly d1 = p.derivative();
    const Poly d2 = d1.derivative();
    const Poly d3 = d2.derivative();
    const Rational s2(static_cast<long>(s * s));
    const Rational s3(static_cast<long>(s * s * s));
    Poly v = scaled(p * d2, Rational(-12)) + scaled(d1 * d1, Rational(11));
    Poly m = scaled(p * d1 * d2, Rational(90)) - scaled(p * p * d3, Rational(36)) -
             scaled(d1 * d1 * d1, Rational(55));
    return {scaled(v, Rational(25) / (11 * s2)), scaled(m, Rational(25) / (11 * s3))};
}

template <class Poly>
Poly ode_impl(const Poly& p) {
    const Poly d1 = p.derivative();
    const Poly d2 = d1.derivative();
    const Poly d3 = d2.derivative();
    const Poly d4 = d3.derivative();
    return scaled(p * d4, Rational(22)) + scaled(d2 * d2, Rational(45)) - scaled(d1 * d3, Rational(66));
}

std::string a_name(std::size_t i) { return "a" + std::to_string(i); }

}  // namespace

VertexMidpoint<UniPoly> vm_from_p(const UniPoly& p, unsigned s) { return vm_impl(p, s); }
VertexMidpoint<ParamPoly> vm_from_p(const ParamPoly& p, unsigned s) { return vm_impl(p, s); }

UniPoly ode_residual(const UniPoly& p) { return ode_impl(p); }
ParamPoly ode_residual(const ParamPoly& p) { return ode_impl(p); }

Rational ode_leading_coeff(unsigned s) {
    if (s == 0) throw std::invalid_argument("ode_leading_coeff: s must be positive");
    const mpz_class sz(s);
    const mpz_class m = sz + 6;
    const mpz_class by_s = (sz - 6) * (sz - 5) * (sz + 5) * (sz + 6);
    const mpz_class by_m = m * (m - 1) * (m - 11) * (m - 12);
    // Top coefficient of 22 P P'''' + 45 P''^2 - 66 P' P''' for P = z^m + ...
    const mpz_class direct = 22 * m * (m - 1) * (m - 2) * (m - 3) + 45 * m * m * (m - 1) * (m - 1) -
                             66 * m * m * (m - 1) * (m - 2);
    if (by_s != by_m || by_m != direct) {
        throw std::logic_error("ode_leading_coeff: factored forms disagree at s = " + std::to_string(s));
    }
    return Rational(by_s);
}

CaseDegrees case_degrees(unsigned s) { return {30 + 6 * s, 10 + 2 * s, 15 + 3 * s, 6 + s}; }

Passport case_passport(unsigned s) {
    const CaseDegrees d = case_degrees(s);
    std::vector<unsigned> faces(d.m, 5U);
    faces.push_back(s);
    return {std::vector<unsigned>(d.k_deg, 3U), std::vector<unsigned>(d.l_deg, 2U), std::move(faces)};
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Solved: return "Solved";
        case Verdict::NoSolutionLeadingCoeff: return "NoSolutionLeadingCoeff";
        case Verdict::NoSolutionDegreeDeficit: return "NoSolutionDegreeDeficit";
    }
    return "?";
}

OdeSystem ode_system(unsigned s) {
    const unsigned m = 6 + s;
    std::vector<std::string> names;
    for (unsigned i = 0; i + 1 < m; ++i) names.push_back(a_name(i));
    OdeSystem sys;
    sys.vars = make_var_set(names);
    // P = z^m + a_{m-2} z^{m-2} + ... + a_0; the affine shift removes a_{m-1}.
    std::vector<MultiPoly> coeffs;
    for (unsigned i = 0; i + 1 < m; ++i) coeffs.push_back(MultiPoly::variable(sys.vars, i));
    coeffs.push_back(MultiPoly(sys.vars));
    coeffs.push_back(MultiPoly::constant(sys.vars, Rational(1)));
    sys.p = ParamPoly(sys.vars, std::move(coeffs));
    const ParamPoly residual = ode_residual(sys.p);
    const std::size_t top = 2 * m - 4;
    for (std::size_t k = top + 1; k-- > 0;) {
        sys.equations.push_back({static_cast<int>(k), residual.coeff(k)});
    }
    for (unsigned i = 0; i + 1 < m; ++i) sys.unknowns.push_back(i);
    return sys;
}

CaseReport derive_case(unsigned s, const DeriveOptions& options) {
    if (s == 0 || s > options.max_s) {
        throw std::out_of_range("derive_case: s = " + std::to_string(s) + " outside 1.." +
                                std::to_string(options.max_s));
    }
    CaseReport r;
    r.s = s;
    r.degrees = case_degrees(s);
    r.leading_coeff = ode_leading_coeff(s);

    OdeSystem sys = ode_system(s);
    try {
        r.trace = sequential_linear_solve(sys.equations, sys.unknowns);
    } catch (const EliminationError& e) {
        r.trace = e.trace();
        r.engine_stop = e.kind();
        r.notes.push_back(std::string("elimination stopped: ") + e.what());
    }

    if (sgn(r.leading_coeff) != 0) {
        r.verdict = Verdict::NoSolutionLeadingCoeff;
        r.notes.push_back("coefficient of z^" + std::to_string(8 + 2 * s) +
                          " in the ODE residual is the nonzero constant " + r.leading_coeff.get_str());
        return r;
    }
    if (r.engine_stop) {
        throw std::logic_error("derive_case: elimination failed for s = " + std::to_string(s));
    }

    const auto vars = sys.vars;
    if (s == 5) {
        // z -> alpha z rescales a6 freely. a6 = -11 gives P = z^11 - 11 z^6 - z and
        // k = +1728; a6 = +11 is its mirror under z -> -z, with k = -1728.
        r.trace.normalize(vars->index("a6"), Rational(-11));
        UniPoly p = r.trace.apply(sys.p).to_unipoly();
        auto [v, m] = vm_from_p(p, s);
        UniPoly p5 = p.pow(5);
        auto [kq, krem] = poly_divmod(v.pow(3) - m * m, p5);
        if (!krem.is_zero() || !kq.is_constant() || kq.is_zero() || !kq.leading().is_real()) {
            throw std::logic_error("derive_case(5): V^3 - M^2 is not a constant multiple of P^5");
        }
        Rational k = kq.leading().re();
        r.residual_zero =
            main_equation_residual(GaussRat(k), v, p, UniPoly::constant(GaussRat(1)), m, ScalarConvention::OnFaces)
                .is_zero();
        r.verdict = *r.residual_zero ? Verdict::Solved : Verdict::NoSolutionDegreeDeficit;
        r.p = std::move(p);
        r.v = std::move(v);
        r.m = std::move(m);
        r.k = std::move(k);
        r.notes.push_back("single free parameter a6 is the scaling z -> alpha z, so the solution is unique "
                          "up to Moebius equivalence: the dodecahedron is the only dessin with passport "
                          "(3^20 | 2^30 | 5^12)");
        return r;
    }

    // s = 6: the family exists, but V cannot reach degree k_deg.
    ParamPoly family_p = r.trace.apply(sys.p);
    auto [fv, fm] = vm_from_p(family_p, s);
    r.v_top_coeff = fv.coeff(r.degrees.k_deg);
    r.m_top_coeff = fm.coeff(r.degrees.l_deg);
    if (s == 6) {
        const MultiPoly a9 = MultiPoly::variable(vars, "a9");
        const MultiPoly a10 = MultiPoly::variable(vars, "a10");
        MultiPoly k = -625 * (200 * a10.pow(3) + 297 * a9.pow(2)) / (27 * 1331);
        if (options.symbolic_family_check) {
            ParamPoly kp5 = family_p * family_p;
            kp5 = kp5 * kp5 * family_p;
            kp5 = kp5 * ParamPoly(vars, {k});
            r.family_identity = (fv * fv * fv - fm * fm - kp5).is_zero();
        }
        r.family_k = std::move(k);
    }
    r.family_p = std::move(family_p);
    r.family_v = std::move(fv);
    r.family_m = std::move(fm);
    if (r.v_top_coeff->is_zero()) {
        r.verdict = Verdict::NoSolutionDegreeDeficit;
        r.notes.push_back("coefficient of z^" + std::to_string(r.degrees.k_deg) +
                          " in V vanishes identically, so deg V < " + std::to_string(r.degrees.k_deg));
        if (s == 6) {
            r.notes.push_back(case_passport(s).str() + " is the passport of C22, so no fullerene has p6 = 1");
        }
    } else {
        throw std::logic_error("derive_case: unexpected nonvanishing top coefficient of V");
    }
    return r;
}

bool HalphenReport::passed() const {
    for (const auto& i : identities) {
        if (!i.holds) return false;
    }
    return true;
}

std::string HalphenReport::first_failure() const {
    for (const auto& i : identities) {
        if (!i.holds) return i.name;
    }
    return {};
}

HalphenReport halphen_intermediates_check(const UniPoly& p, const UniPoly& v, const UniPoly& m, unsigned s) {
    const GaussRat sg(static_cast<long>(s));
    auto n = [](long x) { return GaussRat(x); };
    const UniPoly p1 = p.derivative(), p2 = p1.derivative(), p3 = p2.derivative(), p4 = p3.derivative();
    const UniPoly v1 = v.derivative(), v2 = v1.derivative();
    const UniPoly m1 = m.derivative();
    const UniPoly r = p2 * GaussRat(Rational(-190, 11));
    const UniPoly r1 = r.derivative(), r2 = r1.derivative();

    const UniPoly dv = v1 * p * n(3) - v * p1 * n(5);
    const UniPoly dm = m1 * p * n(2) - m * p1 * n(5);

    HalphenReport rep;
    rep.identities.push_back({"sM", m * sg == dv});
    rep.identities.push_back({"sV2", v * v * sg == dm});
    rep.identities.push_back({"ODE-1", v * v * dv == m * dm});
    rep.identities.push_back({"ODE-2", v * v * (sg * sg) == v2 * p * p * n(6) - v1 * p1 * p * n(19) -
                                                              v * p * p2 * n(10) + v * p1 * p1 * n(25)});
    rep.identities.push_back({"VR", v * r == v2 * p * n(6) - v1 * p1 * n(19)});
    rep.identities.push_back({"PR", p * r == v * (sg * sg) + p * p2 * n(10) - p1 * p1 * n(25)});
    const UniPoly ode4 = p1 * r1 * n(7) - p * r2 * n(6) - p1 * p3 * n(370) + p * p4 * n(60) + r * r -
                         p2 * r * n(16) - p2 * p2 * n(240);
    rep.identities.push_back({"ODE-4", ode4.is_zero()});
    rep.r_degree_bound = r.is_zero() || (p.deg() >= 2 && r.deg() <= p.deg() - 2);
    return rep;
}

Rational family_k_formula(const Rational& a9, const Rational& a10) {
    return Rational(-625) * (200 * a10 * a10 * a10 + 297 * a9 * a9) / Rational(27 * 1331);
}

FamilyPoint family_k(const Rational& a9, const Rational& a10) {
    if (sgn(a9) == 0 && sgn(a10) == 0) throw std::invalid_argument("family_k: (a9, a10) must not be (0, 0)");
    OdeSystem sys = ode_system(6);
    EliminationTrace trace = sequential_linear_solve(sys.equations, sys.unknowns);
    trace.normalize(sys.vars->index("a9"), a9);
    trace.normalize(sys.vars->index("a10"), a10);
    FamilyPoint fp;
    fp.p = trace.apply(sys.p).to_unipoly();
    auto [v, m] = vm_from_p(fp.p, 6);
    fp.v = std::move(v);
    fp.m = std::move(m);
    fp.k = family_k_formula(a9, a10);
    fp.identity_holds = (fp.v.pow(3) - fp.m * fp.m - fp.p.pow(5) * GaussRat(fp.k)).is_zero();
    return fp;
}

D6Result d6_solve() {
    auto vars = make_var_set({"a1", "a0", "b1", "b0", "c1", "c0", "k"});
    auto var = [&](const char* n) { return MultiPoly::variable(vars, n); };
    const MultiPoly one = MultiPoly::constant(vars, Rational(1));
    const MultiPoly zero(vars);
    const ParamPoly a(vars, {var("a0"), var("a1"), one});
    const ParamPoly b(vars, {var("b0"), var("b1"), one});
    const ParamPoly c(vars, {var("c0"), var("c1"), one});
    const ParamPoly kz(vars, {zero, var("k")});
    const ParamPoly s = a * a * a - b * b * c - kz;

    std::vector<SystemEquation> eqs;
    for (std::size_t k = 6; k-- > 0;) eqs.push_back({static_cast<int>(k), s.coeff(k)});
    std::vector<std::size_t> unknowns(vars->size());
    for (std::size_t i = 0; i < unknowns.size(); ++i) unknowns[i] = i;

    D6Result out;
    // a1 = b1 would force a0 = b0 and a common factor of A and B.
    out.trace = sequential_linear_solve(std::move(eqs), unknowns, {var("a1") - var("b1")});
    // z -> alpha z rescales a1 freely.
    out.trace.normalize(vars->index("a1"), Rational(10));

    auto value = [&](const char* n) { return GaussRat(out.trace.apply(var(n)).constant_value()); };
    const UniPoly pa{value("a0"), value("a1"), GaussRat(1)};
    const UniPoly pb{value("b0"), value("b1"), GaussRat(1)};
    const UniPoly pc{value("c0"), value("c1"), GaussRat(1)};
    out.s_constant = out.trace.apply(var("k")).constant_value();

    FactoredBelyi& beta = out.beta6;
    beta.name = "d6";
    beta.k = GaussRat(Rational(1) / out.s_constant);
    beta.zeros = {{pa, 3}};
    beta.ones = {{pb, 2}, {pc, 1}};
    beta.poles = {{UniPoly::z(), 1}};
    beta.infinity = {CriticalClass::Pole, 5};
    return out;
}

}  // namespace fullerene
