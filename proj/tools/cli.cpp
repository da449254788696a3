#include "fullerene/cli.hpp"

#include "fullerene/belyi.hpp"
#include "fullerene/compose.hpp"
#include "fullerene/derive.hpp"
#include "fullerene/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace fullerene {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A check that failed; the message names it.
struct CheckFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

unsigned parse_count(const std::string& s, const char* what) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw UsageError(std::string("expected a non-negative integer ") + what + ", got '" + s + "'");
    }
    return v;
}

std::string plane_str(const Plane& p) {
    auto term = [](double c, const char* var, bool first) {
        std::string out = first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6f", std::abs(c));
        return out + buf + " " + var;
    };
    return term(p.p, "X", true) + term(p.q, "Y", false) + term(p.r, "Z", false) + " = 1";
}

std::string fixed(double x, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    // "-0.000000" and "0.000000" print the same.
    std::string s(buf);
    if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
    return s;
}

const char* pass(bool ok) { return ok ? "pass" : "FAIL"; }

std::string factor_list(const std::vector<BelyiFactor>& fs) {
    if (fs.empty()) return "1";
    std::string out;
    for (const auto& f : fs) {
        if (!out.empty()) out += " * ";
        out += "(" + f.poly.str() + ")";
        if (f.exponent != 1) out += "^" + std::to_string(f.exponent);
    }
    return out;
}

struct Report {
    std::ostringstream text;
    Json json = Json::object();
};

void describe_belyi(const FactoredBelyi& f, Report& r) {
    r.text << "belyi " << (f.name.empty() ? "(unnamed)" : f.name) << "\n"
           << "k = " << f.k.str() << "\n"
           << "zeros: " << factor_list(f.zeros) << "\n"
           << "ones:  " << factor_list(f.ones) << "\n"
           << "poles: " << factor_list(f.poles) << "\n"
           << "infinity: " << to_string(f.infinity.cls) << " of order " << f.infinity.order << "\n";
    r.json["belyi"] = belyi_to_json(f);
}

void certify(const FactoredBelyi& f, Report& r) {
    try {
        const Passport p = verify_belyi(f);
        r.text << "identity k*Z - P = c*O: pass\n"
               << "factors squarefree and pairwise coprime: pass\n"
               << "degree balance: pass\n"
               << "degree " << p.black_sum() << "\n"
               << "passport " << p.str() << "\n";
        r.json["checks"] = {{"identity", true}, {"squarefree_coprime", true}, {"degree_balance", true}};
        r.json["degree"] = p.black_sum();
        r.json["passport"] = passport_to_json(p);
    } catch (const BelyiError& e) {
        throw CheckFailed(std::string("verify_belyi: ") + e.what());
    }
}

void cmd_facevector(const CommandConfig& c, Report& r) {
    const unsigned p6 = parse_count(c.argument, "p6");
    const FullereneParams f = face_vector(p6);
    const bool euler = f.f0 - f.f1 + f.f2 == 2;
    const bool trivalent = 3 * f.f0 == 2 * f.f1;
    const bool faces = f.f2 == f.p5 + p6;
    r.text << "p6 = " << p6 << "\n"
           << "vertices f0 = " << f.f0 << "\n"
           << "edges f1 = " << f.f1 << "\n"
           << "faces f2 = " << f.f2 << " (" << f.p5 << " pentagons, " << p6 << (p6 == 1 ? " hexagon" : " hexagons") << ")\n"
           << "dessin edges = " << f.dessin_edges << "\n"
           << "Euler f0 - f1 + f2 = 2: " << pass(euler) << "\n"
           << "trivalent 3 f0 = 2 f1: " << pass(trivalent) << "\n"
           << "realizable: "
           << (f.realizable ? "yes" : "no (no fullerene C22: its passport has no genus-0 dessin)") << "\n";
    r.json = {{"p6", p6},          {"f0", f.f0},
              {"f1", f.f1},        {"f2", f.f2},
              {"p5", f.p5},        {"dessin_edges", f.dessin_edges},
              {"euler", euler},    {"trivalent", trivalent},
              {"realizable", f.realizable}};
    if (!euler || !trivalent || !faces) throw CheckFailed("face-vector identities");
}

void cmd_passport(const CommandConfig& c, Report& r) {
    const unsigned p6 = parse_count(c.argument, "p6");
    const Passport p = fullerene_passport(p6);
    const EquationCount n = counting(p6);
    r.text << "passport " << p.str() << "\n"
           << "degree " << p.black_sum() << "\n"
           << "main equation: " << n.unknowns << " unknowns, " << n.equations << " equations, excess "
           << n.excess << " = dim PSL2(C)\n";
    r.json = {{"p6", p6},
              {"passport", passport_to_json(p)},
              {"degree", p.black_sum()},
              {"unknowns", n.unknowns},
              {"equations", n.equations},
              {"excess", n.excess}};
    if (!p.balanced()) throw CheckFailed("passport sums differ");
}

FactoredBelyi load_belyi(const std::string& arg) {
    if (arg == "d6" || arg == "d12" || arg == "d60" || arg == "d72") return preset(arg);
    return read_belyi_file(arg);
}

void cmd_verify(const CommandConfig& c, Report& r) {
    const FactoredBelyi f = load_belyi(c.argument);
    describe_belyi(f, r);
    certify(f, r);
}

void print_trace(const EliminationTrace& t, Report& r) {
    for (const auto& a : t.assumptions) r.text << "  assume " << a.str() << " != 0\n";
    for (const auto& s : t.steps) {
        r.text << "  [z^" << s.origin << "] " << t.name(s.variable) << " = " << s.substitution.str();
        if (!s.divided_by.empty()) {
            r.text << "   (after dividing by";
            for (const auto& d : s.divided_by) r.text << " (" << d.str() << ")";
            r.text << ")";
        }
        r.text << "\n";
    }
    if (!t.free_vars.empty()) {
        r.text << "  free:";
        for (auto v : t.free_vars) r.text << " " << t.name(v);
        r.text << "\n";
    }
    for (const auto& n : t.normalizations) r.text << "  normalize " << t.name(n.variable) << " = " << n.value.get_str() << "\n";
}

void cmd_derive(const CommandConfig& c, Report& r) {
    if (c.argument == "d6") {
        const D6Result d = d6_solve();
        r.text << "D6 elimination of S = (z^2+a1 z+a0)^3 - (z^2+b1 z+b0)^2 (z^2+c1 z+c0) - k z\n";
        print_trace(d.trace, r);
        r.text << "k = " << d.s_constant.get_str() << "\n";
        r.json["trace"] = trace_to_json(d.trace);
        r.json["k"] = d.s_constant.get_str();
        describe_belyi(d.beta6, r);
        certify(d.beta6, r);
        return;
    }
    const unsigned s = parse_count(c.argument, "s");
    if (s == 0 || s > c.max_s) {
        throw UsageError("s must be in 1.." + std::to_string(c.max_s) + ", got " + c.argument);
    }
    const CaseReport rep = derive_case(s, {c.max_s, true});
    r.json = case_report_to_json(rep);
    r.text << "s = " << s << ", passport " << case_passport(s).str() << "\n"
           << "deg P = " << rep.degrees.m << ", deg V = " << rep.degrees.k_deg << ", deg M = " << rep.degrees.l_deg
           << ", n = " << rep.degrees.n << "\n"
           << "leading coefficient (s-6)(s-5)(s+5)(s+6) = " << rep.leading_coeff.get_str() << "\n"
           << "verdict: " << to_string(rep.verdict) << "\n";
    r.text << "elimination:\n";
    print_trace(rep.trace, r);
    if (rep.engine_stop) r.text << "  stopped: " << to_string(*rep.engine_stop) << "\n";
    if (rep.p) {
        r.text << "P = " << rep.p->str() << "\n"
               << "V = " << rep.v->str() << "\n"
               << "M = " << rep.m->str() << "\n"
               << "k = " << rep.k->get_str() << " (from V^3 - M^2 = k P^5)\n"
               << "main equation V^3 - k P^5 - M^2 = 0: " << pass(*rep.residual_zero) << "\n";
        const HalphenReport h = halphen_intermediates_check(*rep.p, *rep.v, *rep.m, s);
        for (const auto& i : h.identities) r.text << "identity " << i.name << ": " << pass(i.holds) << "\n";
        r.text << "deg R <= deg P - 2: " << pass(h.r_degree_bound) << "\n";
        Json ids = Json::object();
        for (const auto& i : h.identities) ids[i.name] = i.holds;
        r.json["identities"] = ids;
        if (!*rep.residual_zero) throw CheckFailed("main equation residual is nonzero");
        if (!h.passed()) throw CheckFailed("identity " + h.first_failure());
    }
    if (rep.family_p) {
        r.text << "coefficient of z^" << rep.degrees.k_deg << " in V: " << rep.v_top_coeff->str() << "\n"
               << "coefficient of z^" << rep.degrees.l_deg << " in M: " << rep.m_top_coeff->str() << "\n";
        if (rep.family_k) r.text << "family k = " << rep.family_k->str() << "\n";
        if (rep.family_identity) {
            r.text << "family V^3 = M^2 + k P^5: " << pass(*rep.family_identity) << "\n";
            if (!*rep.family_identity) throw CheckFailed("family identity V^3 = M^2 + k P^5");
        }
    }
    for (const auto& n : rep.notes) r.text << "note: " << n << "\n";
    if (rep.verdict != Verdict::Solved) {
        r.text << "no genus-0 dessin with passport " << case_passport(rep.s).str() << "\n";
    }
}

void cmd_compose(const CommandConfig& c, Report& r) {
    if (c.argument == "schwarz") {
        const SchwarzForms f = schwarz_forms();
        const SchwarzReport s = schwarz_check(f);
        r.text << "phi12 = " << f.phi12.str("s") << "\n"
               << "phi20 = " << f.phi20.str("s") << "\n"
               << "phi30 = " << f.phi30.str("s") << "\n"
               << "phi20^3 - phi30^2 = 1728 phi12^5: " << pass(s.identity) << "\n"
               << "beta60(-s) = phi20^3 / (1728 phi12^5): " << pass(s.matches_beta60) << "\n";
        r.json = {{"phi12", poly_to_json(f.phi12)},
                  {"phi20", poly_to_json(f.phi20)},
                  {"phi30", poly_to_json(f.phi30)},
                  {"identity", s.identity},
                  {"matches_beta60", s.matches_beta60}};
        if (!s.identity) throw CheckFailed("Schwarz identity");
        if (!s.matches_beta60) throw CheckFailed("beta60(-s) comparison");
        return;
    }
    if (c.argument != "d12" && c.argument != "d60" && c.argument != "d72") {
        throw UsageError("compose target must be d12, d60, d72 or schwarz, got '" + c.argument + "'");
    }
    const FactoredBelyi f = preset(c.argument);
    const RationalMap m = f.to_map();
    r.text << "pipeline: beta6 o mu1 o (z -> z^2) o mu2"
           << (c.argument == "d60" ? ", then z -> z^5" : c.argument == "d72" ? ", then z -> z^6" : "") << "\n"
           << "mu1 = " << mu1().str() << "\n"
           << "mu2 = " << mu2().str() << "\n"
           << "beta = " << m.str() << "\n";
    r.json["map"] = {{"scalar", m.scalar().to_coeff_string()}, {"num", poly_to_json(m.num())}, {"den", poly_to_json(m.den())}};
    describe_belyi(f, r);
    certify(f, r);
    if (c.belyi_path) {
        write_belyi_file(f, *c.belyi_path);
        r.text << "wrote " << *c.belyi_path << "\n";
    }
}

void cmd_geometry(const CommandConfig& c, Report& r) {
    if (c.argument != "barrel") throw UsageError("geometry supports only 'barrel', got '" + c.argument + "'");
    if (!(c.tol > 0)) throw UsageError("tolerance must be positive");
    RootOptions opt;
    opt.tol = c.tol;
    const BarrelVertices bv = barrel_vertices(opt);
    const FaceGeometryReport g = face_geometry({1, 7, 13, 8, 2}, 2, opt);
    r.text << "moduli a1 a7 a13 a19 = " << fixed(bv.moduli[0]) << " " << fixed(bv.moduli[1]) << " "
           << fixed(bv.moduli[2]) << " " << fixed(bv.moduli[3]) << "\n"
           << "a1*a19 = " << fixed(bv.moduli[0] * bv.moduli[3], 12) << ", a7*a13 = "
           << fixed(bv.moduli[1] * bv.moduli[2], 12) << "\n"
           << "face A1 A7 A13 A8 A2\n";
    for (std::size_t i = 0; i < g.labels.size(); ++i) {
        const auto& p = g.points[i];
        r.text << "  A" << g.labels[i] << ": X = " << fixed(p.x) << ", Y = " << fixed(p.y) << ", Z = " << fixed(p.z)
               << "\n";
    }
    const std::size_t n = g.labels.size();
    for (std::size_t i = 0; i < n; ++i) {
        r.text << "  |A" << g.labels[i] << "A" << g.labels[(i + 1) % n] << "| = " << fixed(g.lengths[i]) << "\n";
    }
    for (std::size_t i = 0; i < n; ++i) {
        r.text << "  angle A" << g.labels[(i + n - 1) % n] << "A" << g.labels[i] << "A" << g.labels[(i + 1) % n]
               << " = " << fixed(g.angles[i], 4) << " deg\n";
    }
    r.text << "plane A1A2A7: " << plane_str(g.base_plane) << " (A8 residual " << fixed(g.base_residual, 12) << ")\n"
           << "plane A7A8A13: " << plane_str(g.apex_plane) << "\n"
           << "dihedral angle = " << fixed(g.dihedral, 4) << " deg\n";
    r.json = face_report_to_json(g);
    r.json["moduli"] = {bv.moduli[0], bv.moduli[1], bv.moduli[2], bv.moduli[3]};
    if (c.svg_path) {
        emit_svg(g, *c.svg_path);
        r.text << "wrote " << *c.svg_path << "\n";
    }
}

}  // namespace

RunResult run(const CommandConfig& config) {
    Report r;
    int status = kExitOk;
    std::string error;
    try {
        if (config.command == "facevector") {
            cmd_facevector(config, r);
        } else if (config.command == "passport") {
            cmd_passport(config, r);
        } else if (config.command == "verify") {
            cmd_verify(config, r);
        } else if (config.command == "derive") {
            cmd_derive(config, r);
        } else if (config.command == "compose") {
            cmd_compose(config, r);
        } else if (config.command == "geometry") {
            cmd_geometry(config, r);
        } else {
            throw UsageError("unknown command '" + config.command + "'");
        }
    } catch (const UsageError& e) {
        status = kExitUsage;
        error = std::string("usage: ") + e.what();
    } catch (const std::invalid_argument& e) {
        // Unreadable or malformed input.
        status = kExitUsage;
        error = std::string("usage: ") + e.what();
    } catch (const CheckFailed& e) {
        status = kExitCheckFailed;
        error = std::string("check failed: ") + e.what();
    } catch (const std::exception& e) {
        status = kExitCheckFailed;
        error = std::string("error: ") + e.what();
    }

    RunResult out;
    out.status = status;
    if (config.format == OutputFormat::Json) {
        Json j;
        j["command"] = config.command;
        j["argument"] = config.argument;
        j["status"] = status == kExitOk ? "ok" : "error";
        if (!error.empty()) j["error"] = error;
        j["result"] = r.json;
        out.report = j.dump(2) + "\n";
    } else {
        out.report = r.text.str();
        if (!error.empty()) out.report += error + "\n";
    }
    return out;
}

}  // namespace fullerene
