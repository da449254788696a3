#include "fullerene/io.hpp"

#include <fstream>
#include <stdexcept>

namespace fullerene {

namespace {

[[noreturn]] void malformed(const std::string& what) {
    throw std::invalid_argument("malformed Belyi data: " + what);
}

CriticalClass class_from_string(const std::string& s) {
    for (auto c : {CriticalClass::Zero, CriticalClass::One, CriticalClass::Pole, CriticalClass::Regular}) {
        if (s == to_string(c)) return c;
    }
    malformed("unknown infinity class '" + s + "'");
}

Json factors_to_json(const std::vector<BelyiFactor>& fs) {
    Json a = Json::array();
    for (const auto& f : fs) a.push_back({{"coeffs", poly_to_json(f.poly)}, {"exponent", f.exponent}});
    return a;
}

std::vector<BelyiFactor> factors_from_json(const Json& j, const char* field) {
    if (!j.contains(field) || !j.at(field).is_array()) malformed(std::string("missing array '") + field + "'");
    std::vector<BelyiFactor> out;
    for (const auto& f : j.at(field)) {
        if (!f.is_object() || !f.contains("coeffs") || !f.contains("exponent") ||
            !f.at("exponent").is_number_unsigned()) {
            malformed(std::string("factor in '") + field + "' needs 'coeffs' and a non-negative 'exponent'");
        }
        const unsigned e = f.at("exponent").get<unsigned>();
        if (e == 0) malformed(std::string("factor in '") + field + "' has exponent 0");
        UniPoly poly = poly_from_json(f.at("coeffs"));
        if (poly.is_zero() || poly.is_constant()) malformed(std::string("factor in '") + field + "' is constant");
        out.push_back({std::move(poly), e});
    }
    return out;
}

Json doubles(const std::vector<double>& v) {
    Json a = Json::array();
    for (double x : v) a.push_back(x);
    return a;
}

Json plane_json(const Plane& p) { return {p.p, p.q, p.r}; }

}  // namespace

Json poly_to_json(const UniPoly& p) { return p.to_coeff_strings(); }

UniPoly poly_from_json(const Json& j) {
    if (!j.is_array()) malformed("polynomial must be an array of coefficient strings");
    std::vector<std::string> c;
    for (const auto& x : j) {
        if (!x.is_string()) malformed("coefficient " + x.dump() + " is not a string");
        c.push_back(x.get<std::string>());
    }
    try {
        return UniPoly::from_coeff_strings(c);
    } catch (const std::invalid_argument& e) {
        malformed(e.what());
    }
}

Json passport_to_json(const Passport& p) {
    return {{"black", p.black}, {"white", p.white}, {"faces", p.faces}, {"text", p.str()}};
}

Json belyi_to_json(const FactoredBelyi& f) {
    Json j;
    j["name"] = f.name;
    j["k"] = f.k.to_coeff_string();
    j["zeros"] = factors_to_json(f.zeros);
    j["ones"] = factors_to_json(f.ones);
    j["poles"] = factors_to_json(f.poles);
    j["infinity"] = {{"class", to_string(f.infinity.cls)}, {"order", f.infinity.order}};
    return j;
}

FactoredBelyi belyi_from_json(const Json& j) {
    if (!j.is_object()) malformed("top level must be an object");
    FactoredBelyi f;
    if (j.contains("name")) {
        if (!j.at("name").is_string()) malformed("'name' must be a string");
        f.name = j.at("name").get<std::string>();
    }
    if (!j.contains("k") || !j.at("k").is_string()) malformed("missing coefficient string 'k'");
    try {
        f.k = GaussRat::parse(j.at("k").get<std::string>());
    } catch (const std::invalid_argument& e) {
        malformed(std::string("'k': ") + e.what());
    }
    if (f.k.is_zero()) malformed("'k' is zero");
    f.zeros = factors_from_json(j, "zeros");
    f.ones = factors_from_json(j, "ones");
    f.poles = factors_from_json(j, "poles");
    if (!j.contains("infinity") || !j.at("infinity").is_object()) malformed("missing object 'infinity'");
    const Json& inf = j.at("infinity");
    if (!inf.contains("class") || !inf.at("class").is_string() || !inf.contains("order") ||
        !inf.at("order").is_number_unsigned()) {
        malformed("'infinity' needs a string 'class' and a non-negative 'order'");
    }
    f.infinity = {class_from_string(inf.at("class").get<std::string>()), inf.at("order").get<unsigned>()};
    return f;
}

FactoredBelyi read_belyi_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        malformed(path + ": " + e.what());
    }
    return belyi_from_json(j);
}

void write_belyi_file(const FactoredBelyi& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << belyi_to_json(f).dump(2) << "\n";
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

Json trace_to_json(const EliminationTrace& t) {
    Json steps = Json::array();
    for (const auto& s : t.steps) {
        Json divided = Json::array();
        for (const auto& d : s.divided_by) divided.push_back(d.str());
        steps.push_back({{"origin_power", s.origin},
                         {"equation", s.equation.str()},
                         {"divided_by", divided},
                         {"variable", t.name(s.variable)},
                         {"substitution", s.substitution.str()}});
    }
    Json assumptions = Json::array();
    for (const auto& a : t.assumptions) assumptions.push_back(a.str() + " != 0");
    Json free_vars = Json::array();
    for (auto v : t.free_vars) free_vars.push_back(t.name(v));
    Json norms = Json::array();
    for (const auto& n : t.normalizations) norms.push_back({{"variable", t.name(n.variable)}, {"value", n.value.get_str()}});
    return {{"steps", steps}, {"assumptions", assumptions}, {"free_variables", free_vars}, {"normalizations", norms}};
}

Json case_report_to_json(const CaseReport& r) {
    Json j;
    j["s"] = r.s;
    j["passport"] = case_passport(r.s).str();
    j["degrees"] = {{"n", r.degrees.n}, {"deg_V", r.degrees.k_deg}, {"deg_M", r.degrees.l_deg}, {"deg_P", r.degrees.m}};
    j["verdict"] = to_string(r.verdict);
    j["leading_coefficient"] = r.leading_coeff.get_str();
    if (r.engine_stop) j["elimination_stop"] = to_string(*r.engine_stop);
    if (r.p) {
        j["P"] = r.p->str();
        j["V"] = r.v->str();
        j["M"] = r.m->str();
        j["k"] = r.k->get_str();
        j["main_equation_residual_zero"] = *r.residual_zero;
    }
    if (r.family_p) {
        j["family"] = {{"P", r.family_p->str()},
                       {"V_coefficient_at_deg_V", r.v_top_coeff->str()},
                       {"M_coefficient_at_deg_M", r.m_top_coeff->str()}};
        if (r.family_k) j["family"]["k"] = r.family_k->str();
        if (r.family_identity) j["family"]["identity_V3_eq_M2_plus_kP5"] = *r.family_identity;
    }
    j["trace"] = trace_to_json(r.trace);
    j["notes"] = r.notes;
    return j;
}

Json face_report_to_json(const FaceGeometryReport& r) {
    Json verts = Json::array();
    for (std::size_t i = 0; i < r.labels.size(); ++i) {
        const auto& p = r.points[i];
        verts.push_back({{"label", "A" + std::to_string(r.labels[i])},
                         {"z", {r.plane_points[i].real(), r.plane_points[i].imag()}},
                         {"xyz", {p.x, p.y, p.z}}});
    }
    return {{"vertices", verts},
            {"edge_lengths", doubles(r.lengths)},
            {"angles_deg", doubles(r.angles)},
            {"apex", "A" + std::to_string(r.labels[r.apex])},
            {"apex_plane", plane_json(r.apex_plane)},
            {"base_plane", plane_json(r.base_plane)},
            {"base_residual", r.base_residual},
            {"dihedral_deg", r.dihedral}};
}

}  // namespace fullerene
