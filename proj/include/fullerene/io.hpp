#pragma once

#include "fullerene/belyi.hpp"
#include "fullerene/derive.hpp"
#include "fullerene/elimination.hpp"
#include "fullerene/numgeom.hpp"

#include <json.hpp>

#include <string>

namespace fullerene {

using Json = nlohmann::ordered_json;

/// Coefficient strings, lowest power first.
Json poly_to_json(const UniPoly& p);
/// Throws std::invalid_argument on anything but an array of coefficient strings.
UniPoly poly_from_json(const Json& j);

Json passport_to_json(const Passport& p);

/// {"name", "k", "zeros", "ones", "poles", "infinity": {"class", "order"}};
/// each factor is {"coeffs": [...], "exponent": e}.
Json belyi_to_json(const FactoredBelyi& f);
/// Throws std::invalid_argument naming the first malformed field.
FactoredBelyi belyi_from_json(const Json& j);

FactoredBelyi read_belyi_file(const std::string& path);
void write_belyi_file(const FactoredBelyi& f, const std::string& path);

Json trace_to_json(const EliminationTrace& t);
Json case_report_to_json(const CaseReport& r);
Json face_report_to_json(const FaceGeometryReport& r);

}  // namespace fullerene
