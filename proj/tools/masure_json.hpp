#pragma once

#include <string>

#include "json.hpp"
#include "masure/galleries.hpp"
#include "masure/heckepath.hpp"
#include "masure/sl2engine.hpp"

namespace masure::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "masure-lab/1";

json q_json(const Q& q);
Q q_from(const json& j);  // "p/q" strings or integers

json vec_json(const Vec2& v);
Vec2 vec_from(const json& j);
json point_json(const Point& p);
Point point_from(const json& j);
json chamber_json(const LocalChamber& c);
LocalChamber chamber_from(const json& j);

json path_json(const PiecewisePath& p);
PiecewisePath path_from(const json& j);

json gallery_json(const Gallery& g);
Gallery gallery_from(const json& j);

json superdecoration_json(const Superdecoration& sd);
// rebuilds the germs from the path; validity is left to validate_superdecoration
Superdecoration superdecoration_from(const json& j);

json count_json(const CountPoly& c);
json certificate_json(const MembershipCertificate& c);
json hecke_json(const HeckeReport& r);
json retract_json(const RetractResult& r, const std::string& word);

// the member `key` of j when present, else j itself
const json& unwrap(const json& j, const char* key);

json read_json_file(const std::string& file);

std::string retract_svg(const RetractResult& r);

}  // namespace masure::io
