#pragma once

#include <string>

#include "json.hpp"

#include "conecert/instance.hpp"

namespace conecert {

inline constexpr const char* kSchemaTag = "conecert/1";

nlohmann::json point_to_json(const Point& p);
Point point_from_json(const nlohmann::json& j, const std::string& where);

// Instance files: {"schema": "conecert/1", "dimensions": {p,q,r},
// optional "cone_Y"/"cone_Z" (default nonnegative orthants),
// "points": [{"label", "f", "g", "h"}...]}. r = 0 permits omitted "h".
VPInstance parse_instance(const nlohmann::json& doc);
VPInstance parse_instance_file(const std::string& path);
nlohmann::json serialize_instance(const VPInstance& instance);

// FNV-1a hash of the canonical serialization, as 16 hex digits.
std::string instance_digest(const VPInstance& instance);

void write_json_file(const std::string& path, const nlohmann::json& doc);
nlohmann::json read_json_file(const std::string& path);

}  // namespace conecert
