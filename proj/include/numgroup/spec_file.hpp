#pragma once

#include <string>

#include <json.hpp>

#include "numgroup/group_spec.hpp"

namespace numgroup {

/// Parses a group-spec document. Field entries are power-basis coordinate
/// arrays of rational strings; a bare string is accepted as a rational
/// constant. "quadratic_d": <integer> may replace the "field" object, and
/// omitting "integral_basis" selects the power basis. Semantic errors carry
/// the offending key path.
GroupSpec parse_spec_json(const nlohmann::json& doc);
GroupSpec parse_spec_file(const std::string& path);

/// Canonical serialization: expanded field block, full coordinate arrays,
/// sorted keys. parse(serialize(spec)) == spec, and serializing again is
/// byte-identical.
nlohmann::json serialize_spec(const GroupSpec& spec);
std::string serialize_spec_text(const GroupSpec& spec);

void write_spec_file(const GroupSpec& spec, const std::string& path);

}  // namespace numgroup
