#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "adelic/surface.hpp"

namespace adelic {

using Json = nlohmann::json;

// Loads and validates a surface description. Errors are ValidationError
// with a "source:line: message" prefix pointing at the offending value.
SurfaceModel load_model_text(const std::string& text, const std::string& source = "<input>");
SurfaceModel load_model_file(const std::string& path);

Json model_to_json(const SurfaceModel& m);
Json field_to_json(const NumberFieldDesc& k);

// Deterministic rendering: sorted keys, two-space indent, doubles with 17
// significant digits.
std::string format_json(const Json& j);
void write_json(std::ostream& os, const Json& j);

} // namespace adelic
