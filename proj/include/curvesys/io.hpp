#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "curvesys/system.hpp"

namespace curvesys {

// Malformed input. The message carries a line:column position for syntax
// errors and a JSON pointer for structural ones.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json to_json(const CurveSystem& s);
CurveSystem from_json(const nlohmann::json& j);

// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump_system(const CurveSystem& s);
CurveSystem parse_system(const std::string& text);

CurveSystem load_system(const std::string& path);
void save_system(const CurveSystem& s, const std::string& path);

std::string epsilon_string(const std::vector<int>& eps);
std::vector<int> parse_epsilon(const std::string& s);  // throws std::invalid_argument

}  // namespace curvesys
