#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "bigeo/design.hpp"

namespace bigeo {

// JSON form: {"n": int, "blocks": [[int, ...], ...], "labels": [string, ...]}
// with 0-based point indices; "labels" is optional.
//
// Text form: one block per line, whitespace-separated point labels, '#'
// starts a comment. Labels are ordered naturally ("x2" before "x10") and
// numbered from 0 in that order.

nlohmann::json design_to_json(const Design& design);
Design design_from_json(const nlohmann::json& doc);

Design parse_design_json(std::string_view text);
Design parse_design_text(std::string_view text);
std::string format_design_text(const Design& design);

// Format chosen by extension: ".json" is JSON, anything else is text.
Design load_design(const std::filesystem::path& path);
void save_design(const Design& design, const std::filesystem::path& path);

}  // namespace bigeo
