#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "bfc/core/boolean_function.hpp"

namespace bfc {

/// {"n": int, "domain": hex, "values": hex} with little-endian hex digits.
nlohmann::json function_to_json(const BooleanFunction& f);
BooleanFunction function_from_json(const nlohmann::json& j);

BooleanFunction read_function_file(const std::filesystem::path& path);

/// Writes through a temporary file in the same directory and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

/// Parses the function-spec grammar: `and:4`, `thr:2:5`, `andor:3x3`, `file:<path>`,
/// `ro:<formula>`, with prefix `!` negating the output and suffix `~1,3` negating
/// the listed (1-based) inputs.
BooleanFunction parse_function_spec(const std::string& spec);

}  // namespace bfc
