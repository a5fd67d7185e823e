#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

namespace dris {

// Object keys are kept sorted by nlohmann::json's std::map storage, so one
// dump style gives a single canonical serialization for every file format.
using Json = nlohmann::json;

// Canonical text form used for every file this system writes: sorted keys,
// two-space indent, trailing newline. Byte-equality of two dumps is the
// equality test used throughout.
std::string canonical_dump(const Json& value);

// Parse with a ParseError that names the line of the first offending byte.
Json parse_json(std::string_view text, std::string_view origin = "input");

Json load_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& value);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

// Scores cross the wire as decimals with 12 significant digits; this applies
// that rounding so in-process and socket transports carry identical values.
double wire_score(double score);

}  // namespace dris
