#pragma once

#include <map>
#include <string>
#include <string_view>

namespace nlkg::io {

// Shortest decimal string that parses back to the same double.
[[nodiscard]] std::string format_shortest(double v);
// Fixed 17 significant digits ("%.17g"), the CSV convention.
[[nodiscard]] std::string format_17g(double v);

// Whole-string parse; accepts nan/inf spellings. Throws ConstraintError.
[[nodiscard]] double parse_double(std::string_view text);
[[nodiscard]] long parse_integer(std::string_view text);

// "name = value" lines; '#' starts a comment, blank lines are skipped.
// Duplicate names and lines without '=' throw ConstraintError.
using KeyValueMap = std::map<std::string, std::string, std::less<>>;
[[nodiscard]] KeyValueMap parse_key_value(std::string_view text);

[[nodiscard]] std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace nlkg::io
