#include "nlkg/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "nlkg/errors.hpp"

namespace nlkg::io {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

std::string format_shortest(double v) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) throw NumericalError("format_shortest: to_chars failed");
    return std::string(buf.data(), end);
}

std::string format_17g(double v) {
    std::array<char, 64> buf{};
    const int n = std::snprintf(buf.data(), buf.size(), "%.17g", v);
    return std::string(buf.data(), static_cast<std::size_t>(n));
}

double parse_double(std::string_view text) {
    const auto s = trim(text);
    double v = 0.0;
    const char* first = s.data();
    if (!s.empty() && s.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ConstraintError("not a number: '" + std::string(text) + "'");
    }
    return v;
}

long parse_integer(std::string_view text) {
    const auto s = trim(text);
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ConstraintError("not an integer: '" + std::string(text) + "'");
    }
    return v;
}

KeyValueMap parse_key_value(std::string_view text) {
    KeyValueMap out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConstraintError("line " + std::to_string(line_no) + ": expected 'name = value'");
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConstraintError("line " + std::to_string(line_no) + ": empty name");
        }
        if (!out.emplace(std::string(key), std::string(value)).second) {
            throw ConstraintError("duplicate key '" + std::string(key) + "'");
        }
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConstraintError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw NumericalError("cannot write '" + path + "'");
    out << content;
}

}  // namespace nlkg::io
