#pragma once

#include "tpgabor/error.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace tpgabor {

inline constexpr std::string_view version = "0.1.0";

/// Decimal with 17 significant digits, enough to round-trip any double.
inline std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// 64-bit FNV-1a, used to stamp outputs with the configuration they came from.
inline std::string fnv1a_hex(std::string_view text)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Comma separated values; lines starting with '#' are comments. The first
/// remaining line is treated as a header when it does not parse as a number.
inline CsvTable read_csv(std::istream& in)
{
    CsvTable table;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, ','))
            fields.push_back(f);
        if (first) {
            first = false;
            char* end = nullptr;
            const std::string& head = fields.empty() ? line : fields[0];
            std::strtod(head.c_str(), &end);
            if (end == head.c_str()) {
                table.header = std::move(fields);
                continue;
            }
        }
        table.rows.push_back(std::move(fields));
    }
    return table;
}

inline CsvTable read_csv_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail(ErrorCode::InvalidArgument, "cannot open " + path);
    return read_csv(in);
}

inline double parse_double(const std::string& s)
{
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str())
        fail(ErrorCode::InvalidArgument, "not a number: '" + s + "'");
    return v;
}

} // namespace tpgabor
