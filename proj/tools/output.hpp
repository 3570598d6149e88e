#pragma once

// Row-oriented output shared by every subcommand: aligned text table, CSV or
// JSON lines, all with identical column order.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace catalan::cli {

enum class Format { table, csv, jsonl };

Format parse_format(const std::string& name);

/// Verbatim text (also used for exact integers, which exceed any machine type).
struct Text {
    std::string value;
};

using Cell = std::variant<Text, double, std::int64_t, bool>;

struct Rows {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;
};

/// Shortest round-trip scientific notation, lowercase, at most 17 significant digits.
std::string format_double(double x);

void write_rows(std::ostream& out, const Rows& rows, Format format);

}  // namespace catalan::cli
