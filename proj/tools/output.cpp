#include "output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace catalan::cli {

Format parse_format(const std::string& name) {
    if (name == "table") {
        return Format::table;
    }
    if (name == "csv") {
        return Format::csv;
    }
    if (name == "jsonl") {
        return Format::jsonl;
    }
    throw std::invalid_argument("unknown format '" + name + "'");
}

std::string format_double(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific);
    return {buf, res.ptr};
}

namespace {

std::string to_text(const Cell& cell) {
    struct Visitor {
        std::string operator()(const Text& t) const { return t.value; }
        std::string operator()(double d) const { return format_double(d); }
        std::string operator()(std::int64_t i) const { return std::to_string(i); }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
    };
    return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json to_json(const Cell& cell) {
    struct Visitor {
        nlohmann::ordered_json operator()(const Text& t) const { return t.value; }
        nlohmann::ordered_json operator()(double d) const {
            if (!std::isfinite(d)) {
                return format_double(d);
            }
            return d;
        }
        nlohmann::ordered_json operator()(std::int64_t i) const { return i; }
        nlohmann::ordered_json operator()(bool b) const { return b; }
    };
    return std::visit(Visitor{}, cell);
}

void write_table(std::ostream& out, const Rows& rows) {
    std::vector<std::vector<std::string>> text;
    std::vector<std::size_t> width(rows.header.size());
    for (std::size_t c = 0; c < rows.header.size(); ++c) {
        width[c] = rows.header[c].size();
    }
    for (const auto& row : rows.rows) {
        auto& line = text.emplace_back();
        for (std::size_t c = 0; c < row.size(); ++c) {
            line.push_back(to_text(row[c]));
            width[c] = std::max(width[c], line.back().size());
        }
    }
    auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) {
                out << "  ";
            }
            out << cells[c];
            if (c + 1 < cells.size()) {
                out << std::string(width[c] - cells[c].size(), ' ');
            }
        }
        out << '\n';
    };
    emit(rows.header);
    for (const auto& line : text) {
        emit(line);
    }
}

}  // namespace

void write_rows(std::ostream& out, const Rows& rows, Format format) {
    switch (format) {
        case Format::table:
            write_table(out, rows);
            break;
        case Format::csv:
            for (std::size_t c = 0; c < rows.header.size(); ++c) {
                out << (c ? "," : "") << rows.header[c];
            }
            out << '\n';
            for (const auto& row : rows.rows) {
                for (std::size_t c = 0; c < row.size(); ++c) {
                    out << (c ? "," : "") << to_text(row[c]);
                }
                out << '\n';
            }
            break;
        case Format::jsonl:
            for (const auto& row : rows.rows) {
                nlohmann::ordered_json obj = nlohmann::ordered_json::object();
                for (std::size_t c = 0; c < row.size(); ++c) {
                    obj[rows.header[c]] = to_json(row[c]);
                }
                out << obj.dump() << '\n';
            }
            break;
    }
}

}  // namespace catalan::cli
