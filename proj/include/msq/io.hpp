#pragma once

#include <charconv>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "msq/grid.hpp"

namespace msq {

enum class OutputFormat { PrettyText, Csv, Json };

inline const char* to_string(OutputFormat f) {
    switch (f) {
        case OutputFormat::PrettyText: return "text";
        case OutputFormat::Csv: return "csv";
        case OutputFormat::Json: return "json";
    }
    return "?";
}

inline OutputFormat parse_format(std::string_view s) {
    if (s == "text") return OutputFormat::PrettyText;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    throw std::invalid_argument("unknown format '" + std::string(s) +
                                "' (expected 'text', 'csv' or 'json')");
}

/// Grid-text parsing failure with a 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int column)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

/// One row per line, comma-separated decimal cells, no header,
/// newline-terminated.
inline std::string render_csv(const Grid& g) {
    std::string out;
    const int n = g.order();
    const auto cells = g.cells();
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            if (c > 0) out += ',';
            out += std::to_string(cells[static_cast<std::size_t>(r) * n + c]);
        }
        out += '\n';
    }
    return out;
}

/// Compact object with "order" and a flat row-major "cells" array.
inline std::string render_json(const Grid& g) {
    nlohmann::ordered_json j;
    j["order"] = g.order();
    j["cells"] = std::vector<Cell>(g.cells().begin(), g.cells().end());
    return j.dump();
}

/// Cells right-aligned to the width of n^2 (wider if entries demand it).
inline std::string render_pretty(const Grid& g) {
    const int n = g.order();
    const auto cells = g.cells();
    std::size_t width = std::to_string(static_cast<std::int64_t>(n) * n).size();
    for (const Cell v : cells) width = std::max(width, std::to_string(v).size());

    std::string out;
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            const std::string s = std::to_string(cells[static_cast<std::size_t>(r) * n + c]);
            if (c > 0) out += ' ';
            out.append(width - s.size(), ' ');
            out += s;
        }
        out += '\n';
    }
    return out;
}

inline std::string render(const Grid& g, OutputFormat f) {
    switch (f) {
        case OutputFormat::Csv: return render_csv(g);
        case OutputFormat::Json: return render_json(g);
        case OutputFormat::PrettyText: return render_pretty(g);
    }
    throw std::invalid_argument("unknown output format");
}

namespace detail {

inline std::pair<int, int> line_col_at(std::string_view text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t p = 0; p < byte && p < text.size(); ++p) {
        if (text[p] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

inline Cell parse_cell_token(std::string_view tok, int line, int column) {
    Cell v{};
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec == std::errc::result_out_of_range) {
        throw ParseError("'" + std::string(tok) + "' does not fit the 64-bit cell range",
                         line, column);
    }
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError("'" + std::string(tok) + "' is not an integer", line, column);
    }
    return v;
}

// Splits one physical line into cell tokens with their 1-based start
// columns. Lines containing a comma are split on commas (CSV); others on
// whitespace, so pretty-printed grids parse back too.
inline std::vector<std::pair<std::string_view, int>> tokenize_row(std::string_view rowtext,
                                                                  int line) {
    std::vector<std::pair<std::string_view, int>> out;
    if (rowtext.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (true) {
            std::size_t comma = rowtext.find(',', start);
            std::string_view field = rowtext.substr(
                start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
            std::size_t lead = field.find_first_not_of(" \t");
            if (lead == std::string_view::npos) {
                throw ParseError("empty cell", line, static_cast<int>(start) + 1);
            }
            std::size_t tail = field.find_last_not_of(" \t");
            out.emplace_back(field.substr(lead, tail - lead + 1),
                             static_cast<int>(start + lead) + 1);
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    } else {
        std::size_t p = 0;
        while (p < rowtext.size()) {
            if (rowtext[p] == ' ' || rowtext[p] == '\t') {
                ++p;
                continue;
            }
            std::size_t end = p;
            while (end < rowtext.size() && rowtext[end] != ' ' && rowtext[end] != '\t') ++end;
            out.emplace_back(rowtext.substr(p, end - p), static_cast<int>(p) + 1);
            p = end;
        }
    }
    return out;
}

inline Grid parse_json_grid(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, col] = line_col_at(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(std::string("invalid JSON: ") + e.what(), line, col);
    }
    if (!j.is_object() || !j.contains("order") || !j.contains("cells")) {
        throw ParseError("JSON grid must be an object with 'order' and 'cells'", 1, 1);
    }
    if (!j["order"].is_number_integer() || !j["cells"].is_array()) {
        throw ParseError("'order' must be an integer and 'cells' an array", 1, 1);
    }
    const auto order = j["order"].get<std::int64_t>();
    if (order < 1 || order > (1 << 20)) {
        throw ParseError("'order' out of range: " + std::to_string(order), 1, 1);
    }
    const auto n = static_cast<int>(order);
    const auto& arr = j["cells"];
    if (arr.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
        throw ParseError("'cells' has " + std::to_string(arr.size()) + " entries, order " +
                             std::to_string(n) + " needs " +
                             std::to_string(static_cast<std::int64_t>(n) * n),
                         1, 1);
    }
    std::vector<Cell> cells;
    cells.reserve(arr.size());
    for (std::size_t k = 0; k < arr.size(); ++k) {
        const auto& e = arr[k];
        if (!e.is_number_integer() ||
            (e.is_number_unsigned() &&
             e.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))) {
            throw ParseError("cell " + std::to_string(k) + " is not a 64-bit integer", 1, 1);
        }
        cells.push_back(e.get<Cell>());
    }
    return Grid(n, std::move(cells));
}

}  // namespace detail

/**
 * Parses a grid from text. A leading '{' selects the JSON form;
 * anything else is read as delimited rows (CSV or whitespace). Throws
 * ParseError with a line/column position on malformed input, including
 * ragged rows and non-square shapes.
 */
inline Grid parse_grid(std::string_view text) {
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        throw ParseError("input contains no cells", 1, 1);
    }
    if (text[first] == '{') return detail::parse_json_grid(text);

    std::vector<Cell> cells;
    std::size_t row_width = 0;
    int rows = 0;
    int line = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view rowtext =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        ++line;
        if (!rowtext.empty() && rowtext.back() == '\r') rowtext.remove_suffix(1);
        if (rowtext.find_first_not_of(" \t") != std::string_view::npos) {
            const auto tokens = detail::tokenize_row(rowtext, line);
            if (rows == 0) {
                row_width = tokens.size();
            } else if (tokens.size() != row_width) {
                throw ParseError("row has " + std::to_string(tokens.size()) +
                                     " cells, expected " + std::to_string(row_width),
                                 line, 1);
            }
            for (const auto& [tok, col] : tokens) {
                cells.push_back(detail::parse_cell_token(tok, line, col));
            }
            ++rows;
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    if (rows == 0) {
        throw ParseError("input contains no cells", 1, 1);
    }
    if (static_cast<std::size_t>(rows) != row_width) {
        throw ParseError("grid has " + std::to_string(rows) + " rows of " +
                             std::to_string(row_width) + " columns; a square grid is required",
                         line, 1);
    }
    return Grid(rows, std::move(cells));
}

}  // namespace msq
