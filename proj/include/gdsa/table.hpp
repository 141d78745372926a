#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gdsa {

using Cell = std::variant<std::int64_t, double, std::string>;

/// Column-major-free value table rendered in a dataframe-like fixed-width
/// text layout. `index` holds explicit row indices; when empty, rows are
/// numbered 0..n-1. Filtered views keep their original indices.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::int64_t> index;
};

/// Floats render with 6 decimals everywhere (tables, lists, summaries).
std::string format_float(double v);

std::string format_cell(const Cell& c);

/// Deterministic rendering. Truncates to max_rows when set; a truncated
/// table ends with a "... +K more rows" marker line. The total row count
/// is always part of the output, and an empty table renders an "Empty" line.
std::string render_table(const Table& t, std::optional<std::int64_t> max_rows = std::nullopt);

/// "[a, b, c]" with floats at 6 decimals.
std::string format_float_list(const std::vector<double>& xs);
std::string format_int_list(const std::vector<std::int64_t>& xs);
/// JSON-style quoted string list.
std::string format_string_list(const std::vector<std::string>& xs);

}  // namespace gdsa
