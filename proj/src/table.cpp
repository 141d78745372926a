#include "gdsa/table.hpp"

#include <cstdio>

namespace gdsa {

std::string format_float(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string format_cell(const Cell& c) {
    if (std::holds_alternative<std::int64_t>(c)) {
        return std::to_string(std::get<std::int64_t>(c));
    }
    if (std::holds_alternative<double>(c)) {
        return format_float(std::get<double>(c));
    }
    return std::get<std::string>(c);
}

namespace {

void append_padded(std::string& out, const std::string& s, std::size_t width) {
    if (s.size() < width) out.append(width - s.size(), ' ');
    out += s;
}

}  // namespace

std::string render_table(const Table& t, std::optional<std::int64_t> max_rows) {
    const std::int64_t total = static_cast<std::int64_t>(t.rows.size());
    std::int64_t shown = total;
    if (max_rows && *max_rows >= 0 && total > *max_rows) shown = *max_rows;

    std::vector<std::string> index_text(static_cast<std::size_t>(shown));
    for (std::int64_t i = 0; i < shown; ++i) {
        std::int64_t idx = t.index.empty() ? i : t.index[static_cast<std::size_t>(i)];
        index_text[static_cast<std::size_t>(i)] = std::to_string(idx);
    }

    std::vector<std::vector<std::string>> cell_text(static_cast<std::size_t>(shown));
    std::vector<std::size_t> widths(t.columns.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c) widths[c] = t.columns[c].size();
    std::size_t index_width = 0;
    for (std::int64_t i = 0; i < shown; ++i) {
        const auto& row = t.rows[static_cast<std::size_t>(i)];
        auto& texts = cell_text[static_cast<std::size_t>(i)];
        texts.resize(t.columns.size());
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            texts[c] = c < row.size() ? format_cell(row[c]) : "";
            if (texts[c].size() > widths[c]) widths[c] = texts[c].size();
        }
        index_width = std::max(index_width, index_text[static_cast<std::size_t>(i)].size());
    }

    std::string out;
    out.append(index_width, ' ');
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        out += "  ";
        append_padded(out, t.columns[c], widths[c]);
    }
    out += '\n';

    for (std::int64_t i = 0; i < shown; ++i) {
        append_padded(out, index_text[static_cast<std::size_t>(i)], index_width);
        const auto& texts = cell_text[static_cast<std::size_t>(i)];
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            out += "  ";
            append_padded(out, texts[c], widths[c]);
        }
        out += '\n';
    }

    if (total == 0) out += "Empty\n";
    if (shown < total) {
        out += "[" + std::to_string(total) + " rows total]\n";
        out += "... +" + std::to_string(total - shown) + " more rows";
    } else {
        out += "[" + std::to_string(total) + " rows]";
    }
    return out;
}

std::string format_float_list(const std::vector<double>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        out += format_float(xs[i]);
    }
    return out + "]";
}

std::string format_int_list(const std::vector<std::int64_t>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(xs[i]);
    }
    return out + "]";
}

std::string format_string_list(const std::vector<std::string>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        out += '\'';
        out += xs[i];
        out += '\'';
    }
    return out + "]";
}

}  // namespace gdsa
