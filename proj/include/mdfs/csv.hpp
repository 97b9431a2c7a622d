#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mdfs/dataset.hpp"

namespace mdfs {

/// Picks the label column of a CSV file: by 0-based index, by header name,
/// or the last column (the default).
struct ColumnSelector {
    std::optional<std::size_t> index;
    std::optional<std::string> name;

    static ColumnSelector last() { return {}; }
    static ColumnSelector by_index(std::size_t i) { return {i, std::nullopt}; }
    static ColumnSelector by_name(std::string n) { return {std::nullopt, std::move(n)}; }
};

namespace detail {

inline std::vector<std::string_view> split_line(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(',', start);
        if (pos == std::string_view::npos) {
            cells.push_back(line.substr(start));
            break;
        }
        cells.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return cells;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

inline std::optional<double> parse_double(std::string_view s) {
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) return std::nullopt;
    return v;
}

inline std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

}  // namespace detail

/// Loads a comma-separated numeric dataset. The label column may hold
/// arbitrary text; labels are re-encoded densely to 0..c-1 in order of first
/// appearance and the original text is kept in `label_names`. Rejects ragged
/// rows, non-numeric or non-finite feature cells, and files with fewer than
/// two classes.
inline Dataset load_csv(const std::string& path,
                        const ColumnSelector& label_column = ColumnSelector::last(),
                        bool has_header = true) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_csv: cannot open '" + path + "'");

    std::string line;
    std::vector<std::string> header;
    if (has_header) {
        if (!std::getline(in, line)) throw std::runtime_error("load_csv: '" + path + "' is empty");
        for (auto cell : detail::split_line(line)) header.emplace_back(detail::trim(cell));
    }

    std::vector<std::vector<double>> rows;      // feature cells per row
    std::vector<std::string> label_cells;
    std::size_t total_columns = 0;
    std::size_t label_idx = 0;
    bool first_row = true;
    std::size_t line_no = has_header ? 1 : 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (detail::trim(line).empty()) continue;
        auto cells = detail::split_line(line);
        if (first_row) {
            total_columns = cells.size();
            if (total_columns < 2) {
                throw std::runtime_error("load_csv: need at least one feature column and a label column");
            }
            if (label_column.index) {
                label_idx = *label_column.index;
                if (label_idx >= total_columns) {
                    throw std::runtime_error("load_csv: label column index out of range");
                }
            } else if (label_column.name) {
                if (!has_header) throw std::runtime_error("load_csv: label column by name requires a header");
                auto it = std::find(header.begin(), header.end(), *label_column.name);
                if (it == header.end()) {
                    throw std::runtime_error("load_csv: label column '" + *label_column.name + "' not found");
                }
                label_idx = static_cast<std::size_t>(it - header.begin());
            } else {
                label_idx = total_columns - 1;
            }
            first_row = false;
        } else if (cells.size() != total_columns) {
            throw std::runtime_error("load_csv: ragged row at line " + std::to_string(line_no));
        }

        std::vector<double> row;
        row.reserve(total_columns - 1);
        for (std::size_t c = 0; c < cells.size(); ++c) {
            auto cell = detail::trim(cells[c]);
            if (c == label_idx) {
                label_cells.emplace_back(cell);
                continue;
            }
            auto v = detail::parse_double(cell);
            if (!v) {
                throw std::runtime_error("load_csv: non-numeric value at row " +
                                         std::to_string(rows.size()) + ", column " + std::to_string(c));
            }
            if (!std::isfinite(*v)) {
                throw std::runtime_error("load_csv: non-finite value at row " +
                                         std::to_string(rows.size()) + ", column " + std::to_string(c));
            }
            row.push_back(*v);
        }
        rows.push_back(std::move(row));
    }

    if (rows.size() < 2) throw std::runtime_error("load_csv: need at least 2 data rows");

    Dataset ds;
    const std::size_t n = rows.size();
    const std::size_t m = total_columns - 1;
    ds.values = Matrix(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) ds.values(i, j) = rows[i][j];
    }

    std::unordered_map<std::string, int> label_codes;
    ds.labels.reserve(n);
    for (auto& text : label_cells) {
        auto [it, inserted] = label_codes.emplace(text, static_cast<int>(ds.label_names.size()));
        if (inserted) ds.label_names.push_back(text);
        ds.labels.push_back(it->second);
    }
    ds.class_count = static_cast<int>(ds.label_names.size());
    if (ds.class_count < 2) throw std::runtime_error("load_csv: fewer than 2 classes in label column");

    if (has_header) {
        for (std::size_t c = 0; c < header.size(); ++c) {
            if (c != label_idx) ds.feature_names.push_back(header[c]);
        }
    } else {
        for (std::size_t j = 0; j < m; ++j) ds.feature_names.push_back("f" + std::to_string(j));
    }

    ds.validate();
    return ds;
}

/// Writes a dataset as CSV with a header; the label column goes last so the
/// default loader settings read it back. Values are printed in shortest
/// round-trip form, so load_csv(save_csv(ds)) reproduces `ds` bit for bit.
inline void save_csv(const Dataset& ds, const std::string& path,
                     const std::string& label_column_name = "label") {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_csv: cannot open '" + path + "' for writing");
    for (const auto& name : ds.feature_names) out << name << ',';
    out << label_column_name << '\n';
    for (std::size_t i = 0; i < ds.n(); ++i) {
        for (std::size_t j = 0; j < ds.m(); ++j) {
            out << detail::format_double(ds.values(i, j)) << ',';
        }
        out << ds.label_names[static_cast<std::size_t>(ds.labels[i])] << '\n';
    }
    if (!out) throw std::runtime_error("save_csv: write to '" + path + "' failed");
}

}  // namespace mdfs
