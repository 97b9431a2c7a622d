#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdfs/matrix.hpp"

namespace mdfs {

/// A fixed multi-class dataset: n instances, m numeric features, dense
/// integer labels in [0, class_count). Immutable after construction; all
/// selectors and metrics take it by const reference and may share it across
/// threads.
struct Dataset {
    Matrix values;                          // n x m, column-major
    std::vector<int> labels;                // one per instance
    std::vector<std::string> feature_names; // one per feature
    std::vector<std::string> label_names;   // original label text per dense index
    int class_count = 0;

    // When this dataset was carved out of another one (e.g. a training fold),
    // source_rows[i] is the row of the parent that became row i. Empty for
    // datasets loaded or generated directly.
    std::vector<std::size_t> source_rows;

    std::size_t n() const { return labels.size(); }
    std::size_t m() const { return values.cols(); }

    std::span<const double> feature(std::size_t j) const { return values.column(j); }

    std::vector<std::size_t> class_counts() const {
        std::vector<std::size_t> counts(static_cast<std::size_t>(class_count), 0);
        for (int lb : labels) counts[static_cast<std::size_t>(lb)]++;
        return counts;
    }

    /// Indices of the instances belonging to each class, ascending per class.
    std::vector<std::vector<std::size_t>> instances_by_class() const {
        std::vector<std::vector<std::size_t>> by_class(static_cast<std::size_t>(class_count));
        for (std::size_t i = 0; i < labels.size(); ++i) {
            by_class[static_cast<std::size_t>(labels[i])].push_back(i);
        }
        return by_class;
    }

    void validate() const {
        if (labels.size() < 2) throw std::invalid_argument("dataset: need at least 2 instances");
        if (values.cols() < 1) throw std::invalid_argument("dataset: need at least 1 feature");
        if (values.rows() != labels.size()) {
            throw std::invalid_argument("dataset: label count does not match row count");
        }
        if (class_count < 2) throw std::invalid_argument("dataset: need at least 2 classes");
        if (feature_names.size() != values.cols()) {
            throw std::invalid_argument("dataset: feature name count does not match column count");
        }
        if (label_names.size() != static_cast<std::size_t>(class_count)) {
            throw std::invalid_argument("dataset: label name count does not match class count");
        }
        std::vector<bool> seen(static_cast<std::size_t>(class_count), false);
        for (int lb : labels) {
            if (lb < 0 || lb >= class_count) throw std::invalid_argument("dataset: label out of range");
            seen[static_cast<std::size_t>(lb)] = true;
        }
        for (bool s : seen) {
            if (!s) throw std::invalid_argument("dataset: a class has no instances");
        }
        for (std::size_t j = 0; j < values.cols(); ++j) {
            for (double v : values.column(j)) {
                if (!std::isfinite(v)) throw std::invalid_argument("dataset: non-finite value");
            }
        }
    }
};

/// Builds a new dataset from the given rows of `parent` (in the given order),
/// recording row provenance in `source_rows`. Every class of the parent must
/// survive into the subset.
inline Dataset subset_rows(const Dataset& parent, std::span<const std::size_t> rows) {
    Dataset out;
    out.values = Matrix(rows.size(), parent.m());
    out.labels.reserve(rows.size());
    for (std::size_t j = 0; j < parent.m(); ++j) {
        auto src = parent.feature(j);
        auto dst = out.values.column(j);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i] >= parent.n()) throw std::out_of_range("subset_rows: row index out of range");
            dst[i] = src[rows[i]];
        }
    }
    for (std::size_t r : rows) out.labels.push_back(parent.labels[r]);
    out.feature_names = parent.feature_names;
    out.label_names = parent.label_names;
    out.class_count = parent.class_count;
    out.source_rows.assign(rows.begin(), rows.end());
    out.validate();
    return out;
}

}  // namespace mdfs
