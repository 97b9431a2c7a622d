#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdfs/dataset.hpp"
#include "mdfs/matrix.hpp"
#include "mdfs/rng.hpp"

namespace mdfs {

/// How a feature group realises the mean gap of its class pair.
///   split:        pair classes at -gap/2 and +gap/2, everything else N(0,1).
///   shift_first:  only the pair's first class is shifted by +gap; the second
///                 class and all others stay at N(0,1), so the feature is
///                 pure noise for every pair not involving the first class.
///   shift_second: mirror image of shift_first.
enum class GapPlacement { split, shift_first, shift_second };

struct SirenGroup {
    int class_a = 0;              // pair, class_a < class_b
    int class_b = 1;
    std::size_t feature_count = 1;
    GapPlacement placement = GapPlacement::split;
};

struct SirenSpec {
    std::vector<std::size_t> class_sizes;  // instances per class; defines c
    Matrix pair_gaps;                      // c x c, entry (i,j) = mean gap of pair {i,j} in sd units
    std::vector<SirenGroup> groups;        // partitions the features
    std::uint64_t seed = 0;
};

struct SirenFeature {
    int class_a;
    int class_b;
    double gap;
    GapPlacement placement;
};

struct SirenData {
    Dataset dataset;
    std::vector<SirenFeature> truth;  // per feature: which pair it serves
};

namespace detail {

inline double placement_mean(const SirenFeature& f, int cls) {
    switch (f.placement) {
        case GapPlacement::split:
            if (cls == f.class_a) return -f.gap / 2.0;
            if (cls == f.class_b) return +f.gap / 2.0;
            return 0.0;
        case GapPlacement::shift_first:
            return cls == f.class_a ? f.gap : 0.0;
        case GapPlacement::shift_second:
            return cls == f.class_b ? f.gap : 0.0;
    }
    return 0.0;
}

}  // namespace detail

/// Generates a multi-class Gaussian dataset with per-pair controllable
/// difficulty. Each feature group serves exactly one class pair: its features
/// carry that pair's mean gap (unit variance throughout) and are plain N(0,1)
/// noise for classes outside the placement. Instances are laid out in class
/// blocks (all of class 0 first, and so on). Deterministic in the seed; each
/// feature column has its own derived RNG stream, so the result does not
/// depend on generation order.
inline SirenData generate_siren_dataset(const SirenSpec& spec) {
    const std::size_t c = spec.class_sizes.size();
    if (c < 2) throw std::invalid_argument("siren: need at least 2 classes");
    for (std::size_t sz : spec.class_sizes) {
        if (sz == 0) throw std::invalid_argument("siren: every class needs at least 1 instance");
    }
    if (spec.pair_gaps.rows() != c || spec.pair_gaps.cols() != c) {
        throw std::invalid_argument("siren: pair gap matrix must be class_count x class_count");
    }
    if (spec.groups.empty()) throw std::invalid_argument("siren: feature plan is empty");

    std::vector<SirenFeature> truth;
    for (const auto& g : spec.groups) {
        if (g.class_a < 0 || g.class_b <= g.class_a || static_cast<std::size_t>(g.class_b) >= c) {
            throw std::invalid_argument("siren: group pair must satisfy 0 <= a < b < class_count");
        }
        if (g.feature_count == 0) throw std::invalid_argument("siren: empty feature group");
        double gap = spec.pair_gaps(static_cast<std::size_t>(g.class_a),
                                    static_cast<std::size_t>(g.class_b));
        if (gap < 0.0) throw std::invalid_argument("siren: negative pair gap");
        for (std::size_t i = 0; i < g.feature_count; ++i) {
            truth.push_back({g.class_a, g.class_b, gap, g.placement});
        }
    }

    std::size_t n = 0;
    for (std::size_t sz : spec.class_sizes) n += sz;
    const std::size_t m = truth.size();

    SirenData out;
    out.truth = std::move(truth);
    Dataset& ds = out.dataset;
    ds.values = Matrix(n, m);
    ds.labels.reserve(n);
    for (std::size_t k = 0; k < c; ++k) {
        ds.labels.insert(ds.labels.end(), spec.class_sizes[k], static_cast<int>(k));
        ds.label_names.push_back(std::to_string(k));
    }
    ds.class_count = static_cast<int>(c);

    for (std::size_t j = 0; j < m; ++j) {
        ds.feature_names.push_back("f" + std::to_string(j));
        std::mt19937_64 gen(rng::mix(spec.seed, j));
        std::normal_distribution<double> normal(0.0, 1.0);
        auto col = ds.values.column(j);
        for (std::size_t i = 0; i < n; ++i) {
            col[i] = detail::placement_mean(out.truth[j], ds.labels[i]) + normal(gen);
        }
    }

    ds.validate();
    return out;
}

}  // namespace mdfs
