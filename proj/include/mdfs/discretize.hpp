#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "mdfs/dataset.hpp"

namespace mdfs {

struct DiscretizedFeature {
    std::vector<int> codes;  // one per instance, in [0, bin_count)
    int bin_count = 0;
};

/// Equal-frequency discretization: bin boundaries sit at empirical quantiles
/// and tied values always share a bin, so the actual bin count can be lower
/// than requested. Codes are dense and order-preserving:
/// value_i <= value_j implies code_i <= code_j.
inline DiscretizedFeature discretize_equal_frequency(std::span<const double> values, int bins) {
    if (bins < 1) throw std::invalid_argument("discretize_equal_frequency: bins must be >= 1");
    if (values.empty()) throw std::invalid_argument("discretize_equal_frequency: empty input");

    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    DiscretizedFeature out;
    out.codes.resize(n);
    const auto ubins = static_cast<std::size_t>(bins);
    int next_code = -1;
    std::size_t last_raw_bin = ubins;  // sentinel
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && values[order[j]] == values[order[i]]) ++j;
        // the whole tie group lands in the quantile bin of its first element
        std::size_t raw = std::min(ubins - 1, i * ubins / n);
        if (raw != last_raw_bin) {
            ++next_code;
            last_raw_bin = raw;
        }
        for (std::size_t k = i; k < j; ++k) out.codes[order[k]] = next_code;
        i = j;
    }
    out.bin_count = next_code + 1;
    return out;
}

inline DiscretizedFeature discretize_equal_frequency(const Dataset& ds, std::size_t feature, int bins) {
    if (feature >= ds.m()) throw std::out_of_range("discretize_equal_frequency: feature index out of range");
    return discretize_equal_frequency(ds.feature(feature), bins);
}

}  // namespace mdfs
