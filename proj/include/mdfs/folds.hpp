#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "mdfs/rng.hpp"

namespace mdfs {

struct FoldAssignment {
    std::vector<int> fold_of;  // one entry per instance, in [0, k)
    int k = 0;
    std::uint64_t seed = 0;
};

/// Stratified fold assignment: within each class the instances are shuffled
/// by the seed and dealt round-robin, so per-class fold sizes differ by at
/// most one. Classes with fewer than k instances simply miss some folds.
/// Deterministic: the same (labels, k, seed) always yields the same folds.
inline FoldAssignment stratified_folds(std::span<const int> labels, int k, std::uint64_t seed) {
    if (k < 2) throw std::invalid_argument("stratified_folds: k must be >= 2");
    int max_label = -1;
    for (int lb : labels) {
        if (lb < 0) throw std::invalid_argument("stratified_folds: negative label");
        max_label = std::max(max_label, lb);
    }

    FoldAssignment out;
    out.fold_of.assign(labels.size(), 0);
    out.k = k;
    out.seed = seed;

    std::vector<std::vector<std::size_t>> by_class(static_cast<std::size_t>(max_label) + 1);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        by_class[static_cast<std::size_t>(labels[i])].push_back(i);
    }

    std::mt19937_64 gen(rng::mix(seed, 0x666f6c6473ULL));
    for (auto& members : by_class) {
        rng::shuffle(members, gen);
        for (std::size_t pos = 0; pos < members.size(); ++pos) {
            out.fold_of[members[pos]] = static_cast<int>(pos % static_cast<std::size_t>(k));
        }
    }
    return out;
}

}  // namespace mdfs
