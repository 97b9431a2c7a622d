#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "mdfs/dataset.hpp"
#include "mdfs/discretize.hpp"
#include "mdfs/metrics.hpp"
#include "mdfs/parallel.hpp"

namespace mdfs {

enum class SubProblemKind { one_vs_one, one_vs_all };

/// A binary restriction of the dataset: either a pair of classes or one class
/// against the rest. Holds the instance indices of both sides.
struct SubProblem {
    SubProblemKind kind = SubProblemKind::one_vs_one;
    int class_a = 0;                     // positive class
    int class_b = -1;                    // negative class; -1 means "all the rest"
    std::vector<std::size_t> positive;
    std::vector<std::size_t> negative;

    std::string id() const {
        if (kind == SubProblemKind::one_vs_one) {
            return "pair(" + std::to_string(class_a) + "," + std::to_string(class_b) + ")";
        }
        return "class(" + std::to_string(class_a) + ")";
    }
};

/// All c(c-1)/2 class pairs in lexicographic (i, j) order, i < j positive side i.
inline std::vector<SubProblem> one_vs_one_subproblems(const Dataset& ds) {
    const auto by_class = ds.instances_by_class();
    const int c = ds.class_count;
    std::vector<SubProblem> subs;
    subs.reserve(static_cast<std::size_t>(c) * (c - 1) / 2);
    for (int i = 0; i < c; ++i) {
        for (int j = i + 1; j < c; ++j) {
            SubProblem sp;
            sp.kind = SubProblemKind::one_vs_one;
            sp.class_a = i;
            sp.class_b = j;
            sp.positive = by_class[static_cast<std::size_t>(i)];
            sp.negative = by_class[static_cast<std::size_t>(j)];
            subs.push_back(std::move(sp));
        }
    }
    return subs;
}

/// c sub-problems; sub-problem k has class k positive and all others negative.
inline std::vector<SubProblem> one_vs_all_subproblems(const Dataset& ds) {
    const int c = ds.class_count;
    std::vector<SubProblem> subs;
    subs.reserve(static_cast<std::size_t>(c));
    for (int k = 0; k < c; ++k) {
        SubProblem sp;
        sp.kind = SubProblemKind::one_vs_all;
        sp.class_a = k;
        for (std::size_t i = 0; i < ds.n(); ++i) {
            (ds.labels[i] == k ? sp.positive : sp.negative).push_back(i);
        }
        subs.push_back(std::move(sp));
    }
    return subs;
}

/// Feature ranking for one sub-problem: `order` is a permutation of the
/// feature indices, best first; `scores[i]` belongs to `order[i]` and is
/// non-increasing. Ties are broken by ascending feature index, which makes
/// every ranking deterministic.
struct RankingList {
    SubProblem subproblem;
    std::vector<std::size_t> order;
    std::vector<double> scores;
};

enum class RankMetric { chi, su };

namespace detail {

inline RankingList make_ranking(SubProblem sp, std::vector<double> feature_scores) {
    RankingList list;
    list.subproblem = std::move(sp);
    list.order.resize(feature_scores.size());
    std::iota(list.order.begin(), list.order.end(), std::size_t{0});
    std::sort(list.order.begin(), list.order.end(), [&](std::size_t a, std::size_t b) {
        if (feature_scores[a] != feature_scores[b]) return feature_scores[a] > feature_scores[b];
        return a < b;
    });
    list.scores.reserve(feature_scores.size());
    for (std::size_t f : list.order) list.scores.push_back(feature_scores[f]);
    return list;
}

}  // namespace detail

/// Per-feature AUC of the sub-problem, treating each feature value as a
/// classifier score. With `orientation_corrected` (the default) the score is
/// max(A, 1-A): a feature that ranks the pair perfectly in reverse is as
/// discriminative as one that ranks it perfectly forward.
inline std::vector<double> feature_auc_scores(const Dataset& ds, const SubProblem& sp,
                                              bool orientation_corrected = true) {
    if (sp.positive.empty() || sp.negative.empty()) {
        throw std::invalid_argument("feature_auc_scores: sub-problem side is empty");
    }
    std::vector<double> scores(ds.m());
    std::vector<double> pos(sp.positive.size()), neg(sp.negative.size());
    for (std::size_t f = 0; f < ds.m(); ++f) {
        const auto col = ds.feature(f);
        for (std::size_t i = 0; i < sp.positive.size(); ++i) pos[i] = col[sp.positive[i]];
        for (std::size_t i = 0; i < sp.negative.size(); ++i) neg[i] = col[sp.negative[i]];
        const double a = auc(pos, neg);
        scores[f] = orientation_corrected ? std::max(a, 1.0 - a) : a;
    }
    return scores;
}

inline RankingList rank_features_by_auc(const Dataset& ds, const SubProblem& sp,
                                        bool orientation_corrected = true) {
    return detail::make_ranking(sp, feature_auc_scores(ds, sp, orientation_corrected));
}

/// CHI or SU ranking against the binary sub-problem label. Each feature is
/// discretized on the sub-problem's instances only.
inline RankingList rank_features_by_metric(const Dataset& ds, const SubProblem& sp,
                                           RankMetric metric, int bins) {
    if (sp.positive.empty() || sp.negative.empty()) {
        throw std::invalid_argument("rank_features_by_metric: sub-problem side is empty");
    }
    std::vector<std::size_t> rows;
    rows.reserve(sp.positive.size() + sp.negative.size());
    rows.insert(rows.end(), sp.positive.begin(), sp.positive.end());
    rows.insert(rows.end(), sp.negative.begin(), sp.negative.end());

    std::vector<int> binary_labels(rows.size(), 1);
    for (std::size_t i = sp.positive.size(); i < rows.size(); ++i) binary_labels[i] = 0;

    std::vector<double> scores(ds.m());
    std::vector<double> restricted(rows.size());
    for (std::size_t f = 0; f < ds.m(); ++f) {
        const auto col = ds.feature(f);
        for (std::size_t i = 0; i < rows.size(); ++i) restricted[i] = col[rows[i]];
        const auto disc = discretize_equal_frequency(restricted, bins);
        scores[f] = metric == RankMetric::chi
                        ? chi_square(disc, binary_labels, 2)
                        : symmetrical_uncertainty(disc.codes, binary_labels);
    }
    return detail::make_ranking(sp, scores);
}

/// Builds one ranking list per sub-problem, optionally in parallel; the
/// output is identical to the sequential loop regardless of thread count.
template <typename RankFn>
std::vector<RankingList> build_ranking_lists(const std::vector<SubProblem>& subs, RankFn&& rank_one,
                                             int threads = 1) {
    std::vector<RankingList> lists(subs.size());
    detail::parallel_for(subs.size(), threads,
                         [&](std::size_t i) { lists[i] = rank_one(subs[i]); });
    return lists;
}

}  // namespace mdfs
