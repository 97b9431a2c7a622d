#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdfs/dataset.hpp"
#include "mdfs/decompose.hpp"
#include "mdfs/discretize.hpp"
#include "mdfs/metrics.hpp"
#include "mdfs/rng.hpp"

namespace mdfs {

enum class Method { mdfs, maucd, chi, su, fsdd, schi, ssu, relieff, mrmr };

inline std::string to_string(Method m) {
    switch (m) {
        case Method::mdfs: return "mdfs";
        case Method::maucd: return "maucd";
        case Method::chi: return "chi";
        case Method::su: return "su";
        case Method::fsdd: return "fsdd";
        case Method::schi: return "schi";
        case Method::ssu: return "ssu";
        case Method::relieff: return "relieff";
        case Method::mrmr: return "mrmr";
    }
    return "?";
}

inline std::optional<Method> method_from_string(const std::string& name) {
    for (Method m : {Method::mdfs, Method::maucd, Method::chi, Method::su, Method::fsdd,
                     Method::schi, Method::ssu, Method::relieff, Method::mrmr}) {
        if (to_string(m) == name) return m;
    }
    return std::nullopt;
}

enum class MdfsSchedule { random, round_robin };

struct SelectorConfig {
    std::size_t k_target = 10;         // requested subset size K
    std::uint64_t seed = 0;            // drives sub-problem scheduling / sampling / shuffling
    int bins = 10;                     // discretization bins for CHI / SU / mRMR
    double beta = 2.0;                 // FSDD tuning parameter
    int relieff_neighbors = 10;        // k nearest hits/misses
    std::size_t relieff_iterations = 0;  // t; 0 means ceil(log2 n)
    MdfsSchedule mdfs_schedule = MdfsSchedule::random;
    bool orientation_corrected = true; // score AUC lists by max(A, 1-A)

    void validate() const {
        if (k_target < 1) throw std::invalid_argument("selector config: k_target must be >= 1");
        if (bins < 2) throw std::invalid_argument("selector config: bins must be >= 2");
        if (relieff_neighbors < 1) {
            throw std::invalid_argument("selector config: relieff_neighbors must be >= 1");
        }
    }
};

/// Outcome of one selector run: distinct feature indices in selection order,
/// plus per-feature provenance (which step of the method chose it) and the
/// score that step saw. Re-running with the same configuration and seed
/// reproduces `selected` exactly.
struct SelectionResult {
    Method method = Method::mdfs;
    SelectorConfig config;
    std::vector<std::size_t> selected;
    std::vector<std::string> provenance;
    std::vector<double> scores;
};

namespace detail {

inline void check_k(const Dataset& ds, const SelectorConfig& cfg) {
    cfg.validate();
    if (cfg.k_target > ds.m()) {
        throw std::invalid_argument("selector: K = " + std::to_string(cfg.k_target) +
                                    " exceeds feature count m = " + std::to_string(ds.m()));
    }
}

/// Top-K of a full score vector, descending, ties by ascending index.
inline SelectionResult top_k_by_score(Method method, const Dataset& ds, const SelectorConfig& cfg,
                                      const std::vector<double>& scores) {
    std::vector<std::size_t> order(ds.m());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        return a < b;
    });
    SelectionResult result;
    result.method = method;
    result.config = cfg;
    for (std::size_t r = 0; r < cfg.k_target; ++r) {
        result.selected.push_back(order[r]);
        result.provenance.push_back("rank(" + std::to_string(r + 1) + ")");
        result.scores.push_back(scores[order[r]]);
    }
    return result;
}

}  // namespace detail

/// MAUC-decomposition selection: one AUC ranking list per class pair, then an
/// iterative loop that visits a sub-problem (uniformly at random under the
/// configured seed, or cyclically with the round-robin schedule), pops the
/// top remaining feature of its list and inserts it into the subset unless it
/// is already there. Iterations that pop an already-selected feature add
/// nothing. Stops once K features are collected.
inline SelectionResult select_mdfs(const Dataset& ds, const SelectorConfig& cfg, int threads = 1) {
    detail::check_k(ds, cfg);
    const auto subs = one_vs_one_subproblems(ds);
    const auto lists = build_ranking_lists(
        subs, [&](const SubProblem& sp) { return rank_features_by_auc(ds, sp, cfg.orientation_corrected); },
        threads);

    const std::size_t pair_count = lists.size();
    std::vector<std::size_t> cursor(pair_count, 0);
    std::vector<bool> in_subset(ds.m(), false);

    SelectionResult result;
    result.method = Method::mdfs;
    result.config = cfg;

    std::mt19937_64 gen(rng::mix(cfg.seed, 0x6d646673ULL));
    std::size_t rr_next = 0;
    while (result.selected.size() < cfg.k_target) {
        const std::size_t li = cfg.mdfs_schedule == MdfsSchedule::random
                                   ? rng::bounded(gen, pair_count)
                                   : (rr_next++ % pair_count);
        auto& cur = cursor[li];
        if (cur >= ds.m()) continue;  // list exhausted; every feature of it is already selected
        const std::size_t f = lists[li].order[cur];
        const double score = lists[li].scores[cur];
        ++cur;
        if (!in_subset[f]) {
            in_subset[f] = true;
            result.selected.push_back(f);
            result.provenance.push_back(lists[li].subproblem.id());
            result.scores.push_back(score);
        }
    }
    return result;
}

/// Ranks features by their own MAUC: the orientation-corrected AUC averaged
/// over all class pairs, then top-K. This is the "global" baseline that the
/// decomposition loop exists to beat on uneven pair difficulties.
inline SelectionResult select_maucd(const Dataset& ds, const SelectorConfig& cfg, int threads = 1) {
    detail::check_k(ds, cfg);
    const auto subs = one_vs_one_subproblems(ds);
    std::vector<std::vector<double>> per_pair(subs.size());
    detail::parallel_for(subs.size(), threads, [&](std::size_t i) {
        per_pair[i] = feature_auc_scores(ds, subs[i], cfg.orientation_corrected);
    });
    std::vector<double> scores(ds.m(), 0.0);
    for (const auto& pair_scores : per_pair) {
        for (std::size_t f = 0; f < ds.m(); ++f) scores[f] += pair_scores[f];
    }
    for (double& s : scores) s /= static_cast<double>(subs.size());
    return detail::top_k_by_score(Method::maucd, ds, cfg, scores);
}

/// Plain univariate ranking by CHI, SU or the distance discriminant.
inline SelectionResult select_ranking(const Dataset& ds, const SelectorConfig& cfg, Method metric) {
    detail::check_k(ds, cfg);
    std::vector<double> scores(ds.m());
    for (std::size_t f = 0; f < ds.m(); ++f) {
        switch (metric) {
            case Method::chi: {
                const auto disc = discretize_equal_frequency(ds, f, cfg.bins);
                scores[f] = chi_square(disc, ds.labels, ds.class_count);
                break;
            }
            case Method::su: {
                const auto disc = discretize_equal_frequency(ds, f, cfg.bins);
                scores[f] = symmetrical_uncertainty(disc.codes, ds.labels);
                break;
            }
            case Method::fsdd:
                scores[f] = fsdd_score(ds, f, cfg.beta).value;
                break;
            default:
                throw std::invalid_argument("select_ranking: metric must be chi, su or fsdd");
        }
    }
    return detail::top_k_by_score(metric, ds, cfg, scores);
}

/// Round-robin selection over one-vs-all ranking lists: the classes take
/// turns in order 0..c-1, each visit contributing its best not-yet-selected
/// feature, until K features are collected.
inline SelectionResult select_spreadfx(const Dataset& ds, const SelectorConfig& cfg,
                                       RankMetric metric, int threads = 1) {
    detail::check_k(ds, cfg);
    const auto subs = one_vs_all_subproblems(ds);
    const auto lists = build_ranking_lists(
        subs, [&](const SubProblem& sp) { return rank_features_by_metric(ds, sp, metric, cfg.bins); },
        threads);

    std::vector<std::size_t> cursor(lists.size(), 0);
    std::vector<bool> in_subset(ds.m(), false);

    SelectionResult result;
    result.method = metric == RankMetric::chi ? Method::schi : Method::ssu;
    result.config = cfg;

    std::size_t visit = 0;
    while (result.selected.size() < cfg.k_target) {
        const std::size_t li = visit++ % lists.size();
        auto& cur = cursor[li];
        while (cur < ds.m() && in_subset[lists[li].order[cur]]) ++cur;
        if (cur >= ds.m()) continue;  // exhausted lists occur only once every feature is selected
        const std::size_t f = lists[li].order[cur];
        in_subset[f] = true;
        result.selected.push_back(f);
        result.provenance.push_back(lists[li].subproblem.id());
        result.scores.push_back(lists[li].scores[cur]);
        ++cur;
    }
    return result;
}

/// ReliefF weighting: t seeded sample instances; for each, the k nearest
/// hits and, per other class, the k nearest misses (Manhattan distance on
/// range-normalized features) pull every feature's weight down by the mean
/// hit difference and up by the prior-weighted mean miss difference. Top-K
/// by final weight.
inline SelectionResult select_relieff(const Dataset& ds, const SelectorConfig& cfg) {
    detail::check_k(ds, cfg);
    const std::size_t n = ds.n();
    const std::size_t m = ds.m();
    const std::size_t t = cfg.relieff_iterations > 0
                              ? cfg.relieff_iterations
                              : static_cast<std::size_t>(
                                    std::ceil(std::log2(static_cast<double>(n))));
    const auto k = static_cast<std::size_t>(cfg.relieff_neighbors);

    std::vector<double> inv_range(m, 0.0);
    for (std::size_t f = 0; f < m; ++f) {
        const auto col = ds.feature(f);
        const auto [lo, hi] = std::minmax_element(col.begin(), col.end());
        if (*hi > *lo) inv_range[f] = 1.0 / (*hi - *lo);
    }

    const auto counts = ds.class_counts();
    std::vector<double> prior(counts.size());
    for (std::size_t c = 0; c < counts.size(); ++c) {
        prior[c] = static_cast<double>(counts[c]) / static_cast<double>(n);
    }
    const auto by_class = ds.instances_by_class();

    std::vector<double> weights(m, 0.0);
    std::vector<double> dist(n, 0.0);
    std::vector<std::size_t> neighbors;
    std::mt19937_64 gen(rng::mix(cfg.seed, 0x72656c696566ULL));

    for (std::size_t iter = 0; iter < t; ++iter) {
        const std::size_t r = rng::bounded(gen, n);
        std::fill(dist.begin(), dist.end(), 0.0);
        for (std::size_t f = 0; f < m; ++f) {
            const auto col = ds.feature(f);
            const double vr = col[r];
            const double inv = inv_range[f];
            for (std::size_t i = 0; i < n; ++i) dist[i] += std::fabs(col[i] - vr) * inv;
        }

        const auto r_class = static_cast<std::size_t>(ds.labels[r]);
        for (std::size_t c = 0; c < by_class.size(); ++c) {
            neighbors.clear();
            for (std::size_t i : by_class[c]) {
                if (i != r) neighbors.push_back(i);
            }
            if (neighbors.empty()) continue;  // a singleton class offers no hits for itself
            const std::size_t take = std::min(k, neighbors.size());
            std::partial_sort(neighbors.begin(), neighbors.begin() + static_cast<std::ptrdiff_t>(take),
                              neighbors.end(), [&](std::size_t a, std::size_t b) {
                                  if (dist[a] != dist[b]) return dist[a] < dist[b];
                                  return a < b;
                              });

            const bool hit = c == r_class;
            const double factor = hit ? -1.0 : prior[c] / (1.0 - prior[r_class]);
            const double scale = factor / (static_cast<double>(t) * static_cast<double>(take));
            for (std::size_t f = 0; f < m; ++f) {
                const auto col = ds.feature(f);
                double diff_sum = 0.0;
                for (std::size_t idx = 0; idx < take; ++idx) {
                    diff_sum += std::fabs(col[neighbors[idx]] - col[r]) * inv_range[f];
                }
                weights[f] += scale * diff_sum;
            }
        }
    }
    return detail::top_k_by_score(Method::relieff, ds, cfg, weights);
}

/// Greedy minimal-redundancy maximal-relevance selection on discretized
/// features: the first pick maximizes I(f; y); afterwards each step maximizes
/// relevance minus the mean mutual information with the already-selected set.
inline SelectionResult select_mrmr(const Dataset& ds, const SelectorConfig& cfg) {
    detail::check_k(ds, cfg);
    const std::size_t m = ds.m();

    std::vector<std::vector<int>> codes(m);
    for (std::size_t f = 0; f < m; ++f) {
        codes[f] = discretize_equal_frequency(ds, f, cfg.bins).codes;
    }

    std::vector<double> relevance(m);
    for (std::size_t f = 0; f < m; ++f) relevance[f] = mutual_information(codes[f], ds.labels);

    SelectionResult result;
    result.method = Method::mrmr;
    result.config = cfg;

    std::vector<bool> in_subset(m, false);
    std::vector<double> redundancy_sum(m, 0.0);

    for (std::size_t step = 0; step < cfg.k_target; ++step) {
        std::size_t best = m;
        double best_score = 0.0;
        for (std::size_t f = 0; f < m; ++f) {
            if (in_subset[f]) continue;
            const double score =
                step == 0 ? relevance[f]
                          : relevance[f] - redundancy_sum[f] / static_cast<double>(step);
            if (best == m || score > best_score) {
                best = f;
                best_score = score;
            }
        }
        in_subset[best] = true;
        result.selected.push_back(best);
        result.provenance.push_back("iteration(" + std::to_string(step + 1) + ")");
        result.scores.push_back(best_score);
        if (step + 1 < cfg.k_target) {
            for (std::size_t f = 0; f < m; ++f) {
                if (!in_subset[f]) redundancy_sum[f] += mutual_information(codes[f], codes[best]);
            }
        }
    }
    return result;
}

/// Runs the selector identified by `method` with the given configuration.
inline SelectionResult run_selector(Method method, const Dataset& ds, const SelectorConfig& cfg,
                                    int threads = 1) {
    switch (method) {
        case Method::mdfs: return select_mdfs(ds, cfg, threads);
        case Method::maucd: return select_maucd(ds, cfg, threads);
        case Method::chi:
        case Method::su:
        case Method::fsdd: return select_ranking(ds, cfg, method);
        case Method::schi: return select_spreadfx(ds, cfg, RankMetric::chi, threads);
        case Method::ssu: return select_spreadfx(ds, cfg, RankMetric::su, threads);
        case Method::relieff: return select_relieff(ds, cfg);
        case Method::mrmr: return select_mrmr(ds, cfg);
    }
    throw std::invalid_argument("run_selector: unknown method");
}

}  // namespace mdfs
