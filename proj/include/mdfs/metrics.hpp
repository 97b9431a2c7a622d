#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "mdfs/dataset.hpp"
#include "mdfs/discretize.hpp"
#include "mdfs/matrix.hpp"

namespace mdfs {

inline double normal_cdf(double z) {
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

namespace detail {

// Midranks (1-based, ties averaged) of values[order], written per original index.
inline void midranks(std::span<const double> values, std::vector<double>& ranks) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    ranks.assign(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && values[order[j]] == values[order[i]]) ++j;
        const double rank = static_cast<double>(i + j + 1) / 2.0;
        for (std::size_t k = i; k < j; ++k) ranks[order[k]] = rank;
        i = j;
    }
}

}  // namespace detail

/// Probability that a random positive score outranks a random negative one,
/// with ties counted as one half. Computed in O(n log n) from midranks; the
/// rank-sum numerator is an exact half-integer, so the result matches the
/// direct all-pairs count bit for bit.
inline double auc(std::span<const double> scores_pos, std::span<const double> scores_neg) {
    if (scores_pos.empty() || scores_neg.empty()) {
        throw std::invalid_argument("auc: both score sets must be non-empty");
    }
    const std::size_t p = scores_pos.size();
    const std::size_t q = scores_neg.size();
    std::vector<double> all;
    all.reserve(p + q);
    for (double v : scores_pos) {
        if (!std::isfinite(v)) throw std::invalid_argument("auc: non-finite score");
        all.push_back(v);
    }
    for (double v : scores_neg) {
        if (!std::isfinite(v)) throw std::invalid_argument("auc: non-finite score");
        all.push_back(v);
    }
    std::vector<double> ranks;
    detail::midranks(all, ranks);
    double rank_sum_pos = 0.0;
    for (std::size_t i = 0; i < p; ++i) rank_sum_pos += ranks[i];
    const double np = static_cast<double>(p);
    const double nq = static_cast<double>(q);
    return (rank_sum_pos - np * (np + 1.0) / 2.0) / (np * nq);
}

/// Pairwise AUC values of a c-class scoring: entry (i,j) holds the AUC of
/// class i's score column on the instances of classes i and j, class i
/// positive. The diagonal is unused.
struct PairwiseAucTable {
    int class_count = 0;
    Matrix a;  // class_count x class_count

    PairwiseAucTable() = default;
    explicit PairwiseAucTable(int c)
        : class_count(c), a(static_cast<std::size_t>(c), static_cast<std::size_t>(c), 0.0) {}
};

/// Mean of (A_ij + A_ji)/2 over the c(c-1)/2 unordered class pairs.
inline double mauc_from_table(const PairwiseAucTable& table) {
    const int c = table.class_count;
    if (c < 2) throw std::invalid_argument("mauc_from_table: need at least 2 classes");
    double total = 0.0;
    for (int i = 0; i < c; ++i) {
        for (int j = i + 1; j < c; ++j) {
            const auto ui = static_cast<std::size_t>(i);
            const auto uj = static_cast<std::size_t>(j);
            total += (table.a(ui, uj) + table.a(uj, ui)) / 2.0;
        }
    }
    return total * 2.0 / (static_cast<double>(c) * (c - 1));
}

/// Assembles the pairwise table from an n-by-c confidence matrix: A_ij uses
/// column i restricted to the instances of classes i and j, class i positive.
inline PairwiseAucTable pairwise_auc_of_scores(const Matrix& scores, std::span<const int> labels) {
    if (scores.rows() != labels.size()) {
        throw std::invalid_argument("pairwise_auc_of_scores: score rows must match label count");
    }
    const int c = static_cast<int>(scores.cols());
    if (c < 2) throw std::invalid_argument("pairwise_auc_of_scores: need at least 2 score columns");

    std::vector<std::vector<std::size_t>> by_class(static_cast<std::size_t>(c));
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] < 0 || labels[i] >= c) {
            throw std::invalid_argument("pairwise_auc_of_scores: label outside score columns");
        }
        by_class[static_cast<std::size_t>(labels[i])].push_back(i);
    }
    for (int k = 0; k < c; ++k) {
        if (by_class[static_cast<std::size_t>(k)].empty()) {
            throw std::invalid_argument("pairwise_auc_of_scores: class " + std::to_string(k) +
                                        " absent from labels");
        }
    }

    PairwiseAucTable table(c);
    std::vector<double> pos, neg;
    for (int i = 0; i < c; ++i) {
        for (int j = i + 1; j < c; ++j) {
            const auto& rows_i = by_class[static_cast<std::size_t>(i)];
            const auto& rows_j = by_class[static_cast<std::size_t>(j)];
            for (int col : {i, j}) {
                pos.clear();
                neg.clear();
                const auto ucol = static_cast<std::size_t>(col);
                const auto& pos_rows = (col == i) ? rows_i : rows_j;
                const auto& neg_rows = (col == i) ? rows_j : rows_i;
                for (std::size_t r : pos_rows) pos.push_back(scores(r, ucol));
                for (std::size_t r : neg_rows) neg.push_back(scores(r, ucol));
                const auto ui = static_cast<std::size_t>(col == i ? i : j);
                const auto uj = static_cast<std::size_t>(col == i ? j : i);
                table.a(ui, uj) = auc(pos, neg);
            }
        }
    }
    return table;
}

inline double mauc_of_scores(const Matrix& scores, std::span<const int> labels) {
    return mauc_from_table(pairwise_auc_of_scores(scores, labels));
}

/// Chi-square statistic of a discretized feature against the labels.
/// Cells with zero expected count contribute nothing (they only occur when a
/// whole row or column of the contingency table is empty).
inline double chi_square(std::span<const int> codes, int bin_count,
                         std::span<const int> labels, int class_count) {
    if (codes.size() != labels.size()) {
        throw std::invalid_argument("chi_square: codes and labels must have equal length");
    }
    if (codes.empty()) throw std::invalid_argument("chi_square: empty input");
    const auto nb = static_cast<std::size_t>(bin_count);
    const auto nc = static_cast<std::size_t>(class_count);
    std::vector<double> observed(nb * nc, 0.0);
    std::vector<double> row_sum(nb, 0.0), col_sum(nc, 0.0);
    for (std::size_t i = 0; i < codes.size(); ++i) {
        if (codes[i] < 0 || codes[i] >= bin_count) {
            throw std::invalid_argument("chi_square: code outside [0, bin_count)");
        }
        if (labels[i] < 0 || labels[i] >= class_count) {
            throw std::invalid_argument("chi_square: label outside [0, class_count)");
        }
        const auto b = static_cast<std::size_t>(codes[i]);
        const auto k = static_cast<std::size_t>(labels[i]);
        observed[b * nc + k] += 1.0;
        row_sum[b] += 1.0;
        col_sum[k] += 1.0;
    }
    const double n = static_cast<double>(codes.size());
    double stat = 0.0;
    for (std::size_t b = 0; b < nb; ++b) {
        for (std::size_t k = 0; k < nc; ++k) {
            const double expected = row_sum[b] * col_sum[k] / n;
            if (expected > 0.0) {
                const double d = observed[b * nc + k] - expected;
                stat += d * d / expected;
            }
        }
    }
    return stat;
}

inline double chi_square(const DiscretizedFeature& feature, std::span<const int> labels,
                         int class_count) {
    return chi_square(feature.codes, feature.bin_count, labels, class_count);
}

/// Shannon entropy in bits of a small-integer code sequence.
inline double entropy(std::span<const int> codes) {
    if (codes.empty()) throw std::invalid_argument("entropy: empty input");
    int max_code = 0;
    for (int c : codes) {
        if (c < 0) throw std::invalid_argument("entropy: negative code");
        max_code = std::max(max_code, c);
    }
    std::vector<double> counts(static_cast<std::size_t>(max_code) + 1, 0.0);
    for (int c : codes) counts[static_cast<std::size_t>(c)] += 1.0;
    const double n = static_cast<double>(codes.size());
    double h = 0.0;
    for (double cnt : counts) {
        if (cnt > 0.0) {
            const double p = cnt / n;
            h -= p * std::log2(p);
        }
    }
    return h;
}

/// Mutual information in bits, from the empirical joint table as
/// H(a) + H(b) - H(a,b). Exactly symmetric in its arguments and clamped at
/// zero against rounding.
inline double mutual_information(std::span<const int> a, std::span<const int> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("mutual_information: sequences must have equal length");
    }
    if (a.empty()) throw std::invalid_argument("mutual_information: empty input");
    int max_a = 0, max_b = 0;
    for (int v : a) {
        if (v < 0) throw std::invalid_argument("mutual_information: negative code");
        max_a = std::max(max_a, v);
    }
    for (int v : b) {
        if (v < 0) throw std::invalid_argument("mutual_information: negative code");
        max_b = std::max(max_b, v);
    }
    const auto na = static_cast<std::size_t>(max_a) + 1;
    const auto nb = static_cast<std::size_t>(max_b) + 1;
    std::vector<double> joint(na * nb, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        joint[static_cast<std::size_t>(a[i]) * nb + static_cast<std::size_t>(b[i])] += 1.0;
    }
    const double n = static_cast<double>(a.size());
    double h_joint = 0.0;
    std::vector<double> row(na, 0.0), col(nb, 0.0);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < nb; ++j) {
            const double cnt = joint[i * nb + j];
            if (cnt > 0.0) {
                const double p = cnt / n;
                h_joint -= p * std::log2(p);
                row[i] += cnt;
                col[j] += cnt;
            }
        }
    }
    double h_a = 0.0, h_b = 0.0;
    for (double cnt : row) {
        if (cnt > 0.0) h_a -= (cnt / n) * std::log2(cnt / n);
    }
    for (double cnt : col) {
        if (cnt > 0.0) h_b -= (cnt / n) * std::log2(cnt / n);
    }
    return std::max(0.0, h_a + h_b - h_joint);
}

/// 2 I(a;b) / (H(a) + H(b)), in [0,1]; defined as 0 when both entropies
/// vanish (two constant sequences carry no uncertainty to share).
inline double symmetrical_uncertainty(std::span<const int> a, std::span<const int> b) {
    const double denom = entropy(a) + entropy(b);
    if (denom == 0.0) return 0.0;
    return std::clamp(2.0 * mutual_information(a, b) / denom, 0.0, 1.0);
}

struct FsddScore {
    double value = 0.0;
    bool degenerate = false;  // set when the feature has zero overall variance
};

/// Distance-discriminant utility of a numeric feature: between-class spread
/// minus beta times the prior-weighted within-class variances, normalized by
/// the overall variance. Sample variances use n-1 (n_k - 1 within classes;
/// singleton classes contribute zero). A constant feature scores 0 with the
/// degenerate flag set.
inline FsddScore fsdd_score(const Dataset& ds, std::size_t feature, double beta = 2.0) {
    if (feature >= ds.m()) throw std::out_of_range("fsdd_score: feature index out of range");
    const auto col = ds.feature(feature);
    const double n = static_cast<double>(ds.n());

    double mean = 0.0;
    for (double v : col) mean += v;
    mean /= n;
    double ss = 0.0;
    for (double v : col) ss += (v - mean) * (v - mean);
    const double overall_var = ss / (n - 1.0);
    if (overall_var == 0.0) return {0.0, true};

    const auto counts = ds.class_counts();
    const auto c = static_cast<std::size_t>(ds.class_count);
    std::vector<double> class_mean(c, 0.0);
    for (std::size_t i = 0; i < ds.n(); ++i) {
        class_mean[static_cast<std::size_t>(ds.labels[i])] += col[i];
    }
    for (std::size_t k = 0; k < c; ++k) class_mean[k] /= static_cast<double>(counts[k]);

    std::vector<double> class_ss(c, 0.0);
    for (std::size_t i = 0; i < ds.n(); ++i) {
        const auto k = static_cast<std::size_t>(ds.labels[i]);
        const double d = col[i] - class_mean[k];
        class_ss[k] += d * d;
    }

    double between = 0.0, within = 0.0;
    for (std::size_t k = 0; k < c; ++k) {
        const double nk = static_cast<double>(counts[k]);
        const double dm = class_mean[k] - mean;
        between += nk / n * dm * dm;
        if (counts[k] > 1) within += nk / n * (class_ss[k] / (nk - 1.0));
    }
    return {(between - beta * within) / overall_var, false};
}

enum class TestDecision { worse, better, no_difference };

struct WilcoxonResult {
    double statistic = 0.0;      // signed rank sum: W+ - W-
    double p_value = 1.0;
    std::size_t n_effective = 0; // pairs with nonzero difference
    TestDecision decision = TestDecision::no_difference;
};

/// Two-sided Wilcoxon signed-rank test of paired samples (y against x).
/// Zero differences are dropped; tied |differences| get midranks; the p-value
/// uses the normal approximation with continuity correction and tie-corrected
/// variance. Fewer than 5 nonzero differences degenerates to no-difference
/// with p = 1. `decision` reports y relative to x at the given alpha.
inline WilcoxonResult wilcoxon_signed_rank(std::span<const double> x, std::span<const double> y,
                                           double alpha = 0.05) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("wilcoxon_signed_rank: samples must have equal length");
    }
    std::vector<double> diff;
    diff.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!std::isfinite(x[i]) || !std::isfinite(y[i])) {
            throw std::invalid_argument("wilcoxon_signed_rank: non-finite value");
        }
        const double d = y[i] - x[i];
        if (d != 0.0) diff.push_back(d);
    }

    WilcoxonResult result;
    result.n_effective = diff.size();
    if (diff.size() < 5) return result;

    const std::size_t n = diff.size();
    std::vector<double> abs_diff(n);
    for (std::size_t i = 0; i < n; ++i) abs_diff[i] = std::fabs(diff[i]);
    std::vector<double> ranks;
    detail::midranks(abs_diff, ranks);

    double w_plus = 0.0, w_minus = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (diff[i] > 0.0) {
            w_plus += ranks[i];
        } else {
            w_minus += ranks[i];
        }
    }
    result.statistic = w_plus - w_minus;

    // tie correction: sum over tie groups of (t^3 - t)
    std::sort(abs_diff.begin(), abs_diff.end());
    double tie_term = 0.0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && abs_diff[j] == abs_diff[i]) ++j;
        const double t = static_cast<double>(j - i);
        tie_term += t * t * t - t;
        i = j;
    }

    const double dn = static_cast<double>(n);
    const double mean = dn * (dn + 1.0) / 4.0;
    const double variance = dn * (dn + 1.0) * (2.0 * dn + 1.0) / 24.0 - tie_term / 48.0;

    const double centered = w_plus - mean;
    const double continuity = centered > 0.0 ? 0.5 : (centered < 0.0 ? -0.5 : 0.0);
    const double z = (centered - continuity) / std::sqrt(variance);
    result.p_value = std::clamp(2.0 * (1.0 - normal_cdf(std::fabs(z))), 0.0, 1.0);

    if (result.p_value <= alpha) {
        result.decision = result.statistic > 0.0 ? TestDecision::better : TestDecision::worse;
    }
    return result;
}

}  // namespace mdfs
