#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "mdfs/dataset.hpp"
#include "mdfs/matrix.hpp"

namespace mdfs {

/// n_test x class_count matrix of per-instance per-class confidences.
using ScoreMatrix = Matrix;

/// Gaussian naive Bayes over a feature subset. Variances are floored at
/// 1e-9 times the feature's overall variance (absolute floor 1e-12) so that
/// near-constant selected features cannot blow up the likelihood.
struct NaiveBayesModel {
    std::vector<std::size_t> feature_subset;
    std::vector<double> log_priors;          // one per class
    std::vector<std::vector<double>> means;      // [class][subset feature]
    std::vector<std::vector<double>> variances;  // [class][subset feature]
    int class_count = 0;
    std::size_t trained_feature_space = 0;   // m of the training set
};

inline NaiveBayesModel nb_train(const Dataset& train, std::span<const std::size_t> feature_subset) {
    if (feature_subset.empty()) throw std::invalid_argument("nb_train: empty feature subset");
    for (std::size_t f : feature_subset) {
        if (f >= train.m()) throw std::out_of_range("nb_train: feature index out of range");
    }
    const auto counts = train.class_counts();
    for (std::size_t k = 0; k < counts.size(); ++k) {
        if (counts[k] == 0) {
            throw std::invalid_argument("nb_train: class " + std::to_string(k) + " absent from training set");
        }
    }

    const auto c = static_cast<std::size_t>(train.class_count);
    const std::size_t d = feature_subset.size();
    const double n = static_cast<double>(train.n());

    NaiveBayesModel model;
    model.feature_subset.assign(feature_subset.begin(), feature_subset.end());
    model.class_count = train.class_count;
    model.trained_feature_space = train.m();
    model.log_priors.resize(c);
    for (std::size_t k = 0; k < c; ++k) {
        // Laplace-smoothed class prior
        model.log_priors[k] = std::log((static_cast<double>(counts[k]) + 1.0) /
                                       (n + static_cast<double>(c)));
    }
    model.means.assign(c, std::vector<double>(d, 0.0));
    model.variances.assign(c, std::vector<double>(d, 0.0));

    for (std::size_t j = 0; j < d; ++j) {
        const auto col = train.feature(feature_subset[j]);
        double overall_mean = 0.0;
        for (double v : col) overall_mean += v;
        overall_mean /= n;
        double overall_ss = 0.0;
        for (double v : col) overall_ss += (v - overall_mean) * (v - overall_mean);
        const double overall_var = overall_ss / (n - 1.0);
        const double floor = std::max(1e-9 * overall_var, 1e-12);

        for (std::size_t i = 0; i < train.n(); ++i) {
            model.means[static_cast<std::size_t>(train.labels[i])][j] += col[i];
        }
        for (std::size_t k = 0; k < c; ++k) {
            model.means[k][j] /= static_cast<double>(counts[k]);
        }
        for (std::size_t i = 0; i < train.n(); ++i) {
            const auto k = static_cast<std::size_t>(train.labels[i]);
            const double dm = col[i] - model.means[k][j];
            model.variances[k][j] += dm * dm;
        }
        for (std::size_t k = 0; k < c; ++k) {
            if (counts[k] > 1) model.variances[k][j] /= static_cast<double>(counts[k]) - 1.0;
            model.variances[k][j] = std::max(model.variances[k][j], floor);
        }
    }
    return model;
}

/// Per-row class posteriors: log-likelihoods accumulated in log space, then
/// normalized so every row sums to one.
inline ScoreMatrix nb_score(const NaiveBayesModel& model, const Dataset& test) {
    if (test.m() != model.trained_feature_space) {
        throw std::invalid_argument("nb_score: test feature space does not match training");
    }
    const auto c = static_cast<std::size_t>(model.class_count);
    const std::size_t d = model.feature_subset.size();
    ScoreMatrix scores(test.n(), c);

    std::vector<double> log_post(c);
    for (std::size_t i = 0; i < test.n(); ++i) {
        for (std::size_t k = 0; k < c; ++k) {
            double lp = model.log_priors[k];
            for (std::size_t j = 0; j < d; ++j) {
                const double x = test.values(i, model.feature_subset[j]);
                const double mu = model.means[k][j];
                const double var = model.variances[k][j];
                lp += -0.5 * std::log(2.0 * std::numbers::pi * var) - (x - mu) * (x - mu) / (2.0 * var);
            }
            log_post[k] = lp;
        }
        const double mx = *std::max_element(log_post.begin(), log_post.end());
        double total = 0.0;
        for (std::size_t k = 0; k < c; ++k) {
            log_post[k] = std::exp(log_post[k] - mx);
            total += log_post[k];
        }
        for (std::size_t k = 0; k < c; ++k) scores(i, k) = log_post[k] / total;
    }
    return scores;
}

/// k-nearest-neighbor scoring: Euclidean distance on the feature subset,
/// distance ties broken by the lower training index; the score row is the
/// class frequency distribution among the k nearest (one-hot for k = 1).
inline ScoreMatrix knn_score(const Dataset& train, std::span<const std::size_t> feature_subset,
                             const Dataset& test, int k = 1) {
    if (k < 1) throw std::invalid_argument("knn_score: k must be >= 1");
    if (feature_subset.empty()) throw std::invalid_argument("knn_score: empty feature subset");
    if (test.m() != train.m()) {
        throw std::invalid_argument("knn_score: test feature space does not match training");
    }
    for (std::size_t f : feature_subset) {
        if (f >= train.m()) throw std::out_of_range("knn_score: feature index out of range");
    }

    const std::size_t n_train = train.n();
    const auto take = std::min<std::size_t>(static_cast<std::size_t>(k), n_train);
    const auto c = static_cast<std::size_t>(train.class_count);
    ScoreMatrix scores(test.n(), c);

    std::vector<double> dist(n_train);
    std::vector<std::size_t> order(n_train);
    for (std::size_t i = 0; i < test.n(); ++i) {
        std::fill(dist.begin(), dist.end(), 0.0);
        for (std::size_t f : feature_subset) {
            const auto train_col = train.feature(f);
            const double x = test.values(i, f);
            for (std::size_t r = 0; r < n_train; ++r) {
                const double d = train_col[r] - x;
                dist[r] += d * d;
            }
        }
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take),
                          order.end(), [&](std::size_t a, std::size_t b) {
                              if (dist[a] != dist[b]) return dist[a] < dist[b];
                              return a < b;
                          });
        for (std::size_t idx = 0; idx < take; ++idx) {
            scores(i, static_cast<std::size_t>(train.labels[order[idx]])) += 1.0;
        }
        for (std::size_t kk = 0; kk < c; ++kk) scores(i, kk) /= static_cast<double>(take);
    }
    return scores;
}

}  // namespace mdfs
