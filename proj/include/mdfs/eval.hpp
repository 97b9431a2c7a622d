#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdfs/classifiers.hpp"
#include "mdfs/dataset.hpp"
#include "mdfs/folds.hpp"
#include "mdfs/metrics.hpp"
#include "mdfs/parallel.hpp"
#include "mdfs/rng.hpp"
#include "mdfs/selectors.hpp"

namespace mdfs {

struct SelectorSpec {
    Method method = Method::mdfs;
    SelectorConfig config;
    std::string id;  // unique label; defaults to the method name
};

enum class ClassifierKind { naive_bayes, knn };

struct ClassifierSpec {
    ClassifierKind kind = ClassifierKind::naive_bayes;
    int knn_k = 1;
    std::string id;
};

struct ExperimentSpec {
    std::vector<SelectorSpec> selectors;
    std::vector<ClassifierSpec> classifiers;
    std::vector<std::size_t> subset_sizes;
    int folds = 10;
    int repeats = 10;
    std::uint64_t master_seed = 0;
};

/// One (selector, classifier, subset size) configuration with its
/// folds x repeats MAUC values in (repeat, fold) order.
struct CellResult {
    std::string selector_id;
    std::string classifier_id;
    std::size_t subset_size = 0;
    std::vector<double> fold_maucs;
    double mean = 0.0;
    double stddev = 0.0;
};

/// Which rows each selector was allowed to see in one fold, for leakage
/// audits: `selection_rows` comes straight off the dataset view handed to the
/// selector, `test_rows` is the held-out fold.
struct SelectionAudit {
    int repeat = 0;
    int fold = 0;
    std::string selector_id;
    std::vector<std::size_t> selection_rows;
    std::vector<std::size_t> test_rows;
};

struct EvalReport {
    int folds = 0;
    int repeats = 0;
    std::vector<CellResult> cells;  // deterministic (selector, classifier, K) order
    std::map<std::string, std::vector<double>> selector_seconds;  // per run, (repeat, fold) order
    std::vector<SelectionAudit> audits;  // filled when requested
};

struct EvalOptions {
    int threads = 1;   // <= 0 means hardware concurrency
    bool audit = false;
};

/// Exhaustive validation of an experiment spec against a dataset; returns all
/// problems found rather than stopping at the first.
inline std::vector<std::string> validate_experiment(const ExperimentSpec& spec, const Dataset& ds) {
    std::vector<std::string> errors;
    if (spec.selectors.empty()) errors.push_back("no selectors given");
    if (spec.classifiers.empty()) errors.push_back("no classifiers given");
    if (spec.subset_sizes.empty()) errors.push_back("no subset sizes given");
    if (spec.folds < 2) errors.push_back("folds must be >= 2");
    if (spec.repeats < 1) errors.push_back("repeats must be >= 1");

    for (std::size_t k : spec.subset_sizes) {
        if (k < 1 || k > ds.m()) {
            errors.push_back("subset size " + std::to_string(k) + " outside [1, m=" +
                             std::to_string(ds.m()) + "]");
        }
    }

    std::vector<std::string> seen;
    for (const auto& sel : spec.selectors) {
        const std::string id = sel.id.empty() ? to_string(sel.method) : sel.id;
        if (std::find(seen.begin(), seen.end(), id) != seen.end()) {
            errors.push_back("duplicate selector id '" + id + "'");
        }
        seen.push_back(id);
        try {
            sel.config.validate();
        } catch (const std::exception& e) {
            errors.push_back("selector '" + id + "': " + e.what());
        }
    }
    seen.clear();
    for (const auto& cls : spec.classifiers) {
        const std::string id = cls.id.empty()
                                   ? (cls.kind == ClassifierKind::naive_bayes
                                          ? "nb"
                                          : std::to_string(cls.knn_k) + "nn")
                                   : cls.id;
        if (std::find(seen.begin(), seen.end(), id) != seen.end()) {
            errors.push_back("duplicate classifier id '" + id + "'");
        }
        seen.push_back(id);
        if (cls.kind == ClassifierKind::knn && cls.knn_k < 1) {
            errors.push_back("classifier '" + id + "': knn k must be >= 1");
        }
    }

    if (spec.folds >= 2) {
        const auto counts = ds.class_counts();
        const auto smallest = *std::min_element(counts.begin(), counts.end());
        if (smallest < static_cast<std::size_t>(spec.folds)) {
            errors.push_back("smallest class has " + std::to_string(smallest) +
                             " instances; every test fold needs all classes, so folds must be <= " +
                             std::to_string(smallest));
        }
    }
    return errors;
}

inline std::string selector_label(const SelectorSpec& s) {
    return s.id.empty() ? to_string(s.method) : s.id;
}

inline std::string classifier_label(const ClassifierSpec& c) {
    if (!c.id.empty()) return c.id;
    return c.kind == ClassifierKind::naive_bayes ? "nb" : std::to_string(c.knn_k) + "nn";
}

namespace detail {

inline ScoreMatrix score_with(const ClassifierSpec& cls, const Dataset& train,
                              std::span<const std::size_t> subset, const Dataset& test) {
    if (cls.kind == ClassifierKind::naive_bayes) {
        return nb_score(nb_train(train, subset), test);
    }
    return knn_score(train, subset, test, cls.knn_k);
}

}  // namespace detail

/// Repeated stratified cross-validation of every (selector, classifier,
/// subset size) configuration, scored by MAUC. Selection happens inside each
/// fold on the training split only; each selector runs once per fold at the
/// largest subset size and the smaller sizes take prefixes of its selection
/// order (all selectors here are prefix-consistent). Per-repeat fold seeds
/// and per-method selector seeds are derived from the master seed, so reports
/// are reproducible and cells are independent. Folds run in parallel up to
/// `options.threads`; results are merged in deterministic order.
inline EvalReport run_experiment(const Dataset& ds, const ExperimentSpec& spec,
                                 const EvalOptions& options = {}) {
    const auto errors = validate_experiment(spec, ds);
    if (!errors.empty()) {
        std::string joined = "run_experiment: invalid spec:";
        for (const auto& e : errors) joined += "\n  - " + e;
        throw std::invalid_argument(joined);
    }

    const std::size_t max_k = *std::max_element(spec.subset_sizes.begin(), spec.subset_sizes.end());
    const std::size_t n_selectors = spec.selectors.size();
    const std::size_t n_classifiers = spec.classifiers.size();
    const std::size_t n_sizes = spec.subset_sizes.size();
    const std::size_t runs = static_cast<std::size_t>(spec.repeats) * static_cast<std::size_t>(spec.folds);

    // flat storage: [selector][classifier][size][repeat*folds + fold]
    const std::size_t cell_count = n_selectors * n_classifiers * n_sizes;
    std::vector<std::vector<double>> maucs(cell_count, std::vector<double>(runs, 0.0));
    std::vector<std::vector<double>> seconds(n_selectors, std::vector<double>(runs, 0.0));
    std::vector<SelectionAudit> audits(options.audit ? n_selectors * runs : 0);

    auto cell_index = [&](std::size_t sel, std::size_t cls, std::size_t size) {
        return (sel * n_classifiers + cls) * n_sizes + size;
    };

    detail::parallel_for(runs, options.threads, [&](std::size_t run) {
        const int repeat = static_cast<int>(run / static_cast<std::size_t>(spec.folds));
        const int fold = static_cast<int>(run % static_cast<std::size_t>(spec.folds));
        const std::uint64_t fold_seed = rng::mix(spec.master_seed, static_cast<std::uint64_t>(repeat));
        const auto assignment = stratified_folds(ds.labels, spec.folds, fold_seed);

        std::vector<std::size_t> train_rows, test_rows;
        for (std::size_t i = 0; i < ds.n(); ++i) {
            (assignment.fold_of[i] == fold ? test_rows : train_rows).push_back(i);
        }
        const Dataset train_view = subset_rows(ds, train_rows);
        const Dataset test_view = subset_rows(ds, test_rows);

        for (std::size_t s = 0; s < n_selectors; ++s) {
            const auto& sel = spec.selectors[s];
            const std::string sel_id = selector_label(sel);
            SelectorConfig cfg = sel.config;
            cfg.k_target = std::min(max_k, train_view.m());
            cfg.seed = rng::mix(fold_seed, rng::hash_string(sel_id));

            const auto t0 = std::chrono::steady_clock::now();
            const SelectionResult selection = run_selector(sel.method, train_view, cfg);
            const auto t1 = std::chrono::steady_clock::now();
            seconds[s][run] = std::chrono::duration<double>(t1 - t0).count();

            if (options.audit) {
                auto& audit = audits[s * runs + run];
                audit.repeat = repeat;
                audit.fold = fold;
                audit.selector_id = sel_id;
                audit.selection_rows = train_view.source_rows;
                audit.test_rows = test_rows;
            }

            for (std::size_t cl = 0; cl < n_classifiers; ++cl) {
                for (std::size_t sz = 0; sz < n_sizes; ++sz) {
                    const std::size_t k = std::min(spec.subset_sizes[sz], selection.selected.size());
                    const std::span<const std::size_t> subset(selection.selected.data(), k);
                    const ScoreMatrix scores =
                        detail::score_with(spec.classifiers[cl], train_view, subset, test_view);
                    maucs[cell_index(s, cl, sz)][run] = mauc_of_scores(scores, test_view.labels);
                }
            }
        }
    });

    EvalReport report;
    report.folds = spec.folds;
    report.repeats = spec.repeats;
    for (std::size_t s = 0; s < n_selectors; ++s) {
        const std::string sel_id = selector_label(spec.selectors[s]);
        report.selector_seconds[sel_id] = seconds[s];
        for (std::size_t cl = 0; cl < n_classifiers; ++cl) {
            for (std::size_t sz = 0; sz < n_sizes; ++sz) {
                CellResult cell;
                cell.selector_id = sel_id;
                cell.classifier_id = classifier_label(spec.classifiers[cl]);
                cell.subset_size = spec.subset_sizes[sz];
                cell.fold_maucs = std::move(maucs[cell_index(s, cl, sz)]);
                const double n = static_cast<double>(cell.fold_maucs.size());
                cell.mean = std::accumulate(cell.fold_maucs.begin(), cell.fold_maucs.end(), 0.0) / n;
                double ss = 0.0;
                for (double v : cell.fold_maucs) ss += (v - cell.mean) * (v - cell.mean);
                cell.stddev = n > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
                report.cells.push_back(std::move(cell));
            }
        }
    }
    if (options.audit) report.audits = std::move(audits);
    return report;
}

/// Pairwise Wilcoxon comparison of every non-baseline cell against the
/// baseline cell with the same classifier and subset size. The marker mirrors
/// the usual table convention: "worse" / "better" are relative to the
/// baseline; "none" when no significant difference was detected.
struct MethodComparison {
    std::string selector_id;
    std::string classifier_id;
    std::size_t subset_size = 0;
    WilcoxonResult test;
    std::string marker;  // "worse", "better" or "none"
};

inline std::vector<MethodComparison> compare_methods(const EvalReport& report,
                                                     const std::string& baseline_id,
                                                     double alpha = 0.05) {
    std::map<std::pair<std::string, std::size_t>, const CellResult*> baseline_cells;
    for (const auto& cell : report.cells) {
        if (cell.selector_id == baseline_id) {
            baseline_cells[{cell.classifier_id, cell.subset_size}] = &cell;
        }
    }
    if (baseline_cells.empty()) {
        throw std::invalid_argument("compare_methods: baseline '" + baseline_id + "' not in report");
    }

    std::vector<MethodComparison> table;
    for (const auto& cell : report.cells) {
        if (cell.selector_id == baseline_id) continue;
        const auto it = baseline_cells.find({cell.classifier_id, cell.subset_size});
        if (it == baseline_cells.end()) {
            throw std::invalid_argument("compare_methods: no baseline cell for classifier '" +
                                        cell.classifier_id + "', k=" + std::to_string(cell.subset_size));
        }
        const CellResult& base = *it->second;
        if (base.fold_maucs.size() != cell.fold_maucs.size()) {
            throw std::invalid_argument("compare_methods: mismatched fold structures");
        }
        MethodComparison cmp;
        cmp.selector_id = cell.selector_id;
        cmp.classifier_id = cell.classifier_id;
        cmp.subset_size = cell.subset_size;
        cmp.test = wilcoxon_signed_rank(base.fold_maucs, cell.fold_maucs, alpha);
        switch (cmp.test.decision) {
            case TestDecision::worse: cmp.marker = "worse"; break;
            case TestDecision::better: cmp.marker = "better"; break;
            case TestDecision::no_difference: cmp.marker = "none"; break;
        }
        table.push_back(std::move(cmp));
    }
    return table;
}

}  // namespace mdfs
