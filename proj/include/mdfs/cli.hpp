#pragma once

#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mdfs/csv.hpp"
#include "mdfs/dataset.hpp"
#include "mdfs/eval.hpp"
#include "mdfs/selectors.hpp"
#include "mdfs/siren.hpp"

namespace mdfs::cli {

inline constexpr const char* kVersion = "0.1.0";

using ordered_json = nlohmann::ordered_json;

enum class OutputFormat { json, csv };

struct RunConfig {
    std::string subcommand;            // select | rank | evaluate | bench
    std::string input_path;
    std::string label_col;             // name or 0-based index; empty = last column
    bool no_header = false;
    std::string method = "mdfs";
    std::size_t k = 10;
    std::optional<std::uint64_t> seed;
    int bins = 10;
    double beta = 2.0;
    std::string schedule = "random";   // random | round-robin
    int relieff_neighbors = 10;
    std::size_t relieff_iterations = 0;
    OutputFormat format = OutputFormat::json;
    std::string output_path;           // empty = stdout
    int threads = 0;                   // <= 0: hardware concurrency

    // evaluate
    std::string spec_path;
    std::string baseline;
    double alpha = 0.05;

    // bench
    std::vector<std::size_t> bench_m_sizes{128, 256};
    std::vector<std::size_t> bench_n_sizes{2000};
    std::vector<std::string> bench_methods{"mdfs", "maucd", "chi", "su", "fsdd",
                                           "schi", "ssu", "relieff", "mrmr"};
    int bench_runs = 5;
    double bench_k_fraction = 0.25;
    int bench_classes = 3;
};

namespace detail {

inline ColumnSelector parse_label_column(const std::string& spec) {
    if (spec.empty()) return ColumnSelector::last();
    bool numeric = !spec.empty();
    for (char ch : spec) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            numeric = false;
            break;
        }
    }
    if (numeric) return ColumnSelector::by_index(std::stoul(spec));
    return ColumnSelector::by_name(spec);
}

inline Dataset load_input(const RunConfig& cfg) {
    if (cfg.input_path.empty()) throw std::runtime_error("--input is required");
    return load_csv(cfg.input_path, parse_label_column(cfg.label_col), !cfg.no_header);
}

inline SelectorConfig selector_config_from(const RunConfig& cfg) {
    SelectorConfig sc;
    sc.k_target = cfg.k;
    sc.seed = cfg.seed.value_or(0);
    sc.bins = cfg.bins;
    sc.beta = cfg.beta;
    sc.relieff_neighbors = cfg.relieff_neighbors;
    sc.relieff_iterations = cfg.relieff_iterations;
    if (cfg.schedule == "round-robin") {
        sc.mdfs_schedule = MdfsSchedule::round_robin;
    } else if (cfg.schedule == "random") {
        sc.mdfs_schedule = MdfsSchedule::random;
    } else {
        throw std::runtime_error("unknown --schedule '" + cfg.schedule + "' (random|round-robin)");
    }
    return sc;
}

inline Method parse_method(const std::string& name) {
    const auto m = method_from_string(name);
    if (!m) {
        throw std::runtime_error("unknown method '" + name +
                                 "' (mdfs|maucd|chi|su|fsdd|schi|ssu|relieff|mrmr)");
    }
    return *m;
}

inline void require_seed(const RunConfig& cfg, Method method) {
    if ((method == Method::mdfs || method == Method::relieff) && !cfg.seed) {
        throw std::runtime_error("--seed is required for method '" + to_string(method) + "'");
    }
}

/// Writes the full report text in one shot so a failed run never leaves a
/// partial file behind.
inline void emit_report(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    const std::filesystem::path target(output_path);
    const std::filesystem::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
        out << text;
        if (!out) throw std::runtime_error("write to '" + tmp.string() + "' failed");
    }
    std::filesystem::rename(tmp, target);
}

inline ordered_json config_echo(const RunConfig& cfg) {
    ordered_json j;
    j["subcommand"] = cfg.subcommand;
    if (!cfg.input_path.empty()) j["input"] = cfg.input_path;
    if (!cfg.label_col.empty()) j["label_col"] = cfg.label_col;
    if (cfg.subcommand == "select" || cfg.subcommand == "rank") {
        j["method"] = cfg.method;
        j["k"] = cfg.k;
        if (cfg.seed) j["seed"] = *cfg.seed;
        j["bins"] = cfg.bins;
        j["beta"] = cfg.beta;
        j["schedule"] = cfg.schedule;
        j["relieff_neighbors"] = cfg.relieff_neighbors;
        j["relieff_iterations"] = cfg.relieff_iterations;
    }
    if (cfg.subcommand == "evaluate") {
        j["spec"] = cfg.spec_path;
        if (!cfg.baseline.empty()) j["baseline"] = cfg.baseline;
        j["alpha"] = cfg.alpha;
    }
    if (cfg.subcommand == "bench") {
        j["methods"] = cfg.bench_methods;
        j["m_sizes"] = cfg.bench_m_sizes;
        j["n_sizes"] = cfg.bench_n_sizes;
        j["runs"] = cfg.bench_runs;
        j["k_fraction"] = cfg.bench_k_fraction;
        j["classes"] = cfg.bench_classes;
        if (cfg.seed) j["seed"] = *cfg.seed;
    }
    j["format"] = cfg.format == OutputFormat::json ? "json" : "csv";
    return j;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// select / rank

inline ordered_json selection_report_json(const RunConfig& cfg, const Dataset& ds,
                                          const SelectionResult& result, double seconds) {
    ordered_json report;
    report["version"] = kVersion;
    report["config"] = detail::config_echo(cfg);
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < result.selected.size(); ++i) {
        ordered_json row;
        row["rank"] = i + 1;
        row["index"] = result.selected[i];
        row["name"] = ds.feature_names[result.selected[i]];
        row["score"] = result.scores[i];
        row["provenance"] = result.provenance[i];
        rows.push_back(std::move(row));
    }
    report["results"]["selected"] = std::move(rows);
    report["timing"]["selection_seconds"] = seconds;
    return report;
}

inline std::string selection_report_csv(const Dataset& ds, const SelectionResult& result) {
    std::ostringstream out;
    out << "rank,index,name,score,provenance\n";
    for (std::size_t i = 0; i < result.selected.size(); ++i) {
        out << (i + 1) << ',' << result.selected[i] << ',' << ds.feature_names[result.selected[i]]
            << ',' << mdfs::detail::format_double(result.scores[i]) << ',' << result.provenance[i]
            << '\n';
    }
    return out.str();
}

inline int cmd_select(const RunConfig& cfg) {
    const Method method = detail::parse_method(cfg.method);
    detail::require_seed(cfg, method);
    const Dataset ds = detail::load_input(cfg);

    RunConfig effective = cfg;
    if (cfg.subcommand == "rank") effective.k = ds.m();
    SelectorConfig sc = detail::selector_config_from(effective);

    const auto t0 = std::chrono::steady_clock::now();
    const SelectionResult result = run_selector(method, ds, sc, cfg.threads);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::string text;
    if (cfg.format == OutputFormat::json) {
        text = selection_report_json(effective, ds, result, seconds).dump(2) + "\n";
    } else {
        text = selection_report_csv(ds, result);
    }
    detail::emit_report(text, cfg.output_path);
    return 0;
}

inline int cmd_rank(const RunConfig& cfg) { return cmd_select(cfg); }

// ---------------------------------------------------------------------------
// evaluate

/// Parses an experiment spec file. Collects every problem it can find;
/// throws only after the whole document has been inspected.
inline ExperimentSpec parse_experiment_spec(const ordered_json& j, std::vector<std::string>& errors) {
    ExperimentSpec spec;
    if (!j.is_object()) {
        errors.push_back("spec root must be a JSON object");
        return spec;
    }
    if (!j.contains("selectors") || !j["selectors"].is_array() || j["selectors"].empty()) {
        errors.push_back("spec needs a non-empty 'selectors' array");
    } else {
        for (const auto& s : j["selectors"]) {
            SelectorSpec sel;
            const std::string name = s.is_string() ? s.get<std::string>()
                                                   : s.value("method", std::string{});
            const auto method = method_from_string(name);
            if (!method) {
                errors.push_back("unknown selector method '" + name + "'");
                continue;
            }
            sel.method = *method;
            if (s.is_object()) {
                sel.id = s.value("id", std::string{});
                sel.config.seed = s.value("seed", std::uint64_t{0});
                sel.config.bins = s.value("bins", 10);
                sel.config.beta = s.value("beta", 2.0);
                sel.config.relieff_neighbors = s.value("relieff_neighbors", 10);
                sel.config.relieff_iterations = s.value("relieff_iterations", std::size_t{0});
                const std::string schedule = s.value("schedule", std::string{"random"});
                if (schedule == "round-robin") {
                    sel.config.mdfs_schedule = MdfsSchedule::round_robin;
                } else if (schedule != "random") {
                    errors.push_back("selector '" + name + "': unknown schedule '" + schedule + "'");
                }
            }
            spec.selectors.push_back(std::move(sel));
        }
    }
    if (!j.contains("classifiers") || !j["classifiers"].is_array() || j["classifiers"].empty()) {
        errors.push_back("spec needs a non-empty 'classifiers' array");
    } else {
        for (const auto& c : j["classifiers"]) {
            ClassifierSpec cls;
            const std::string kind = c.is_string() ? c.get<std::string>()
                                                   : c.value("kind", std::string{});
            if (kind == "naive_bayes" || kind == "nb") {
                cls.kind = ClassifierKind::naive_bayes;
            } else if (kind == "knn" || kind == "1nn") {
                cls.kind = ClassifierKind::knn;
                if (c.is_object()) cls.knn_k = c.value("k", 1);
            } else {
                errors.push_back("unknown classifier kind '" + kind + "'");
                continue;
            }
            if (c.is_object()) cls.id = c.value("id", std::string{});
            spec.classifiers.push_back(std::move(cls));
        }
    }
    if (!j.contains("subset_sizes") || !j["subset_sizes"].is_array() || j["subset_sizes"].empty()) {
        errors.push_back("spec needs a non-empty 'subset_sizes' array");
    } else {
        for (const auto& v : j["subset_sizes"]) {
            if (!v.is_number_unsigned() || v.get<std::size_t>() < 1) {
                errors.push_back("subset sizes must be positive integers");
                break;
            }
            spec.subset_sizes.push_back(v.get<std::size_t>());
        }
    }
    spec.folds = j.value("folds", 10);
    spec.repeats = j.value("repeats", 10);
    spec.master_seed = j.value("master_seed", std::uint64_t{0});
    return spec;
}

inline ordered_json evaluation_report_json(const RunConfig& cfg, const EvalReport& report,
                                           const std::vector<MethodComparison>& comparisons,
                                           const std::string& baseline) {
    ordered_json j;
    j["version"] = kVersion;
    j["config"] = detail::config_echo(cfg);
    j["config"]["folds"] = report.folds;
    j["config"]["repeats"] = report.repeats;

    ordered_json cells = ordered_json::array();
    for (const auto& cell : report.cells) {
        ordered_json row;
        row["selector"] = cell.selector_id;
        row["classifier"] = cell.classifier_id;
        row["k"] = cell.subset_size;
        row["mean_mauc"] = cell.mean;
        row["stddev"] = cell.stddev;
        row["fold_maucs"] = cell.fold_maucs;
        if (cell.selector_id == baseline) {
            row["marker"] = "baseline";
        } else {
            row["marker"] = "none";
            for (const auto& cmp : comparisons) {
                if (cmp.selector_id == cell.selector_id && cmp.classifier_id == cell.classifier_id &&
                    cmp.subset_size == cell.subset_size) {
                    row["marker"] = cmp.marker;
                    row["p_value"] = cmp.test.p_value;
                    row["statistic"] = cmp.test.statistic;
                    break;
                }
            }
        }
        cells.push_back(std::move(row));
    }
    j["results"]["baseline"] = baseline;
    j["results"]["cells"] = std::move(cells);

    ordered_json timing;
    for (const auto& [id, secs] : report.selector_seconds) {
        double total = 0.0;
        for (double s : secs) total += s;
        timing[id]["total_seconds"] = total;
        timing[id]["runs"] = secs.size();
    }
    j["timing"] = std::move(timing);
    return j;
}

inline std::string evaluation_report_csv(const EvalReport& report,
                                         const std::vector<MethodComparison>& comparisons,
                                         const std::string& baseline) {
    std::ostringstream out;
    out << "selector,classifier,k,mean_mauc,stddev,marker,p_value\n";
    for (const auto& cell : report.cells) {
        std::string marker = cell.selector_id == baseline ? "baseline" : "none";
        std::string p_value;
        for (const auto& cmp : comparisons) {
            if (cmp.selector_id == cell.selector_id && cmp.classifier_id == cell.classifier_id &&
                cmp.subset_size == cell.subset_size) {
                marker = cmp.marker;
                p_value = mdfs::detail::format_double(cmp.test.p_value);
                break;
            }
        }
        out << cell.selector_id << ',' << cell.classifier_id << ',' << cell.subset_size << ','
            << mdfs::detail::format_double(cell.mean) << ','
            << mdfs::detail::format_double(cell.stddev) << ',' << marker << ',' << p_value << '\n';
    }
    return out.str();
}

/// Text rendering of the method x subset-size matrix, one block per
/// classifier; dagger marks methods significantly worse than the baseline,
/// double dagger significantly better.
inline std::string evaluation_table_text(const EvalReport& report,
                                         const std::vector<MethodComparison>& comparisons,
                                         const std::string& baseline) {
    std::vector<std::string> classifiers, selectors;
    std::vector<std::size_t> sizes;
    for (const auto& cell : report.cells) {
        if (std::find(classifiers.begin(), classifiers.end(), cell.classifier_id) == classifiers.end())
            classifiers.push_back(cell.classifier_id);
        if (std::find(selectors.begin(), selectors.end(), cell.selector_id) == selectors.end())
            selectors.push_back(cell.selector_id);
        if (std::find(sizes.begin(), sizes.end(), cell.subset_size) == sizes.end())
            sizes.push_back(cell.subset_size);
    }
    auto marker_of = [&](const std::string& sel, const std::string& cls, std::size_t k) {
        for (const auto& cmp : comparisons) {
            if (cmp.selector_id == sel && cmp.classifier_id == cls && cmp.subset_size == k) {
                if (cmp.marker == "worse") return std::string{"†"};
                if (cmp.marker == "better") return std::string{"‡"};
            }
        }
        return std::string{};
    };
    auto mean_of = [&](const std::string& sel, const std::string& cls, std::size_t k) {
        for (const auto& cell : report.cells) {
            if (cell.selector_id == sel && cell.classifier_id == cls && cell.subset_size == k) {
                return cell.mean;
            }
        }
        return 0.0;
    };

    std::ostringstream out;
    for (const auto& cls : classifiers) {
        out << "classifier: " << cls << " (baseline: " << baseline << ")\n";
        out << "  method";
        for (std::size_t k : sizes) out << '\t' << k;
        out << '\n';
        for (const auto& sel : selectors) {
            out << "  " << sel;
            for (std::size_t k : sizes) {
                char buf[32];
                std::snprintf(buf, sizeof(buf), "%.4f", mean_of(sel, cls, k));
                out << '\t' << buf << marker_of(sel, cls, k);
            }
            out << '\n';
        }
    }
    return out.str();
}

inline int cmd_evaluate(const RunConfig& cfg) {
    if (cfg.spec_path.empty()) throw std::runtime_error("--spec is required for evaluate");
    std::ifstream spec_in(cfg.spec_path);
    if (!spec_in) throw std::runtime_error("cannot open spec file '" + cfg.spec_path + "'");
    ordered_json spec_json;
    try {
        spec_in >> spec_json;
    } catch (const std::exception& e) {
        throw std::runtime_error("spec file is not valid JSON: " + std::string(e.what()));
    }

    std::vector<std::string> errors;
    ExperimentSpec spec = parse_experiment_spec(spec_json, errors);
    const Dataset ds = detail::load_input(cfg);
    if (errors.empty()) {
        const auto more = validate_experiment(spec, ds);
        errors.insert(errors.end(), more.begin(), more.end());
    }
    std::string baseline = cfg.baseline;
    if (baseline.empty()) baseline = spec_json.value("baseline", std::string{});
    if (baseline.empty() && !spec.selectors.empty()) baseline = selector_label(spec.selectors[0]);
    if (errors.empty()) {
        bool found = false;
        for (const auto& sel : spec.selectors) found |= selector_label(sel) == baseline;
        if (!found) errors.push_back("baseline '" + baseline + "' is not one of the selectors");
    }
    if (!errors.empty()) {
        std::ostringstream msg;
        msg << "invalid experiment spec:";
        for (const auto& e : errors) msg << "\n  - " << e;
        throw std::runtime_error(msg.str());
    }

    EvalOptions options;
    options.threads = cfg.threads;
    const EvalReport report = run_experiment(ds, spec, options);
    const auto comparisons = compare_methods(report, baseline, cfg.alpha);

    std::string text;
    if (cfg.format == OutputFormat::json) {
        text = evaluation_report_json(cfg, report, comparisons, baseline).dump(2) + "\n";
    } else {
        text = evaluation_report_csv(report, comparisons, baseline);
    }
    detail::emit_report(text, cfg.output_path);
    if (!cfg.output_path.empty()) {
        std::cout << evaluation_table_text(report, comparisons, baseline);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// bench

struct BenchRow {
    std::string method;
    std::size_t m = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    double median_seconds = 0.0;
    std::vector<double> run_seconds;
};

struct BenchScaling {
    std::string method;
    std::size_t n = 0;
    double exponent = 0.0;  // log-log slope of median runtime vs m
};

struct BenchReport {
    std::vector<BenchRow> rows;
    std::vector<BenchScaling> scaling;
};

namespace detail {

inline Dataset bench_dataset(std::size_t n, std::size_t m, int classes, std::uint64_t seed) {
    SirenSpec spec;
    const std::size_t per_class = n / static_cast<std::size_t>(classes);
    spec.class_sizes.assign(static_cast<std::size_t>(classes), per_class);
    spec.pair_gaps = Matrix(static_cast<std::size_t>(classes), static_cast<std::size_t>(classes), 1.0);
    spec.seed = seed;
    // spread features across pairs so every ranking list sees real signal
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < classes; ++i) {
        for (int j = i + 1; j < classes; ++j) pairs.emplace_back(i, j);
    }
    std::size_t assigned = 0;
    for (std::size_t p = 0; p < pairs.size() && assigned < m; ++p) {
        const std::size_t share = p + 1 < pairs.size()
                                      ? std::max<std::size_t>(1, m / pairs.size())
                                      : m - assigned;
        SirenGroup g;
        g.class_a = pairs[p].first;
        g.class_b = pairs[p].second;
        g.feature_count = std::min(share, m - assigned);
        spec.groups.push_back(g);
        assigned += g.feature_count;
    }
    return generate_siren_dataset(spec).dataset;
}

inline double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t mid = v.size() / 2;
    return v.size() % 2 == 1 ? v[mid] : (v[mid - 1] + v[mid]) / 2.0;
}

}  // namespace detail

/// Times every requested selector over the (m, n) grid of generated datasets
/// and fits the scaling exponent of runtime against m at fixed n.
inline BenchReport run_bench(const RunConfig& cfg) {
    BenchReport report;
    if (cfg.bench_runs < 1) throw std::runtime_error("bench: --runs must be >= 1");
    if (cfg.bench_k_fraction <= 0.0 || cfg.bench_k_fraction > 1.0) {
        throw std::runtime_error("bench: --k-fraction must be in (0, 1]");
    }
    for (const auto& name : cfg.bench_methods) detail::parse_method(name);

    for (std::size_t n : cfg.bench_n_sizes) {
        for (std::size_t m : cfg.bench_m_sizes) {
            const Dataset ds = detail::bench_dataset(n, m, cfg.bench_classes,
                                                     cfg.seed.value_or(1));
            const auto k = std::max<std::size_t>(1, static_cast<std::size_t>(
                                                        std::floor(cfg.bench_k_fraction *
                                                                   static_cast<double>(m))));
            for (const auto& name : cfg.bench_methods) {
                const Method method = detail::parse_method(name);
                SelectorConfig sc;
                sc.k_target = k;
                sc.seed = cfg.seed.value_or(1);
                BenchRow row;
                row.method = name;
                row.m = m;
                row.n = n;
                row.k = k;
                for (int r = 0; r < cfg.bench_runs; ++r) {
                    const auto t0 = std::chrono::steady_clock::now();
                    run_selector(method, ds, sc);
                    const auto t1 = std::chrono::steady_clock::now();
                    row.run_seconds.push_back(std::chrono::duration<double>(t1 - t0).count());
                }
                row.median_seconds = detail::median(row.run_seconds);
                report.rows.push_back(std::move(row));
            }
        }
    }

    // least-squares slope of log2(median seconds) against log2(m), per (method, n)
    for (std::size_t n : cfg.bench_n_sizes) {
        for (const auto& name : cfg.bench_methods) {
            std::vector<double> xs, ys;
            for (const auto& row : report.rows) {
                if (row.method == name && row.n == n && row.median_seconds > 0.0) {
                    xs.push_back(std::log2(static_cast<double>(row.m)));
                    ys.push_back(std::log2(row.median_seconds));
                }
            }
            if (xs.size() < 2) continue;
            const double mean_x = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
            const double mean_y = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
            double num = 0.0, den = 0.0;
            for (std::size_t i = 0; i < xs.size(); ++i) {
                num += (xs[i] - mean_x) * (ys[i] - mean_y);
                den += (xs[i] - mean_x) * (xs[i] - mean_x);
            }
            if (den > 0.0) report.scaling.push_back({name, n, num / den});
        }
    }
    return report;
}

inline ordered_json bench_report_json(const RunConfig& cfg, const BenchReport& report) {
    ordered_json j;
    j["version"] = kVersion;
    j["config"] = detail::config_echo(cfg);
    ordered_json rows = ordered_json::array();
    for (const auto& row : report.rows) {
        ordered_json r;
        r["method"] = row.method;
        r["m"] = row.m;
        r["n"] = row.n;
        r["k"] = row.k;
        r["median_seconds"] = row.median_seconds;
        r["run_seconds"] = row.run_seconds;
        rows.push_back(std::move(r));
    }
    j["results"]["rows"] = std::move(rows);
    ordered_json scaling = ordered_json::array();
    for (const auto& s : report.scaling) {
        ordered_json r;
        r["method"] = s.method;
        r["n"] = s.n;
        r["exponent"] = s.exponent;
        scaling.push_back(std::move(r));
    }
    j["results"]["scaling_vs_m"] = std::move(scaling);
    double total = 0.0;
    for (const auto& row : report.rows) {
        for (double s : row.run_seconds) total += s;
    }
    j["timing"]["total_seconds"] = total;
    return j;
}

inline std::string bench_report_csv(const BenchReport& report) {
    std::ostringstream out;
    out << "method,m,n,k,median_seconds\n";
    for (const auto& row : report.rows) {
        out << row.method << ',' << row.m << ',' << row.n << ',' << row.k << ','
            << mdfs::detail::format_double(row.median_seconds) << '\n';
    }
    return out.str();
}

inline int cmd_bench(const RunConfig& cfg) {
    const BenchReport report = run_bench(cfg);
    std::string text;
    if (cfg.format == OutputFormat::json) {
        text = bench_report_json(cfg, report).dump(2) + "\n";
    } else {
        text = bench_report_csv(report);
    }
    detail::emit_report(text, cfg.output_path);
    return 0;
}

inline int dispatch(const RunConfig& cfg) {
    if (cfg.subcommand == "select" || cfg.subcommand == "rank") return cmd_select(cfg);
    if (cfg.subcommand == "evaluate") return cmd_evaluate(cfg);
    if (cfg.subcommand == "bench") return cmd_bench(cfg);
    throw std::runtime_error("unknown subcommand '" + cfg.subcommand + "'");
}

}  // namespace mdfs::cli
