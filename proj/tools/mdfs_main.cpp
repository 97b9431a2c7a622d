#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mdfs/cli.hpp"

namespace {

void add_common_flags(CLI::App* cmd, mdfs::cli::RunConfig& cfg, std::string& format) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--output", cfg.output_path, "Write the report to this file (default: stdout)");
    cmd->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
}

void add_input_flags(CLI::App* cmd, mdfs::cli::RunConfig& cfg) {
    cmd->add_option("--input", cfg.input_path, "Dataset CSV file")->required();
    cmd->add_option("--label-col", cfg.label_col,
                    "Label column, by header name or 0-based index (default: last column)");
    cmd->add_flag("--no-header", cfg.no_header, "Treat the first CSV row as data");
}

void add_selection_flags(CLI::App* cmd, mdfs::cli::RunConfig& cfg, std::uint64_t& seed_value) {
    cmd->add_option("--method", cfg.method,
                    "Selection method: mdfs|maucd|chi|su|fsdd|schi|ssu|relieff|mrmr")
        ->required();
    cmd->add_option("--seed", seed_value, "RNG seed (required for mdfs and relieff)");
    cmd->add_option("--bins", cfg.bins, "Discretization bins for chi/su/mrmr")->check(CLI::Range(2, 1 << 20));
    cmd->add_option("--beta", cfg.beta, "FSDD tuning parameter");
    cmd->add_option("--schedule", cfg.schedule, "MDFS sub-problem schedule")
        ->check(CLI::IsMember({"random", "round-robin"}));
    cmd->add_option("--neighbors", cfg.relieff_neighbors, "ReliefF hit/miss neighbors")
        ->check(CLI::Range(1, 1 << 20));
    cmd->add_option("--iterations", cfg.relieff_iterations,
                    "ReliefF iterations t (0 = ceil(log2 n))");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Feature selection toolkit built around pairwise-AUC decomposition"};
    app.require_subcommand(1);

    mdfs::cli::RunConfig cfg;
    std::string format = "json";
    std::uint64_t seed_value = 0;
    std::string bench_m, bench_n, bench_methods;

    auto* select = app.add_subcommand("select", "Select a feature subset of size K");
    add_input_flags(select, cfg);
    add_selection_flags(select, cfg, seed_value);
    select->add_option("--k", cfg.k, "Number of features to select")
        ->required()
        ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
    add_common_flags(select, cfg, format);

    auto* rank = app.add_subcommand("rank", "Rank all features (selection with K = m)");
    add_input_flags(rank, cfg);
    add_selection_flags(rank, cfg, seed_value);
    add_common_flags(rank, cfg, format);

    auto* evaluate = app.add_subcommand("evaluate",
                                        "Run a repeated cross-validation experiment spec");
    add_input_flags(evaluate, cfg);
    evaluate->add_option("--spec", cfg.spec_path, "Experiment spec JSON file")->required();
    evaluate->add_option("--baseline", cfg.baseline, "Baseline selector id for the Wilcoxon marks");
    evaluate->add_option("--alpha", cfg.alpha, "Significance level")->check(CLI::Range(0.0, 1.0));
    add_common_flags(evaluate, cfg, format);

    auto* bench = app.add_subcommand("bench", "Time the selectors on generated datasets");
    bench->add_option("--methods", bench_methods, "Comma-separated method list (default: all)");
    bench->add_option("--m-sizes", bench_m, "Comma-separated feature counts (default: 128,256)");
    bench->add_option("--n-sizes", bench_n, "Comma-separated instance counts (default: 2000)");
    bench->add_option("--runs", cfg.bench_runs, "Timed runs per cell")->check(CLI::Range(1, 1000));
    bench->add_option("--k-fraction", cfg.bench_k_fraction, "K as a fraction of m");
    bench->add_option("--classes", cfg.bench_classes, "Classes in the generated data")
        ->check(CLI::Range(2, 64));
    bench->add_option("--seed", seed_value, "Generator seed");
    add_common_flags(bench, cfg, format);

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.subcommand = app.get_subcommands().front()->get_name();
        cfg.format = format == "csv" ? mdfs::cli::OutputFormat::csv : mdfs::cli::OutputFormat::json;
        if (select->count("--seed") || rank->count("--seed") || bench->count("--seed")) {
            cfg.seed = seed_value;
        }
        auto split_sizes = [](const std::string& text, std::vector<std::size_t>& out) {
            if (text.empty()) return;
            out.clear();
            std::size_t start = 0;
            while (start <= text.size()) {
                const std::size_t pos = text.find(',', start);
                const std::string tok = text.substr(start, pos == std::string::npos ? pos : pos - start);
                if (!tok.empty()) out.push_back(std::stoul(tok));
                if (pos == std::string::npos) break;
                start = pos + 1;
            }
        };
        split_sizes(bench_m, cfg.bench_m_sizes);
        split_sizes(bench_n, cfg.bench_n_sizes);
        if (!bench_methods.empty()) {
            cfg.bench_methods.clear();
            std::size_t start = 0;
            while (start <= bench_methods.size()) {
                const std::size_t pos = bench_methods.find(',', start);
                const std::string tok =
                    bench_methods.substr(start, pos == std::string::npos ? pos : pos - start);
                if (!tok.empty()) cfg.bench_methods.push_back(tok);
                if (pos == std::string::npos) break;
                start = pos + 1;
            }
        }
        return mdfs::cli::dispatch(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
