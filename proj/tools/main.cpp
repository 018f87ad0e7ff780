// qaoa-qfi: QFI diagnostics and mutation-optimizer benchmarks for QAOA
// Max-Cut circuits.
//
// Subcommands:
//   qfi-scan   averaged QFI summaries over a configuration grid
//   ent-study  fixed depth-3 entanglement-stage study (7-node complete)
//   qim-bench  QIm vs nonQIm vs RR optimizer benchmark
//
// Each subcommand reads an optional JSON config file; command-line flags
// override file values. Progress and warnings go to stderr, data to files
// under --out. Exit code 0 iff no grid point or case failed.

#include "qaoa/harness.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

namespace {

struct CommonFlags {
    std::string config_path;
    std::string out_dir;
    std::uint64_t seed = 0;
    int samples = 0;
    int jobs = 0;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags)
{
    cmd->add_option("--config", flags.config_path, "JSON config file");
    cmd->add_option("--seed", flags.seed, "Base seed (overrides config)");
    cmd->add_option("--samples", flags.samples,
                    "Parameter draws per QFI average (overrides config)");
    cmd->add_option("--out", flags.out_dir, "Output directory (overrides config)");
    cmd->add_option("--jobs", flags.jobs, "Worker thread cap (overrides config)");
}

qaoa::ExperimentConfig build_config(const CLI::App* cmd, const CommonFlags& flags,
                                    qaoa::Mode mode)
{
    qaoa::ExperimentConfig cfg = flags.config_path.empty()
                                     ? qaoa::default_config(mode)
                                     : qaoa::load_config(flags.config_path, mode);
    if (cmd->count("--seed") > 0)
        cfg.seed = flags.seed;
    if (cmd->count("--samples") > 0)
        cfg.n_samples = flags.samples;
    if (cmd->count("--out") > 0)
        cfg.output_dir = flags.out_dir;
    if (cmd->count("--jobs") > 0)
        cfg.jobs = flags.jobs;
    return cfg;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"QFI diagnostics and QFI-informed mutation benchmarks for QAOA Max-Cut"};
    app.require_subcommand(1);

    CommonFlags scan_flags;
    CLI::App* scan = app.add_subcommand("qfi-scan", "Averaged QFI over a configuration grid");
    add_common_flags(scan, scan_flags);

    CommonFlags study_flags;
    CLI::App* study =
        app.add_subcommand("ent-study", "Entanglement-stage study at fixed depth 3");
    add_common_flags(study, study_flags);

    CommonFlags bench_flags;
    int bench_runs = 0;
    int bench_iters = 0;
    CLI::App* bench =
        app.add_subcommand("qim-bench", "QIm / nonQIm / RR optimizer benchmark");
    add_common_flags(bench, bench_flags);
    bench->add_option("--runs", bench_runs, "Independent runs per strategy (overrides config)");
    bench->add_option("--iters", bench_iters, "Iterations per run (overrides config)");

    CLI11_PARSE(app, argc, argv);

    try {
        qaoa::RunReport report;
        if (scan->parsed()) {
            report = qaoa::run_qfi_scan(build_config(scan, scan_flags, qaoa::Mode::QfiScan),
                                        std::cerr);
        } else if (study->parsed()) {
            report = qaoa::run_ent_stage_study(
                build_config(study, study_flags, qaoa::Mode::EntStageStudy), std::cerr);
        } else {
            qaoa::ExperimentConfig cfg = build_config(bench, bench_flags, qaoa::Mode::QimBench);
            if (bench->count("--runs") > 0)
                cfg.runs = bench_runs;
            if (bench->count("--iters") > 0)
                cfg.iterations = bench_iters;
            report = qaoa::run_qim_bench(cfg, std::cerr);
        }
        return report.ok() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
