#include "qaoa/harness.hpp"

#include "qaoa/parallel.hpp"
#include "qaoa/qfi.hpp"
#include "qaoa/rng.hpp"

#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qaoa {

namespace {

std::string format_u64(std::uint64_t v)
{
    char buf[24];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string format_int(int v)
{
    char buf[16];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_file(const std::filesystem::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << content;
    out.flush();
    if (!out)
        throw std::runtime_error("write failed for " + path.string());
}

std::string sanitize_name(const std::string& name)
{
    std::string out;
    for (char c : name)
        out.push_back(std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_'
                          ? c
                          : '_');
    return out;
}

Graph make_graph(Topology t, int n)
{
    return t == Topology::Cyclic ? cyclic_graph(n) : complete_graph(n);
}

std::vector<int> parse_int_list(const nlohmann::ordered_json& j)
{
    std::vector<int> out;
    for (const auto& v : j)
        out.push_back(v.get<int>());
    return out;
}

GridSpec grid_from_json(const nlohmann::ordered_json& j)
{
    GridSpec g;
    for (const auto& [key, value] : j.items()) {
        if (key == "n") {
            g.n = parse_int_list(value);
        } else if (key == "topologies") {
            for (const auto& v : value)
                g.topologies.push_back(topology_from_string(v.get<std::string>()));
        } else if (key == "mixers") {
            for (const auto& v : value)
                g.mixers.push_back(mixer_from_string(v.get<std::string>()));
        } else if (key == "depths") {
            g.depths = parse_int_list(value);
        } else if (key == "ent_patterns") {
            for (const auto& v : value)
                g.ent_patterns.push_back(ent_pattern_from_string(v.get<std::string>()));
        } else if (key == "ent_stages") {
            g.ent_stages = parse_int_list(value);
        } else {
            throw std::invalid_argument("config: unknown grid key '" + key + "'");
        }
    }
    return g;
}

BenchCase case_from_json(const nlohmann::ordered_json& j)
{
    BenchCase c;
    c.name = j.at("name").get<std::string>();
    c.n = j.at("n").get<int>();
    c.topology = topology_from_string(j.at("topology").get<std::string>());
    c.mixer = mixer_from_string(j.at("mixer").get<std::string>());
    c.depth = j.at("depth").get<int>();
    c.ent_pattern = ent_pattern_from_string(j.at("ent_pattern").get<std::string>());
    c.ent_stages = j.at("ent_stages").get<int>();
    return c;
}

std::string case_identifier(const BenchCase& c)
{
    GridPoint p{c.n, c.topology, c.mixer, c.depth, c.ent_pattern, c.ent_stages};
    return p.identifier();
}

AnsatzSpec case_to_spec(const BenchCase& c)
{
    GridPoint p{c.n, c.topology, c.mixer, c.depth, c.ent_pattern, c.ent_stages};
    return p.to_spec();
}

} // namespace

std::string format_double(double v)
{
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string GridPoint::identifier() const
{
    std::ostringstream os;
    os << "n=" << n << ",topology=" << to_string(topology) << ",mixer=" << to_string(mixer)
       << ",depth=" << depth << ",ent_pattern=" << to_string(ent_pattern)
       << ",ent_stages=" << ent_stages;
    return os.str();
}

AnsatzSpec GridPoint::to_spec() const
{
    AnsatzSpec spec;
    spec.n_qubits = n;
    spec.depth = depth;
    spec.mixer = mixer;
    spec.ent_pattern = ent_pattern;
    spec.ent_stages = ent_stages;
    spec.graph = make_graph(topology, n);
    spec.validate();
    return spec;
}

ExperimentConfig default_config(Mode mode)
{
    ExperimentConfig cfg;
    cfg.mode = mode;
    switch (mode) {
    case Mode::QfiScan:
        cfg.grid = GridSpec{
            {4, 7, 10},
            {Topology::Cyclic, Topology::Complete},
            {Mixer::Rx, Mixer::RxRy},
            {1, 2, 3},
            {EntPattern::None, EntPattern::Complete},
            {}, // stage count = depth for entangled patterns
        };
        break;
    case Mode::EntStageStudy:
        // Fixed protocol: depth-3 circuits on the 7-node complete instance,
        // both mixers and both patterns, one to three stages.
        cfg.grid = GridSpec{
            {7},
            {Topology::Complete},
            {Mixer::Rx, Mixer::RxRy},
            {3},
            {EntPattern::Cyclic, EntPattern::Complete},
            {1, 2, 3},
        };
        break;
    case Mode::QimBench:
        cfg.cases = {
            BenchCase{"7n_complete_rx_3l", 7, Topology::Complete, Mixer::Rx, 3,
                      EntPattern::None, 0},
            BenchCase{"10n_cyclic_rxry_3l_ent", 10, Topology::Cyclic, Mixer::RxRy, 3,
                      EntPattern::Complete, 3},
        };
        break;
    }
    return cfg;
}

ExperimentConfig config_from_json(const nlohmann::ordered_json& j, Mode mode)
{
    ExperimentConfig cfg = default_config(mode);
    std::vector<BenchCase> extra_cases;
    for (const auto& [key, value] : j.items()) {
        if (key == "mode") {
            const std::string s = value.get<std::string>();
            const bool match = (mode == Mode::QfiScan && s == "qfi-scan") ||
                               (mode == Mode::EntStageStudy && s == "ent-stage-study") ||
                               (mode == Mode::QimBench && s == "qim-bench");
            if (!match)
                throw std::invalid_argument("config: mode '" + s +
                                            "' does not match the selected subcommand");
        } else if (key == "seed") {
            cfg.seed = value.get<std::uint64_t>();
        } else if (key == "n_samples") {
            cfg.n_samples = value.get<int>();
        } else if (key == "runs") {
            cfg.runs = value.get<int>();
        } else if (key == "iterations") {
            cfg.iterations = value.get<int>();
        } else if (key == "s_m") {
            cfg.s_m = value.get<double>();
        } else if (key == "jobs") {
            cfg.jobs = value.get<int>();
        } else if (key == "output_dir") {
            cfg.output_dir = value.get<std::string>();
        } else if (key == "grid") {
            if (mode != Mode::QfiScan)
                throw std::invalid_argument("config: 'grid' only applies to qfi-scan");
            cfg.grid = grid_from_json(value);
        } else if (key == "cases") {
            if (mode != Mode::QimBench)
                throw std::invalid_argument("config: 'cases' only applies to qim-bench");
            for (const auto& c : value)
                extra_cases.push_back(case_from_json(c));
        } else if (key == "include_default_cases") {
            if (mode != Mode::QimBench)
                throw std::invalid_argument(
                    "config: 'include_default_cases' only applies to qim-bench");
            cfg.include_default_cases = value.get<bool>();
        } else {
            throw std::invalid_argument("config: unknown key '" + key + "'");
        }
    }
    if (!cfg.include_default_cases)
        cfg.cases.clear();
    cfg.cases.insert(cfg.cases.end(), extra_cases.begin(), extra_cases.end());
    if (cfg.n_samples < 1)
        throw std::invalid_argument("config: n_samples must be >= 1");
    if (cfg.runs < 2)
        throw std::invalid_argument("config: runs must be >= 2");
    if (cfg.iterations < 1)
        throw std::invalid_argument("config: iterations must be >= 1");
    if (cfg.jobs < 1)
        throw std::invalid_argument("config: jobs must be >= 1");
    return cfg;
}

ExperimentConfig load_config(const std::string& path, Mode mode)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file " + path);
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error("config parse error in " + path + ": " + e.what());
    }
    return config_from_json(j, mode);
}

GridExpansion expand_grid(const GridSpec& grid, std::ostream& diag)
{
    GridExpansion out;
    for (int n : grid.n)
        for (Topology topo : grid.topologies)
            for (Mixer mixer : grid.mixers)
                for (int depth : grid.depths)
                    for (EntPattern pattern : grid.ent_patterns) {
                        std::vector<int> stages;
                        if (pattern == EntPattern::None)
                            stages = {0};
                        else if (grid.ent_stages.empty())
                            stages = {depth};
                        else
                            stages = grid.ent_stages;
                        for (int s : stages) {
                            GridPoint point{n, topo, mixer, depth, pattern, s};
                            try {
                                (void)point.to_spec();
                            } catch (const std::exception& e) {
                                ++out.skipped;
                                diag << "warning: skipping grid point [" << point.identifier()
                                     << "]: " << e.what() << "\n";
                                continue;
                            }
                            out.points.push_back(point);
                        }
                    }
    return out;
}

namespace {

struct ScanRow {
    GridPoint point;
    std::uint64_t seed = 0;
    QfiSummary summary;
    bool failed = false;
    std::string error;
};

RunReport run_scan(const ExperimentConfig& cfg, std::ostream& diag, const std::string& filename)
{
    GridExpansion expansion = expand_grid(cfg.grid, diag);
    std::vector<ScanRow> rows(expansion.points.size());

    parallel_for(expansion.points.size(), cfg.jobs, [&](std::size_t i) {
        ScanRow& row = rows[i];
        row.point = expansion.points[i];
        row.seed = cfg.seed ^ fnv1a64(row.point.identifier());
        try {
            const AveragedQfi avg = averaged_qfi(row.point.to_spec(), cfg.n_samples, row.seed);
            row.summary = avg.summary;
        } catch (const std::exception& e) {
            row.failed = true;
            row.error = e.what();
        }
    });

    RunReport report;
    report.skipped = expansion.skipped;

    std::string csv{kQfiCsvHeader};
    csv.push_back('\n');
    for (const ScanRow& row : rows) {
        if (row.failed) {
            ++report.failed;
            diag << "error: grid point [" << row.point.identifier() << "] failed: " << row.error
                 << "\n";
            continue;
        }
        csv += format_int(row.point.n);
        csv += ',';
        csv += to_string(row.point.topology);
        csv += ',';
        csv += to_string(row.point.mixer);
        csv += ',';
        csv += format_int(row.point.depth);
        csv += ',';
        csv += to_string(row.point.ent_pattern);
        csv += ',';
        csv += format_int(row.point.ent_stages);
        csv += ',';
        csv += format_int(cfg.n_samples);
        csv += ',';
        csv += format_u64(row.seed);
        csv += ',';
        csv += format_double(row.summary.max_eig);
        csv += ',';
        csv += format_double(row.summary.min_eig);
        csv += ',';
        csv += format_double(row.summary.trace);
        csv += ',';
        csv += format_double(row.summary.cov_fraction);
        csv += '\n';
        ++report.rows;
    }

    std::filesystem::create_directories(cfg.output_dir);
    write_file(std::filesystem::path(cfg.output_dir) / filename, csv);
    diag << "wrote " << report.rows << " rows to " << cfg.output_dir << "/" << filename;
    if (report.skipped > 0)
        diag << " (" << report.skipped << " grid points skipped)";
    diag << "\n";
    return report;
}

} // namespace

RunReport run_qfi_scan(const ExperimentConfig& cfg, std::ostream& diag)
{
    return run_scan(cfg, diag, "qfi_scan.csv");
}

RunReport run_ent_stage_study(const ExperimentConfig& cfg, std::ostream& diag)
{
    ExperimentConfig fixed = cfg;
    fixed.grid = default_config(Mode::EntStageStudy).grid;
    return run_scan(fixed, diag, "ent_study.csv");
}

RunReport run_qim_bench(const ExperimentConfig& cfg, std::ostream& diag)
{
    static constexpr Strategy kStrategies[] = {Strategy::QIm, Strategy::NonQIm, Strategy::RR};

    RunReport report;
    std::string runs_csv{kBenchRunsCsvHeader};
    runs_csv.push_back('\n');
    std::string summary_csv{kBenchSummaryCsvHeader};
    summary_csv.push_back('\n');

    std::filesystem::create_directories(cfg.output_dir);

    for (const BenchCase& bench_case : cfg.cases) {
        AnsatzSpec spec;
        try {
            spec = case_to_spec(bench_case);
        } catch (const std::exception& e) {
            ++report.skipped;
            diag << "warning: skipping case '" << bench_case.name << "': " << e.what() << "\n";
            continue;
        }

        const std::uint64_t case_seed = cfg.seed ^ fnv1a64(case_identifier(bench_case));
        const std::uint64_t profile_seed = case_seed ^ fnv1a64("qfi-profile");

        try {
            // The QIm profile comes from one averaged QFI matrix computed
            // up front; it stays fixed for all runs of the case.
            const AveragedQfi avg = averaged_qfi(spec, cfg.n_samples, profile_seed);
            const MutationProfile profile = mutation_profile(avg.matrix);

            const BenchmarkResult bench =
                benchmark(spec, spec.graph, kStrategies, cfg.runs, cfg.iterations, case_seed,
                          profile, cfg.s_m, cfg.jobs);

            for (const BenchRow& row : bench.rows) {
                runs_csv += bench_case.name;
                runs_csv += ',';
                runs_csv += to_string(row.strategy);
                runs_csv += ',';
                runs_csv += format_int(row.run_index);
                runs_csv += ',';
                runs_csv += format_u64(row.seed);
                runs_csv += ',';
                runs_csv += format_double(row.final_eev);
                runs_csv += ',';
                runs_csv += format_int(row.best_iteration);
                runs_csv += '\n';
                ++report.rows;
            }
            for (const StrategyStats& s : bench.stats) {
                summary_csv += bench_case.name;
                summary_csv += ',';
                summary_csv += to_string(s.strategy);
                summary_csv += ',';
                summary_csv += format_double(s.mean);
                summary_csv += ',';
                summary_csv += format_double(s.variance);
                summary_csv += ',';
                summary_csv += format_double(s.q1);
                summary_csv += ',';
                summary_csv += format_double(s.median);
                summary_csv += ',';
                summary_csv += format_double(s.q3);
                summary_csv += ',';
                summary_csv += format_double(s.min);
                summary_csv += ',';
                summary_csv += format_double(s.max);
                summary_csv += '\n';
            }

            const nlohmann::ordered_json qfi_json =
                qfi_result_json(spec, cfg.n_samples, profile_seed, avg.matrix, avg.summary);
            write_file(std::filesystem::path(cfg.output_dir) /
                           (sanitize_name(bench_case.name) + "_qfi.json"),
                       qfi_json.dump(2) + "\n");
        } catch (const std::exception& e) {
            ++report.failed;
            diag << "error: case '" << bench_case.name << "' failed: " << e.what() << "\n";
        }
    }

    write_file(std::filesystem::path(cfg.output_dir) / "qim_bench_runs.csv", runs_csv);
    write_file(std::filesystem::path(cfg.output_dir) / "qim_bench_summary.csv", summary_csv);
    diag << "wrote " << report.rows << " benchmark rows to " << cfg.output_dir << "\n";
    return report;
}

} // namespace qaoa
