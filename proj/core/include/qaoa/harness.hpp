#pragma once

#include "qaoa/ansatz.hpp"
#include "qaoa/graph.hpp"
#include "qaoa/qim.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace qaoa {

enum class Mode { QfiScan, EntStageStudy, QimBench };

/// Cartesian sweep axes. An empty ent_stages list means "one stage per
/// layer" (stage count = depth) for entangled patterns.
struct GridSpec {
    std::vector<int> n;
    std::vector<Topology> topologies;
    std::vector<Mixer> mixers;
    std::vector<int> depths;
    std::vector<EntPattern> ent_patterns;
    std::vector<int> ent_stages;
};

/// One optimizer benchmark instance.
struct BenchCase {
    std::string name;
    int n = 0;
    Topology topology = Topology::Complete;
    Mixer mixer = Mixer::Rx;
    int depth = 3;
    EntPattern ent_pattern = EntPattern::None;
    int ent_stages = 0;
};

struct ExperimentConfig {
    Mode mode = Mode::QfiScan;
    GridSpec grid;
    int n_samples = 100;
    int runs = 100;
    int iterations = 100;
    double s_m = 0.01;
    std::uint64_t seed = 12345;
    std::string output_dir = "out";
    int jobs = 1;
    std::vector<BenchCase> cases;        // extra qim-bench cases
    bool include_default_cases = true;   // keep the two built-in cases
};

/// Built-in configuration for a mode: the full sweep grid for qfi-scan and
/// the two stock benchmark cases for qim-bench.
ExperimentConfig default_config(Mode mode);

/// Parses a config JSON object on top of default_config(mode). Unknown keys
/// are rejected.
ExperimentConfig config_from_json(const nlohmann::ordered_json& j, Mode mode);

/// Reads and parses a config file.
ExperimentConfig load_config(const std::string& path, Mode mode);

struct GridPoint {
    int n = 0;
    Topology topology = Topology::Cyclic;
    Mixer mixer = Mixer::Rx;
    int depth = 1;
    EntPattern ent_pattern = EntPattern::None;
    int ent_stages = 0;

    /// Stable identity string, e.g.
    /// "n=7,topology=complete,mixer=rx,depth=3,ent_pattern=none,ent_stages=0".
    /// Per-point seeds are config-seed XOR fnv1a64(identifier), so extending a
    /// grid never perturbs existing rows.
    std::string identifier() const;
    AnsatzSpec to_spec() const;
};

struct GridExpansion {
    std::vector<GridPoint> points;
    int skipped = 0;
};

/// Expands the cartesian grid in deterministic order (n, topology, mixer,
/// depth, ent_pattern, ent_stages); unsatisfiable combinations are skipped
/// with a warning on diag.
GridExpansion expand_grid(const GridSpec& grid, std::ostream& diag);

struct RunReport {
    int rows = 0;
    int skipped = 0;
    int failed = 0;

    bool ok() const { return failed == 0; }
};

RunReport run_qfi_scan(const ExperimentConfig& cfg, std::ostream& diag);
RunReport run_ent_stage_study(const ExperimentConfig& cfg, std::ostream& diag);
RunReport run_qim_bench(const ExperimentConfig& cfg, std::ostream& diag);

inline constexpr std::string_view kQfiCsvHeader =
    "n,topology,mixer,depth,ent_pattern,ent_stages,n_samples,seed,max_eig,min_eig,trace,cov_fraction";
inline constexpr std::string_view kBenchRunsCsvHeader =
    "case,strategy,run_index,seed,final_eev,best_iteration";
inline constexpr std::string_view kBenchSummaryCsvHeader =
    "case,strategy,mean,variance,q1,median,q3,min,max";

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

} // namespace qaoa
