#pragma once

#include "qaoa/ansatz.hpp"
#include "qaoa/graph.hpp"
#include "qaoa/qfi.hpp"
#include "qaoa/rng.hpp"
#include "qaoa/statevector.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qaoa {

/// Expected cut value sum_{(i,j) in E} (1 - <Z_i Z_j>)/2, computed exactly
/// from the amplitudes. Bounded by [0, |E|].
double expected_cut(const Statevector& state, const Graph& g);

/// Normalized diagonal QFI d_i = F_ii / Tr(F) and per-coordinate step 1 - d_i.
struct MutationProfile {
    std::vector<double> d;
    std::vector<double> step;
};

/// Requires Tr(F) > 1e-12. Scale invariant: profile(c*F) == profile(F).
MutationProfile mutation_profile(const QfiMatrix& f);

enum class Strategy { QIm, NonQIm, RR };

std::string to_string(Strategy s);
Strategy strategy_from_string(const std::string& s);

struct OptimizerConfig {
    Strategy strategy = Strategy::QIm;
    int iterations = 100;
    double s_m = 0.01; // fixed step magnitude for NonQIm
    std::uint64_t seed = 0;
};

/// Per coordinate: mutate with probability d_i, sign Rademacher, step 1 - d_i.
/// Angles are not wrapped.
ParameterVector qim_update(const ParameterVector& params, const MutationProfile& profile, Rng& rng);

/// NonQIm: Bernoulli(0.5) mask, Rademacher sign, fixed magnitude s_m.
/// RR: replaces the whole vector, gamma ~ U[0,pi), beta ~ U[0,2pi).
ParameterVector baseline_update(const ParameterVector& params, const AnsatzSpec& spec,
                                const OptimizerConfig& cfg, Rng& rng);

struct RunRecord {
    std::vector<double> objective_trace; // best-so-far, nondecreasing
    ParameterVector final_params;
    double final_objective = 0.0; // expected cut at final_params
    int best_iteration = 0; // iteration (1-based) of the best value seen; 0 = initial point
};

/// One optimization run from a uniform-random start, one proposal per
/// iteration. QIm climbs greedily (a proposal replaces the incumbent only on
/// strict improvement of the expected cut) and requires a precomputed
/// MutationProfile. The uninformed baselines are non-selective: every nonQIm
/// mutation and every RR restart replaces the incumbent, so their final
/// objective reflects where the process ends rather than the best value
/// seen, which the trace records separately.
RunRecord run_optimizer(const AnsatzSpec& spec, const Graph& g, const OptimizerConfig& cfg,
                        const std::optional<MutationProfile>& profile);

struct BenchRow {
    Strategy strategy = Strategy::QIm;
    int run_index = 0;
    std::uint64_t seed = 0;
    double final_eev = 0.0;
    int best_iteration = 0;
};

struct StrategyStats {
    Strategy strategy = Strategy::QIm;
    double mean = 0.0;
    double variance = 0.0; // sample variance (n - 1)
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double min = 0.0;
    double max = 0.0;
};

struct BenchmarkResult {
    std::vector<BenchRow> rows;
    std::vector<StrategyStats> stats;
};

/// Independent runs per strategy with per-run seeds derived from
/// (seed, strategy, run index). Runs may execute concurrently (jobs > 1);
/// rows and statistics are emitted in deterministic order either way.
BenchmarkResult benchmark(const AnsatzSpec& spec, const Graph& g,
                          std::span<const Strategy> strategies, int runs, int iterations,
                          std::uint64_t seed, const std::optional<MutationProfile>& profile,
                          double s_m = 0.01, int jobs = 1);

/// Same, but with explicit per-run seeds reused for every strategy.
BenchmarkResult benchmark_with_seeds(const AnsatzSpec& spec, const Graph& g,
                                     std::span<const Strategy> strategies,
                                     std::span<const std::uint64_t> run_seeds, int iterations,
                                     const std::optional<MutationProfile>& profile,
                                     double s_m = 0.01, int jobs = 1);

} // namespace qaoa
