#include "qaoa/qim.hpp"

#include "qaoa/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace qaoa {

double expected_cut(const Statevector& state, const Graph& g)
{
    if (state.n_qubits != g.n_nodes)
        throw std::invalid_argument("expected_cut: state has " + std::to_string(state.n_qubits) +
                                    " qubits but graph has " + std::to_string(g.n_nodes) +
                                    " nodes");
    double acc = 0.0;
    for (std::uint64_t x = 0; x < state.size(); ++x) {
        const double w = std::norm(state.amps[x]);
        if (w == 0.0)
            continue;
        int cut = 0;
        for (const auto& [i, j] : g.edges)
            cut += static_cast<int>(((x >> i) ^ (x >> j)) & 1u);
        acc += w * static_cast<double>(cut);
    }
    return acc;
}

MutationProfile mutation_profile(const QfiMatrix& f)
{
    const double tr = f.trace();
    if (!(tr > 1e-12))
        throw std::domain_error("mutation_profile: QFI trace is not positive");
    MutationProfile p;
    p.d.resize(static_cast<std::size_t>(f.dim));
    p.step.resize(static_cast<std::size_t>(f.dim));
    for (int i = 0; i < f.dim; ++i) {
        p.d[static_cast<std::size_t>(i)] = f.at(i, i) / tr;
        p.step[static_cast<std::size_t>(i)] = 1.0 - p.d[static_cast<std::size_t>(i)];
    }
    return p;
}

std::string to_string(Strategy s)
{
    switch (s) {
    case Strategy::QIm: return "QIm";
    case Strategy::NonQIm: return "nonQIm";
    default: return "RR";
    }
}

Strategy strategy_from_string(const std::string& s)
{
    if (s == "QIm") return Strategy::QIm;
    if (s == "nonQIm") return Strategy::NonQIm;
    if (s == "RR") return Strategy::RR;
    throw std::invalid_argument("unknown strategy: " + s);
}

ParameterVector qim_update(const ParameterVector& params, const MutationProfile& profile, Rng& rng)
{
    if (params.size() != profile.d.size())
        throw std::invalid_argument("qim_update: profile dimension mismatch");
    ParameterVector out = params;
    for (std::size_t i = 0; i < out.size(); ++i) {
        // Both variates are always drawn so the stream layout does not depend
        // on the mask outcome.
        const bool mutate = rng.bernoulli(profile.d[i]);
        const int sign = rng.rademacher();
        if (mutate)
            out[i] += static_cast<double>(sign) * profile.step[i];
    }
    return out;
}

ParameterVector baseline_update(const ParameterVector& params, const AnsatzSpec& spec,
                                const OptimizerConfig& cfg, Rng& rng)
{
    ParameterVector out = params;
    if (cfg.strategy == Strategy::NonQIm) {
        for (std::size_t i = 0; i < out.size(); ++i) {
            const bool mutate = rng.bernoulli(0.5);
            const int sign = rng.rademacher();
            if (mutate)
                out[i] += static_cast<double>(sign) * cfg.s_m;
        }
    } else if (cfg.strategy == Strategy::RR) {
        for (std::size_t i = 0; i < out.size(); ++i) {
            const bool is_gamma = param_kind(spec, static_cast<int>(i)) == ParamKind::Gamma;
            const double hi = is_gamma ? std::numbers::pi : 2.0 * std::numbers::pi;
            out[i] = rng.uniform(0.0, hi);
        }
    } else {
        throw std::invalid_argument("baseline_update: strategy must be nonQIm or RR");
    }
    return out;
}

RunRecord run_optimizer(const AnsatzSpec& spec, const Graph& g, const OptimizerConfig& cfg,
                        const std::optional<MutationProfile>& profile)
{
    spec.validate();
    if (cfg.iterations < 1)
        throw std::invalid_argument("run_optimizer: iterations must be >= 1");
    if (!(cfg.s_m > 0.0))
        throw std::invalid_argument("run_optimizer: s_m must be positive");
    if (cfg.strategy == Strategy::QIm) {
        if (!profile)
            throw std::invalid_argument("run_optimizer: QIm requires a mutation profile");
        if (profile->d.size() != static_cast<std::size_t>(spec.param_count()))
            throw std::invalid_argument("run_optimizer: profile dimension mismatch");
    }

    Rng rng(cfg.seed);
    const int m = spec.param_count();
    ParameterVector params(static_cast<std::size_t>(m));
    for (double& p : params)
        p = rng.uniform(0.0, 2.0 * std::numbers::pi);

    double current = expected_cut(prepare_state(spec, params), g);
    double best = current;
    RunRecord rec;
    rec.objective_trace.reserve(static_cast<std::size_t>(cfg.iterations));
    rec.best_iteration = 0;

    // QIm refines its incumbent greedily; the baselines are non-selective by
    // construction (nonQIm wanders, RR restarts), so their proposals always
    // replace the incumbent and only the trace tracks the best value seen.
    for (int t = 1; t <= cfg.iterations; ++t) {
        ParameterVector proposal = cfg.strategy == Strategy::QIm
                                       ? qim_update(params, *profile, rng)
                                       : baseline_update(params, spec, cfg, rng);
        const double value = expected_cut(prepare_state(spec, proposal), g);
        const bool accept = cfg.strategy == Strategy::QIm ? value > current : true;
        if (accept) {
            params = std::move(proposal);
            current = value;
        }
        if (value > best) {
            best = value;
            rec.best_iteration = t;
        }
        rec.objective_trace.push_back(best);
    }

    rec.final_params = std::move(params);
    rec.final_objective = current;
    return rec;
}

namespace {

double quantile(const std::vector<double>& sorted, double p)
{
    const std::size_t n = sorted.size();
    if (n == 1)
        return sorted[0];
    const double pos = p * static_cast<double>(n - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, n - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

StrategyStats stats_from_finals(Strategy strategy, std::vector<double> finals)
{
    std::sort(finals.begin(), finals.end());
    const std::size_t n = finals.size();
    double mean = 0.0;
    for (double v : finals)
        mean += v;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double v : finals)
        var += (v - mean) * (v - mean);
    var = n > 1 ? var / static_cast<double>(n - 1) : 0.0;

    StrategyStats s;
    s.strategy = strategy;
    s.mean = mean;
    s.variance = var;
    s.q1 = quantile(finals, 0.25);
    s.median = quantile(finals, 0.5);
    s.q3 = quantile(finals, 0.75);
    s.min = finals.front();
    s.max = finals.back();
    return s;
}

BenchmarkResult benchmark_impl(const AnsatzSpec& spec, const Graph& g,
                               std::span<const Strategy> strategies, int runs, int iterations,
                               const std::optional<MutationProfile>& profile, double s_m,
                               int jobs,
                               const std::function<std::uint64_t(Strategy, int)>& seed_for)
{
    if (runs < 2)
        throw std::invalid_argument("benchmark: need at least 2 runs");

    BenchmarkResult result;
    result.rows.resize(strategies.size() * static_cast<std::size_t>(runs));

    parallel_for(result.rows.size(), jobs, [&](std::size_t idx) {
        const std::size_t si = idx / static_cast<std::size_t>(runs);
        const int run = static_cast<int>(idx % static_cast<std::size_t>(runs));
        OptimizerConfig cfg;
        cfg.strategy = strategies[si];
        cfg.iterations = iterations;
        cfg.s_m = s_m;
        cfg.seed = seed_for(strategies[si], run);
        const RunRecord rec = run_optimizer(spec, g, cfg, profile);
        BenchRow& row = result.rows[idx];
        row.strategy = strategies[si];
        row.run_index = run;
        row.seed = cfg.seed;
        row.final_eev = rec.final_objective;
        row.best_iteration = rec.best_iteration;
    });

    for (std::size_t si = 0; si < strategies.size(); ++si) {
        std::vector<double> finals;
        finals.reserve(static_cast<std::size_t>(runs));
        for (int run = 0; run < runs; ++run)
            finals.push_back(result.rows[si * static_cast<std::size_t>(runs) +
                                         static_cast<std::size_t>(run)].final_eev);
        result.stats.push_back(stats_from_finals(strategies[si], std::move(finals)));
    }
    return result;
}

} // namespace

BenchmarkResult benchmark(const AnsatzSpec& spec, const Graph& g,
                          std::span<const Strategy> strategies, int runs, int iterations,
                          std::uint64_t seed, const std::optional<MutationProfile>& profile,
                          double s_m, int jobs)
{
    return benchmark_impl(spec, g, strategies, runs, iterations, profile, s_m, jobs,
                          [seed](Strategy s, int run) {
                              return derive_stream(seed ^ fnv1a64(to_string(s)),
                                                   static_cast<std::uint64_t>(run));
                          });
}

BenchmarkResult benchmark_with_seeds(const AnsatzSpec& spec, const Graph& g,
                                     std::span<const Strategy> strategies,
                                     std::span<const std::uint64_t> run_seeds, int iterations,
                                     const std::optional<MutationProfile>& profile,
                                     double s_m, int jobs)
{
    return benchmark_impl(spec, g, strategies, static_cast<int>(run_seeds.size()), iterations,
                          profile, s_m, jobs, [run_seeds](Strategy, int run) {
                              return run_seeds[static_cast<std::size_t>(run)];
                          });
}

} // namespace qaoa
