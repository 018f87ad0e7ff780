#include "qaoa/ansatz.hpp"
#include "qaoa/graph.hpp"
#include "qaoa/jacobi.hpp"
#include "qaoa/qfi.hpp"
#include "qaoa/qim.hpp"
#include "qaoa/rng.hpp"

#include <benchmark/benchmark.h>

#include <numbers>

namespace {

using namespace qaoa;

AnsatzSpec bench_spec(int n)
{
    AnsatzSpec spec;
    spec.n_qubits = n;
    spec.depth = 3;
    spec.mixer = Mixer::RxRy;
    spec.ent_pattern = EntPattern::Complete;
    spec.ent_stages = 3;
    spec.graph = complete_graph(n);
    return spec;
}

ParameterVector bench_params(const AnsatzSpec& spec, std::uint64_t seed)
{
    Rng rng(seed);
    ParameterVector p(static_cast<std::size_t>(spec.param_count()));
    for (double& v : p)
        v = rng.uniform(0.0, 2.0 * std::numbers::pi);
    return p;
}

void BM_PrepareState(benchmark::State& state)
{
    const AnsatzSpec spec = bench_spec(static_cast<int>(state.range(0)));
    const ParameterVector params = bench_params(spec, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(prepare_state(spec, params));
}
BENCHMARK(BM_PrepareState)->Arg(7)->Arg(10)->Arg(12);

void BM_QfiMatrix(benchmark::State& state)
{
    const AnsatzSpec spec = bench_spec(static_cast<int>(state.range(0)));
    const ParameterVector params = bench_params(spec, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(qfi_matrix(spec, params));
}
BENCHMARK(BM_QfiMatrix)->Arg(7)->Arg(10);

void BM_FdOracle(benchmark::State& state)
{
    const AnsatzSpec spec = bench_spec(7);
    const ParameterVector params = bench_params(spec, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(qfi_fd_oracle(spec, params, 1e-4));
}
BENCHMARK(BM_FdOracle);

void BM_ExpectedCut(benchmark::State& state)
{
    const AnsatzSpec spec = bench_spec(static_cast<int>(state.range(0)));
    const Statevector psi = prepare_state(spec, bench_params(spec, 4));
    for (auto _ : state)
        benchmark::DoNotOptimize(expected_cut(psi, spec.graph));
}
BENCHMARK(BM_ExpectedCut)->Arg(10)->Arg(12);

void BM_JacobiEigenvalues(benchmark::State& state)
{
    const AnsatzSpec spec = bench_spec(7);
    const QfiMatrix f = qfi_matrix(spec, bench_params(spec, 5));
    for (auto _ : state)
        benchmark::DoNotOptimize(jacobi_eigenvalues(f.dim, f.data));
}
BENCHMARK(BM_JacobiEigenvalues);

void BM_AveragedQfi(benchmark::State& state)
{
    const AnsatzSpec spec = bench_spec(7);
    for (auto _ : state)
        benchmark::DoNotOptimize(averaged_qfi(spec, 10, 6));
}
BENCHMARK(BM_AveragedQfi);

} // namespace

BENCHMARK_MAIN();
