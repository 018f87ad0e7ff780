#pragma once

#include "qaoa/ansatz.hpp"
#include "qaoa/graph.hpp"
#include "qaoa/rng.hpp"
#include "qaoa/statevector.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace test_helpers {

// Basis state from a bit string read left-to-right as qubit 0, 1, ...
// (qubit 0 is the least-significant bit of the index).
inline qaoa::Statevector ket(const std::string& bits)
{
    qaoa::Statevector s;
    s.n_qubits = static_cast<int>(bits.size());
    s.amps.assign(1ull << bits.size(), {0.0, 0.0});
    std::uint64_t idx = 0;
    for (std::size_t q = 0; q < bits.size(); ++q)
        if (bits[q] == '1')
            idx |= 1ull << q;
    s.amps[idx] = {1.0, 0.0};
    return s;
}

inline double max_amp_diff(const qaoa::Statevector& a, const qaoa::Statevector& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("max_amp_diff: size mismatch");
    double worst = 0.0;
    for (std::size_t x = 0; x < a.size(); ++x)
        worst = std::max(worst, std::abs(a.amps[x] - b.amps[x]));
    return worst;
}

// Independent enumeration oracles: everything below works directly on basis
// indices, bypassing the simulator.

inline int cut_count(const qaoa::Graph& g, std::uint64_t x)
{
    int cut = 0;
    for (const auto& [i, j] : g.edges)
        cut += static_cast<int>(((x >> i) ^ (x >> j)) & 1u);
    return cut;
}

// Eigenvalue of sum_{(i,j) in E} Z_i Z_j on basis state x.
inline int zz_sum_coeff(const qaoa::Graph& g, std::uint64_t x)
{
    return g.edge_count() - 2 * cut_count(g, x);
}

// <+|^n (sum_E Z_i Z_j)^2 |+>^n by brute-force enumeration.
inline double plus_state_hp_square(const qaoa::Graph& g)
{
    const std::uint64_t dim = 1ull << g.n_nodes;
    double acc = 0.0;
    for (std::uint64_t x = 0; x < dim; ++x) {
        const double c = static_cast<double>(zz_sum_coeff(g, x));
        acc += c * c;
    }
    return acc / static_cast<double>(dim);
}

// Central finite difference of prepare_state along parameter k.
inline qaoa::Statevector fd_derivative(const qaoa::AnsatzSpec& spec,
                                       const qaoa::ParameterVector& params, int k, double eps)
{
    qaoa::ParameterVector up = params;
    qaoa::ParameterVector down = params;
    up[static_cast<std::size_t>(k)] += eps;
    down[static_cast<std::size_t>(k)] -= eps;
    const qaoa::Statevector plus = qaoa::prepare_state(spec, up);
    const qaoa::Statevector minus = qaoa::prepare_state(spec, down);
    qaoa::Statevector out;
    out.n_qubits = plus.n_qubits;
    out.amps.resize(plus.size());
    for (std::size_t x = 0; x < out.size(); ++x)
        out.amps[x] = (plus.amps[x] - minus.amps[x]) / (2.0 * eps);
    return out;
}

inline qaoa::ParameterVector random_params(const qaoa::AnsatzSpec& spec, qaoa::Rng& rng)
{
    qaoa::ParameterVector p(static_cast<std::size_t>(spec.param_count()));
    for (double& v : p)
        v = rng.uniform(0.0, 2.0 * std::numbers::pi);
    return p;
}

inline qaoa::AnsatzSpec make_spec(int n, qaoa::Topology topology, qaoa::Mixer mixer, int depth,
                                  qaoa::EntPattern pattern, int stages)
{
    qaoa::AnsatzSpec spec;
    spec.n_qubits = n;
    spec.depth = depth;
    spec.mixer = mixer;
    spec.ent_pattern = pattern;
    spec.ent_stages = stages;
    spec.graph = topology == qaoa::Topology::Cyclic ? qaoa::cyclic_graph(n)
                                                    : qaoa::complete_graph(n);
    return spec;
}

// All (mixer, pattern, depth) combinations; entangled patterns get one stage
// per layer.
inline std::vector<qaoa::AnsatzSpec> all_configs(int n, qaoa::Topology topology)
{
    std::vector<qaoa::AnsatzSpec> out;
    for (qaoa::Mixer mixer : {qaoa::Mixer::Rx, qaoa::Mixer::RxRy})
        for (qaoa::EntPattern pattern :
             {qaoa::EntPattern::None, qaoa::EntPattern::Cyclic, qaoa::EntPattern::Complete})
            for (int depth = 1; depth <= 3; ++depth)
                out.push_back(make_spec(n, topology, mixer, depth, pattern,
                                        pattern == qaoa::EntPattern::None ? 0 : depth));
    return out;
}

} // namespace test_helpers
