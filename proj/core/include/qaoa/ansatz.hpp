#pragma once

#include "qaoa/graph.hpp"
#include "qaoa/statevector.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace qaoa {

enum class Mixer { Rx, RxRy };
enum class EntPattern { None, Cyclic, Complete };

std::string to_string(Mixer m);
std::string to_string(EntPattern p);
Mixer mixer_from_string(const std::string& s);
EntPattern ent_pattern_from_string(const std::string& s);

/// Full circuit recipe. One layer is: phase block (RZZ(2*gamma) on every
/// graph edge), then the mixer block. The RX family orders a layer as
/// [ent stage][RX(2*beta) on all qubits]; the RX-RY family as
/// [RX(2*betaX) on all][ent stage][RY(2*betaY) on all]. Entanglement stages
/// occupy the first `ent_stages` layers.
struct AnsatzSpec {
    int n_qubits = 0;
    int depth = 1; // 1..3
    Mixer mixer = Mixer::Rx;
    EntPattern ent_pattern = EntPattern::None;
    int ent_stages = 0; // 0..depth; 0 iff ent_pattern == None
    Graph graph;

    /// 2*depth for RX, 3*depth for RX-RY.
    int param_count() const;

    /// Throws std::invalid_argument on any violated field constraint.
    void validate() const;
};

/// Angles in radians, ordered per layer as (gamma_k, beta_k) for the RX
/// family and (gamma_k, betaX_k, betaY_k) for RX-RY.
using ParameterVector = std::vector<double>;

enum class ParamKind { Gamma, BetaX, BetaY };

ParamKind param_kind(const AnsatzSpec& spec, int index);

/// CNOT (control, target) sequence of one entanglement stage. Cyclic:
/// (0,1),(1,2),...,(n-1,0). Complete: controls ascending, targets ascending
/// within each control. Empty for EntPattern::None.
std::vector<std::pair<int, int>> ent_stage_pairs(EntPattern pattern, int n);

/// |psi(params)> from |+>^n through `depth` layers.
Statevector prepare_state(const AnsatzSpec& spec, const ParameterVector& params);

/// Hermitian generators of the parametric layers, as Pauli sums:
/// sum of Z_i Z_j over graph edges, sum of X_i, sum of Y_i.
std::vector<PauliTerm> cost_generator(const Graph& g);
std::vector<PauliTerm> x_sum_generator(int n);
std::vector<PauliTerm> y_sum_generator(int n);

/// prepare_state with (-i) * generator of parameter k inserted right after
/// the layer that parameter generates; the exact, unnormalized |d_k psi>.
Statevector derivative_state(const AnsatzSpec& spec, const ParameterVector& params, int k);

void to_json(nlohmann::ordered_json& j, const AnsatzSpec& spec);
AnsatzSpec ansatz_from_json(const nlohmann::ordered_json& j);

} // namespace qaoa
