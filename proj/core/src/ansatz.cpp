#include "qaoa/ansatz.hpp"

#include <stdexcept>

namespace qaoa {

std::string to_string(Mixer m)
{
    return m == Mixer::Rx ? "rx" : "rxry";
}

std::string to_string(EntPattern p)
{
    switch (p) {
    case EntPattern::None: return "none";
    case EntPattern::Cyclic: return "cyclic";
    default: return "complete";
    }
}

Mixer mixer_from_string(const std::string& s)
{
    if (s == "rx") return Mixer::Rx;
    if (s == "rxry") return Mixer::RxRy;
    throw std::invalid_argument("unknown mixer: " + s);
}

EntPattern ent_pattern_from_string(const std::string& s)
{
    if (s == "none") return EntPattern::None;
    if (s == "cyclic") return EntPattern::Cyclic;
    if (s == "complete") return EntPattern::Complete;
    throw std::invalid_argument("unknown ent_pattern: " + s);
}

int AnsatzSpec::param_count() const
{
    return depth * (mixer == Mixer::Rx ? 2 : 3);
}

void AnsatzSpec::validate() const
{
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw std::invalid_argument("AnsatzSpec: n_qubits must be in [1, " +
                                    std::to_string(kMaxQubits) + "]");
    if (depth < 1 || depth > 3)
        throw std::invalid_argument("AnsatzSpec: depth must be in {1,2,3}");
    if (ent_stages < 0 || ent_stages > depth)
        throw std::invalid_argument("AnsatzSpec: ent_stages must be in [0, depth]");
    if ((ent_pattern == EntPattern::None) != (ent_stages == 0))
        throw std::invalid_argument("AnsatzSpec: ent_pattern is none iff ent_stages is 0");
    if (graph.n_nodes != n_qubits)
        throw std::invalid_argument("AnsatzSpec: graph node count must equal n_qubits");
}

ParamKind param_kind(const AnsatzSpec& spec, int index)
{
    if (index < 0 || index >= spec.param_count())
        throw std::invalid_argument("param_kind: index out of range");
    const int per = spec.mixer == Mixer::Rx ? 2 : 3;
    switch (index % per) {
    case 0: return ParamKind::Gamma;
    case 1: return ParamKind::BetaX;
    default: return ParamKind::BetaY;
    }
}

std::vector<std::pair<int, int>> ent_stage_pairs(EntPattern pattern, int n)
{
    std::vector<std::pair<int, int>> pairs;
    switch (pattern) {
    case EntPattern::None:
        break;
    case EntPattern::Cyclic:
        for (int k = 0; k < n; ++k)
            pairs.emplace_back(k, (k + 1) % n);
        break;
    case EntPattern::Complete:
        for (int c = 0; c < n; ++c)
            for (int t = c + 1; t < n; ++t)
                pairs.emplace_back(c, t);
        break;
    }
    return pairs;
}

std::vector<PauliTerm> cost_generator(const Graph& g)
{
    std::vector<PauliTerm> terms;
    terms.reserve(g.edges.size());
    for (const auto& [i, j] : g.edges)
        terms.push_back({complex_t(1.0, 0.0), {{i, Pauli::Z}, {j, Pauli::Z}}});
    return terms;
}

std::vector<PauliTerm> x_sum_generator(int n)
{
    std::vector<PauliTerm> terms;
    terms.reserve(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q)
        terms.push_back({complex_t(1.0, 0.0), {{q, Pauli::X}}});
    return terms;
}

std::vector<PauliTerm> y_sum_generator(int n)
{
    std::vector<PauliTerm> terms;
    terms.reserve(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q)
        terms.push_back({complex_t(1.0, 0.0), {{q, Pauli::Y}}});
    return terms;
}

namespace {

void apply_phase_layer(Statevector& sv, const Graph& g, double gamma)
{
    for (const auto& [i, j] : g.edges)
        apply_rzz(sv, i, j, 2.0 * gamma);
}

void apply_ent_stage(Statevector& sv, EntPattern pattern, int n)
{
    for (const auto& [c, t] : ent_stage_pairs(pattern, n))
        apply_cnot(sv, c, t);
}

void insert_generator(Statevector& sv, const std::vector<PauliTerm>& gen)
{
    sv = apply_pauli_sum(sv, gen);
    for (complex_t& a : sv.amps)
        a *= complex_t(0.0, -1.0);
}

// Runs the circuit; when insert_k >= 0, applies (-i) * G_k immediately after
// the sub-layer generated by parameter insert_k. Each sub-layer commutes
// with its own generator, so this yields the exact derivative state.
Statevector run_circuit(const AnsatzSpec& spec, const ParameterVector& params, int insert_k)
{
    spec.validate();
    if (static_cast<int>(params.size()) != spec.param_count())
        throw std::invalid_argument("parameter vector length " + std::to_string(params.size()) +
                                    " does not match spec parameter count " +
                                    std::to_string(spec.param_count()));
    if (insert_k >= spec.param_count())
        throw std::invalid_argument("derivative index out of range");

    const int n = spec.n_qubits;
    const int per = spec.mixer == Mixer::Rx ? 2 : 3;
    Statevector sv = plus_state(n);

    for (int layer = 0; layer < spec.depth; ++layer) {
        const int base = layer * per;
        const bool staged = layer < spec.ent_stages;

        apply_phase_layer(sv, spec.graph, params[base]);
        if (insert_k == base)
            insert_generator(sv, cost_generator(spec.graph));

        if (spec.mixer == Mixer::Rx) {
            if (staged)
                apply_ent_stage(sv, spec.ent_pattern, n);
            for (int q = 0; q < n; ++q)
                apply_rx(sv, q, 2.0 * params[base + 1]);
            if (insert_k == base + 1)
                insert_generator(sv, x_sum_generator(n));
        } else {
            for (int q = 0; q < n; ++q)
                apply_rx(sv, q, 2.0 * params[base + 1]);
            if (insert_k == base + 1)
                insert_generator(sv, x_sum_generator(n));
            if (staged)
                apply_ent_stage(sv, spec.ent_pattern, n);
            for (int q = 0; q < n; ++q)
                apply_ry(sv, q, 2.0 * params[base + 2]);
            if (insert_k == base + 2)
                insert_generator(sv, y_sum_generator(n));
        }
    }
    return sv;
}

} // namespace

Statevector prepare_state(const AnsatzSpec& spec, const ParameterVector& params)
{
    return run_circuit(spec, params, -1);
}

Statevector derivative_state(const AnsatzSpec& spec, const ParameterVector& params, int k)
{
    if (k < 0)
        throw std::invalid_argument("derivative_state: k must be nonnegative");
    return run_circuit(spec, params, k);
}

void to_json(nlohmann::ordered_json& j, const AnsatzSpec& spec)
{
    nlohmann::ordered_json graph_json;
    to_json(graph_json, spec.graph);
    j = nlohmann::ordered_json{
        {"n", spec.n_qubits},
        {"depth", spec.depth},
        {"mixer", to_string(spec.mixer)},
        {"ent_pattern", to_string(spec.ent_pattern)},
        {"ent_stages", spec.ent_stages},
        {"graph", std::move(graph_json)},
    };
}

AnsatzSpec ansatz_from_json(const nlohmann::ordered_json& j)
{
    AnsatzSpec spec;
    spec.n_qubits = j.at("n").get<int>();
    spec.depth = j.at("depth").get<int>();
    spec.mixer = mixer_from_string(j.at("mixer").get<std::string>());
    spec.ent_pattern = ent_pattern_from_string(j.at("ent_pattern").get<std::string>());
    spec.ent_stages = j.at("ent_stages").get<int>();
    spec.graph = graph_from_json(j.at("graph"));
    return spec;
}

} // namespace qaoa
