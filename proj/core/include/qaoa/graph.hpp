#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace qaoa {

enum class Topology { Cyclic, Complete };

std::string to_string(Topology t);
Topology topology_from_string(const std::string& s);

/// Unit-weight undirected Max-Cut instance.
///
/// Edges are stored with i < j and sorted lexicographically so that circuit
/// construction order is deterministic. Immutable after construction.
struct Graph {
    int n_nodes = 0;
    std::vector<std::pair<int, int>> edges;
    Topology topology = Topology::Cyclic;

    int edge_count() const { return static_cast<int>(edges.size()); }
};

/// Ring graph on n nodes (n >= 3; a 2-ring would duplicate an edge).
Graph cyclic_graph(int n);

/// All-to-all graph on n nodes (n >= 2).
Graph complete_graph(int n);

void to_json(nlohmann::ordered_json& j, const Graph& g);
Graph graph_from_json(const nlohmann::ordered_json& j);

} // namespace qaoa
