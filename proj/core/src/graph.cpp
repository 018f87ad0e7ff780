#include "qaoa/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace qaoa {

std::string to_string(Topology t)
{
    return t == Topology::Cyclic ? "cyclic" : "complete";
}

Topology topology_from_string(const std::string& s)
{
    if (s == "cyclic") return Topology::Cyclic;
    if (s == "complete") return Topology::Complete;
    throw std::invalid_argument("unknown topology: " + s);
}

Graph cyclic_graph(int n)
{
    if (n < 3)
        throw std::invalid_argument("cyclic_graph: need n >= 3, got " + std::to_string(n));
    Graph g;
    g.n_nodes = n;
    g.topology = Topology::Cyclic;
    g.edges.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        int a = k;
        int b = (k + 1) % n;
        g.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

Graph complete_graph(int n)
{
    if (n < 2)
        throw std::invalid_argument("complete_graph: need n >= 2, got " + std::to_string(n));
    Graph g;
    g.n_nodes = n;
    g.topology = Topology::Complete;
    g.edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.edges.emplace_back(i, j);
    return g;
}

void to_json(nlohmann::ordered_json& j, const Graph& g)
{
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const auto& [a, b] : g.edges)
        edges.push_back({a, b});
    j = nlohmann::ordered_json{
        {"n", g.n_nodes},
        {"topology", to_string(g.topology)},
        {"edges", std::move(edges)},
    };
}

Graph graph_from_json(const nlohmann::ordered_json& j)
{
    Graph g;
    g.n_nodes = j.at("n").get<int>();
    g.topology = topology_from_string(j.at("topology").get<std::string>());
    for (const auto& e : j.at("edges"))
        g.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
}

} // namespace qaoa
