#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "vnge/generators.hpp"
#include "vnge/graph.hpp"
#include "vnge/rng.hpp"

namespace vnge::testutil {

inline Graph complete_graph(std::uint32_t n, double w = 1.0) {
    Graph g;
    for (NodeId u = 0; u < n; ++u) {
        g.add_node(u);
        for (NodeId v = u + 1; v < n; ++v)
            g.add_edge(u, v, w);
    }
    return g;
}

inline Graph path_graph(std::uint32_t n, double w = 1.0) {
    Graph g;
    g.add_node(0);
    for (NodeId v = 1; v < n; ++v)
        g.add_edge(v - 1, v, w);
    return g;
}

/// Star with node 0 at the center.
inline Graph star_graph(std::uint32_t leaves, double w = 1.0) {
    Graph g;
    g.add_node(0);
    for (NodeId v = 1; v <= leaves; ++v)
        g.add_edge(0, v, w);
    return g;
}

/// Independent connected-component count; oracle for the n_plus = n - g
/// identity.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x)
            x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }
    std::size_t components() {
        std::size_t count = 0;
        for (std::size_t i = 0; i < parent_.size(); ++i)
            if (find(i) == i)
                ++count;
        return count;
    }

private:
    std::vector<std::size_t> parent_;
};

inline std::size_t component_count(const Graph& g) {
    const std::vector<NodeId> nodes = g.sorted_nodes();
    std::vector<std::size_t> index(nodes.empty() ? 0 : nodes.back() + 1);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        index[nodes[i]] = i;
    UnionFind uf(nodes.size());
    for (const auto& [key, w] : g.edges()) {
        auto [u, v] = edge_endpoints(key);
        uf.unite(index[u], index[v]);
    }
    return uf.components();
}

/// A random graph from a rotating mix of the three models, sized for fast
/// property sweeps.
inline Graph random_mixed_graph(std::size_t which, std::uint32_t n, std::uint64_t seed) {
    ModelSpec spec;
    spec.n = n;
    spec.seed = seed;
    switch (which % 3) {
    case 0:
        spec.model = Model::er;
        spec.avg_degree = 4.0 + static_cast<double>(which % 5) * 3.0;
        break;
    case 1:
        spec.model = Model::ba;
        spec.avg_degree = 4.0 + static_cast<double>(which % 4) * 2.0;
        break;
    default:
        spec.model = Model::ws;
        spec.avg_degree = 4.0 + 2.0 * static_cast<double>(which % 3);
        spec.p_ws = 0.1 + 0.2 * static_cast<double>(which % 4);
        break;
    }
    return generate(spec);
}

/// Uniformly random churn: deletes `remove` existing edges and adds `add`
/// new unit-weight edges between existing nodes.
inline Graph churn_edges(const Graph& g, std::size_t remove, std::size_t add, Rng& rng) {
    Graph out = g;
    std::vector<EdgeKey> keys;
    keys.reserve(out.edge_count());
    for (const auto& [key, w] : out.edges())
        keys.push_back(key);
    for (std::size_t i = 0; i < remove && !keys.empty(); ++i) {
        const std::size_t j = rng.index(keys.size());
        auto [u, v] = edge_endpoints(keys[j]);
        out.remove_edge(u, v);
        keys[j] = keys.back();
        keys.pop_back();
    }
    const std::vector<NodeId> nodes = out.sorted_nodes();
    std::size_t added = 0, attempts = 0;
    while (added < add && attempts++ < 100 * add + 100) {
        const NodeId u = nodes[rng.index(nodes.size())];
        const NodeId v = nodes[rng.index(nodes.size())];
        if (u == v || out.has_edge(u, v))
            continue;
        out.add_edge(u, v, 1.0);
        ++added;
    }
    return out;
}

} // namespace vnge::testutil
