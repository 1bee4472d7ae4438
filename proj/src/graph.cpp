#include "vnge/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vnge/numeric.hpp"

namespace vnge {

void Graph::add_edge(NodeId u, NodeId v, double w) {
    if (u == v)
        throw InvalidSpec("self-loop on node " + std::to_string(u));
    if (!(w > 0.0) || !std::isfinite(w))
        throw InvalidSpec("edge weight must be a positive finite number, got " + std::to_string(w));
    auto [it, inserted] = edges_.emplace(edge_key(u, v), w);
    if (!inserted)
        throw InvalidSpec("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    nodes_.insert(u);
    nodes_.insert(v);
}

void Graph::remove_edge(NodeId u, NodeId v) {
    if (edges_.erase(edge_key(u, v)) == 0)
        throw InvalidSpec("cannot remove absent edge (" + std::to_string(u) + "," +
                          std::to_string(v) + ")");
}

std::vector<NodeId> Graph::sorted_nodes() const {
    std::vector<NodeId> out(nodes_.begin(), nodes_.end());
    std::sort(out.begin(), out.end());
    return out;
}

StrengthVector strengths(const Graph& g) {
    if (g.edge_count() == 0)
        throw EdgelessGraph();

    StrengthVector sv;
    sv.strength.reserve(g.node_count());
    for (NodeId v : g.nodes())
        sv.strength.emplace(v, 0.0);
    for (const auto& [key, w] : g.edges()) {
        auto [u, v] = edge_endpoints(key);
        sv.strength[u] += w;
        sv.strength[v] += w;
    }

    KahanSum total;
    sv.max_strength = -1.0;
    for (const auto& [node, s] : sv.strength) {
        total.add(s);
        if (s > sv.max_strength || (s == sv.max_strength && node < sv.max_node)) {
            sv.max_strength = s;
            sv.max_node = node;
        }
    }
    sv.total = total.value();
    return sv;
}

DeltaGraph DeltaGraph::from_edge_deltas(const std::vector<EdgeDelta>& deltas) {
    DeltaGraph d;
    for (const auto& e : deltas) {
        if (e.u == e.v)
            throw InvalidSpec("self-loop delta on node " + std::to_string(e.u));
        if (!std::isfinite(e.dw))
            throw InvalidSpec("non-finite weight delta");
        d.edge_deltas_[edge_key(e.u, e.v)] += e.dw;
    }
    // Drop entries that cancelled out, then derive strength deltas.
    for (auto it = d.edge_deltas_.begin(); it != d.edge_deltas_.end();) {
        if (std::abs(it->second) <= kWeightEpsilon)
            it = d.edge_deltas_.erase(it);
        else
            ++it;
    }
    KahanSum ds;
    for (const auto& [key, dw] : d.edge_deltas_) {
        auto [u, v] = edge_endpoints(key);
        d.strength_deltas_[u] += dw;
        d.strength_deltas_[v] += dw;
        ds.add(2.0 * dw);
    }
    d.delta_s_ = ds.value();
    return d;
}

DeltaGraph DeltaGraph::negated() const {
    DeltaGraph d;
    d.edge_deltas_ = edge_deltas_;
    for (auto& [key, dw] : d.edge_deltas_) dw = -dw;
    d.strength_deltas_ = strength_deltas_;
    for (auto& [node, ds] : d.strength_deltas_) ds = -ds;
    d.delta_s_ = -delta_s_;
    return d;
}

DeltaGraph DeltaGraph::halved() const {
    DeltaGraph d;
    d.edge_deltas_ = edge_deltas_;
    for (auto& [key, dw] : d.edge_deltas_) dw *= 0.5;
    d.strength_deltas_ = strength_deltas_;
    for (auto& [node, ds] : d.strength_deltas_) ds *= 0.5;
    d.delta_s_ = 0.5 * delta_s_;
    return d;
}

Graph apply_delta(const Graph& g, const DeltaGraph& d) {
    Graph out = g;
    for (const auto& [node, ds] : d.strength_deltas())
        out.add_node(node);
    for (const auto& [key, dw] : d.edge_deltas()) {
        auto [u, v] = edge_endpoints(key);
        double w_new = g.edge_weight(u, v) + dw;
        if (w_new < -kWeightEpsilon)
            throw NegativeResultingWeight("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                          ") would get negative weight " + std::to_string(w_new));
        if (out.has_edge(u, v))
            out.remove_edge(u, v);
        if (w_new > kWeightEpsilon)
            out.add_edge(u, v, w_new);
    }
    return out;
}

DeltaGraph delta_between(const Graph& from, const Graph& to) {
    std::vector<DeltaGraph::EdgeDelta> deltas;
    for (const auto& [key, w] : from.edges()) {
        auto [u, v] = edge_endpoints(key);
        const double dw = to.edge_weight(u, v) - w;
        if (dw != 0.0)
            deltas.push_back({u, v, dw});
    }
    for (const auto& [key, w] : to.edges()) {
        auto [u, v] = edge_endpoints(key);
        if (!from.has_edge(u, v))
            deltas.push_back({u, v, w});
    }
    return DeltaGraph::from_edge_deltas(deltas);
}

Graph average_graph(const Graph& g1, const Graph& g2) {
    Graph out;
    for (NodeId v : g1.nodes()) out.add_node(v);
    for (NodeId v : g2.nodes()) out.add_node(v);
    for (const auto& [key, w] : g1.edges()) {
        auto [u, v] = edge_endpoints(key);
        out.add_edge(u, v, 0.5 * (w + g2.edge_weight(u, v)));
    }
    for (const auto& [key, w] : g2.edges()) {
        auto [u, v] = edge_endpoints(key);
        if (!g1.has_edge(u, v))
            out.add_edge(u, v, 0.5 * w);
    }
    return out;
}

} // namespace vnge
