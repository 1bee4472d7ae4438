#pragma once

#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "vnge/errors.hpp"

namespace vnge {

using NodeId = std::uint32_t;

/// Canonical unordered-pair key: smaller id in the high word.
using EdgeKey = std::uint64_t;

inline EdgeKey edge_key(NodeId u, NodeId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

inline std::pair<NodeId, NodeId> edge_endpoints(EdgeKey key) {
    return {static_cast<NodeId>(key >> 32), static_cast<NodeId>(key & 0xffffffffULL)};
}

/// Weights at or below this magnitude count as "no edge"; averaging and
/// delta arithmetic can leave residue of this size on logically deleted
/// edges.
inline constexpr double kWeightEpsilon = 1e-15;

using EdgeMap = std::unordered_map<EdgeKey, double>;
using NodeSet = std::unordered_set<NodeId>;

/// Undirected weighted simple graph with strictly positive edge weights.
/// Nodes without incident edges are legal and retained; self-loops and
/// nonpositive weights are rejected. Immutable use after construction is
/// thread-safe.
class Graph {
public:
    Graph() = default;

    void add_node(NodeId v) { nodes_.insert(v); }

    /// Inserts edge (u,v) with weight w > 0. Throws InvalidSpec on
    /// self-loops, duplicate edges, or nonpositive weight.
    void add_edge(NodeId u, NodeId v, double w);

    /// Removes an existing edge; endpoints stay in the node set.
    void remove_edge(NodeId u, NodeId v);

    bool has_node(NodeId v) const { return nodes_.contains(v); }
    bool has_edge(NodeId u, NodeId v) const { return edges_.contains(edge_key(u, v)); }

    /// Weight of (u,v), or 0 when the edge is absent.
    double edge_weight(NodeId u, NodeId v) const {
        auto it = edges_.find(edge_key(u, v));
        return it == edges_.end() ? 0.0 : it->second;
    }

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const NodeSet& nodes() const { return nodes_; }
    const EdgeMap& edges() const { return edges_; }

    /// Node ids in ascending order (dense indexing for matrix builds).
    std::vector<NodeId> sorted_nodes() const;

    bool operator==(const Graph& other) const {
        return nodes_ == other.nodes_ && edges_ == other.edges_;
    }

private:
    NodeSet nodes_;
    EdgeMap edges_;
};

/// Per-node strengths s_i = sum of incident weights, their total
/// S = trace(L) = 2 * sum of edge weights, and the maximum entry.
struct StrengthVector {
    std::unordered_map<NodeId, double> strength; // every node, isolated -> 0
    double total = 0.0;                          // S
    double max_strength = 0.0;                   // s_max
    NodeId max_node = 0;                         // one holder of s_max
};

/// Computes nodal strengths. Throws EdgelessGraph when the graph has no
/// edges (S = 0 leaves the normalization c = 1/S undefined).
StrengthVector strengths(const Graph& g);

/// Signed edge-weight changes turning a graph G into G (+) DG. Strength
/// deltas are derived from the edge deltas at construction, so the
/// consistency invariant ds_i = sum over incident changed edges holds by
/// construction.
class DeltaGraph {
public:
    struct EdgeDelta {
        NodeId u, v;
        double dw;
    };

    DeltaGraph() = default;

    /// Aggregates a list of edge deltas (repeated pairs sum). Self-loops
    /// are rejected; entries that cancel to |dw| <= kWeightEpsilon are
    /// dropped.
    static DeltaGraph from_edge_deltas(const std::vector<EdgeDelta>& deltas);

    const EdgeMap& edge_deltas() const { return edge_deltas_; }
    const std::unordered_map<NodeId, double>& strength_deltas() const { return strength_deltas_; }

    std::size_t delta_n() const { return strength_deltas_.size(); }
    std::size_t delta_m() const { return edge_deltas_.size(); }
    /// Total strength change DS = 2 * sum of edge-weight deltas.
    double delta_s() const { return delta_s_; }

    bool empty() const { return edge_deltas_.empty(); }

    DeltaGraph negated() const;
    /// All deltas halved; realizes DG/2 for the averaged midpoint graph.
    DeltaGraph halved() const;

private:
    EdgeMap edge_deltas_;
    std::unordered_map<NodeId, double> strength_deltas_;
    double delta_s_ = 0.0;
};

/// G (+) DG with W' = W + DW. Edges whose weight lands at (or within
/// kWeightEpsilon of) zero are removed; nodes are never removed. Throws
/// NegativeResultingWeight when any updated weight would be negative.
Graph apply_delta(const Graph& g, const DeltaGraph& d);

/// Averaged graph over the union node set: each weight is the arithmetic
/// mean of the two weights, absent edges contributing 0.
Graph average_graph(const Graph& g1, const Graph& g2);

/// Delta whose application turns `from` into `to`, edge-wise. Nodes of
/// `to` untouched by any edge change are not represented (they carry no
/// weight and no entropy).
DeltaGraph delta_between(const Graph& from, const Graph& to);

} // namespace vnge
