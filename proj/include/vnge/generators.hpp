#pragma once

#include <cstdint>

#include "vnge/graph.hpp"
#include "vnge/rng.hpp"

namespace vnge {

enum class Model { er, ba, ws };

/// Parameters of a seeded random-graph draw. avg_degree drives the model
/// knobs: edge probability avg_degree/(n-1) for er, avg_degree/2 edges per
/// arriving node for ba, ring-lattice degree (must be even) for ws.
struct ModelSpec {
    Model model = Model::er;
    std::uint32_t n = 0;
    double avg_degree = 0.0;
    double p_ws = 0.0;       // ws rewiring probability, in [0, 1]
    std::uint64_t seed = 0;
};

/// Draws a unit-weight simple graph; bit-identical output for equal specs.
/// Model randomness comes from substream 1 of the seed (inject_dos uses
/// substream 2), so generation and injection never share draws.
/// Throws InvalidSpec on out-of-range parameters.
Graph generate(const ModelSpec& spec);

struct DosInjection {
    Graph graph;
    NodeId target = 0;
    std::size_t edges_added = 0; // requested count minus pre-existing edges
};

/// Connects ceil(x_percent * n / 100) distinct non-target nodes (capped at
/// n - 1) to a uniformly chosen target node with unit-weight edges,
/// skipping edges that already exist. Mimics many sources converging on
/// one victim at once.
DosInjection inject_dos(const Graph& g, double x_percent, std::uint64_t seed);

/// Synthesized anomaly experiment: a short sequence of churned snapshots
/// of one random graph, with a flood event injected into one snapshot.
struct DosStreamSpec {
    std::uint32_t n = 1000;
    double avg_degree = 10.0;
    std::size_t snapshots = 9;
    double churn_fraction = 0.01; // mean fraction of edges deleted (and added) per step
    double x_percent = 10.0;
    std::uint64_t seed = 0;
};

struct DosStream {
    std::vector<Graph> snapshots;
    std::size_t injected_snapshot = 0; // 0-based; always before the last snapshot
    NodeId target = 0;
};

/// Draws the base graph, evolves it by per-step random churn (realized
/// deletion/addition counts vary uniformly around the mean fraction), and
/// replaces one of the first snapshots-1 snapshots with its flooded copy.
/// The injection is transient: the next snapshot continues from the
/// unflooded graph.
DosStream synthesize_dos_stream(const DosStreamSpec& spec);

} // namespace vnge
