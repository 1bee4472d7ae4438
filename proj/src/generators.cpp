#include "vnge/generators.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>
#include <vector>

namespace vnge {

namespace {

constexpr std::uint64_t kGenerateStream = 1;
constexpr std::uint64_t kInjectStream = 2;
constexpr std::uint64_t kChurnStream = 3;

void validate(const ModelSpec& spec) {
    if (spec.n < 3)
        throw InvalidSpec("model needs n >= 3");
    if (spec.avg_degree < 1.0)
        throw InvalidSpec("model needs avg_degree >= 1");
    if (spec.avg_degree > static_cast<double>(spec.n - 1))
        throw InvalidSpec("avg_degree exceeds n - 1");
    if (spec.model == Model::ws) {
        const auto d = static_cast<std::uint64_t>(spec.avg_degree);
        if (static_cast<double>(d) != spec.avg_degree || d % 2 != 0)
            throw InvalidSpec("ws ring lattice needs an even integer avg_degree");
        if (spec.p_ws < 0.0 || spec.p_ws > 1.0)
            throw InvalidSpec("ws rewiring probability must lie in [0, 1]");
    }
}

Graph generate_er(std::uint32_t n, double p, Rng& rng) {
    Graph g;
    for (NodeId v = 0; v < n; ++v)
        g.add_node(v);
    if (p >= 1.0) {
        for (NodeId u = 0; u < n; ++u)
            for (NodeId v = u + 1; v < n; ++v)
                g.add_edge(u, v, 1.0);
        return g;
    }
    if (p <= 0.0)
        return g;

    // Geometric skipping over the linearized pair sequence: each gap
    // between successive edges is Geometric(p), so the work is O(n + m)
    // rather than O(n^2).
    const double log1mp = std::log1p(-p);
    const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    std::uint64_t idx = 0;
    // Row starts for decoding a linear pair index to (u, v).
    std::uint64_t row = 0, row_start = 0, row_len = n - 1;
    while (true) {
        double u01 = rng.unit();
        if (u01 >= 1.0)
            u01 = 0.0;
        const double skip = std::floor(std::log1p(-u01) / log1mp);
        idx += 1 + static_cast<std::uint64_t>(skip);
        if (idx > total)
            break;
        const std::uint64_t pos = idx - 1; // 0-based pair index
        while (pos >= row_start + row_len) {
            row_start += row_len;
            --row_len;
            ++row;
        }
        const auto u = static_cast<NodeId>(row);
        const auto v = static_cast<NodeId>(row + 1 + (pos - row_start));
        g.add_edge(u, v, 1.0);
    }
    return g;
}

Graph generate_ba(std::uint32_t n, double avg_degree, Rng& rng) {
    const auto k = static_cast<std::uint32_t>(std::llround(avg_degree / 2.0));
    if (k < 1)
        throw InvalidSpec("ba needs avg_degree >= 2");
    const std::uint32_t m0 = k + 1; // complete nucleus
    if (m0 > n)
        throw InvalidSpec("ba nucleus larger than n");

    Graph g;
    for (NodeId v = 0; v < n; ++v)
        g.add_node(v);
    // Preferential attachment via the repeated-endpoint list: a uniform
    // draw from it lands on a node with probability proportional to its
    // degree.
    std::vector<NodeId> endpoints;
    endpoints.reserve(2 * (static_cast<std::size_t>(k) * n + m0 * m0));
    for (NodeId u = 0; u < m0; ++u) {
        for (NodeId v = u + 1; v < m0; ++v) {
            g.add_edge(u, v, 1.0);
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
    }
    std::vector<NodeId> chosen;
    for (NodeId t = m0; t < n; ++t) {
        chosen.clear();
        while (chosen.size() < k) {
            const NodeId cand = endpoints[rng.index(endpoints.size())];
            if (std::find(chosen.begin(), chosen.end(), cand) == chosen.end())
                chosen.push_back(cand);
        }
        for (NodeId target : chosen) {
            g.add_edge(t, target, 1.0);
            endpoints.push_back(t);
            endpoints.push_back(target);
        }
    }
    return g;
}

Graph generate_ws(std::uint32_t n, std::uint32_t degree, double p, Rng& rng) {
    const std::uint32_t half = degree / 2;
    Graph g;
    for (NodeId v = 0; v < n; ++v)
        g.add_node(v);
    for (NodeId u = 0; u < n; ++u) {
        for (std::uint32_t j = 1; j <= half; ++j) {
            const NodeId v = static_cast<NodeId>((u + j) % n);
            g.add_edge(u, v, 1.0);
        }
    }
    if (p <= 0.0)
        return g;

    // Rewire each lattice edge (u, u+j) with probability p, keeping u and
    // redirecting to a uniform non-neighbor.
    for (NodeId u = 0; u < n; ++u) {
        for (std::uint32_t j = 1; j <= half; ++j) {
            if (!rng.chance(p))
                continue;
            const NodeId old_v = static_cast<NodeId>((u + j) % n);
            if (!g.has_edge(u, old_v))
                continue; // already rewired away by an earlier step
            std::size_t attempts = 0;
            while (attempts++ < 16u * n) {
                const NodeId w = static_cast<NodeId>(rng.below(n));
                if (w == u || g.has_edge(u, w))
                    continue;
                g.remove_edge(u, old_v);
                g.add_edge(u, w, 1.0);
                break;
            }
            // A saturated node (degree n-1) keeps its lattice edge.
        }
    }
    return g;
}

} // namespace

Graph generate(const ModelSpec& spec) {
    validate(spec);
    Rng rng = Rng(spec.seed).stream(kGenerateStream);
    switch (spec.model) {
    case Model::er:
        return generate_er(spec.n, spec.avg_degree / static_cast<double>(spec.n - 1), rng);
    case Model::ba:
        return generate_ba(spec.n, spec.avg_degree, rng);
    case Model::ws:
        return generate_ws(spec.n, static_cast<std::uint32_t>(spec.avg_degree), spec.p_ws, rng);
    }
    throw InvalidSpec("unknown model");
}

DosStream synthesize_dos_stream(const DosStreamSpec& spec) {
    if (spec.snapshots < 2)
        throw InvalidSpec("dos stream needs at least 2 snapshots");
    if (spec.churn_fraction < 0.0 || spec.churn_fraction >= 1.0)
        throw InvalidSpec("churn fraction must lie in [0, 1)");

    const Graph base = generate({Model::er, spec.n, spec.avg_degree, 0.0, spec.seed});
    Rng churn_rng = Rng(spec.seed).stream(kChurnStream);

    // Realized churn counts vary uniformly in [0.25, 1.75] of the mean so
    // purely volumetric scores (edge-count differences) see natural noise,
    // as real snapshot sequences do.
    auto churn_count = [&](std::size_t edges) {
        const double mean = spec.churn_fraction * static_cast<double>(edges);
        return static_cast<std::size_t>(std::llround(mean * (0.25 + 1.5 * churn_rng.unit())));
    };

    DosStream out;
    out.snapshots.reserve(spec.snapshots);
    Graph current = base;
    out.snapshots.push_back(current);
    const std::vector<NodeId> nodes = current.sorted_nodes();
    for (std::size_t t = 1; t < spec.snapshots; ++t) {
        const std::size_t removals = churn_count(current.edge_count());
        const std::size_t additions = churn_count(current.edge_count());

        std::vector<EdgeKey> keys;
        keys.reserve(current.edge_count());
        for (const auto& [key, w] : current.edges())
            keys.push_back(key);
        std::sort(keys.begin(), keys.end()); // draws must depend on the edge set, not map history
        for (std::size_t i = 0; i < removals && keys.size() > 1; ++i) {
            const std::size_t j = churn_rng.index(keys.size());
            auto [u, v] = edge_endpoints(keys[j]);
            current.remove_edge(u, v);
            keys[j] = keys.back();
            keys.pop_back();
        }
        std::size_t added = 0, attempts = 0;
        while (added < additions && attempts++ < 50 * additions + 100) {
            const NodeId u = nodes[churn_rng.index(nodes.size())];
            const NodeId v = nodes[churn_rng.index(nodes.size())];
            if (u == v || current.has_edge(u, v))
                continue;
            current.add_edge(u, v, 1.0);
            ++added;
        }
        out.snapshots.push_back(current);
    }

    out.injected_snapshot = churn_rng.index(spec.snapshots - 1);
    DosInjection inj = inject_dos(out.snapshots[out.injected_snapshot], spec.x_percent, spec.seed);
    out.snapshots[out.injected_snapshot] = std::move(inj.graph);
    out.target = inj.target;
    return out;
}

DosInjection inject_dos(const Graph& g, double x_percent, std::uint64_t seed) {
    if (!(x_percent > 0.0) || x_percent > 100.0)
        throw InvalidSpec("x_percent must lie in (0, 100]");
    const std::vector<NodeId> nodes = g.sorted_nodes();
    const std::size_t n = nodes.size();
    if (n < 2)
        throw InvalidSpec("dos injection needs at least 2 nodes");

    Rng rng = Rng(seed).stream(kInjectStream);
    const NodeId target = nodes[rng.index(n)];

    std::size_t count = static_cast<std::size_t>(
        std::ceil(x_percent * static_cast<double>(n) / 100.0));
    count = std::min(count, n - 1);

    // Partial Fisher-Yates over the non-target nodes.
    std::vector<NodeId> pool;
    pool.reserve(n - 1);
    for (NodeId v : nodes)
        if (v != target)
            pool.push_back(v);
    DosInjection result;
    result.graph = g;
    result.target = target;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t j = i + rng.index(pool.size() - i);
        std::swap(pool[i], pool[j]);
        const NodeId attacker = pool[i];
        if (!result.graph.has_edge(target, attacker)) {
            result.graph.add_edge(target, attacker, 1.0);
            ++result.edges_added;
        }
    }
    return result;
}

} // namespace vnge
