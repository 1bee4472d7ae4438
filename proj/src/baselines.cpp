#include "vnge/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace vnge {

namespace {

/// Top-k eigenvalues of the requested matrix, in comparison order,
/// zero-padded to length k.
std::vector<double> top_k_eigenvalues(const Graph& g, std::size_t k, LambdaMatrix matrix,
                                      AdjacencyOrder order, std::size_t oracle_cap) {
    const std::size_t n = g.node_count();
    if (n > oracle_cap)
        throw MatrixTooLarge("n=" + std::to_string(n) + " exceeds dense oracle cap " +
                             std::to_string(oracle_cap));

    std::vector<double> vals;
    if (g.edge_count() == 0) {
        vals.assign(n, 0.0);
    } else {
        const std::vector<NodeId> nodes = g.sorted_nodes();
        std::unordered_map<NodeId, std::size_t> idx;
        idx.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            idx.emplace(nodes[i], i);

        std::vector<double> mat(n * n, 0.0);
        for (const auto& [key, w] : g.edges()) {
            auto [u, v] = edge_endpoints(key);
            const std::size_t i = idx.at(u);
            const std::size_t j = idx.at(v);
            if (matrix == LambdaMatrix::adjacency) {
                mat[i * n + j] = w;
                mat[j * n + i] = w;
            } else {
                mat[i * n + i] += w;
                mat[j * n + j] += w;
                mat[i * n + j] -= w;
                mat[j * n + i] -= w;
            }
        }
        vals = dense_symmetric_eigenvalues(mat, n);
    }

    if (matrix == LambdaMatrix::laplacian || order == AdjacencyOrder::value)
        std::sort(vals.begin(), vals.end(), [](double a, double b) { return a > b; });
    else
        std::sort(vals.begin(), vals.end(),
                  [](double a, double b) { return std::abs(a) > std::abs(b); });

    vals.resize(std::max(vals.size(), k), 0.0);
    vals.resize(k);
    return vals;
}

} // namespace

double lambda_distance(const Graph& g1, const Graph& g2, std::size_t k, LambdaMatrix matrix,
                       AdjacencyOrder order, std::size_t oracle_cap) {
    if (k < 1)
        throw InvalidSpec("lambda distance needs k >= 1");
    const std::vector<double> a = top_k_eigenvalues(g1, k, matrix, order, oracle_cap);
    const std::vector<double> b = top_k_eigenvalues(g2, k, matrix, order, oracle_cap);
    double sum = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

double ged(const Graph& g1, const Graph& g2) {
    std::size_t node_diff = 0;
    for (NodeId v : g1.nodes())
        if (!g2.has_node(v))
            ++node_diff;
    for (NodeId v : g2.nodes())
        if (!g1.has_node(v))
            ++node_diff;

    std::size_t edge_diff = 0;
    for (const auto& [key, w] : g1.edges())
        if (!g2.edges().contains(key))
            ++edge_diff;
    for (const auto& [key, w] : g2.edges())
        if (!g1.edges().contains(key))
            ++edge_diff;

    return static_cast<double>(node_diff + edge_diff);
}

double veo(const Graph& g1, const Graph& g2) {
    std::size_t node_common = 0;
    for (NodeId v : g1.nodes())
        if (g2.has_node(v))
            ++node_common;
    std::size_t edge_common = 0;
    for (const auto& [key, w] : g1.edges())
        if (g2.edges().contains(key))
            ++edge_common;

    const double denom = static_cast<double>(g1.node_count() + g2.node_count() +
                                             g1.edge_count() + g2.edge_count());
    return 1.0 - 2.0 * static_cast<double>(node_common + edge_common) / denom;
}

double degree_distribution_distance(const Graph& g1, const Graph& g2, DegreeDistance kind) {
    auto histogram = [](const Graph& g) {
        std::unordered_map<NodeId, std::size_t> deg;
        for (NodeId v : g.nodes())
            deg.emplace(v, 0);
        for (const auto& [key, w] : g.edges()) {
            auto [u, v] = edge_endpoints(key);
            ++deg[u];
            ++deg[v];
        }
        std::map<std::size_t, double> hist; // degree -> probability
        for (const auto& [node, d] : deg)
            hist[d] += 1.0;
        for (auto& [d, count] : hist)
            count /= static_cast<double>(g.node_count());
        return hist;
    };

    const auto h1 = histogram(g1);
    const auto h2 = histogram(g2);

    // Union of observed degrees; absent degrees contribute probability 0.
    double dot = 0.0, norm1 = 0.0, norm2 = 0.0, bc = 0.0;
    auto accumulate = [&](double p, double q) {
        dot += p * q;
        norm1 += p * p;
        norm2 += q * q;
        bc += std::sqrt(p * q);
    };
    for (const auto& [d, p] : h1) {
        auto it = h2.find(d);
        accumulate(p, it == h2.end() ? 0.0 : it->second);
    }
    for (const auto& [d, q] : h2) {
        if (!h1.contains(d))
            accumulate(0.0, q);
    }

    switch (kind) {
    case DegreeDistance::cosine:
        return 1.0 - dot / (std::sqrt(norm1) * std::sqrt(norm2));
    case DegreeDistance::bhattacharyya:
        if (bc <= 0.0)
            return std::numeric_limits<double>::infinity();
        return -std::log(std::min(bc, 1.0));
    case DegreeDistance::hellinger:
        return std::sqrt(std::max(0.0, 1.0 - bc));
    }
    throw InvalidSpec("unknown degree distance kind");
}

} // namespace vnge
