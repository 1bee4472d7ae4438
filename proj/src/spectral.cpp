#include "vnge/spectral.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "vnge/rng.hpp"

namespace vnge {

std::vector<double> dense_symmetric_eigenvalues(std::vector<double>& matrix, std::size_t n) {
    std::vector<double> w(n);
    lapack_int info = LAPACKE_dsyevd(LAPACK_ROW_MAJOR, 'N', 'L', static_cast<lapack_int>(n),
                                     matrix.data(), static_cast<lapack_int>(n), w.data());
    if (info != 0)
        throw Error(ErrorCategory::domain,
                    "symmetric eigensolver failed with info=" + std::to_string(info));
    return w; // ascending
}

namespace {

std::unordered_map<NodeId, std::size_t> dense_index(const std::vector<NodeId>& order) {
    std::unordered_map<NodeId, std::size_t> idx;
    idx.reserve(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        idx.emplace(order[i], i);
    return idx;
}

} // namespace

EigenSpectrum full_spectrum(const Graph& g, std::size_t oracle_cap) {
    if (g.edge_count() == 0)
        throw EdgelessGraph();
    const std::size_t n = g.node_count();
    if (n > oracle_cap)
        throw MatrixTooLarge("n=" + std::to_string(n) + " exceeds dense oracle cap " +
                             std::to_string(oracle_cap));

    const std::vector<NodeId> order = g.sorted_nodes();
    const auto idx = dense_index(order);

    std::vector<double> lap(n * n, 0.0);
    double trace = 0.0;
    for (const auto& [key, w] : g.edges()) {
        auto [u, v] = edge_endpoints(key);
        const std::size_t i = idx.at(u);
        const std::size_t j = idx.at(v);
        lap[i * n + i] += w;
        lap[j * n + j] += w;
        lap[i * n + j] -= w;
        lap[j * n + i] -= w;
        trace += 2.0 * w;
    }
    const double c = 1.0 / trace;
    for (double& x : lap)
        x *= c;

    std::vector<double> vals = dense_symmetric_eigenvalues(lap, n);
    std::reverse(vals.begin(), vals.end()); // descending

    EigenSpectrum spec;
    spec.lambda_max = vals.front();
    const double snap = 1e-12 * spec.lambda_max;
    for (double& v : vals) {
        if (v < -1e-10)
            throw Error(ErrorCategory::domain,
                        "normalized Laplacian produced eigenvalue " + std::to_string(v) +
                            " far below zero");
        if (v < snap)
            v = 0.0;
    }
    spec.values = std::move(vals);
    spec.n_plus = 0;
    spec.lambda_min_positive = 0.0;
    for (double v : spec.values) {
        if (v > 0.0) {
            ++spec.n_plus;
            spec.lambda_min_positive = v; // descending scan: last positive wins
        }
    }
    return spec;
}

PowerIterResult lambda_max_power(const Graph& g, const PowerIterOptions& opts) {
    if (g.edge_count() == 0)
        throw EdgelessGraph();
    if (!(opts.tol > 0.0))
        throw InvalidSpec("power iteration tolerance must be positive");

    const std::vector<NodeId> order = g.sorted_nodes();
    const auto idx = dense_index(order);
    const std::size_t n = order.size();
    const std::size_t m = g.edge_count();

    // Flat edge arrays; iteration works on L = S - W and rescales by c at
    // the end, saving a multiply per entry per iteration.
    std::vector<std::uint32_t> eu(m), ev(m);
    std::vector<double> ew(m);
    std::vector<double> strength(n, 0.0);
    double trace = 0.0;
    {
        std::size_t e = 0;
        for (const auto& [key, w] : g.edges()) {
            auto [u, v] = edge_endpoints(key);
            const std::size_t i = idx.at(u);
            const std::size_t j = idx.at(v);
            eu[e] = static_cast<std::uint32_t>(i);
            ev[e] = static_cast<std::uint32_t>(j);
            ew[e] = w;
            strength[i] += w;
            strength[j] += w;
            trace += 2.0 * w;
            ++e;
        }
    }
    const double c = 1.0 / trace;

    // Deterministic hashed start vector in [1, 2)^n. Structured starts
    // (constant or linear ramps) can be exactly orthogonal to the dominant
    // eigenvector: all-ones spans ker L, and a linear ramp is annihilated
    // by the second-difference eigenvector of a path.
    std::vector<double> x(n), y(n);
    {
        double norm2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t h = i;
            x[i] = 1.0 + static_cast<double>(splitmix64(h) >> 40) * 0x1p-24;
            norm2 += x[i] * x[i];
        }
        const double inv = 1.0 / std::sqrt(norm2);
        for (double& v : x)
            v *= inv;
    }

    double rayleigh_prev = 0.0;
    for (int iter = 1; iter <= opts.max_iter; ++iter) {
        for (std::size_t i = 0; i < n; ++i)
            y[i] = strength[i] * x[i];
        for (std::size_t e = 0; e < m; ++e) {
            const double w = ew[e];
            y[eu[e]] -= w * x[ev[e]];
            y[ev[e]] -= w * x[eu[e]];
        }
        double rayleigh = 0.0, norm2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            rayleigh += x[i] * y[i];
            norm2 += y[i] * y[i];
        }
        if (norm2 == 0.0)
            throw ConvergenceFailure("power iteration hit a zero iterate");

        if (iter > 1) {
            const double change = std::abs(rayleigh - rayleigh_prev);
            if (change <= opts.tol * std::abs(rayleigh))
                return {c * rayleigh, iter};
        }
        rayleigh_prev = rayleigh;

        const double inv = 1.0 / std::sqrt(norm2);
        for (std::size_t i = 0; i < n; ++i)
            x[i] = y[i] * inv;
    }
    throw ConvergenceFailure("power iteration did not converge within " +
                             std::to_string(opts.max_iter) + " iterations (tol=" +
                             std::to_string(opts.tol) + ")");
}

} // namespace vnge
