#pragma once

#include <chrono>
#include <optional>

#include "vnge/graph.hpp"
#include "vnge/spectral.hpp"

namespace vnge {

enum class EntropyKind { exact, hat, tilde, quadratic };

/// (1 - lambda_max) below this counts as a degenerate spectrum: the exact
/// entropy of such a graph is 0 and the log-based surrogates blow up.
inline constexpr double kDegenerateEpsilon = 1e-12;

struct EntropyBounds {
    double lower = 0.0;
    double upper = 0.0;
};

struct EntropyReport {
    EntropyKind kind = EntropyKind::exact;
    double value = 0.0;           // nats
    double q = 0.0;               // quadratic surrogate used / implied
    double spectral_scalar = 0.0; // lambda_max (exact/hat) or 2*c*s_max (tilde)
    std::optional<EntropyBounds> bounds;
    bool degenerate = false;      // tilde clamped to 0 because 2*c*s_max >= 1
    std::chrono::nanoseconds wall_time{0};
};

/// Quadratic entropy surrogate Q = 1 - c^2 (sum s_i^2 + 2 sum w_ij^2),
/// one compensated pass over nodes and edges.
double quadratic_q(const StrengthVector& s, const Graph& g);
double quadratic_q(const Graph& g);

/// Exact entropy H = -sum lambda_i ln lambda_i of the trace-normalized
/// Laplacian (0 ln 0 = 0), via the dense spectrum.
EntropyReport entropy_exact(const Graph& g, std::size_t oracle_cap = kDefaultOracleCap);

/// One-eigenvalue approximation -Q ln lambda_max; lambda_max comes from
/// power iteration unless the caller already has it (jsdist and the
/// benchmarks time the pieces separately). Throws DegenerateSpectrum when
/// lambda_max >= 1 - kDegenerateEpsilon.
EntropyReport entropy_hat(const Graph& g, const PowerIterOptions& opts = {},
                          std::optional<double> lambda_max_hint = std::nullopt);

/// Strength-only approximation -Q ln(2 c s_max); no eigensolve at all.
/// When 2 c s_max >= 1 the value is clamped to 0 and flagged degenerate
/// instead of going negative.
EntropyReport entropy_tilde(const Graph& g);

/// Two-sided entropy bounds from the extreme positive eigenvalues:
/// -Q ln(lambda_max)/(1 - lambda_min) <= H <= -Q ln(lambda_min)/(1 - lambda_max).
/// Exact (lower == upper == H) for complete graphs with identical weights.
EntropyBounds entropy_bounds(const Graph& g, std::size_t oracle_cap = kDefaultOracleCap);

} // namespace vnge
