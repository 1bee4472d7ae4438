#include "vnge/entropy.hpp"

#include <cmath>

#include "vnge/numeric.hpp"

namespace vnge {

namespace {

using Clock = std::chrono::steady_clock;

double spectral_q(const EigenSpectrum& spec) {
    KahanSum sq;
    for (double v : spec.values)
        sq.add(v * v);
    return 1.0 - sq.value();
}

} // namespace

double quadratic_q(const StrengthVector& s, const Graph& g) {
    const double c = 1.0 / s.total;
    KahanSum acc;
    for (const auto& [node, si] : s.strength)
        acc.add(si * si);
    for (const auto& [key, w] : g.edges())
        acc.add(2.0 * w * w);
    return 1.0 - c * c * acc.value();
}

double quadratic_q(const Graph& g) { return quadratic_q(strengths(g), g); }

EntropyReport entropy_exact(const Graph& g, std::size_t oracle_cap) {
    const auto t0 = Clock::now();
    const EigenSpectrum spec = full_spectrum(g, oracle_cap);
    KahanSum h;
    for (double v : spec.values) {
        if (v > 0.0)
            h.add(-v * std::log(v));
    }
    EntropyReport r;
    r.kind = EntropyKind::exact;
    r.value = h.value();
    r.q = spectral_q(spec);
    r.spectral_scalar = spec.lambda_max;
    r.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0);
    return r;
}

EntropyReport entropy_hat(const Graph& g, const PowerIterOptions& opts,
                          std::optional<double> lambda_max_hint) {
    const auto t0 = Clock::now();
    const StrengthVector sv = strengths(g);
    const double q = quadratic_q(sv, g);
    const double lambda_max =
        lambda_max_hint ? *lambda_max_hint : lambda_max_power(g, opts).lambda_max;
    if (lambda_max >= 1.0 - kDegenerateEpsilon)
        throw DegenerateSpectrum(
            "lambda_max is 1 within tolerance (no connected subgraph with >= 3 nodes); "
            "exact entropy of such a graph is 0");
    EntropyReport r;
    r.kind = EntropyKind::hat;
    r.value = -q * std::log(lambda_max);
    r.q = q;
    r.spectral_scalar = lambda_max;
    r.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0);
    return r;
}

EntropyReport entropy_tilde(const Graph& g) {
    const auto t0 = Clock::now();
    const StrengthVector sv = strengths(g);
    const double q = quadratic_q(sv, g);
    const double scalar = 2.0 * sv.max_strength / sv.total;
    EntropyReport r;
    r.kind = EntropyKind::tilde;
    r.q = q;
    r.spectral_scalar = scalar;
    if (scalar >= 1.0 - kDegenerateEpsilon) {
        r.value = 0.0;
        r.degenerate = true;
    } else {
        r.value = -q * std::log(scalar);
    }
    r.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0);
    return r;
}

EntropyBounds entropy_bounds(const Graph& g, std::size_t oracle_cap) {
    const EigenSpectrum spec = full_spectrum(g, oracle_cap);
    if (spec.lambda_max >= 1.0 - kDegenerateEpsilon)
        throw DegenerateSpectrum("bounds undefined: lambda_max is 1 within tolerance");
    const double q = spectral_q(spec);
    EntropyBounds b;
    b.lower = -q * std::log(spec.lambda_max) / (1.0 - spec.lambda_min_positive);
    b.upper = -q * std::log(spec.lambda_min_positive) / (1.0 - spec.lambda_max);
    return b;
}

} // namespace vnge
