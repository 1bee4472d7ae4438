#include "vnge/jsdist.hpp"

#include <cmath>

namespace vnge {

namespace {

JsResult combine(double h_avg, double h1, double h2, EntropyKind kind) {
    JsResult r;
    r.entropy_kind = kind;
    r.divergence = h_avg - 0.5 * (h1 + h2);
    if (r.divergence < 0.0) {
        r.clamped = true;
        r.distance = 0.0;
    } else {
        r.distance = std::sqrt(r.divergence);
    }
    return r;
}

} // namespace

JsResult jsdist_exact(const Graph& g1, const Graph& g2, std::size_t oracle_cap) {
    const Graph avg = average_graph(g1, g2);
    return combine(entropy_exact(avg, oracle_cap).value, entropy_exact(g1, oracle_cap).value,
                   entropy_exact(g2, oracle_cap).value, EntropyKind::exact);
}

JsResult jsdist_fast(const Graph& g1, const Graph& g2, const PowerIterOptions& opts) {
    const Graph avg = average_graph(g1, g2);
    return combine(entropy_hat(avg, opts).value, entropy_hat(g1, opts).value,
                   entropy_hat(g2, opts).value, EntropyKind::hat);
}

JsResult jsdist_incremental(IncrementalState& state, const DeltaGraph& d) {
    const double h_current = state.current_entropy_tilde().value;
    const double h_midpoint = state.peek_entropy_tilde(d.halved()).value;
    const double h_next = state.update_entropy_tilde(d).value;
    JsResult r = combine(h_midpoint, h_current, h_next, EntropyKind::tilde);
    return r;
}

double anomaly_score(const JsResult& r) { return std::sqrt(std::abs(r.divergence)); }

} // namespace vnge
