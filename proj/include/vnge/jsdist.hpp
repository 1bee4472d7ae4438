#pragma once

#include "vnge/entropy.hpp"
#include "vnge/graph.hpp"
#include "vnge/incremental.hpp"

namespace vnge {

struct JsResult {
    double distance = 0.0;   // sqrt(max(divergence, 0))
    double divergence = 0.0; // pre-sqrt, may be slightly negative under approximation
    bool clamped = false;    // divergence < 0 was clamped to 0
    EntropyKind entropy_kind = EntropyKind::exact;
};

/// Exact Jensen-Shannon distance between two graphs over their union node
/// set: divergence = H(avg) - (H(g1) + H(g2)) / 2, distance its square
/// root. Dense-oracle grade.
JsResult jsdist_exact(const Graph& g1, const Graph& g2,
                      std::size_t oracle_cap = kDefaultOracleCap);

/// Same combination evaluated with the one-eigenvalue entropy
/// approximation; three power iterations, linear time. The approximate
/// entropies are lower bounds of differing tightness, so the combination
/// can dip below zero; that is clamped and flagged.
JsResult jsdist_fast(const Graph& g1, const Graph& g2, const PowerIterOptions& opts = {});

/// Distance between the state's current graph and its successor under
/// delta `d`, using three strength-only entropies: current, the half-delta
/// midpoint (evaluated on a transient fork), and the advanced state. The
/// state is advanced to the successor. O(delta_n + delta_m).
JsResult jsdist_incremental(IncrementalState& state, const DeltaGraph& d);

/// Ranking score for anomaly pipelines: sqrt(|divergence|). Equal to
/// `distance` while the approximate combination stays nonnegative. A large
/// structural jump (a sudden hub) can drive the lower-bound entropies so
/// far apart that the combination goes negative; the clamped distance of 0
/// would bury exactly the events the score exists to surface, so the
/// magnitude of the breakdown is used instead.
double anomaly_score(const JsResult& r);

} // namespace vnge
