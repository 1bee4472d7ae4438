#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vnge/entropy.hpp"
#include "vnge/graph.hpp"

namespace vnge {

/// How the running maximum strength reacts to updates.
/// `paper_faithful` applies the one-sided rule
///   s_max' = s_max + max(0, max over touched nodes of (s_i + ds_i) - s_max),
/// which can never decrease (fine for growth-dominated streams, wrong after
/// deleting a hub's edges). `exact` tracks the true maximum, rescanning
/// lazily when the current holder's strength drops.
enum class SmaxMode { paper_faithful, exact };

/// Running (Q, c, strengths, s_max) over a stream of graph deltas.
/// Each update costs O(delta_n + delta_m); the state keeps the full
/// strength and edge-weight maps because the update rule needs the current
/// s_i and w_ij of every touched element. Single writer; copyable for
/// forked what-if evaluation.
class IncrementalState {
public:
    /// Bootstraps the running quantities from a materialized graph.
    static IncrementalState init(const Graph& g, SmaxMode mode = SmaxMode::exact);

    struct QUpdate {
        double q = 0.0;
        double c = 0.0;
    };

    /// Applies the closed-form quadratic-surrogate update
    ///   Q' = (Q-1)/(1+c DS)^2 - (c/(1+c DS))^2 DQ + 1,
    ///   DQ = 2 sum s_i ds_i + sum ds_i^2 + 4 sum w_ij dw_ij + 2 sum dw_ij^2,
    /// advances strengths/weights/s_max, and returns (Q', c').
    /// Throws TotalWeightNonPositive when S + DS <= 0.
    QUpdate update_q(const DeltaGraph& d);

    /// update_q plus the strength-only entropy of the updated graph:
    /// H~' = -Q' ln(2 c' s_max'). Degenerate scalars clamp to 0 as in
    /// entropy_tilde.
    EntropyReport update_entropy_tilde(const DeltaGraph& d);

    /// Value update_entropy_tilde(d) would produce, without advancing the
    /// state. Used for the half-delta midpoint in incremental distances.
    EntropyReport peek_entropy_tilde(const DeltaGraph& d) const;

    /// Strength-only entropy of the current state (no delta).
    EntropyReport current_entropy_tilde() const;

    double q() const noexcept { return q_; }
    double c() const noexcept { return c_; }
    double s_max() const noexcept { return s_max_; }
    SmaxMode mode() const noexcept { return mode_; }
    std::uint64_t step_count() const noexcept { return step_count_; }

    const std::unordered_map<NodeId, double>& strength_map() const { return strength_; }

    /// Rebuilds the graph the state currently describes (test oracle use).
    Graph materialize() const;

private:
    IncrementalState() = default;

    struct Staged; // gathered update, shared by peek and commit
    Staged stage(const DeltaGraph& d) const;
    void commit(const Staged& s, const DeltaGraph& d);
    void rebaseline();

    double q_ = 0.0;
    double c_ = 0.0;
    double s_max_ = 0.0;
    NodeId s_max_node_ = 0;
    SmaxMode mode_ = SmaxMode::exact;
    std::uint64_t step_count_ = 0;
    std::unordered_map<NodeId, double> strength_;
    EdgeMap weight_;
};

/// Runs a whole delta stream, one strength-only entropy report per delta.
/// The first failing delta aborts the run with its step index (0-based)
/// wrapped in a StreamError.
std::vector<EntropyReport> stream_run(const Graph& g0, std::span<const DeltaGraph> deltas,
                                      SmaxMode mode = SmaxMode::exact);

} // namespace vnge
