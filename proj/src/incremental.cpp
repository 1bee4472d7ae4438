#include "vnge/incremental.hpp"

#include <cmath>
#include <string>

#include "vnge/numeric.hpp"

namespace vnge {

namespace {

/// Rounding in the closed-form recurrence compounds; a periodic full
/// recomputation caps the drift.
constexpr std::uint64_t kRebaselineInterval = 1u << 16;

EntropyReport tilde_report(double q, double scalar) {
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
    return r;
}

} // namespace

IncrementalState IncrementalState::init(const Graph& g, SmaxMode mode) {
    const StrengthVector sv = strengths(g); // throws EdgelessGraph
    IncrementalState st;
    st.mode_ = mode;
    st.q_ = quadratic_q(sv, g);
    st.c_ = 1.0 / sv.total;
    st.s_max_ = sv.max_strength;
    st.s_max_node_ = sv.max_node;
    st.strength_ = sv.strength;
    st.weight_ = g.edges();
    return st;
}

struct IncrementalState::Staged {
    double q_new = 0.0;
    double c_new = 0.0;
    double s_max_new = 0.0;
    NodeId s_max_node_new = 0;
    bool rescan_needed = false; // exact mode: holder's strength dropped
};

IncrementalState::Staged IncrementalState::stage(const DeltaGraph& d) const {
    const double ds_total = d.delta_s();
    const double factor = 1.0 + c_ * ds_total;
    if (factor <= 0.0)
        throw TotalWeightNonPositive("delta would drive total weight to " +
                                     std::to_string((1.0 / c_) + ds_total));

    double dq = 0.0;
    for (const auto& [node, ds] : d.strength_deltas()) {
        auto it = strength_.find(node);
        const double s = it == strength_.end() ? 0.0 : it->second;
        dq += 2.0 * s * ds + ds * ds;
    }
    for (const auto& [key, dw] : d.edge_deltas()) {
        auto it = weight_.find(key);
        const double w = it == weight_.end() ? 0.0 : it->second;
        if (w + dw < -kWeightEpsilon) {
            auto [u, v] = edge_endpoints(key);
            throw NegativeResultingWeight("edge (" + std::to_string(u) + "," +
                                          std::to_string(v) + ") would get negative weight " +
                                          std::to_string(w + dw));
        }
        dq += 4.0 * w * dw + 2.0 * dw * dw;
    }

    Staged st;
    const double shrink = c_ / factor;
    st.q_new = (q_ - 1.0) / (factor * factor) - shrink * shrink * dq + 1.0;
    st.c_new = shrink;

    // New strengths of touched nodes drive the s_max update in both modes.
    double touched_max = -1.0;
    NodeId touched_argmax = 0;
    bool holder_decreased = false;
    for (const auto& [node, ds] : d.strength_deltas()) {
        auto it = strength_.find(node);
        const double s_new = (it == strength_.end() ? 0.0 : it->second) + ds;
        if (s_new > touched_max) {
            touched_max = s_new;
            touched_argmax = node;
        }
        if (node == s_max_node_ && ds < 0.0)
            holder_decreased = true;
    }

    if (touched_max > s_max_) {
        st.s_max_new = touched_max;
        st.s_max_node_new = touched_argmax;
    } else {
        st.s_max_new = s_max_;
        st.s_max_node_new = s_max_node_;
        if (mode_ == SmaxMode::exact && holder_decreased)
            st.rescan_needed = true;
    }
    return st;
}

void IncrementalState::commit(const Staged& st, const DeltaGraph& d) {
    q_ = st.q_new;
    c_ = st.c_new;
    for (const auto& [node, ds] : d.strength_deltas())
        strength_[node] += ds; // inserts 0 + ds for new nodes
    for (const auto& [key, dw] : d.edge_deltas()) {
        auto it = weight_.find(key);
        if (it == weight_.end()) {
            if (dw > kWeightEpsilon)
                weight_.emplace(key, dw);
        } else {
            it->second += dw;
            if (it->second <= kWeightEpsilon)
                weight_.erase(it);
        }
    }

    s_max_ = st.s_max_new;
    s_max_node_ = st.s_max_node_new;
    if (st.rescan_needed) {
        s_max_ = -1.0;
        for (const auto& [node, s] : strength_) {
            if (s > s_max_) {
                s_max_ = s;
                s_max_node_ = node;
            }
        }
    }

    if (++step_count_ % kRebaselineInterval == 0)
        rebaseline();
}

void IncrementalState::rebaseline() {
    KahanSum total, quad;
    for (const auto& [node, s] : strength_) {
        total.add(s);
        quad.add(s * s);
    }
    for (const auto& [key, w] : weight_)
        quad.add(2.0 * w * w);
    c_ = 1.0 / total.value();
    q_ = 1.0 - c_ * c_ * quad.value();
}

IncrementalState::QUpdate IncrementalState::update_q(const DeltaGraph& d) {
    const Staged st = stage(d);
    commit(st, d);
    return {q_, c_};
}

EntropyReport IncrementalState::update_entropy_tilde(const DeltaGraph& d) {
    const Staged st = stage(d);
    commit(st, d);
    return tilde_report(q_, 2.0 * c_ * s_max_);
}

EntropyReport IncrementalState::peek_entropy_tilde(const DeltaGraph& d) const {
    Staged st = stage(d);
    if (st.rescan_needed) {
        // Transient evaluation still needs the true maximum after the
        // holder drops; scan strengths with the delta applied on the fly.
        double best = -1.0;
        for (const auto& [node, s] : strength_) {
            auto it = d.strength_deltas().find(node);
            const double s_new = s + (it == d.strength_deltas().end() ? 0.0 : it->second);
            if (s_new > best)
                best = s_new;
        }
        for (const auto& [node, ds] : d.strength_deltas()) {
            if (!strength_.contains(node) && ds > best)
                best = ds;
        }
        st.s_max_new = best;
    }
    return tilde_report(st.q_new, 2.0 * st.c_new * st.s_max_new);
}

EntropyReport IncrementalState::current_entropy_tilde() const {
    return tilde_report(q_, 2.0 * c_ * s_max_);
}

Graph IncrementalState::materialize() const {
    Graph g;
    for (const auto& [node, s] : strength_)
        g.add_node(node);
    for (const auto& [key, w] : weight_) {
        auto [u, v] = edge_endpoints(key);
        g.add_edge(u, v, w);
    }
    return g;
}

std::vector<EntropyReport> stream_run(const Graph& g0, std::span<const DeltaGraph> deltas,
                                      SmaxMode mode) {
    IncrementalState state = IncrementalState::init(g0, mode);
    std::vector<EntropyReport> out;
    out.reserve(deltas.size());
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        try {
            out.push_back(state.update_entropy_tilde(deltas[i]));
        } catch (const Error& e) {
            throw StreamError(i, e);
        }
    }
    return out;
}

} // namespace vnge
