#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vnge/errors.hpp"

namespace vnge {

/// Scaled approximation error (h_exact - h_approx) / ln n; the natural
/// scale for entropy error because h_exact itself is at most ln(n-1).
double sae(double h_exact, double h_approx, std::size_t n);

/// Computation time reduction ratio (t_exact - t_approx) / t_exact.
double ctrr(double time_exact, double time_approx);

/// Temporal difference score over a sequence of T graphs, given the T-1
/// consecutive dissimilarities theta[t] = d(G_{t+1}, G_{t+2}) (0-based).
/// Output has length T: endpoints copy their single neighbor score,
/// interior entries average the two adjacent scores.
std::vector<double> tds(std::span<const double> consecutive_scores);

/// Interior strict local minima of a TDS curve (0-based positions,
/// endpoints excluded); a flat run lower than both sides reports its
/// left-most index. These mark candidate regime switches.
std::vector<std::size_t> bifurcation_points(std::span<const double> tds_curve);

struct Correlation {
    double pcc = 0.0;
    double srcc = 0.0;
};

/// Pearson correlation plus Spearman rank correlation (average ranks on
/// ties). Throws SeriesTooShort below 3 points or on length mismatch, and
/// DegenerateSeries when either input has zero variance.
Correlation correlate(std::span<const double> a, std::span<const double> b);

struct DetectionTrial {
    std::vector<double> scores;
    std::size_t true_index = 0; // 0-based position of the planted event
};

/// Indices sorted by score descending; ties keep the earlier index first.
/// +infinity scores are replaced by one more than the largest finite score
/// in the series before ranking (documented Bhattacharyya sentinel).
std::vector<std::size_t> rank_descending(std::span<const double> scores);

/// Fraction of trials whose planted index lands in the top_k of the
/// ranking.
double detection_rate(std::span<const DetectionTrial> trials, std::size_t top_k);

} // namespace vnge
