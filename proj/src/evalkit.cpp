#include "vnge/evalkit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace vnge {

double sae(double h_exact, double h_approx, std::size_t n) {
    if (n < 3)
        throw InvalidSpec("sae needs n >= 3");
    return (h_exact - h_approx) / std::log(static_cast<double>(n));
}

double ctrr(double time_exact, double time_approx) {
    if (!(time_exact > 0.0))
        throw InvalidSpec("ctrr needs a positive exact time");
    return (time_exact - time_approx) / time_exact;
}

std::vector<double> tds(std::span<const double> scores) {
    if (scores.empty())
        throw SeriesTooShort("tds needs at least 2 graphs (1 consecutive score)");
    const std::size_t t_count = scores.size() + 1;
    std::vector<double> out(t_count);
    out.front() = scores.front();
    out.back() = scores.back();
    for (std::size_t t = 1; t + 1 < t_count; ++t)
        out[t] = 0.5 * (scores[t - 1] + scores[t]);
    return out;
}

std::vector<std::size_t> bifurcation_points(std::span<const double> curve) {
    std::vector<std::size_t> out;
    if (curve.size() < 3)
        return out;
    std::size_t i = 1;
    while (i + 1 < curve.size()) {
        if (curve[i] < curve[i - 1]) {
            // Extend over a plateau; report its left-most index if the
            // curve rises afterwards while still interior.
            std::size_t j = i;
            while (j + 1 < curve.size() && curve[j + 1] == curve[i])
                ++j;
            if (j + 1 < curve.size() && curve[j + 1] > curve[i])
                out.push_back(i);
            i = j + 1;
        } else {
            ++i;
        }
    }
    return out;
}

namespace {

std::vector<double> average_ranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]])
            ++j;
        const double avg = 0.5 * static_cast<double>(i + j) + 1.0; // 1-based
        for (std::size_t k = i; k <= j; ++k)
            ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

double pearson(std::span<const double> a, std::span<const double> b) {
    const auto n = static_cast<double>(a.size());
    double mean_a = 0.0, mean_b = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        mean_a += a[i];
        mean_b += b[i];
    }
    mean_a /= n;
    mean_b /= n;
    double cov = 0.0, var_a = 0.0, var_b = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double da = a[i] - mean_a;
        const double db = b[i] - mean_b;
        cov += da * db;
        var_a += da * da;
        var_b += db * db;
    }
    if (var_a == 0.0 || var_b == 0.0)
        throw DegenerateSeries("correlation undefined for a zero-variance series");
    return cov / std::sqrt(var_a * var_b);
}

} // namespace

Correlation correlate(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw SeriesTooShort("correlate needs equal-length series");
    if (a.size() < 3)
        throw SeriesTooShort("correlate needs at least 3 points");
    Correlation c;
    c.pcc = pearson(a, b);
    const std::vector<double> ra = average_ranks(a);
    const std::vector<double> rb = average_ranks(b);
    c.srcc = pearson(ra, rb);
    return c;
}

std::vector<std::size_t> rank_descending(std::span<const double> scores) {
    // Substitute the infinity sentinel before ranking.
    double max_finite = 0.0;
    bool has_finite = false;
    for (double s : scores) {
        if (std::isfinite(s) && (!has_finite || s > max_finite)) {
            max_finite = s;
            has_finite = true;
        }
    }
    std::vector<double> adjusted(scores.begin(), scores.end());
    for (double& s : adjusted)
        if (std::isinf(s))
            s = has_finite ? max_finite + 1.0 : 1.0;

    std::vector<std::size_t> order(adjusted.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return adjusted[a] > adjusted[b]; // stable: ties keep earlier index first
    });
    return order;
}

double detection_rate(std::span<const DetectionTrial> trials, std::size_t top_k) {
    if (top_k < 1)
        throw InvalidSpec("detection rate needs top_k >= 1");
    if (trials.empty())
        return 0.0;
    std::size_t hits = 0;
    for (const DetectionTrial& trial : trials) {
        const std::vector<std::size_t> order = rank_descending(trial.scores);
        const std::size_t limit = std::min(top_k, order.size());
        for (std::size_t i = 0; i < limit; ++i) {
            if (order[i] == trial.true_index) {
                ++hits;
                break;
            }
        }
    }
    return static_cast<double>(hits) / static_cast<double>(trials.size());
}

} // namespace vnge
