#pragma once

#include <cstddef>
#include <vector>

#include "vnge/graph.hpp"

namespace vnge {

/// Node count above which the dense eigensolver refuses to run. The dense
/// path is an oracle for desk-scale graphs, not a production solver.
inline constexpr std::size_t kDefaultOracleCap = 20000;

/// Eigenvalues of the trace-normalized Laplacian L_N = L / trace(L),
/// sorted descending. Values below 1e-12 * lambda_max are snapped to 0,
/// so the trailing zero eigenvalue is exact and n_plus counts genuinely
/// positive eigenvalues.
struct EigenSpectrum {
    std::vector<double> values;     // descending, sums to 1 up to solver noise
    std::size_t n_plus = 0;         // count of positive eigenvalues
    double lambda_max = 0.0;
    double lambda_min_positive = 0.0;
};

/// Full eigenspectrum via dense symmetric eigendecomposition.
/// Throws MatrixTooLarge when node_count exceeds `oracle_cap`, and
/// EdgelessGraph when there is nothing to normalize by.
EigenSpectrum full_spectrum(const Graph& g, std::size_t oracle_cap = kDefaultOracleCap);

struct PowerIterOptions {
    double tol = 1e-12;   // relative Rayleigh-quotient change between iterations
    int max_iter = 10000;
};

struct PowerIterResult {
    double lambda_max = 0.0;
    int iterations = 0;
};

/// Largest eigenvalue of L_N by plain power iteration on the sparse
/// edge list (L*x = S*x - W*x, never materialized). L_N is PSD, so the
/// dominant eigenvalue in magnitude is lambda_max. The start vector is a
/// fixed hash of the node index: deterministic, and never aligned with
/// the structured null/dominant spaces small graphs have. Throws
/// ConvergenceFailure when the Rayleigh quotient has not settled within
/// opts.max_iter iterations.
PowerIterResult lambda_max_power(const Graph& g, const PowerIterOptions& opts = {});

/// Eigenvalues (ascending) of a dense symmetric matrix stored row-major;
/// shared backend for the oracle and the eigenvalue-distance baseline.
std::vector<double> dense_symmetric_eigenvalues(std::vector<double>& matrix, std::size_t n);

} // namespace vnge
