#pragma once

#include <cstddef>

#include "vnge/graph.hpp"
#include "vnge/spectral.hpp"

namespace vnge {

/// Which matrix the eigenvalue distance compares.
enum class LambdaMatrix { adjacency, laplacian };

/// "Top k" for the adjacency matrix is ambiguous because its spectrum can
/// be negative; largest magnitude is the default, largest algebraic value
/// the alternative. Laplacian spectra are nonnegative, so the switch is
/// moot there.
enum class AdjacencyOrder { magnitude, value };

/// Euclidean distance between the top-k eigenvalues of the (raw, not
/// trace-normalized) weight or Laplacian matrix of each graph. Graphs with
/// fewer than k eigenvalues are padded with zeros.
double lambda_distance(const Graph& g1, const Graph& g2, std::size_t k,
                       LambdaMatrix matrix = LambdaMatrix::laplacian,
                       AdjacencyOrder order = AdjacencyOrder::magnitude,
                       std::size_t oracle_cap = kDefaultOracleCap);

/// Graph edit distance for unweighted undirected graphs: the number of
/// node/edge additions and removals converting one graph into the other,
/// i.e. |V1 sym-diff V2| + |E1 sym-diff E2|. Weights are ignored.
double ged(const Graph& g1, const Graph& g2);

/// Vertex/edge overlap dissimilarity in [0, 1]:
/// 1 - 2 (|V inter V'| + |E inter E'|) / (|V| + |V'| + |E| + |E'|).
/// 0 exactly when node and edge sets coincide. Weights are ignored.
double veo(const Graph& g1, const Graph& g2);

enum class DegreeDistance { cosine, bhattacharyya, hellinger };

/// Distance between the (unweighted) degree distributions, normalized over
/// the union of observed degrees. Bhattacharyya returns +infinity when the
/// distributions share no support; ranking layers substitute a sentinel
/// one above the largest finite score in the series.
double degree_distribution_distance(const Graph& g1, const Graph& g2, DegreeDistance kind);

} // namespace vnge
