#pragma once

#include "svid/graph.hpp"
#include "svid/scores.hpp"

#include <cstddef>

namespace svid {

[[nodiscard]] ScoreVector degree_scores(const Graph& g);

/// Exact shortest-path betweenness (Brandes), unnormalised, each unordered
/// pair counted once. Pairs in different components contribute nothing.
[[nodiscard]] ScoreVector betweenness_scores(const Graph& g);

struct EigenvectorResult {
    ScoreVector scores;
    bool converged = false;
    std::size_t iterations = 0;
    /// Rayleigh quotient of the final iterate.
    double eigenvalue = 0.0;
};

struct PowerIterationOptions {
    double tolerance = 1e-10;
    std::size_t max_iterations = 10000;
};

/// Dominant eigenvector of the adjacency matrix, L2-normalised and
/// non-negative. Iterates on A + I from the uniform vector; the shift leaves
/// the eigenvectors unchanged and keeps bipartite graphs from oscillating.
/// Stops when the infinity-norm change between iterates drops below the
/// tolerance. Throws DomainError on an edgeless graph.
[[nodiscard]] EigenvectorResult eigenvector_centrality(const Graph& g,
                                                       const PowerIterationOptions& opts = {});
[[nodiscard]] ScoreVector eigenvector_scores(const Graph& g);

/// k-core number per node (Batagelj–Zaversnik bucket peeling).
[[nodiscard]] ScoreVector coreness_scores(const Graph& g);

} // namespace svid
