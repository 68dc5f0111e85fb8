#pragma once

#include "svid/graph.hpp"
#include "svid/scores.hpp"
#include "svid/shapley.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace svid {

struct StrategyConfig {
    CentralityMethod method = CentralityMethod::Svid;
    /// Scores are recomputed on the residual graph after every
    /// ceil(batch_fraction * N) selections (at least one).
    double batch_fraction = 0.05;
    bool neighbor_exclusion = true;
    /// Fraction q of nodes to immunize; ceil(q * N) removals.
    double target_fraction = 1.0;
    SvidOptions svid;

    /// Throws ConfigError on out-of-range fractions or hops.
    void validate() const;
};

struct ImmunizationPlan {
    CentralityMethod method = CentralityMethod::Svid;
    std::size_t node_count = 0;
    std::uint64_t graph_fingerprint = 0;
    double target_fraction = 0.0;
    double batch_fraction = 0.0;
    std::size_t batch_size = 0;

    /// Removal order, no duplicates.
    std::vector<NodeId> order;
    /// s_curve[Q-1] = lcc after the first Q removals, divided by the original N.
    std::vector<double> s_curve;
    /// lcc of the untouched graph divided by N.
    double initial_fraction = 0.0;

    /// Batch index of each selection, and whether it came from the fallback
    /// branch (no eligible non-neighbour left).
    std::vector<std::size_t> batch_of;
    std::vector<std::uint8_t> fallback;
    std::size_t fallback_count = 0;
    /// Eigenvector recomputations that hit the iteration cap.
    std::size_t unconverged_recomputations = 0;

    [[nodiscard]] bool complete() const noexcept { return order.size() == node_count; }
};

/// Number of removals for a fraction of n nodes: ceil(fraction * n), guarded
/// against floating-point noise, clamped to [1, n] for n > 0.
[[nodiscard]] std::size_t fraction_to_count(double fraction, std::size_t n);

/// Scores for `method` on `g`, with the tie-break key the engine uses
/// (residual degree for coreness, zero otherwise). Edgeless graphs score 0.
struct MethodScores {
    ScoreVector primary;
    std::vector<double> secondary;
    bool converged = true;
};
[[nodiscard]] MethodScores score_for_method(const Graph& g, CentralityMethod method,
                                            const SvidOptions& svid = {});

/// Adaptive targeted immunization. Each batch scores the residual graph, then
/// picks nodes one at a time by score under neighbour exclusion, falling back
/// to the best unremoved node when exclusion leaves nothing. SVID additionally
/// discounts scores after each regular pick within a batch.
[[nodiscard]] ImmunizationPlan run_strategy(const Graph& g, const StrategyConfig& cfg);

/// run_strategy with q = 1: every node removed, s(Q) for Q = 1..N.
[[nodiscard]] ImmunizationPlan full_ordering(const Graph& g, StrategyConfig cfg);

/// `step,node,lcc_fraction`, steps 1..Q, original node labels.
void write_plan_csv(const Graph& g, const ImmunizationPlan& plan, std::ostream& out);
/// `method,q,batch,fallback_count` single row.
void write_plan_summary_csv(const ImmunizationPlan& plan, std::ostream& out);

} // namespace svid
