#pragma once

#include "svid/graph.hpp"
#include "svid/scores.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace svid {

struct SvidOptions {
    /// Radius of the neighbourhoods whose overlap defines K for an edge: 1 or 2.
    int hops = 1;

    /// Throws ConfigError unless hops is 1 or 2.
    void validate() const;
};

/// Probability that, in a uniformly random ordering of u, v and their K common
/// neighbours, u comes first and v second: 1 / ((K+1)(K+2)).
[[nodiscard]] double ordering_probability(std::size_t common);

/// K for the edge (u,v) once the edge itself is removed. Neighbourhoods are the
/// nodes within `hops` of each endpoint, excluding both endpoints.
[[nodiscard]] std::size_t edge_common_neighbors(const Graph& g, NodeId u, NodeId v,
                                                const SvidOptions& opts = {});

/// Per-edge Shapley contributions laid out like the adjacency lists:
/// terms[v][i] is ordering_probability(K) of the edge (v, neighbors(v)[i]).
/// Both orientations of an edge hold the same value.
using EdgeTerms = std::vector<std::vector<double>>;

[[nodiscard]] EdgeTerms svid_edge_terms(const Graph& g, const SvidOptions& opts = {});

/// Θ(v) = sum of the contributions of the edges incident to v.
[[nodiscard]] ScoreVector svid_scores(const Graph& g, const SvidOptions& opts = {});
[[nodiscard]] ScoreVector svid_scores(const Graph& g, const EdgeTerms& terms);

/// Closed-form Shapley value of the fringe game:
/// Θ(v) = Σ_{u ∈ {v} ∪ N(v)} 1 / (1 + deg(u)).
[[nodiscard]] ScoreVector spin_shapley(const Graph& g);

/// Coalitions of a game with at most 32 players, as bit masks.
using Coalition = std::uint32_t;

/// Transferable-utility game: a player count and a characteristic function
/// with value(0) == 0.
struct CoalitionGame {
    std::size_t players = 0;
    std::function<double(Coalition)> value;
};

/// ϑ(C) = |C ∪ N(C)|, ϑ(∅) = 0. Requires at most 32 nodes.
[[nodiscard]] CoalitionGame fringe_game(const Graph& g);

/// Exact Shapley values by subset enumeration:
/// Θ(i) = Σ_{C ⊆ N∖{i}} |C|!(|N|−|C|−1)!/|N|! · (ϑ(C∪{i}) − ϑ(C)).
/// Throws DomainError for more than kMaxExactPlayers players or ϑ(∅) != 0.
inline constexpr std::size_t kMaxExactPlayers = 12;
[[nodiscard]] ScoreVector exact_shapley(const CoalitionGame& game);

/// Running scores for the discounted selection loop. After a node is picked,
/// every edge (u,w) with u a neighbour of the pick takes its original
/// contribution off Θ(w).
class SvidDiscount {
public:
    SvidDiscount(const Graph& g, const SvidOptions& opts);

    [[nodiscard]] const ScoreVector& scores() const noexcept { return scores_; }

    /// Applies the discount for `picked`, reporting each (node, delta) through
    /// on_change so a selector can track the new values.
    void apply(NodeId picked, const std::function<void(NodeId, double)>& on_change);
    void apply(NodeId picked);

private:
    const Graph* graph_;
    EdgeTerms terms_;
    ScoreVector scores_;
};

struct SvidSelection {
    std::vector<NodeId> order;
    std::size_t fallback_count = 0;
};

/// Greedy discounted selection of k nodes on a fixed graph: always the highest
/// current Θ among nodes not adjacent to an earlier pick (ties to the lowest
/// id), discounting after each such pick. When every remaining node is adjacent
/// to a pick, the highest-Θ unselected node is taken without discounting.
/// Throws DomainError unless 1 <= k <= |V|.
[[nodiscard]] SvidSelection svid_adaptive_select_detailed(const Graph& g, std::size_t k,
                                                          const SvidOptions& opts = {});
[[nodiscard]] std::vector<NodeId> svid_adaptive_select(const Graph& g, std::size_t k,
                                                       const SvidOptions& opts = {});

} // namespace svid
