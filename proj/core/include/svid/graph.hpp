#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace svid {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Membership mask over the nodes of one graph. Used for removed / immunized sets.
class NodeSet {
public:
    NodeSet() = default;
    explicit NodeSet(std::size_t universe) : bits_(universe, 0) {}
    NodeSet(std::size_t universe, std::span<const NodeId> members);

    [[nodiscard]] std::size_t universe() const noexcept { return bits_.size(); }
    [[nodiscard]] std::size_t size() const noexcept { return count_; }
    [[nodiscard]] bool empty() const noexcept { return count_ == 0; }
    [[nodiscard]] bool contains(NodeId v) const { return v < bits_.size() && bits_[v] != 0; }

    /// Returns false when v was already a member.
    bool insert(NodeId v);

    [[nodiscard]] std::vector<NodeId> members() const;

private:
    std::vector<std::uint8_t> bits_;
    std::size_t count_ = 0;
};

/// Immutable undirected simple graph over dense ids 0..n-1.
///
/// Adjacency lists are sorted and free of self-loops and duplicates. Each node
/// keeps the integer label it had in the source data, so output can use the
/// original naming.
class Graph {
public:
    Graph() = default;

    /// Builds from an edge list. Self-loops and duplicate edges are dropped.
    /// Throws DomainError for endpoints >= node_count.
    static Graph from_edges(std::size_t node_count, std::span<const Edge> edges,
                            std::vector<std::int64_t> labels = {});

    [[nodiscard]] std::size_t node_count() const noexcept { return adjacency_.size(); }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edge_count_; }

    [[nodiscard]] std::span<const NodeId> neighbors(NodeId v) const;
    [[nodiscard]] std::size_t degree(NodeId v) const;
    [[nodiscard]] bool has_edge(NodeId u, NodeId v) const;
    [[nodiscard]] std::int64_t label(NodeId v) const;
    [[nodiscard]] const std::vector<std::int64_t>& labels() const noexcept { return labels_; }

    /// Position of v inside neighbors(u), if adjacent.
    [[nodiscard]] std::optional<std::size_t> neighbor_index(NodeId u, NodeId v) const;

    /// Edges with u < v, ordered lexicographically.
    [[nodiscard]] std::vector<Edge> edges() const;

    /// Same node ids and labels; every edge touching a removed node is gone.
    [[nodiscard]] Graph without(const NodeSet& removed) const;

    /// Stable 64-bit hash of (node_count, edge set). Used to check that
    /// results were produced on the same graph.
    [[nodiscard]] std::uint64_t fingerprint() const noexcept;

    /// Checks symmetry, sortedness, no self-loops, edge count. Test aid.
    [[nodiscard]] bool well_formed() const;

private:
    std::vector<std::vector<NodeId>> adjacency_;
    std::vector<std::int64_t> labels_;
    std::size_t edge_count_ = 0;

    void check(NodeId v) const;
};

struct GraphStats {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::size_t k_max = 0;
    double clustering = 0.0;
    double mean_degree = 0.0;
    double mean_sq_degree = 0.0;
    /// <k>/<k^2>; absent for edgeless graphs.
    std::optional<double> epidemic_threshold;
};

[[nodiscard]] std::size_t degree(const Graph& g, NodeId v);

/// |N(u) ∩ N(v)| with u and v themselves excluded; the edge (u,v) plays no role.
[[nodiscard]] std::size_t common_neighbors(const Graph& g, NodeId u, NodeId v);

/// Largest connected component of the subgraph induced on V \ removed.
/// Isolated surviving nodes count as components of size 1.
[[nodiscard]] std::size_t lcc_size(const Graph& g, const NodeSet& removed);
[[nodiscard]] std::size_t lcc_size(const Graph& g);

/// lcc size after each prefix of `order` is removed: result[q-1] is the lcc
/// once order[0..q) are gone. Runs a reverse union-find, O(m α(n)).
[[nodiscard]] std::vector<std::size_t> lcc_after_removals(const Graph& g,
                                                          std::span<const NodeId> order);

/// Connected component id per node (ids assigned in order of smallest member).
[[nodiscard]] std::vector<std::size_t> component_ids(const Graph& g);

/// Mean local clustering (nodes of degree < 2 contribute 0), degree moments,
/// and epidemic threshold. Throws DomainError on an empty graph.
[[nodiscard]] GraphStats stats(const Graph& g);

} // namespace svid
