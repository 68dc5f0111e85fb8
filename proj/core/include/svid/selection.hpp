#pragma once

#include "svid/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <vector>

namespace svid {

/// Greedy top-score picker with neighbour exclusion and fallback.
///
/// Candidates are ordered by (primary desc, secondary desc, id asc). A node
/// adjacent to an earlier pick of this selector is ineligible; when no
/// eligible node remains, the best unselected node is returned with
/// `fallback` set. Primary scores may be lowered or raised between picks via
/// adjust(). Uses two lazily invalidated heaps, so a pick costs O(log n)
/// amortised.
class GreedySelector {
public:
    struct Pick {
        NodeId node;
        bool fallback;
    };

    /// `blocked` nodes are never returned (already removed elsewhere).
    /// An empty `secondary` means all-zero tie-breaker.
    GreedySelector(const Graph& g, std::vector<double> primary, std::vector<double> secondary,
                   bool neighbor_exclusion, const NodeSet& blocked);
    // Keeps a pointer to g.
    GreedySelector(Graph&&, std::vector<double>, std::vector<double>, bool, const NodeSet&) = delete;

    /// Next pick, or nullopt once every unblocked node is taken.
    std::optional<Pick> next();

    void adjust(NodeId v, double delta);

    [[nodiscard]] const std::vector<double>& primary() const noexcept { return primary_; }

private:
    struct Entry {
        double primary;
        double secondary;
        NodeId node;
        std::uint32_t version;
    };
    struct Less {
        bool operator()(const Entry& a, const Entry& b) const {
            if (a.primary != b.primary) return a.primary < b.primary;
            if (a.secondary != b.secondary) return a.secondary < b.secondary;
            return a.node > b.node;
        }
    };
    using Heap = std::priority_queue<Entry, std::vector<Entry>, Less>;

    const Graph* graph_;
    std::vector<double> primary_;
    std::vector<double> secondary_;
    std::vector<std::uint32_t> version_;
    std::vector<std::uint8_t> taken_;
    std::vector<std::uint8_t> excluded_;
    bool exclusion_;
    Heap eligible_;
    Heap deferred_;

    [[nodiscard]] bool live(const Entry& e) const {
        return taken_[e.node] == 0 && version_[e.node] == e.version;
    }
    Entry entry(NodeId v) const { return {primary_[v], secondary_[v], v, version_[v]}; }
    void take(NodeId v);
};

} // namespace svid
