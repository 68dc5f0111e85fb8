#include "svid/selection.hpp"

#include "svid/errors.hpp"

namespace svid {

GreedySelector::GreedySelector(const Graph& g, std::vector<double> primary,
                               std::vector<double> secondary, bool neighbor_exclusion,
                               const NodeSet& blocked)
    : graph_(&g),
      primary_(std::move(primary)),
      secondary_(std::move(secondary)),
      version_(g.node_count(), 0),
      taken_(g.node_count(), 0),
      excluded_(g.node_count(), 0),
      exclusion_(neighbor_exclusion) {
    const std::size_t n = g.node_count();
    if (primary_.size() != n) {
        throw DomainError("score vector length does not match graph");
    }
    if (secondary_.empty()) secondary_.assign(n, 0.0);
    if (secondary_.size() != n) {
        throw DomainError("tie-break vector length does not match graph");
    }
    if (blocked.universe() != n) {
        throw DomainError("blocked set does not match graph");
    }
    std::vector<Entry> initial;
    initial.reserve(n);
    for (NodeId v = 0; v < n; ++v) {
        if (blocked.contains(v)) {
            taken_[v] = 1;
        } else {
            initial.push_back(entry(v));
        }
    }
    eligible_ = Heap(Less{}, std::move(initial));
}

void GreedySelector::adjust(NodeId v, double delta) {
    primary_.at(v) += delta;
    ++version_[v];
    if (taken_[v] != 0) return;
    if (excluded_[v] != 0) {
        deferred_.push(entry(v));
    } else {
        eligible_.push(entry(v));
    }
}

void GreedySelector::take(NodeId v) {
    taken_[v] = 1;
    if (!exclusion_) return;
    for (NodeId w : graph_->neighbors(v)) {
        excluded_[w] = 1;
    }
}

std::optional<GreedySelector::Pick> GreedySelector::next() {
    while (!eligible_.empty()) {
        Entry top = eligible_.top();
        eligible_.pop();
        if (!live(top)) continue;
        if (excluded_[top.node] != 0) {
            deferred_.push(top);
            continue;
        }
        take(top.node);
        return Pick{top.node, false};
    }
    while (!deferred_.empty()) {
        Entry top = deferred_.top();
        deferred_.pop();
        if (!live(top)) continue;
        take(top.node);
        return Pick{top.node, true};
    }
    return std::nullopt;
}

} // namespace svid
