#include "svid/graph.hpp"

#include "svid/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace svid {

NodeSet::NodeSet(std::size_t universe, std::span<const NodeId> members) : bits_(universe, 0) {
    for (NodeId v : members) {
        if (v >= universe) {
            throw DomainError("node id " + std::to_string(v) + " outside node set universe");
        }
        insert(v);
    }
}

bool NodeSet::insert(NodeId v) {
    if (v >= bits_.size()) {
        throw DomainError("node id " + std::to_string(v) + " outside node set universe");
    }
    if (bits_[v] != 0) return false;
    bits_[v] = 1;
    ++count_;
    return true;
}

std::vector<NodeId> NodeSet::members() const {
    std::vector<NodeId> out;
    out.reserve(count_);
    for (std::size_t v = 0; v < bits_.size(); ++v) {
        if (bits_[v] != 0) out.push_back(static_cast<NodeId>(v));
    }
    return out;
}

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges,
                        std::vector<std::int64_t> labels) {
    if (!labels.empty() && labels.size() != node_count) {
        throw DomainError("label count does not match node count");
    }
    Graph g;
    g.adjacency_.resize(node_count);
    for (auto [u, v] : edges) {
        if (u >= node_count || v >= node_count) {
            throw DomainError("edge endpoint outside node range");
        }
        if (u == v) continue;
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    std::size_t total = 0;
    for (auto& adj : g.adjacency_) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
        adj.shrink_to_fit();
        total += adj.size();
    }
    g.edge_count_ = total / 2;
    if (labels.empty()) {
        labels.resize(node_count);
        std::iota(labels.begin(), labels.end(), std::int64_t{0});
    }
    g.labels_ = std::move(labels);
    return g;
}

void Graph::check(NodeId v) const {
    if (v >= adjacency_.size()) {
        throw DomainError("node id " + std::to_string(v) + " out of range (n = " +
                          std::to_string(adjacency_.size()) + ")");
    }
}

std::span<const NodeId> Graph::neighbors(NodeId v) const {
    check(v);
    return adjacency_[v];
}

std::size_t Graph::degree(NodeId v) const {
    check(v);
    return adjacency_[v].size();
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    return neighbor_index(u, v).has_value();
}

std::optional<std::size_t> Graph::neighbor_index(NodeId u, NodeId v) const {
    check(u);
    check(v);
    const auto& adj = adjacency_[u];
    auto it = std::lower_bound(adj.begin(), adj.end(), v);
    if (it == adj.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - adj.begin());
}

std::int64_t Graph::label(NodeId v) const {
    check(v);
    return labels_[v];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (NodeId u = 0; u < adjacency_.size(); ++u) {
        for (NodeId v : adjacency_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::without(const NodeSet& removed) const {
    if (removed.universe() != adjacency_.size()) {
        throw DomainError("removed set does not match graph size");
    }
    Graph g;
    g.labels_ = labels_;
    g.adjacency_.resize(adjacency_.size());
    std::size_t total = 0;
    for (NodeId u = 0; u < adjacency_.size(); ++u) {
        if (removed.contains(u)) continue;
        auto& adj = g.adjacency_[u];
        for (NodeId v : adjacency_[u]) {
            if (!removed.contains(v)) adj.push_back(v);
        }
        total += adj.size();
    }
    g.edge_count_ = total / 2;
    return g;
}

std::uint64_t Graph::fingerprint() const noexcept {
    // FNV-1a over node count followed by the sorted edge list.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xffU;
            h *= 0x100000001b3ULL;
        }
    };
    mix(adjacency_.size());
    for (NodeId u = 0; u < adjacency_.size(); ++u) {
        for (NodeId v : adjacency_[u]) {
            if (u < v) {
                mix(u);
                mix(v);
            }
        }
    }
    return h;
}

bool Graph::well_formed() const {
    std::size_t total = 0;
    for (NodeId u = 0; u < adjacency_.size(); ++u) {
        const auto& adj = adjacency_[u];
        if (!std::is_sorted(adj.begin(), adj.end())) return false;
        if (std::adjacent_find(adj.begin(), adj.end()) != adj.end()) return false;
        for (NodeId v : adj) {
            if (v == u || v >= adjacency_.size()) return false;
            if (!std::binary_search(adjacency_[v].begin(), adjacency_[v].end(), u)) return false;
        }
        total += adj.size();
    }
    return total % 2 == 0 && total / 2 == edge_count_ && labels_.size() == adjacency_.size();
}

std::size_t degree(const Graph& g, NodeId v) {
    return g.degree(v);
}

namespace {

std::size_t sorted_intersection_size(std::span<const NodeId> a, std::span<const NodeId> b,
                                     NodeId skip1, NodeId skip2) {
    std::size_t count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            if (*i != skip1 && *i != skip2) ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

// Union-find with union by size and path halving.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    std::size_t unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return size_[a];
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return size_[a];
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

} // namespace

std::size_t common_neighbors(const Graph& g, NodeId u, NodeId v) {
    if (u == v) {
        throw DomainError("common_neighbors requires two distinct nodes");
    }
    return sorted_intersection_size(g.neighbors(u), g.neighbors(v), u, v);
}

std::size_t lcc_size(const Graph& g, const NodeSet& removed) {
    const std::size_t n = g.node_count();
    if (removed.universe() != n) {
        throw DomainError("removed set does not match graph size");
    }
    std::vector<std::uint8_t> seen(n, 0);
    std::vector<NodeId> stack;
    std::size_t best = 0;
    for (NodeId s = 0; s < n; ++s) {
        if (seen[s] || removed.contains(s)) continue;
        std::size_t size = 0;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            NodeId x = stack.back();
            stack.pop_back();
            ++size;
            for (NodeId y : g.neighbors(x)) {
                if (!seen[y] && !removed.contains(y)) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        best = std::max(best, size);
    }
    return best;
}

std::size_t lcc_size(const Graph& g) {
    return lcc_size(g, NodeSet(g.node_count()));
}

std::vector<std::size_t> lcc_after_removals(const Graph& g, std::span<const NodeId> order) {
    const std::size_t n = g.node_count();
    NodeSet in_order(n);
    for (NodeId v : order) {
        if (!in_order.insert(v)) {
            throw DomainError("removal order contains a duplicate node");
        }
    }

    // Nodes never removed form the starting residual graph.
    DisjointSets sets(n);
    std::vector<std::uint8_t> present(n, 0);
    std::size_t best = 0;
    for (NodeId v = 0; v < n; ++v) {
        if (in_order.contains(v)) continue;
        present[v] = 1;
        best = std::max<std::size_t>(best, 1);
    }
    for (NodeId v = 0; v < n; ++v) {
        if (!present[v]) continue;
        for (NodeId w : g.neighbors(v)) {
            if (w > v && present[w]) best = std::max(best, sets.unite(v, w));
        }
    }

    std::vector<std::size_t> result(order.size());
    for (std::size_t i = order.size(); i-- > 0;) {
        result[i] = best;
        NodeId v = order[i];
        present[v] = 1;
        best = std::max<std::size_t>(best, 1);
        for (NodeId w : g.neighbors(v)) {
            if (present[w]) best = std::max(best, sets.unite(v, w));
        }
    }
    return result;
}

std::vector<std::size_t> component_ids(const Graph& g) {
    const std::size_t n = g.node_count();
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> comp(n, unset);
    std::vector<NodeId> stack;
    std::size_t next = 0;
    for (NodeId s = 0; s < n; ++s) {
        if (comp[s] != unset) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            NodeId x = stack.back();
            stack.pop_back();
            for (NodeId y : g.neighbors(x)) {
                if (comp[y] == unset) {
                    comp[y] = next;
                    stack.push_back(y);
                }
            }
        }
        ++next;
    }
    return comp;
}

GraphStats stats(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n == 0) {
        throw DomainError("stats of an empty graph");
    }
    GraphStats s;
    s.nodes = n;
    s.edges = g.edge_count();

    double sum_k = 0.0;
    double sum_k2 = 0.0;
    double sum_clustering = 0.0;
    for (NodeId v = 0; v < n; ++v) {
        const auto adj = g.neighbors(v);
        const std::size_t k = adj.size();
        s.k_max = std::max(s.k_max, k);
        sum_k += static_cast<double>(k);
        sum_k2 += static_cast<double>(k) * static_cast<double>(k);
        if (k < 2) continue;
        // Each triangle at v is seen once from each of its two other corners.
        std::size_t links = 0;
        for (NodeId u : adj) {
            links += sorted_intersection_size(adj, g.neighbors(u), v, u);
        }
        const double pairs = static_cast<double>(k) * static_cast<double>(k - 1);
        sum_clustering += static_cast<double>(links) / pairs;
    }
    const double nn = static_cast<double>(n);
    s.mean_degree = sum_k / nn;
    s.mean_sq_degree = sum_k2 / nn;
    s.clustering = sum_clustering / nn;
    if (s.mean_sq_degree > 0.0) {
        s.epidemic_threshold = s.mean_degree / s.mean_sq_degree;
    }
    return s;
}

} // namespace svid
