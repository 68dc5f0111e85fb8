#pragma once

// Small named graphs, random graph helpers and brute-force oracles shared by
// the unit and acceptance suites. Nothing here calls into the code paths it is
// used to check.

#include "svid/graph.hpp"
#include "svid/random.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <vector>

namespace svid::testing {

inline Graph make(std::size_t n, std::vector<Edge> edges) {
    return Graph::from_edges(n, edges);
}

inline Graph triangle() { return make(3, {{0, 1}, {1, 2}, {0, 2}}); }

inline Graph path(std::size_t n) {
    std::vector<Edge> e;
    for (NodeId v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return make(n, e);
}

inline Graph cycle(std::size_t n) {
    std::vector<Edge> e;
    for (NodeId v = 0; v < n; ++v) e.emplace_back(v, static_cast<NodeId>((v + 1) % n));
    return make(n, e);
}

/// Node 0 is the hub.
inline Graph star(std::size_t leaves) {
    std::vector<Edge> e;
    for (NodeId v = 1; v <= leaves; ++v) e.emplace_back(0, v);
    return make(leaves + 1, e);
}

inline Graph complete(std::size_t n) {
    std::vector<Edge> e;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return make(n, e);
}

inline Graph empty(std::size_t n) { return make(n, {}); }

/// Two K4s on {0..3} and {4..7}, joined by the bridge 3–4.
inline Graph barbell() {
    std::vector<Edge> e;
    for (NodeId base : {NodeId{0}, NodeId{4}})
        for (NodeId u = 0; u < 4; ++u)
            for (NodeId v = u + 1; v < 4; ++v) e.emplace_back(base + u, base + v);
    e.emplace_back(3, 4);
    return make(8, e);
}

inline Graph gnp(std::size_t n, double p, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Edge> e;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) e.emplace_back(u, v);
    return make(n, e);
}

inline bool connected(const Graph& g) {
    if (g.node_count() == 0) return true;
    std::vector<char> seen(g.node_count(), 0);
    std::vector<NodeId> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        NodeId x = stack.back();
        stack.pop_back();
        for (NodeId y : g.neighbors(x))
            if (!seen[y]) {
                seen[y] = 1;
                ++count;
                stack.push_back(y);
            }
    }
    return count == g.node_count();
}

/// Random connected graph: retry G(n,p) until connected.
inline Graph connected_gnp(std::size_t n, double p, Rng& rng) {
    for (;;) {
        Graph g = gnp(n, p, rng.next());
        if (connected(g)) return g;
    }
}

/// Every labelled graph on n nodes (n <= 6), via edge bit masks.
inline std::vector<Graph> all_graphs(std::size_t n) {
    std::vector<Edge> slots;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        std::vector<Edge> e;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask >> i & 1) e.push_back(slots[i]);
        out.push_back(make(n, e));
    }
    return out;
}

/// Relabel: node v becomes perm[v].
inline Graph relabel(const Graph& g, const std::vector<NodeId>& perm) {
    std::vector<Edge> e;
    for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
    return make(g.node_count(), e);
}

inline std::vector<NodeId> random_permutation(std::size_t n, Rng& rng) {
    std::vector<NodeId> p(n);
    std::iota(p.begin(), p.end(), NodeId{0});
    for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
    return p;
}

inline std::vector<int> bfs_distances(const Graph& g, NodeId s, NodeId skip_u = NodeId(-1),
                                      NodeId skip_v = NodeId(-1)) {
    std::vector<int> d(g.node_count(), -1);
    std::queue<NodeId> q;
    d[s] = 0;
    q.push(s);
    while (!q.empty()) {
        NodeId x = q.front();
        q.pop();
        for (NodeId y : g.neighbors(x)) {
            // Optionally pretend the edge (skip_u, skip_v) is absent.
            if ((x == skip_u && y == skip_v) || (x == skip_v && y == skip_u)) continue;
            if (d[y] < 0) {
                d[y] = d[x] + 1;
                q.push(y);
            }
        }
    }
    return d;
}

/// Betweenness by explicit all-pairs path counting: for each pair s < t and
/// each v, σ_sv·σ_vt/σ_st when v lies on a shortest s–t path.
inline std::vector<double> naive_betweenness(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<int>> dist(n);
    std::vector<std::vector<double>> sigma(n, std::vector<double>(n, 0.0));
    for (NodeId s = 0; s < n; ++s) {
        dist[s] = bfs_distances(g, s);
        std::vector<NodeId> order(n);
        std::iota(order.begin(), order.end(), NodeId{0});
        std::sort(order.begin(), order.end(),
                  [&](NodeId a, NodeId b) { return dist[s][a] < dist[s][b]; });
        sigma[s][s] = 1.0;
        for (NodeId v : order) {
            if (dist[s][v] <= 0) continue;
            for (NodeId w : g.neighbors(v))
                if (dist[s][w] == dist[s][v] - 1) sigma[s][v] += sigma[s][w];
        }
    }
    std::vector<double> bc(n, 0.0);
    for (NodeId s = 0; s < n; ++s)
        for (NodeId t = s + 1; t < n; ++t) {
            if (dist[s][t] < 0) continue;
            for (NodeId v = 0; v < n; ++v) {
                if (v == s || v == t || dist[s][v] < 0 || dist[v][t] < 0) continue;
                if (dist[s][v] + dist[v][t] == dist[s][t])
                    bc[v] += sigma[s][v] * sigma[v][t] / sigma[s][t];
            }
        }
    return bc;
}

/// core(v) = largest k such that v survives repeated deletion of nodes with
/// degree < k, recomputed from scratch for each k.
inline std::vector<std::size_t> peeling_cores(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::size_t> core(n, 0);
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<char> alive(n, 1);
        bool changed = true;
        while (changed) {
            changed = false;
            for (NodeId v = 0; v < n; ++v) {
                if (!alive[v]) continue;
                std::size_t deg = 0;
                for (NodeId w : g.neighbors(v)) deg += alive[w];
                if (deg < k) {
                    alive[v] = 0;
                    changed = true;
                }
            }
        }
        bool any = false;
        for (NodeId v = 0; v < n; ++v)
            if (alive[v]) {
                core[v] = k;
                any = true;
            }
        if (!any) break;
    }
    return core;
}

/// Counts orderings of {0, 1, ..., K+1} with 0 first and 1 second, by
/// enumerating all (K+2)! permutations. Returns {favourable, total}.
inline std::pair<std::uint64_t, std::uint64_t> count_u_first_v_second(std::size_t common) {
    std::vector<int> items(common + 2);
    std::iota(items.begin(), items.end(), 0);
    std::uint64_t favourable = 0;
    std::uint64_t total = 0;
    do {
        ++total;
        if (items[0] == 0 && items[1] == 1) ++favourable;
    } while (std::next_permutation(items.begin(), items.end()));
    return {favourable, total};
}

} // namespace svid::testing
