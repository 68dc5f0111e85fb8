#include "svid/shapley.hpp"

#include "parallel.hpp"
#include "svid/errors.hpp"
#include "svid/selection.hpp"

#include <bit>
#include <string>

namespace svid {

void SvidOptions::validate() const {
    if (hops != 1 && hops != 2) {
        throw ConfigError("hops must be 1 or 2, got " + std::to_string(hops));
    }
}

double ordering_probability(std::size_t common) {
    const double k = static_cast<double>(common);
    return 1.0 / ((k + 1.0) * (k + 2.0));
}

namespace {

// Marks everything within two hops of `root` in g minus the edge (root, other),
// skipping both endpoints. Marks are stamp values so the buffer is reused.
void mark_two_hop(const Graph& g, NodeId root, NodeId other, std::vector<std::uint32_t>& mark,
                  std::uint32_t stamp) {
    for (NodeId a : g.neighbors(root)) {
        if (a == other) continue;
        mark[a] = stamp;
        for (NodeId b : g.neighbors(a)) {
            if (b != root && b != other) mark[b] = stamp;
        }
    }
}

std::size_t count_two_hop_overlap(const Graph& g, NodeId u, NodeId v,
                                  std::vector<std::uint32_t>& mark_u,
                                  std::vector<std::uint32_t>& mark_v, std::uint32_t stamp) {
    mark_two_hop(g, u, v, mark_u, stamp);
    mark_two_hop(g, v, u, mark_v, stamp);
    std::size_t count = 0;
    // Walk v's ball and count nodes also in u's ball, each once.
    auto visit = [&](NodeId x) {
        if (mark_u[x] == stamp && mark_v[x] == stamp) {
            ++count;
            mark_v[x] = 0;
        }
    };
    for (NodeId a : g.neighbors(v)) {
        if (a == u) continue;
        visit(a);
        for (NodeId b : g.neighbors(a)) {
            if (b != u && b != v) visit(b);
        }
    }
    return count;
}

constexpr std::size_t kNodeChunk = 256;

} // namespace

std::size_t edge_common_neighbors(const Graph& g, NodeId u, NodeId v, const SvidOptions& opts) {
    opts.validate();
    if (opts.hops == 1) {
        return common_neighbors(g, u, v);
    }
    if (u == v) {
        throw DomainError("edge_common_neighbors requires two distinct nodes");
    }
    std::vector<std::uint32_t> mark_u(g.node_count(), 0);
    std::vector<std::uint32_t> mark_v(g.node_count(), 0);
    return count_two_hop_overlap(g, u, v, mark_u, mark_v, 1);
}

EdgeTerms svid_edge_terms(const Graph& g, const SvidOptions& opts) {
    opts.validate();
    const std::size_t n = g.node_count();
    EdgeTerms terms(n);
    for (NodeId v = 0; v < n; ++v) {
        terms[v].assign(g.degree(v), 0.0);
    }
    // Each chunk fills the lower-id side of its edges; mirrored afterwards.
    detail::for_each_chunk(n, kNodeChunk, [&](std::size_t, std::size_t begin, std::size_t end) {
        std::vector<std::uint32_t> mark_u;
        std::vector<std::uint32_t> mark_v;
        std::uint32_t stamp = 0;
        if (opts.hops == 2) {
            mark_u.assign(n, 0);
            mark_v.assign(n, 0);
        }
        for (auto u = static_cast<NodeId>(begin); u < end; ++u) {
            const auto adj = g.neighbors(u);
            for (std::size_t i = 0; i < adj.size(); ++i) {
                const NodeId v = adj[i];
                if (v < u) continue;
                const std::size_t k = opts.hops == 1
                                          ? common_neighbors(g, u, v)
                                          : count_two_hop_overlap(g, u, v, mark_u, mark_v, ++stamp);
                terms[u][i] = ordering_probability(k);
            }
        }
    });
    for (NodeId u = 0; u < n; ++u) {
        const auto adj = g.neighbors(u);
        for (std::size_t i = 0; i < adj.size(); ++i) {
            const NodeId v = adj[i];
            if (v < u) terms[u][i] = terms[v][*g.neighbor_index(v, u)];
        }
    }
    return terms;
}

ScoreVector svid_scores(const Graph& g, const EdgeTerms& terms) {
    if (terms.size() != g.node_count()) {
        throw DomainError("edge terms do not match graph");
    }
    ScoreVector out{std::vector<double>(g.node_count(), 0.0), "svid"};
    for (NodeId v = 0; v < g.node_count(); ++v) {
        double sum = 0.0;
        for (double t : terms[v]) sum += t;
        out.theta[v] = sum;
    }
    return out;
}

ScoreVector svid_scores(const Graph& g, const SvidOptions& opts) {
    return svid_scores(g, svid_edge_terms(g, opts));
}

ScoreVector spin_shapley(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<double> share(n);
    for (NodeId v = 0; v < n; ++v) {
        share[v] = 1.0 / (1.0 + static_cast<double>(g.degree(v)));
    }
    ScoreVector out{std::vector<double>(n, 0.0), "spin"};
    for (NodeId v = 0; v < n; ++v) {
        double sum = share[v];
        for (NodeId u : g.neighbors(v)) sum += share[u];
        out.theta[v] = sum;
    }
    return out;
}

CoalitionGame fringe_game(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n > 32) {
        throw DomainError("fringe game supports at most 32 players");
    }
    std::vector<Coalition> closed(n);
    for (NodeId v = 0; v < n; ++v) {
        Coalition mask = Coalition{1} << v;
        for (NodeId u : g.neighbors(v)) mask |= Coalition{1} << u;
        closed[v] = mask;
    }
    return CoalitionGame{n, [closed = std::move(closed)](Coalition c) {
                             Coalition fringe = 0;
                             for (std::size_t v = 0; v < closed.size(); ++v) {
                                 if (c & (Coalition{1} << v)) fringe |= closed[v];
                             }
                             return static_cast<double>(std::popcount(fringe));
                         }};
}

ScoreVector exact_shapley(const CoalitionGame& game) {
    const std::size_t n = game.players;
    if (n == 0 || n > kMaxExactPlayers) {
        throw DomainError("exact Shapley needs 1.." + std::to_string(kMaxExactPlayers) +
                          " players, got " + std::to_string(n));
    }
    if (!game.value) {
        throw DomainError("coalition game has no characteristic function");
    }
    const std::size_t subsets = std::size_t{1} << n;
    std::vector<double> worth(subsets);
    for (std::size_t c = 0; c < subsets; ++c) {
        worth[c] = game.value(static_cast<Coalition>(c));
    }
    if (worth[0] != 0.0) {
        throw DomainError("characteristic function must vanish on the empty coalition");
    }

    std::vector<double> factorial(n + 1, 1.0);
    for (std::size_t i = 1; i <= n; ++i) factorial[i] = factorial[i - 1] * static_cast<double>(i);
    std::vector<double> weight(n);
    for (std::size_t s = 0; s < n; ++s) {
        weight[s] = factorial[s] * factorial[n - s - 1] / factorial[n];
    }

    ScoreVector out{std::vector<double>(n, 0.0), "exact"};
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t bit = std::size_t{1} << i;
        double sum = 0.0;
        for (std::size_t c = 0; c < subsets; ++c) {
            if (c & bit) continue;
            const auto size = static_cast<std::size_t>(std::popcount(c));
            sum += weight[size] * (worth[c | bit] - worth[c]);
        }
        out.theta[i] = sum;
    }
    return out;
}

SvidDiscount::SvidDiscount(const Graph& g, const SvidOptions& opts)
    : graph_(&g), terms_(svid_edge_terms(g, opts)), scores_(svid_scores(g, terms_)) {}

void SvidDiscount::apply(NodeId picked, const std::function<void(NodeId, double)>& on_change) {
    for (NodeId u : graph_->neighbors(picked)) {
        const auto adj = graph_->neighbors(u);
        for (std::size_t i = 0; i < adj.size(); ++i) {
            const NodeId w = adj[i];
            const double delta = -terms_[u][i];
            scores_.theta[w] += delta;
            if (on_change) on_change(w, delta);
        }
    }
}

void SvidDiscount::apply(NodeId picked) {
    apply(picked, {});
}

SvidSelection svid_adaptive_select_detailed(const Graph& g, std::size_t k,
                                            const SvidOptions& opts) {
    if (k < 1 || k > g.node_count()) {
        throw DomainError("selection size must satisfy 1 <= k <= |V| (k = " + std::to_string(k) +
                          ", |V| = " + std::to_string(g.node_count()) + ")");
    }
    SvidDiscount discount(g, opts);
    GreedySelector selector(g, discount.scores().theta, {}, true, NodeSet(g.node_count()));
    SvidSelection result;
    result.order.reserve(k);
    while (result.order.size() < k) {
        const auto pick = selector.next();
        if (!pick) break;
        result.order.push_back(pick->node);
        if (pick->fallback) {
            ++result.fallback_count;
        } else {
            discount.apply(pick->node, [&](NodeId w, double delta) { selector.adjust(w, delta); });
        }
    }
    return result;
}

std::vector<NodeId> svid_adaptive_select(const Graph& g, std::size_t k, const SvidOptions& opts) {
    return svid_adaptive_select_detailed(g, k, opts).order;
}

} // namespace svid
