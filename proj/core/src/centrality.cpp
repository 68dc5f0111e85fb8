#include "svid/centrality.hpp"

#include "parallel.hpp"
#include "svid/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace svid {

ScoreVector degree_scores(const Graph& g) {
    ScoreVector out{std::vector<double>(g.node_count()), "degree"};
    for (NodeId v = 0; v < g.node_count(); ++v) {
        out.theta[v] = static_cast<double>(g.degree(v));
    }
    return out;
}

namespace {

constexpr std::size_t kSourceChunk = 64;

// Single-source dependency accumulation; adds δ_s(v) into `acc`.
class BrandesWorkspace {
public:
    explicit BrandesWorkspace(std::size_t n)
        : sigma_(n), dist_(n), delta_(n) {
        order_.reserve(n);
    }

    void accumulate(const Graph& g, NodeId s, std::vector<double>& acc) {
        std::fill(sigma_.begin(), sigma_.end(), 0.0);
        std::fill(dist_.begin(), dist_.end(), -1);
        std::fill(delta_.begin(), delta_.end(), 0.0);
        order_.clear();

        sigma_[s] = 1.0;
        dist_[s] = 0;
        order_.push_back(s);
        for (std::size_t head = 0; head < order_.size(); ++head) {
            const NodeId v = order_[head];
            for (NodeId w : g.neighbors(v)) {
                if (dist_[w] < 0) {
                    dist_[w] = dist_[v] + 1;
                    order_.push_back(w);
                }
                if (dist_[w] == dist_[v] + 1) sigma_[w] += sigma_[v];
            }
        }
        // Predecessors are recovered from distances instead of stored lists.
        for (std::size_t i = order_.size(); i-- > 1;) {
            const NodeId w = order_[i];
            const double coeff = (1.0 + delta_[w]) / sigma_[w];
            for (NodeId v : g.neighbors(w)) {
                if (dist_[v] == dist_[w] - 1) delta_[v] += sigma_[v] * coeff;
            }
            acc[w] += delta_[w];
        }
    }

private:
    std::vector<double> sigma_;
    std::vector<std::int64_t> dist_;
    std::vector<double> delta_;
    std::vector<NodeId> order_;
};

} // namespace

ScoreVector betweenness_scores(const Graph& g) {
    const std::size_t n = g.node_count();
    const std::size_t chunks = (n + kSourceChunk - 1) / kSourceChunk;
    std::vector<std::vector<double>> partial(chunks);
    detail::for_each_chunk(n, kSourceChunk, [&](std::size_t c, std::size_t begin, std::size_t end) {
        BrandesWorkspace ws(n);
        std::vector<double> acc(n, 0.0);
        for (std::size_t s = begin; s < end; ++s) {
            ws.accumulate(g, static_cast<NodeId>(s), acc);
        }
        partial[c] = std::move(acc);
    });
    ScoreVector out{std::vector<double>(n, 0.0), "betweenness"};
    for (const auto& acc : partial) {
        for (std::size_t v = 0; v < n; ++v) out.theta[v] += acc[v];
    }
    // Every unordered pair was counted from both ends.
    for (double& x : out.theta) x *= 0.5;
    return out;
}

EigenvectorResult eigenvector_centrality(const Graph& g, const PowerIterationOptions& opts) {
    const std::size_t n = g.node_count();
    if (g.edge_count() == 0) {
        throw DomainError("eigenvector centrality needs at least one edge");
    }
    auto normalize = [](std::vector<double>& x) {
        double norm = 0.0;
        for (double xi : x) norm += xi * xi;
        norm = std::sqrt(norm);
        for (double& xi : x) xi /= norm;
    };

    std::vector<double> x(n, 1.0);
    normalize(x);
    std::vector<double> y(n);
    EigenvectorResult result;
    for (std::size_t it = 1; it <= opts.max_iterations; ++it) {
        for (NodeId v = 0; v < n; ++v) {
            double sum = x[v];
            for (NodeId w : g.neighbors(v)) sum += x[w];
            y[v] = sum;
        }
        normalize(y);
        double change = 0.0;
        for (std::size_t v = 0; v < n; ++v) change = std::max(change, std::abs(y[v] - x[v]));
        x.swap(y);
        result.iterations = it;
        if (change < opts.tolerance) {
            result.converged = true;
            break;
        }
    }

    double rayleigh = 0.0;
    for (NodeId v = 0; v < n; ++v) {
        double ax = 0.0;
        for (NodeId w : g.neighbors(v)) ax += x[w];
        rayleigh += x[v] * ax;
    }
    result.eigenvalue = rayleigh;
    result.scores = ScoreVector{std::move(x), "eigenvector"};
    return result;
}

ScoreVector eigenvector_scores(const Graph& g) {
    return eigenvector_centrality(g).scores;
}

ScoreVector coreness_scores(const Graph& g) {
    const std::size_t n = g.node_count();
    ScoreVector out{std::vector<double>(n, 0.0), "coreness"};
    if (n == 0) return out;

    std::vector<std::size_t> deg(n);
    std::size_t max_deg = 0;
    for (NodeId v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        max_deg = std::max(max_deg, deg[v]);
    }
    // bin[d] = first position in `vert` of nodes with current degree d.
    std::vector<std::size_t> bin(max_deg + 1, 0);
    for (std::size_t d : deg) ++bin[d];
    std::size_t start = 0;
    for (auto& b : bin) {
        const std::size_t count = b;
        b = start;
        start += count;
    }
    std::vector<NodeId> vert(n);
    std::vector<std::size_t> pos(n);
    for (NodeId v = 0; v < n; ++v) {
        pos[v] = bin[deg[v]]++;
        vert[pos[v]] = v;
    }
    for (std::size_t d = max_deg; d > 0; --d) bin[d] = bin[d - 1];
    bin[0] = 0;

    for (std::size_t i = 0; i < n; ++i) {
        const NodeId v = vert[i];
        for (NodeId u : g.neighbors(v)) {
            if (deg[u] > deg[v]) {
                const std::size_t du = deg[u];
                const std::size_t pu = pos[u];
                const std::size_t pw = bin[du];
                const NodeId w = vert[pw];
                if (u != w) {
                    vert[pu] = w;
                    pos[w] = pu;
                    vert[pw] = u;
                    pos[u] = pw;
                }
                ++bin[du];
                --deg[u];
            }
        }
    }
    for (NodeId v = 0; v < n; ++v) out.theta[v] = static_cast<double>(deg[v]);
    return out;
}

} // namespace svid
