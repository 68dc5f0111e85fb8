#include "svid/generators.hpp"

#include "svid/errors.hpp"
#include "svid/random.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>
#include <vector>

namespace svid {

std::string GenSpec::descriptor() const {
    return std::string(family == GraphFamily::ErdosRenyi ? "er:" : "ba:") + std::to_string(n) +
           "," + std::to_string(m);
}

namespace {

std::size_t parse_count(std::string_view text, const std::string& whole) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw ConfigError("malformed generator spec '" + whole + "'");
    }
    return value;
}

std::uint64_t edge_key(NodeId u, NodeId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

} // namespace

GenSpec parse_gen_spec(const std::string& text, std::uint64_t seed) {
    const auto colon = text.find(':');
    const auto comma = text.find(',');
    if (colon == std::string::npos || comma == std::string::npos || comma < colon) {
        throw ConfigError("generator spec must look like er:n,m or ba:n,m0, got '" + text + "'");
    }
    const std::string family = text.substr(0, colon);
    GenSpec spec;
    if (family == "er") {
        spec.family = GraphFamily::ErdosRenyi;
    } else if (family == "ba") {
        spec.family = GraphFamily::BarabasiAlbert;
    } else {
        throw ConfigError("unknown generator family '" + family + "'");
    }
    const std::string_view view(text);
    spec.n = parse_count(view.substr(colon + 1, comma - colon - 1), text);
    spec.m = parse_count(view.substr(comma + 1), text);
    spec.seed = seed;
    return spec;
}

Graph erdos_renyi(std::size_t n, std::size_t m, std::uint64_t seed) {
    if (n > (std::size_t{1} << 31)) {
        throw DomainError("ER node count too large");
    }
    const std::size_t max_edges = n < 2 ? 0 : n * (n - 1) / 2;
    if (m > max_edges) {
        throw DomainError("ER edge count " + std::to_string(m) + " exceeds n(n-1)/2 = " +
                          std::to_string(max_edges));
    }
    Rng rng(seed);
    // Dense requests sample the complement instead, so rejection stays cheap.
    const bool complement = m > max_edges / 2;
    const std::size_t draws = complement ? max_edges - m : m;
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(draws * 2);
    std::vector<Edge> picked;
    picked.reserve(draws);
    while (picked.size() < draws) {
        const auto u = static_cast<NodeId>(rng.below(n));
        const auto v = static_cast<NodeId>(rng.below(n));
        if (u == v) continue;
        if (chosen.insert(edge_key(u, v)).second) {
            picked.emplace_back(std::min(u, v), std::max(u, v));
        }
    }
    if (!complement) {
        return Graph::from_edges(n, picked);
    }
    std::vector<Edge> edges;
    edges.reserve(m);
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            if (!chosen.contains(edge_key(u, v))) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

Graph barabasi_albert(std::size_t n, std::size_t m0, std::uint64_t seed) {
    if (m0 < 1 || m0 >= n) {
        throw DomainError("BA requires 1 <= m0 < n (m0 = " + std::to_string(m0) +
                          ", n = " + std::to_string(n) + ")");
    }
    Rng rng(seed);
    std::vector<Edge> edges;
    edges.reserve((m0 + 1) * m0 / 2 + (n - m0 - 1) * m0);
    // Every edge endpoint is listed once, so a uniform pick is degree-proportional.
    std::vector<NodeId> endpoints;
    endpoints.reserve(2 * edges.capacity());
    for (NodeId u = 0; u <= m0; ++u) {
        for (NodeId v = u + 1; v <= m0; ++v) {
            edges.emplace_back(u, v);
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
    }
    std::vector<NodeId> targets;
    for (auto t = static_cast<NodeId>(m0 + 1); t < n; ++t) {
        targets.clear();
        while (targets.size() < m0) {
            const NodeId pick = endpoints[rng.below(endpoints.size())];
            if (std::find(targets.begin(), targets.end(), pick) == targets.end()) {
                targets.push_back(pick);
            }
        }
        for (NodeId target : targets) {
            edges.emplace_back(target, t);
            endpoints.push_back(target);
            endpoints.push_back(t);
        }
    }
    return Graph::from_edges(n, edges);
}

Graph generate(const GenSpec& spec) {
    switch (spec.family) {
    case GraphFamily::ErdosRenyi:
        return erdos_renyi(spec.n, spec.m, spec.seed);
    case GraphFamily::BarabasiAlbert:
        return barabasi_albert(spec.n, spec.m, spec.seed);
    }
    throw DomainError("unknown graph family");
}

} // namespace svid
