#pragma once

#include "svid/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <string>

namespace svid {

enum class GraphFamily { ErdosRenyi, BarabasiAlbert };

/// Model-network recipe. `m` is the exact edge count for ER and the number of
/// edges each arriving node brings for BA.
struct GenSpec {
    GraphFamily family = GraphFamily::ErdosRenyi;
    std::size_t n = 0;
    std::size_t m = 0;
    std::uint64_t seed = 0;

    /// "er:n,m" / "ba:n,m0" (without the seed).
    [[nodiscard]] std::string descriptor() const;
};

/// Parses "er:n,m" or "ba:n,m0". Throws ConfigError on malformed text.
[[nodiscard]] GenSpec parse_gen_spec(const std::string& text, std::uint64_t seed);

/// ER: uniform over simple graphs with exactly m edges, G(n, m).
/// BA: seed clique on m+1 nodes, then each new node attaches to m distinct
/// existing nodes with probability proportional to degree.
/// Deterministic for a fixed seed. Throws DomainError for infeasible specs.
[[nodiscard]] Graph generate(const GenSpec& spec);

[[nodiscard]] Graph erdos_renyi(std::size_t n, std::size_t m, std::uint64_t seed);
[[nodiscard]] Graph barabasi_albert(std::size_t n, std::size_t m0, std::uint64_t seed);

} // namespace svid
