#pragma once

#include "svid/graph.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace svid {

enum class CentralityMethod { Degree, Betweenness, Eigenvector, Coreness, Svid };

/// Short names used on the command line and in CSV output: da, bwa, eva, cna, svida.
[[nodiscard]] std::string_view method_key(CentralityMethod m) noexcept;
/// Table labels: DA, BWA, EVA, CNA, SVIDA.
[[nodiscard]] std::string_view method_label(CentralityMethod m) noexcept;
[[nodiscard]] std::optional<CentralityMethod> parse_method(std::string_view key) noexcept;

/// Every method, in the row order of the robustness table.
inline constexpr CentralityMethod kAllMethods[] = {
    CentralityMethod::Eigenvector, CentralityMethod::Degree, CentralityMethod::Betweenness,
    CentralityMethod::Coreness, CentralityMethod::Svid};

/// Per-node centrality, indexed by NodeId, tagged with the scorer that made it.
struct ScoreVector {
    std::vector<double> theta;
    std::string method;

    [[nodiscard]] std::size_t size() const noexcept { return theta.size(); }
    double operator[](NodeId v) const { return theta[v]; }
};

/// Node with the largest score; ties go to the lowest id. Throws on empty input.
[[nodiscard]] NodeId argmax(const ScoreVector& scores);

/// Node ids sorted by descending score, ties by ascending id.
[[nodiscard]] std::vector<NodeId> ranking(const ScoreVector& scores);

/// Shortest decimal text that round-trips to the same double.
[[nodiscard]] std::string format_real(double x);

/// CSV with header `node,score,method`, one row per node in id order,
/// using the graph's original labels.
void write_scores_csv(const Graph& g, const ScoreVector& scores, std::ostream& out);

} // namespace svid
