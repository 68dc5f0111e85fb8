#include "svid/scores.hpp"

#include "svid/errors.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>
#include <ostream>

namespace svid {

std::string_view method_key(CentralityMethod m) noexcept {
    switch (m) {
    case CentralityMethod::Degree: return "da";
    case CentralityMethod::Betweenness: return "bwa";
    case CentralityMethod::Eigenvector: return "eva";
    case CentralityMethod::Coreness: return "cna";
    case CentralityMethod::Svid: return "svida";
    }
    return "?";
}

std::string_view method_label(CentralityMethod m) noexcept {
    switch (m) {
    case CentralityMethod::Degree: return "DA";
    case CentralityMethod::Betweenness: return "BWA";
    case CentralityMethod::Eigenvector: return "EVA";
    case CentralityMethod::Coreness: return "CNA";
    case CentralityMethod::Svid: return "SVIDA";
    }
    return "?";
}

std::optional<CentralityMethod> parse_method(std::string_view key) noexcept {
    for (CentralityMethod m : kAllMethods) {
        if (key == method_key(m)) return m;
    }
    return std::nullopt;
}

NodeId argmax(const ScoreVector& scores) {
    if (scores.theta.empty()) {
        throw DomainError("argmax of an empty score vector");
    }
    NodeId best = 0;
    for (NodeId v = 1; v < scores.theta.size(); ++v) {
        if (scores.theta[v] > scores.theta[best]) best = v;
    }
    return best;
}

std::vector<NodeId> ranking(const ScoreVector& scores) {
    std::vector<NodeId> order(scores.theta.size());
    std::iota(order.begin(), order.end(), NodeId{0});
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        return scores.theta[a] > scores.theta[b];
    });
    return order;
}

std::string format_real(double x) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    if (ec != std::errc{}) return "nan";
    return std::string(buf.data(), ptr);
}

void write_scores_csv(const Graph& g, const ScoreVector& scores, std::ostream& out) {
    if (scores.size() != g.node_count()) {
        throw DomainError("score vector length does not match graph");
    }
    out << "node,score,method\n";
    for (NodeId v = 0; v < scores.size(); ++v) {
        out << g.label(v) << ',' << format_real(scores.theta[v]) << ',' << scores.method << '\n';
    }
}

} // namespace svid
