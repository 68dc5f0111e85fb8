#pragma once

#include "svid/immunization.hpp"
#include "svid/scores.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace svid {

struct RobustnessResult {
    CentralityMethod method = CentralityMethod::Svid;
    /// (1/N) Σ_{Q=1}^{N} s(Q)
    double robustness = 0.0;
    /// (q, f) points for Q = 0..N, q = Q/N.
    std::vector<std::pair<double, double>> curve;
};

/// Throws DomainError unless the plan removes every node.
[[nodiscard]] RobustnessResult robustness(const ImmunizationPlan& plan);

/// Trapezoidal area under a (q, f) polyline.
[[nodiscard]] double trapezoid_area(std::span<const std::pair<double, double>> curve);

/// Smallest q = Q/N with s(Q) <= threshold, or nullopt if never reached.
/// Throws DomainError unless 0 < threshold < 1.
[[nodiscard]] std::optional<double> collapse_point(const ImmunizationPlan& plan, double threshold);

/// Plans from one graph aligned on removal step. f[j][Q] is method j's lcc
/// fraction after Q removals (Q = 0 is the intact graph); steps beyond a
/// plan's length hold nullopt.
struct FqTable {
    std::size_t node_count = 0;
    std::vector<CentralityMethod> methods;
    std::vector<std::size_t> fallback_counts;
    std::vector<double> q;
    std::vector<std::vector<std::optional<double>>> f;
};

/// Throws DomainError when the plans come from different graphs or none are given.
[[nodiscard]] FqTable f_q_curve(std::span<const ImmunizationPlan> plans);

/// `q,<method>...` one row per step; missing cells left empty.
void write_fq_csv(const FqTable& table, std::ostream& out);

/// Robustness per (method, network), rows = methods, columns = networks.
struct RobustnessTable {
    std::vector<std::string> networks;
    std::vector<CentralityMethod> methods;
    /// [method][network]
    std::vector<std::vector<std::optional<double>>> value;
    std::vector<std::vector<std::optional<std::size_t>>> fallbacks;

    RobustnessTable(std::vector<CentralityMethod> methods, std::vector<std::string> networks);
    void set(std::size_t method_row, std::size_t network_col, const ImmunizationPlan& plan);
};

/// `method,<network>...` with method labels (EVA, DA, ...); empty cells for
/// missing entries.
void write_robustness_csv(const RobustnessTable& table, std::ostream& out);
/// Same shape, holding fallback counts.
void write_fallback_csv(const RobustnessTable& table, std::ostream& out);

} // namespace svid
