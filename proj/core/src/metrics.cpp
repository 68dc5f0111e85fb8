#include "svid/metrics.hpp"

#include "svid/errors.hpp"

#include <cmath>
#include <cstdint>
#include <ostream>

namespace svid {

RobustnessResult robustness(const ImmunizationPlan& plan) {
    if (!plan.complete() || plan.s_curve.size() != plan.node_count || plan.node_count == 0) {
        throw DomainError("robustness needs a plan that removes all " +
                          std::to_string(plan.node_count) + " nodes (got " +
                          std::to_string(plan.order.size()) + ")");
    }
    const double n = static_cast<double>(plan.node_count);
    RobustnessResult out;
    out.method = plan.method;
    // s(Q) holds lcc/N exactly up to rounding; sum the integer sizes so the
    // result is one correctly rounded division.
    std::uint64_t sum = 0;
    for (double s : plan.s_curve) sum += static_cast<std::uint64_t>(std::llround(s * n));
    out.robustness = static_cast<double>(sum) / (n * n);
    out.curve.reserve(plan.node_count + 1);
    out.curve.emplace_back(0.0, plan.initial_fraction);
    for (std::size_t q = 1; q <= plan.node_count; ++q) {
        out.curve.emplace_back(static_cast<double>(q) / n, plan.s_curve[q - 1]);
    }
    return out;
}

double trapezoid_area(std::span<const std::pair<double, double>> curve) {
    double area = 0.0;
    for (std::size_t i = 1; i < curve.size(); ++i) {
        area += 0.5 * (curve[i].first - curve[i - 1].first) * (curve[i].second + curve[i - 1].second);
    }
    return area;
}

std::optional<double> collapse_point(const ImmunizationPlan& plan, double threshold) {
    if (!(threshold > 0.0 && threshold < 1.0)) {
        throw DomainError("collapse threshold must lie in (0, 1), got " + format_real(threshold));
    }
    for (std::size_t i = 0; i < plan.s_curve.size(); ++i) {
        if (plan.s_curve[i] <= threshold) {
            return static_cast<double>(i + 1) / static_cast<double>(plan.node_count);
        }
    }
    return std::nullopt;
}

FqTable f_q_curve(std::span<const ImmunizationPlan> plans) {
    if (plans.empty()) {
        throw DomainError("no plans to compare");
    }
    const auto& first = plans.front();
    FqTable table;
    table.node_count = first.node_count;
    std::size_t longest = 0;
    for (const auto& plan : plans) {
        if (plan.node_count != first.node_count ||
            plan.graph_fingerprint != first.graph_fingerprint) {
            throw DomainError("plans were computed on different graphs");
        }
        longest = std::max(longest, plan.s_curve.size());
        table.methods.push_back(plan.method);
        table.fallback_counts.push_back(plan.fallback_count);
    }
    const double n = static_cast<double>(table.node_count);
    for (std::size_t q = 0; q <= longest; ++q) {
        table.q.push_back(static_cast<double>(q) / n);
    }
    for (const auto& plan : plans) {
        std::vector<std::optional<double>> column(longest + 1);
        column[0] = plan.initial_fraction;
        for (std::size_t q = 1; q <= plan.s_curve.size(); ++q) {
            column[q] = plan.s_curve[q - 1];
        }
        table.f.push_back(std::move(column));
    }
    return table;
}

void write_fq_csv(const FqTable& table, std::ostream& out) {
    out << 'q';
    for (auto m : table.methods) out << ',' << method_key(m);
    out << '\n';
    for (std::size_t row = 0; row < table.q.size(); ++row) {
        out << format_real(table.q[row]);
        for (const auto& column : table.f) {
            out << ',';
            if (column[row]) out << format_real(*column[row]);
        }
        out << '\n';
    }
}

RobustnessTable::RobustnessTable(std::vector<CentralityMethod> method_rows,
                                 std::vector<std::string> network_cols)
    : networks(std::move(network_cols)),
      methods(std::move(method_rows)),
      value(methods.size(), std::vector<std::optional<double>>(networks.size())),
      fallbacks(methods.size(), std::vector<std::optional<std::size_t>>(networks.size())) {}

void RobustnessTable::set(std::size_t method_row, std::size_t network_col,
                          const ImmunizationPlan& plan) {
    value.at(method_row).at(network_col) = robustness(plan).robustness;
    fallbacks.at(method_row).at(network_col) = plan.fallback_count;
}

namespace {

template <typename Cell, typename Format>
void write_table(const RobustnessTable& table, const std::vector<std::vector<Cell>>& cells,
                 Format format, std::ostream& out) {
    out << "method";
    for (const auto& net : table.networks) out << ',' << net;
    out << '\n';
    for (std::size_t row = 0; row < table.methods.size(); ++row) {
        out << method_label(table.methods[row]);
        for (const auto& cell : cells[row]) {
            out << ',';
            if (cell) out << format(*cell);
        }
        out << '\n';
    }
}

} // namespace

void write_robustness_csv(const RobustnessTable& table, std::ostream& out) {
    write_table(table, table.value, [](double x) { return format_real(x); }, out);
}

void write_fallback_csv(const RobustnessTable& table, std::ostream& out) {
    write_table(table, table.fallbacks, [](std::size_t x) { return std::to_string(x); }, out);
}

} // namespace svid
