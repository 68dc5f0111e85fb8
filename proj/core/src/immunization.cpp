#include "svid/immunization.hpp"

#include "svid/centrality.hpp"
#include "svid/errors.hpp"
#include "svid/selection.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>
#include <string>

namespace svid {

void StrategyConfig::validate() const {
    if (!(batch_fraction > 0.0 && batch_fraction <= 1.0)) {
        throw ConfigError("batch fraction must lie in (0, 1], got " + format_real(batch_fraction));
    }
    if (!(target_fraction > 0.0 && target_fraction <= 1.0)) {
        throw ConfigError("target fraction q must lie in (0, 1], got " +
                          format_real(target_fraction));
    }
    svid.validate();
}

std::size_t fraction_to_count(double fraction, std::size_t n) {
    if (n == 0) return 0;
    const double raw = fraction * static_cast<double>(n);
    auto count = static_cast<std::size_t>(std::ceil(raw - 1e-9));
    return std::clamp<std::size_t>(count, 1, n);
}

MethodScores score_for_method(const Graph& g, CentralityMethod method, const SvidOptions& svid) {
    MethodScores out;
    const std::size_t n = g.node_count();
    if (g.edge_count() == 0) {
        out.primary = ScoreVector{std::vector<double>(n, 0.0), std::string(method_key(method))};
        return out;
    }
    switch (method) {
    case CentralityMethod::Degree:
        out.primary = degree_scores(g);
        break;
    case CentralityMethod::Betweenness:
        out.primary = betweenness_scores(g);
        break;
    case CentralityMethod::Eigenvector: {
        auto eig = eigenvector_centrality(g);
        out.primary = std::move(eig.scores);
        out.converged = eig.converged;
        break;
    }
    case CentralityMethod::Coreness:
        out.primary = coreness_scores(g);
        out.secondary = degree_scores(g).theta;
        break;
    case CentralityMethod::Svid:
        out.primary = svid_scores(g, svid);
        break;
    }
    return out;
}

ImmunizationPlan run_strategy(const Graph& g, const StrategyConfig& cfg) {
    cfg.validate();
    const std::size_t n = g.node_count();
    if (n == 0) {
        throw DomainError("cannot immunize an empty graph");
    }

    ImmunizationPlan plan;
    plan.method = cfg.method;
    plan.node_count = n;
    plan.graph_fingerprint = g.fingerprint();
    plan.target_fraction = cfg.target_fraction;
    plan.batch_fraction = cfg.batch_fraction;
    plan.batch_size = fraction_to_count(cfg.batch_fraction, n);
    plan.initial_fraction = static_cast<double>(lcc_size(g)) / static_cast<double>(n);

    const std::size_t target = fraction_to_count(cfg.target_fraction, n);
    plan.order.reserve(target);
    NodeSet removed(n);

    for (std::size_t batch = 0; plan.order.size() < target; ++batch) {
        const Graph residual = g.without(removed);
        MethodScores scores = score_for_method(residual, cfg.method, cfg.svid);
        if (!scores.converged) ++plan.unconverged_recomputations;

        const bool discounting = cfg.method == CentralityMethod::Svid && residual.edge_count() > 0;
        std::optional<SvidDiscount> discount;
        if (discounting) discount.emplace(residual, cfg.svid);

        GreedySelector selector(residual, std::move(scores.primary.theta),
                                std::move(scores.secondary), cfg.neighbor_exclusion, removed);
        const std::size_t batch_start = plan.order.size();
        const std::size_t quota = std::min(plan.batch_size, target - batch_start);
        for (std::size_t taken = 0; taken < quota; ++taken) {
            const auto pick = selector.next();
            if (!pick) break;
            plan.order.push_back(pick->node);
            plan.batch_of.push_back(batch);
            plan.fallback.push_back(pick->fallback ? 1 : 0);
            if (pick->fallback) {
                ++plan.fallback_count;
            } else if (discount) {
                discount->apply(pick->node,
                                [&](NodeId w, double delta) { selector.adjust(w, delta); });
            }
        }
        if (plan.order.size() == batch_start) {
            throw DomainError("no selectable node left before reaching the target");
        }
        for (std::size_t i = batch_start; i < plan.order.size(); ++i) {
            removed.insert(plan.order[i]);
        }
    }

    const auto lcc = lcc_after_removals(g, plan.order);
    plan.s_curve.resize(lcc.size());
    for (std::size_t i = 0; i < lcc.size(); ++i) {
        plan.s_curve[i] = static_cast<double>(lcc[i]) / static_cast<double>(n);
    }
    return plan;
}

ImmunizationPlan full_ordering(const Graph& g, StrategyConfig cfg) {
    cfg.target_fraction = 1.0;
    return run_strategy(g, cfg);
}

void write_plan_csv(const Graph& g, const ImmunizationPlan& plan, std::ostream& out) {
    if (plan.node_count != g.node_count()) {
        throw DomainError("plan does not belong to this graph");
    }
    out << "step,node,lcc_fraction\n";
    for (std::size_t i = 0; i < plan.order.size(); ++i) {
        out << (i + 1) << ',' << g.label(plan.order[i]) << ',' << format_real(plan.s_curve[i])
            << '\n';
    }
}

void write_plan_summary_csv(const ImmunizationPlan& plan, std::ostream& out) {
    out << "method,q,batch,fallback_count\n";
    out << method_key(plan.method) << ',' << format_real(plan.target_fraction) << ','
        << format_real(plan.batch_fraction) << ',' << plan.fallback_count << '\n';
}

} // namespace svid
