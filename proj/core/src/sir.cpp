#include "svid/sir.hpp"

#include "parallel.hpp"
#include "svid/errors.hpp"
#include "svid/random.hpp"
#include "svid/scores.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <ostream>
#include <string>

namespace svid {

void SirParams::validate() const {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw ConfigError("lambda must lie in [0, 1], got " + format_real(lambda));
    }
    if (!(sigma > 0.0 && sigma <= 1.0)) {
        throw ConfigError("sigma must lie in (0, 1], got " + format_real(sigma));
    }
    if (initial_infected < 1) {
        throw ConfigError("at least one initially infected node is required");
    }
    if (runs < 1) {
        throw ConfigError("at least one run is required");
    }
}

namespace {

std::size_t active_count(const Graph& g, const NodeSet& immunized) {
    if (immunized.universe() != g.node_count()) {
        throw DomainError("immunized set does not match graph size");
    }
    return g.node_count() - immunized.size();
}

SirTrace simulate(const Graph& g, const NodeSet& immunized, const SirParams& p,
                  std::span<const NodeId> seeds, Rng& rng, const SirObserver& observer) {
    const std::size_t n = g.node_count();
    SirTrace trace;
    trace.active = active_count(g, immunized);

    std::vector<SirState> state(n, SirState::Susceptible);
    for (NodeId v = 0; v < n; ++v) {
        if (immunized.contains(v)) state[v] = SirState::Immunized;
    }
    std::vector<NodeId> infected;
    infected.reserve(seeds.size());
    for (NodeId v : seeds) {
        if (v >= n || state[v] != SirState::Susceptible) {
            throw DomainError("initial infected node " + std::to_string(v) +
                              " is immunized, repeated or out of range");
        }
        state[v] = SirState::Infected;
        infected.push_back(v);
    }
    std::sort(infected.begin(), infected.end());

    const double active = static_cast<double>(trace.active);
    std::size_t susceptible = trace.active - infected.size();
    std::size_t recovered = 0;
    auto record = [&](std::size_t t) {
        const double i_density = static_cast<double>(infected.size()) / active;
        trace.s.push_back(static_cast<double>(susceptible) / active);
        trace.i.push_back(i_density);
        trace.r.push_back(static_cast<double>(recovered) / active);
        trace.peak_infected = std::max(trace.peak_infected, i_density);
        if (observer) observer(t, state);
    };
    record(0);

    std::vector<NodeId> fresh;
    std::vector<NodeId> still;
    std::size_t t = 0;
    while (!infected.empty() && t < p.max_steps) {
        ++t;
        fresh.clear();
        for (NodeId u : infected) {
            for (NodeId w : g.neighbors(u)) {
                if (state[w] == SirState::Susceptible && rng.bernoulli(p.lambda)) {
                    state[w] = SirState::Infected;
                    fresh.push_back(w);
                }
            }
        }
        still.clear();
        for (NodeId u : infected) {
            if (rng.bernoulli(p.sigma)) {
                state[u] = SirState::Recovered;
                ++recovered;
            } else {
                still.push_back(u);
            }
        }
        susceptible -= fresh.size();
        infected.clear();
        std::sort(fresh.begin(), fresh.end());
        std::merge(still.begin(), still.end(), fresh.begin(), fresh.end(),
                   std::back_inserter(infected));
        record(t);
    }
    trace.recovered = recovered;
    trace.steps_to_extinction = t;
    trace.extinct = infected.empty();
    return trace;
}

double mean_of(std::span<const double> xs) {
    double sum = 0.0;
    for (double x : xs) sum += x;
    return sum / static_cast<double>(xs.size());
}

double pop_std(std::span<const double> xs, double mean) {
    double sum = 0.0;
    for (double x : xs) sum += (x - mean) * (x - mean);
    return std::sqrt(sum / static_cast<double>(xs.size()));
}

} // namespace

SirTrace sir_run_from(const Graph& g, const NodeSet& immunized, const SirParams& p,
                      std::span<const NodeId> seeds, std::uint64_t seed,
                      const SirObserver& observer) {
    p.validate();
    Rng rng(seed);
    return simulate(g, immunized, p, seeds, rng, observer);
}

SirTrace sir_run(const Graph& g, const NodeSet& immunized, const SirParams& p,
                 std::uint64_t seed, const SirObserver& observer) {
    p.validate();
    const std::size_t active = active_count(g, immunized);
    if (p.initial_infected > active) {
        throw DomainError("initial infected count " + std::to_string(p.initial_infected) +
                          " exceeds active population " + std::to_string(active));
    }
    std::vector<NodeId> pool;
    pool.reserve(active);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (!immunized.contains(v)) pool.push_back(v);
    }
    Rng rng(seed);
    // Partial Fisher-Yates for the seed set.
    for (std::size_t k = 0; k < p.initial_infected; ++k) {
        const std::size_t j = k + static_cast<std::size_t>(rng.below(pool.size() - k));
        std::swap(pool[k], pool[j]);
    }
    pool.resize(p.initial_infected);
    return simulate(g, immunized, p, pool, rng, observer);
}

std::uint64_t run_seed(std::uint64_t master_seed, std::size_t index) noexcept {
    return derive_seed(master_seed, index);
}

SirEnsemble sir_ensemble(const Graph& g, const NodeSet& immunized, const SirParams& p) {
    p.validate();
    const std::size_t active = active_count(g, immunized);
    if (p.initial_infected > active) {
        throw DomainError("initial infected count " + std::to_string(p.initial_infected) +
                          " exceeds active population " + std::to_string(active));
    }
    std::vector<SirTrace> traces(p.runs);
    detail::for_each_chunk(p.runs, 1, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            traces[k] = sir_run(g, immunized, p, run_seed(p.master_seed, k));
        }
    });

    SirEnsemble e;
    e.active = active;
    std::size_t longest = 0;
    for (const auto& tr : traces) longest = std::max(longest, tr.s.size());
    e.s_mean.resize(longest);
    e.i_mean.resize(longest);
    e.r_mean.resize(longest);
    e.s_std.resize(longest);
    e.i_std.resize(longest);
    e.r_std.resize(longest);

    const std::size_t runs = traces.size();
    std::vector<double> column(runs);
    auto reduce = [&](auto member, std::vector<double>& mean, std::vector<double>& sd) {
        for (std::size_t t = 0; t < longest; ++t) {
            for (std::size_t k = 0; k < runs; ++k) {
                const auto& series = traces[k].*member;
                column[k] = t < series.size() ? series[t] : series.back();
            }
            mean[t] = mean_of(column);
            sd[t] = pop_std(column, mean[t]);
        }
    };
    reduce(&SirTrace::s, e.s_mean, e.s_std);
    reduce(&SirTrace::i, e.i_mean, e.i_std);
    reduce(&SirTrace::r, e.r_mean, e.r_std);

    std::vector<double> r_abs(runs);
    e.r_abs.resize(runs);
    e.peak_infected.resize(runs);
    for (std::size_t k = 0; k < runs; ++k) {
        e.r_abs[k] = traces[k].recovered;
        r_abs[k] = static_cast<double>(traces[k].recovered);
        e.peak_infected[k] = traces[k].peak_infected;
    }
    e.r_abs_mean = mean_of(r_abs);
    e.r_abs_std = pop_std(r_abs, e.r_abs_mean);
    e.peak_infected_mean = mean_of(e.peak_infected);
    e.peak_infected_std = pop_std(e.peak_infected, e.peak_infected_mean);
    return e;
}

double epidemic_threshold(const Graph& g) {
    if (g.edge_count() == 0) {
        throw DomainError("epidemic threshold undefined on an edgeless graph");
    }
    return *stats(g).epidemic_threshold;
}

void write_trace_csv(const SirEnsemble& e, std::ostream& out) {
    out << "t,s_mean,i_mean,r_mean,s_std,i_std,r_std\n";
    for (std::size_t t = 0; t < e.s_mean.size(); ++t) {
        out << t << ',' << format_real(e.s_mean[t]) << ',' << format_real(e.i_mean[t]) << ','
            << format_real(e.r_mean[t]) << ',' << format_real(e.s_std[t]) << ','
            << format_real(e.i_std[t]) << ',' << format_real(e.r_std[t]) << '\n';
    }
}

void write_sir_summary_header(std::ostream& out) {
    out << "lambda,sigma,q,method,r_abs_mean,r_abs_std\n";
}

void write_sir_summary_row(const SirParams& p, double q, std::string_view method,
                           const SirEnsemble& e, std::ostream& out) {
    out << format_real(p.lambda) << ',' << format_real(p.sigma) << ',' << format_real(q) << ','
        << method << ',' << format_real(e.r_abs_mean) << ',' << format_real(e.r_abs_std) << '\n';
}

} // namespace svid
