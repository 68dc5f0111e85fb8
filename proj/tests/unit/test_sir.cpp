#include "doctest.h"
#include "support/fixtures.hpp"

#include "svid/errors.hpp"
#include "svid/generators.hpp"
#include "svid/sir.hpp"

#include <cmath>
#include <sstream>

using namespace svid;
using namespace svid::testing;

namespace {

SirParams params(double lambda, double sigma, std::size_t i0 = 1, std::size_t runs = 50) {
    SirParams p;
    p.lambda = lambda;
    p.sigma = sigma;
    p.initial_infected = i0;
    p.runs = runs;
    p.master_seed = 1234;
    return p;
}

} // namespace

TEST_CASE("no transmission and certain recovery") {
    const Graph g = erdos_renyi(50, 100, 1);
    const auto tr = sir_run(g, NodeSet(50), params(0.0, 1.0, 3), 9);
    CHECK(tr.recovered == 3);
    CHECK(tr.steps_to_extinction == 1);
    CHECK(tr.extinct);
    CHECK(tr.i.back() == 0.0);
}

TEST_CASE("deterministic spread on a path") {
    const std::vector<NodeId> seed{1};
    std::vector<std::vector<SirState>> states;
    const auto tr = sir_run_from(path(3), NodeSet(3), params(1.0, 1.0), seed, 0,
                                 [&](std::size_t, std::span<const SirState> s) {
                                     states.emplace_back(s.begin(), s.end());
                                 });
    REQUIRE(states.size() == 3);
    CHECK(states[1][0] == SirState::Infected);
    CHECK(states[1][2] == SirState::Infected);
    CHECK(states[1][1] == SirState::Recovered);
    CHECK(tr.recovered == 3);
    CHECK(tr.steps_to_extinction == 2);
}

TEST_CASE("a quarantined seed infects nobody") {
    const Graph g = star(6);
    const NodeSet fence(7, std::vector<NodeId>{0});
    const std::vector<NodeId> seed{3};
    for (double lambda : {0.3, 1.0}) {
        const auto tr = sir_run_from(g, fence, params(lambda, 0.5), seed, 5);
        CHECK(tr.recovered == 1);
        CHECK(tr.active == 6);
    }
}

TEST_CASE("newly infected nodes do not recover in the same step") {
    const std::vector<NodeId> seed{0};
    std::vector<std::vector<SirState>> states;
    (void)sir_run_from(path(2), NodeSet(2), params(1.0, 1.0), seed, 0,
                       [&](std::size_t, std::span<const SirState> s) {
                           states.emplace_back(s.begin(), s.end());
                       });
    CHECK(states[1][1] == SirState::Infected);
}

TEST_CASE("conservation and monotone states over random runs") {
    Rng rng(2024);
    for (int trial = 0; trial < 120; ++trial) {
        const Graph g = erdos_renyi(80, 160, rng.next());
        NodeSet immune(80);
        for (int k = 0; k < 10; ++k) immune.insert(static_cast<NodeId>(rng.below(80)));
        const auto p = params(rng.uniform(), 0.05 + 0.95 * rng.uniform(), 1 + rng.below(4));
        std::vector<SirState> last;
        bool ok = true;
        const auto tr = sir_run(g, immune, p, rng.next(), [&](std::size_t, std::span<const SirState> s) {
            std::size_t counts[4] = {};
            for (auto st : s) ++counts[static_cast<int>(st)];
            ok &= counts[3] == immune.size();
            ok &= counts[0] + counts[1] + counts[2] == 80 - immune.size();
            if (!last.empty()) {
                for (std::size_t v = 0; v < s.size(); ++v) ok &= s[v] >= last[v];
            }
            last.assign(s.begin(), s.end());
        });
        CHECK(ok);
        for (std::size_t t = 0; t < tr.s.size(); ++t) {
            CHECK(std::abs(tr.s[t] + tr.i[t] + tr.r[t] - 1.0) < 1e-12);
            if (t > 0) {
                CHECK(tr.s[t] <= tr.s[t - 1]);
                CHECK(tr.r[t] >= tr.r[t - 1]);
            }
        }
        CHECK(tr.i.back() == 0.0);
    }
}

TEST_CASE("input validation") {
    const Graph g = triangle();
    CHECK_THROWS_AS((void)sir_run(g, NodeSet(3), params(0.5, 0.5, 4), 1), DomainError);
    CHECK_THROWS_AS((void)sir_run(g, NodeSet(3, std::vector<NodeId>{0, 1}), params(0.5, 0.5, 2), 1),
                    DomainError);
    CHECK_THROWS_AS((void)sir_run(g, NodeSet(3), params(1.5, 0.5), 1), ConfigError);
    CHECK_THROWS_AS((void)sir_run(g, NodeSet(3), params(0.5, 0.0), 1), ConfigError);
    CHECK_THROWS_AS((void)sir_run(g, NodeSet(3), params(0.5, 0.5, 0), 1), ConfigError);
    const std::vector<NodeId> immune_seed{0};
    CHECK_THROWS_AS((void)sir_run_from(g, NodeSet(3, immune_seed), params(0.5, 0.5), immune_seed, 1),
                    DomainError);
}

TEST_CASE("ensemble of one run is that run") {
    const Graph g = erdos_renyi(200, 400, 3);
    auto p = params(0.4, 0.2, 2, 1);
    const auto e = sir_ensemble(g, NodeSet(200), p);
    const auto tr = sir_run(g, NodeSet(200), p, run_seed(p.master_seed, 0));
    CHECK(e.i_mean == tr.i);
    CHECK(e.s_mean == tr.s);
    CHECK(e.r_abs_mean == static_cast<double>(tr.recovered));
    for (double sd : e.i_std) CHECK(sd == 0.0);
}

TEST_CASE("zero infection rate gives |r| = i0 with no spread") {
    const Graph g = erdos_renyi(200, 400, 3);
    const auto e = sir_ensemble(g, NodeSet(200), params(0.0, 0.3, 5, 30));
    CHECK(e.r_abs_mean == 5.0);
    CHECK(e.r_abs_std == 0.0);
    for (std::size_t t = 1; t < e.i_mean.size(); ++t) CHECK(e.i_mean[t] <= e.i_mean[t - 1]);
}

TEST_CASE("padding repeats the absorbing state") {
    const Graph g = erdos_renyi(300, 600, 5);
    const auto e = sir_ensemble(g, NodeSet(300), params(0.3, 0.3, 1, 20));
    CHECK(e.i_mean.back() == 0.0);
    for (std::size_t t = 0; t < e.s_mean.size(); ++t)
        CHECK(std::abs(e.s_mean[t] + e.i_mean[t] + e.r_mean[t] - 1.0) < 1e-12);
}

TEST_CASE("ensembles are reproducible and monotone in lambda") {
    const Graph g = erdos_renyi(1000, 2000, 1);
    const auto strong = sir_ensemble(g, NodeSet(1000), params(0.5, 0.1));
    const auto again = sir_ensemble(g, NodeSet(1000), params(0.5, 0.1));
    const auto weak = sir_ensemble(g, NodeSet(1000), params(0.2, 0.1));
    CHECK(strong.r_abs == again.r_abs);
    CHECK(strong.i_mean == again.i_mean);
    CHECK(strong.r_abs_mean > weak.r_abs_mean);
}

TEST_CASE("epidemic_threshold") {
    CHECK(epidemic_threshold(triangle()) == doctest::Approx(0.5));
    CHECK(epidemic_threshold(cycle(9)) == doctest::Approx(0.5));
    CHECK(epidemic_threshold(complete(5)) == doctest::Approx(0.25));
    CHECK(epidemic_threshold(star(4)) == doctest::Approx((8.0 / 5.0) / (20.0 / 5.0)));
    CHECK_THROWS_AS((void)epidemic_threshold(empty(3)), DomainError);
}

TEST_CASE("trace and summary CSV") {
    const Graph g = triangle();
    const auto e = sir_ensemble(g, NodeSet(3), params(0.0, 1.0, 1, 1));
    std::ostringstream trace;
    write_trace_csv(e, trace);
    CHECK(trace.str() ==
          "t,s_mean,i_mean,r_mean,s_std,i_std,r_std\n"
          "0,0.6666666666666666,0.3333333333333333,0,0,0,0\n"
          "1,0.6666666666666666,0,0.3333333333333333,0,0,0\n");
    std::ostringstream summary;
    write_sir_summary_header(summary);
    write_sir_summary_row(params(0.0, 1.0), 0.15, "svida", e, summary);
    CHECK(summary.str() == "lambda,sigma,q,method,r_abs_mean,r_abs_std\n0,1,0.15,svida,1,0\n");
}
