// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
//
//   acceptance [--as PATH]
//
// With --as, robustness per method on that edge list is printed for manual
// comparison (no gate).

#include "support/fixtures.hpp"

#include "svid/centrality.hpp"
#include "svid/edge_list.hpp"
#include "svid/generators.hpp"
#include "svid/immunization.hpp"
#include "svid/metrics.hpp"
#include "svid/shapley.hpp"
#include "svid/sir.hpp"
#include "svid_tools/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace svid;
using namespace svid::testing;
namespace fs = std::filesystem;

namespace {

// Pinned tolerances and budgets.
constexpr double kShapleyTol = 1e-9;
constexpr double kEfficiencyTol = 1e-9;
constexpr double kBetweennessTol = 1e-9;
constexpr double kSirTol = 1e-12;
constexpr double kExactTol = 0.0;
constexpr double kAc1Seconds = 60.0;
constexpr double kAc8Seconds = 300.0;
constexpr double kAc8Threshold = 0.05;
constexpr double kAc8MaxQ = 0.20;

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

Outcome ac1_shapley_oracle() {
    const auto t0 = Clock::now();
    double worst = 0.0;
    std::size_t graphs = 0;
    auto check = [&](const Graph& g) {
        const auto fast = spin_shapley(g).theta;
        const auto exact = exact_shapley(fringe_game(g));
        for (std::size_t v = 0; v < fast.size(); ++v) worst = std::max(worst, std::abs(fast[v] - exact[v]));
        ++graphs;
    };
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& g : all_graphs(n))
            if (connected(g)) check(g);
    Rng rng(101);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 6 + rng.below(2);
        check(connected_gnp(n, 0.2 + 0.6 * rng.uniform(), rng));
    }
    const double secs = seconds_since(t0);
    return {worst < kShapleyTol && secs < kAc1Seconds,
            std::to_string(graphs) + " graphs, max error " + fmt(worst) + ", " + fmt(secs) + " s"};
}

Outcome ac2_permutation_count() {
    Outcome o;
    for (std::size_t k = 0; k <= 6; ++k) {
        const auto [fav, total] = count_u_first_v_second(k);
        // fav / total == 1 / ((K+1)(K+2)) as rationals
        const bool exact = fav * (k + 1) * (k + 2) == total;
        const bool closed = ordering_probability(k) == 1.0 / static_cast<double>((k + 1) * (k + 2));
        if (!exact || !closed) {
            o.pass = false;
            o.detail += "K=" + std::to_string(k) + " mismatch; ";
        }
    }
    if (o.pass) o.detail = "K = 0..6 exact";
    return o;
}

Outcome ac3_efficiency() {
    Rng rng(303);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 2 + rng.below(1999);
        const std::size_t max_m = n * (n - 1) / 2;
        const std::size_t m = std::min<std::size_t>(max_m, rng.below(4 * n + 1));
        const Graph g = (i % 2 == 0) ? erdos_renyi(n, m, rng.next())
                                     : barabasi_albert(n, 1 + rng.below(std::min<std::size_t>(4, n - 1)), rng.next());
        const auto theta = spin_shapley(g).theta;
        double sum = 0.0;
        for (double t : theta) sum += t;
        worst = std::max(worst, std::abs(sum - static_cast<double>(g.node_count())));
    }
    return {worst < kEfficiencyTol, "100 graphs, max |sum - |V|| " + fmt(worst)};
}

Outcome ac4_betweenness() {
    Rng rng(404);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 1 + rng.below(40);
        const Graph g = gnp(n, rng.uniform() * 0.5, rng.next());
        const auto fast = betweenness_scores(g).theta;
        const auto slow = naive_betweenness(g);
        for (std::size_t v = 0; v < n; ++v) worst = std::max(worst, std::abs(fast[v] - slow[v]));
    }
    return {worst < kBetweennessTol, "100 graphs, max error " + fmt(worst)};
}

Outcome ac5_svid_fixtures() {
    Outcome o;
    auto expect = [&](const std::string& name, const std::vector<double>& got, const std::vector<double>& want) {
        bool ok = got.size() == want.size();
        for (std::size_t i = 0; ok && i < got.size(); ++i) ok = std::abs(got[i] - want[i]) <= kExactTol;
        if (!ok) {
            o.pass = false;
            o.detail += name + " wrong; ";
        }
    };
    expect("triangle", svid_scores(triangle()).theta, {1.0 / 3, 1.0 / 3, 1.0 / 3});
    expect("P3", svid_scores(path(3)).theta, {0.5, 1.0, 0.5});
    expect("star", {svid_scores(star(4)).theta[0]}, {2.0});
    const auto bar = svid_scores(barbell());
    const NodeId top = argmax(bar);
    if (top != 3 && top != 4) {
        o.pass = false;
        o.detail += "barbell argmax " + std::to_string(top) + "; ";
    }
    if (o.pass) o.detail = "triangle, P3, star, barbell exact";
    return o;
}

Outcome ac6_sir_invariants() {
    Rng rng(606);
    std::size_t violations = 0;
    for (int run = 0; run < 1000; ++run) {
        const std::size_t n = 20 + rng.below(200);
        const Graph g = erdos_renyi(n, std::min(n * (n - 1) / 2, n * (1 + rng.below(4))), rng.next());
        NodeSet immune(n);
        const std::size_t k = rng.below(n / 4);
        for (std::size_t j = 0; j < k; ++j) immune.insert(static_cast<NodeId>(rng.below(n)));
        SirParams p;
        p.lambda = (run % 4 == 0) ? 0.0 : rng.uniform();
        p.sigma = 0.01 + 0.99 * rng.uniform();
        p.initial_infected = 1 + rng.below(5);
        const std::size_t active = n - immune.size();
        std::vector<SirState> prev;
        std::size_t infected_total = 0;
        const auto tr = sir_run(g, immune, p, rng.next(), [&](std::size_t, std::span<const SirState> s) {
            std::size_t c[4] = {};
            for (auto st : s) ++c[static_cast<int>(st)];
            if (c[0] + c[1] + c[2] != active || c[3] != immune.size()) ++violations;
            if (!prev.empty())
                for (std::size_t v = 0; v < s.size(); ++v)
                    if (s[v] < prev[v]) ++violations;
            prev.assign(s.begin(), s.end());
            infected_total = c[1] + c[2];
        });
        for (std::size_t t = 0; t < tr.s.size(); ++t)
            if (std::abs(tr.s[t] + tr.i[t] + tr.r[t] - 1.0) > kSirTol) ++violations;
        if (infected_total != tr.recovered) ++violations;
        if (p.lambda == 0.0 && tr.recovered != p.initial_infected) ++violations;
    }
    return {violations == 0, "1000 runs, " + std::to_string(violations) + " violations"};
}

StrategyConfig full(CentralityMethod m) {
    StrategyConfig c;
    c.method = m;
    return c;
}

Outcome ac7_robustness() {
    Outcome o;
    Rng rng(707);
    for (int i = 0; i < 30; ++i) {
        const Graph g = erdos_renyi(50 + rng.below(150), 100 + rng.below(300), rng.next());
        const double n = static_cast<double>(g.node_count());
        for (auto m : kAllMethods) {
            const double r = robustness(full_ordering(g, full(m))).robustness;
            if (!(r < (n - 1) / (2 * n) + 1 / n)) {
                o.pass = false;
                o.detail += "bound violated; ";
            }
        }
    }
    const double st = robustness(full_ordering(star(4), full(CentralityMethod::Degree))).robustness;
    if (st != 0.16) {
        o.pass = false;
        o.detail += "star R=" + fmt(st) + "; ";
    }
    for (std::size_t n : {3u, 8u, 20u}) {
        const double r = robustness(full_ordering(complete(n), full(CentralityMethod::Svid))).robustness;
        if (r != static_cast<double>(n - 1) / (2.0 * n)) {
            o.pass = false;
            o.detail += "K" + std::to_string(n) + " R=" + fmt(r) + "; ";
        }
    }
    if (o.pass) o.detail = "bound on 150 orderings, star 0.16, Kn (n-1)/2n";
    return o;
}

Outcome ac8_ba_collapse() {
    const auto t0 = Clock::now();
    const Graph g = barabasi_albert(2000, 2, 3);
    Outcome o;
    for (auto m : {CentralityMethod::Svid, CentralityMethod::Degree}) {
        StrategyConfig c;
        c.method = m;
        c.target_fraction = 0.30;
        const auto q = collapse_point(run_strategy(g, c), kAc8Threshold);
        o.detail += std::string(method_label(m)) + " q=" + (q ? fmt(*q) : "never") + ", ";
        if (!q || *q > kAc8MaxQ) o.pass = false;
    }
    const double secs = seconds_since(t0);
    if (secs >= kAc8Seconds) o.pass = false;
    o.detail += fmt(secs) + " s";
    return o;
}

Outcome ac9_robustness_ordering() {
    Outcome o;
    const std::vector<CentralityMethod> methods{CentralityMethod::Svid, CentralityMethod::Eigenvector,
                                                CentralityMethod::Coreness};
    for (auto family : {GraphFamily::BarabasiAlbert, GraphFamily::ErdosRenyi}) {
        std::vector<double> mean(methods.size(), 0.0);
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            GenSpec spec{family, 2000, family == GraphFamily::BarabasiAlbert ? 2u : 4000u, seed};
            const Graph g = generate(spec);
            for (std::size_t j = 0; j < methods.size(); ++j)
                mean[j] += robustness(full_ordering(g, full(methods[j]))).robustness / 5.0;
        }
        const bool ok = mean[0] < mean[1] && mean[0] < mean[2];
        o.pass = o.pass && ok;
        o.detail += std::string(family == GraphFamily::BarabasiAlbert ? "BA" : "ER") + ": SVIDA " +
                    fmt(mean[0]) + " EVA " + fmt(mean[1]) + " CNA " + fmt(mean[2]) + "; ";
    }
    return o;
}

Outcome ac10_sir_immunization() {
    const Graph g = erdos_renyi(1000, 2000, 1);
    SirParams p;
    p.lambda = 0.5;
    p.sigma = 0.1;
    p.runs = 50;
    p.master_seed = 10;
    StrategyConfig c;
    c.method = CentralityMethod::Svid;
    c.target_fraction = 0.15;
    const auto plan = run_strategy(g, c);
    const NodeSet immune(g.node_count(), plan.order);
    const auto base = sir_ensemble(g, NodeSet(g.node_count()), p);
    const auto imm = sir_ensemble(g, immune, p);
    return {imm.peak_infected_mean < base.peak_infected_mean && imm.r_abs_mean < base.r_abs_mean,
            "peak " + fmt(base.peak_infected_mean) + " -> " + fmt(imm.peak_infected_mean) + ", |r| " +
                fmt(base.r_abs_mean) + " -> " + fmt(imm.r_abs_mean)};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool same_tree(const fs::path& a, const fs::path& b) {
    std::vector<std::string> na, nb;
    for (const auto& e : fs::directory_iterator(a)) na.push_back(e.path().filename().string());
    for (const auto& e : fs::directory_iterator(b)) nb.push_back(e.path().filename().string());
    std::sort(na.begin(), na.end());
    std::sort(nb.begin(), nb.end());
    if (na != nb || na.empty()) return false;
    return std::all_of(na.begin(), na.end(), [&](const std::string& n) { return slurp(a / n) == slurp(b / n); });
}

Outcome ac11_determinism() {
    std::random_device rd;
    const fs::path root = fs::temp_directory_path() / ("svid_acceptance_" + std::to_string(rd()));
    fs::create_directories(root);
    const std::vector<std::vector<std::string>> pipelines{
        {"immunize", "--gen", "ba:500,2", "--seed", "11", "--method", "svida", "--q", "1", "--svg"},
        {"immunize", "--gen", "er:500,1000", "--seed", "12", "--method", "bwa", "--q", "0.2"},
        {"sir", "--gen", "er:500,1000", "--seed", "13", "--lambda", "0.4", "--runs", "20", "--method",
         "svida", "--q", "0.1", "--svg"},
        {"compare", "--gen", "ba:300,2@1", "--gen", "er:300,600@2", "--seed", "14", "--method",
         "da,cna,svida", "--q", "0,0.1", "--lambda", "0.3", "--runs", "8"},
    };
    Outcome o;
    std::ostringstream sink;
    for (std::size_t i = 0; i < pipelines.size(); ++i) {
        const auto a = root / ("run" + std::to_string(i) + "_a");
        const auto b = root / ("run" + std::to_string(i) + "_b");
        const auto c = root / ("run" + std::to_string(i) + "_c");
        auto args_a = pipelines[i];
        args_a.insert(args_a.end(), {"--out", a.string()});
        auto args_b = pipelines[i];
        args_b.insert(args_b.end(), {"--out", b.string()});
        const bool ran = cli::run(args_a, sink, sink) == 0 && cli::run(args_b, sink, sink) == 0 &&
                         cli::run({"replay", "--manifest", (a / "manifest.json").string(), "--out", c.string()},
                                  sink, sink) == 0;
        const bool ok = ran && same_tree(a, b) && same_tree(a, c);
        if (!ok) {
            o.pass = false;
            o.detail += pipelines[i][0] + " #" + std::to_string(i) + " differs; ";
        }
    }
    std::error_code ec;
    fs::remove_all(root, ec);
    if (o.pass) o.detail = std::to_string(pipelines.size()) + " pipelines byte-identical across rerun and replay";
    return o;
}

void report_as(const std::string& path) {
    const Graph g = read_edge_list(path).graph;
    std::cout << "AS report (" << g.node_count() << " nodes, " << g.edge_count() << " edges, no gate):\n";
    for (auto m : kAllMethods)
        std::cout << "  " << method_label(m) << " R = " << format_real(robustness(full_ordering(g, full(m))).robustness)
                  << '\n';
}

} // namespace

int main(int argc, char** argv) {
    std::string as_path;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--as" && i + 1 < argc) {
            as_path = argv[++i];
        } else {
            std::cerr << "usage: acceptance [--as EDGE_LIST]\n";
            return 2;
        }
    }

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC1 shapley oracle", ac1_shapley_oracle},
        {"AC2 permutation count", ac2_permutation_count},
        {"AC3 efficiency", ac3_efficiency},
        {"AC4 betweenness oracle", ac4_betweenness},
        {"AC5 svid fixtures", ac5_svid_fixtures},
        {"AC6 sir invariants", ac6_sir_invariants},
        {"AC7 robustness bound", ac7_robustness},
        {"AC8 BA collapse point", ac8_ba_collapse},
        {"AC9 robustness ordering", ac9_robustness_ordering},
        {"AC10 sir under immunization", ac10_sir_immunization},
        {"AC11 determinism", ac11_determinism},
    };

    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << " :: " << o.detail << std::endl;
    }
    if (!as_path.empty()) {
        try {
            report_as(as_path);
        } catch (const std::exception& e) {
            std::cout << "AS report failed: " << e.what() << '\n';
        }
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
