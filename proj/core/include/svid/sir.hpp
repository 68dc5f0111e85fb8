#pragma once

#include "svid/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

namespace svid {

struct SirParams {
    double lambda = 0.5;            ///< per-contact infection probability
    double sigma = 0.1;             ///< per-step recovery probability
    std::size_t initial_infected = 1;
    std::size_t runs = 50;
    std::size_t max_steps = 100000;
    std::uint64_t master_seed = 0;

    /// Throws ConfigError when outside 0 <= λ <= 1, 0 < σ <= 1, i0 >= 1, runs >= 1.
    void validate() const;
};

enum class SirState : std::uint8_t { Susceptible, Infected, Recovered, Immunized };

/// Densities are relative to the active (non-immunized) population.
struct SirTrace {
    std::vector<double> s;
    std::vector<double> i;
    std::vector<double> r;
    std::size_t active = 0;
    std::size_t recovered = 0;          ///< |r| when the run stopped
    std::size_t steps_to_extinction = 0;
    bool extinct = false;               ///< false only if max_steps was hit
    double peak_infected = 0.0;         ///< max_t i(t)
};

/// Called with the state vector after initial seeding (t = 0) and after every step.
using SirObserver = std::function<void(std::size_t t, std::span<const SirState>)>;

/// One synchronous discrete-time SIR run. Each step, every infected node tries
/// each susceptible neighbour once with probability λ; afterwards every node
/// that was infected at the start of the step recovers with probability σ.
/// Nodes infected during a step cannot recover in that step. Immunized nodes
/// and their edges take no part.
///
/// The initial infected nodes are drawn uniformly from the active population.
/// Throws DomainError when i0 exceeds the active population.
[[nodiscard]] SirTrace sir_run(const Graph& g, const NodeSet& immunized, const SirParams& p,
                               std::uint64_t run_seed, const SirObserver& observer = {});

/// Same, with explicit initial infected nodes (must be active and distinct).
[[nodiscard]] SirTrace sir_run_from(const Graph& g, const NodeSet& immunized, const SirParams& p,
                                    std::span<const NodeId> seeds, std::uint64_t run_seed,
                                    const SirObserver& observer = {});

struct SirEnsemble {
    std::vector<double> s_mean, i_mean, r_mean;
    std::vector<double> s_std, i_std, r_std;
    double r_abs_mean = 0.0;
    double r_abs_std = 0.0;
    double peak_infected_mean = 0.0;
    double peak_infected_std = 0.0;
    std::vector<std::size_t> r_abs;     ///< per run
    std::vector<double> peak_infected;  ///< per run
    std::size_t active = 0;
};

/// Seed of run `index` in an ensemble: derive_seed(master_seed, index).
[[nodiscard]] std::uint64_t run_seed(std::uint64_t master_seed, std::size_t index) noexcept;

/// p.runs independent runs, each seeded by run_seed(p.master_seed, k). Traces
/// are padded to the longest run by repeating final values; mean and
/// population standard deviation per step and for |r|. Runs execute in
/// parallel; reduction is in run order.
[[nodiscard]] SirEnsemble sir_ensemble(const Graph& g, const NodeSet& immunized,
                                       const SirParams& p);

/// ⟨k⟩ / ⟨k²⟩. Throws DomainError on an edgeless graph.
[[nodiscard]] double epidemic_threshold(const Graph& g);

/// `t,s_mean,i_mean,r_mean,s_std,i_std,r_std`
void write_trace_csv(const SirEnsemble& e, std::ostream& out);
/// Header `lambda,sigma,q,method,r_abs_mean,r_abs_std`.
void write_sir_summary_header(std::ostream& out);
void write_sir_summary_row(const SirParams& p, double q, std::string_view method,
                           const SirEnsemble& e, std::ostream& out);

} // namespace svid
