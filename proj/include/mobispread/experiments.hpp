#pragma once

// Replicated runs built on the simulator: equilibrium infected fraction,
// survival probes, the empirical epidemic threshold, and parameter sweeps.
//
// Replicate i of any experiment draws from RngStream::derive(master_seed, i),
// so results do not depend on thread count or scheduling. Comparisons that
// reuse a master seed share their streams replicate by replicate.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mobispread/params.hpp"
#include "mobispread/rng.hpp"
#include "mobispread/stats.hpp"

namespace mobispread::experiments {

/// Default survival horizon: 50 * L^2 ticks.
std::uint64_t default_horizon(std::uint32_t lattice_side) noexcept;

/// Infected fraction after each tick (every `thin`-th tick when thin > 1).
/// Once the world is absorbed the remaining entries are zero.
stats::TimeSeries run_trajectory(const SimParams& params, RngStream rng, std::uint64_t thin = 1);

/// True if the run still has infected agents after max_steps ticks.
bool survives(const SimParams& params, RngStream rng);

struct ReplicateSpec {
    SimParams base;
    std::uint32_t replicates = 16;
    std::uint64_t master_seed = 1;
};

struct FInfEstimate {
    double f_inf = 0.0;
    double std_error = 0.0;
    std::uint32_t surviving = 0;
    std::vector<stats::EquilibriumEstimate> runs;
};

/// Combines per-replicate equilibrium estimates. Extinct runs are dropped;
/// if fewer than half the replicates survive the result is (0, 0). Otherwise
/// f_inf is the mean of surviving means and the errors add in quadrature:
/// sqrt(sum se_i^2) / surviving.
FInfEstimate combine_replicates(std::vector<stats::EquilibriumEstimate> runs);

FInfEstimate estimate_f_inf(const ReplicateSpec& spec, unsigned jobs = 1);

std::uint32_t survival_probe(const SimParams& params, std::uint32_t replicates,
                             std::uint64_t master_seed, unsigned jobs = 1);

struct ProbeRecord {
    double q = 0.0;
    std::uint32_t surviving = 0;
    std::uint32_t replicates = 0;
};

struct ThresholdSearch {
    std::uint32_t lattice_side = 128;
    std::uint32_t replicates = 16;
    std::uint64_t steps = 0;  ///< 0 selects default_horizon(lattice_side)
    double resolution = 1.0 / 256.0;
    double initial_infected_fraction = 0.2;
    std::uint64_t master_seed = 1;
};

struct ThresholdEstimate {
    double p = 0.0;
    double d = 0.0;
    double q_star = 0.0;
    double bracket_low = 0.0;
    double bracket_high = 0.0;
    double resolution = 0.0;
    std::vector<ProbeRecord> probes;
};

/// Bisection on q over [0, 1]. A probe counts as "epidemic" when at least
/// half the replicates survive the horizon; q_star is the midpoint of the
/// final bracket. p == 0 or d == 0 short-circuits to q_star = 0.
ThresholdEstimate find_q_star(double p, double d, const ThresholdSearch& search,
                              unsigned jobs = 1);

struct SweepGrid {
    std::vector<double> p;
    std::vector<double> q;
    std::vector<double> d;
};

struct SweepSettings {
    std::uint32_t lattice_side = 128;
    std::uint64_t steps = 10000;
    std::uint32_t replicates = 16;
    double initial_infected_fraction = 0.2;
    std::uint64_t master_seed = 1;
};

struct SweepRow {
    double p = 0.0;
    double q = 0.0;
    double d = 0.0;
    std::uint32_t lattice_side = 0;
    std::uint64_t master_seed = 0;
    std::optional<FInfEstimate> estimate;  ///< empty when the cell failed
    std::string error;
};

/// Evaluates estimate_f_inf over the p x q x d product (p outermost, d
/// innermost). Rows reach `sink` in grid order as soon as every earlier cell
/// has finished; a failing cell yields a row carrying its error.
void sweep(const SweepGrid& grid, const SweepSettings& settings,
           const std::function<void(const SweepRow&)>& sink, unsigned jobs = 1);

std::vector<SweepRow> sweep(const SweepGrid& grid, const SweepSettings& settings,
                            unsigned jobs = 1);

}  // namespace mobispread::experiments
