#include "mobispread/experiments.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

#include "mobispread/parallel.hpp"
#include "mobispread/world.hpp"

namespace mobispread::experiments {

std::uint64_t default_horizon(std::uint32_t lattice_side) noexcept {
    return 50ULL * lattice_side * lattice_side;
}

stats::TimeSeries run_trajectory(const SimParams& params, RngStream rng, std::uint64_t thin) {
    if (thin == 0) throw std::invalid_argument("thin must be positive");
    World world = World::init_uniform(params, rng);
    stats::TimeSeries series;
    series.reserve(params.max_steps / thin);
    for (std::uint64_t t = 1; t <= params.max_steps; ++t) {
        if (world.absorbed()) {
            series.resize(params.max_steps / thin, 0.0);
            break;
        }
        world.tick();
        if (t % thin == 0) series.push_back(world.infected_fraction());
    }
    return series;
}

bool survives(const SimParams& params, RngStream rng) {
    World world = World::init_uniform(params, rng);
    for (std::uint64_t t = 0; t < params.max_steps && !world.absorbed(); ++t) world.tick();
    return !world.absorbed();
}

FInfEstimate combine_replicates(std::vector<stats::EquilibriumEstimate> runs) {
    FInfEstimate out;
    double sum = 0.0;
    double var = 0.0;
    for (const auto& r : runs) {
        if (r.extinct) continue;
        ++out.surviving;
        sum += r.mean;
        var += r.std_error * r.std_error;
    }
    if (out.surviving > 0 && 2 * static_cast<std::size_t>(out.surviving) >= runs.size()) {
        out.f_inf = sum / out.surviving;
        out.std_error = std::sqrt(var) / out.surviving;
    }
    out.runs = std::move(runs);
    return out;
}

namespace {

void check_replicates(std::uint32_t r) {
    if (r == 0) throw std::invalid_argument("replicate count must be positive");
}

stats::EquilibriumEstimate analyse_replicate(const SimParams& params, std::uint64_t master_seed,
                                             std::uint32_t index) {
    const auto series = run_trajectory(params, RngStream::derive(master_seed, index));
    return stats::estimate_equilibrium(series);
}

}  // namespace

FInfEstimate estimate_f_inf(const ReplicateSpec& spec, unsigned jobs) {
    check_replicates(spec.replicates);
    spec.base.validate();
    std::vector<stats::EquilibriumEstimate> runs(spec.replicates);
    parallel_for(spec.replicates, jobs, [&](std::size_t i) {
        runs[i] = analyse_replicate(spec.base, spec.master_seed, static_cast<std::uint32_t>(i));
    });
    return combine_replicates(std::move(runs));
}

std::uint32_t survival_probe(const SimParams& params, std::uint32_t replicates,
                             std::uint64_t master_seed, unsigned jobs) {
    check_replicates(replicates);
    params.validate();
    std::vector<std::uint8_t> alive(replicates, 0);
    parallel_for(replicates, jobs, [&](std::size_t i) {
        alive[i] = survives(params, RngStream::derive(master_seed, i)) ? 1 : 0;
    });
    std::uint32_t count = 0;
    for (auto a : alive) count += a;
    return count;
}

ThresholdEstimate find_q_star(double p, double d, const ThresholdSearch& search, unsigned jobs) {
    if (!(search.resolution > 0.0)) throw std::invalid_argument("resolution must be positive");
    check_replicates(search.replicates);

    ThresholdEstimate est;
    est.p = p;
    est.d = d;
    est.resolution = search.resolution;
    if (p == 0.0 || d == 0.0) return est;

    SimParams params;
    params.lattice_side = search.lattice_side;
    params.agent_count = SimParams::agents_for_density(search.lattice_side, d);
    params.infect_prob = p;
    params.initial_infected_fraction = search.initial_infected_fraction;
    params.max_steps = search.steps != 0 ? search.steps : default_horizon(search.lattice_side);
    params.seed = search.master_seed;

    double lo = 0.0;
    double hi = 1.0;
    while (hi - lo > search.resolution) {
        const double mid = 0.5 * (lo + hi);
        params.heal_prob = mid;
        const auto alive = survival_probe(params, search.replicates, search.master_seed, jobs);
        est.probes.push_back({mid, alive, search.replicates});
        (2 * static_cast<std::uint64_t>(alive) >= search.replicates ? lo : hi) = mid;
    }
    est.bracket_low = lo;
    est.bracket_high = hi;
    est.q_star = 0.5 * (lo + hi);
    return est;
}

void sweep(const SweepGrid& grid, const SweepSettings& settings,
           const std::function<void(const SweepRow&)>& sink, unsigned jobs) {
    check_replicates(settings.replicates);
    const std::size_t nq = grid.q.size();
    const std::size_t nd = grid.d.size();
    const std::size_t cells = grid.p.size() * nq * nd;
    const std::uint32_t reps = settings.replicates;

    struct Cell {
        SweepRow row;
        SimParams params;
        bool valid = true;
        std::vector<stats::EquilibriumEstimate> runs;
        std::vector<std::string> errors;
        std::uint32_t remaining = 0;
        bool done = false;
    };
    std::vector<Cell> table(cells);
    for (std::size_t c = 0; c < cells; ++c) {
        Cell& cell = table[c];
        cell.row.p = grid.p[c / (nq * nd)];
        cell.row.q = grid.q[(c / nd) % nq];
        cell.row.d = grid.d[c % nd];
        cell.row.lattice_side = settings.lattice_side;
        cell.row.master_seed = settings.master_seed;
        cell.runs.resize(reps);
        cell.errors.resize(reps);
        cell.remaining = reps;
        try {
            SimParams& sp = cell.params;
            sp.lattice_side = settings.lattice_side;
            sp.agent_count = SimParams::agents_for_density(settings.lattice_side, cell.row.d);
            sp.infect_prob = cell.row.p;
            sp.heal_prob = cell.row.q;
            sp.initial_infected_fraction = settings.initial_infected_fraction;
            sp.max_steps = settings.steps;
            sp.seed = settings.master_seed;
            sp.validate();
        } catch (const std::exception& e) {
            cell.valid = false;
            cell.row.error = e.what();
        }
    }

    std::mutex mu;
    std::size_t next_emit = 0;
    auto finish = [&](Cell& cell) {
        if (!cell.valid) return;
        for (const auto& e : cell.errors) {
            if (!e.empty()) {
                cell.row.error = e;
                return;
            }
        }
        cell.row.estimate = combine_replicates(std::move(cell.runs));
    };
    // Caller holds mu.
    auto flush = [&] {
        while (next_emit < cells && table[next_emit].done) sink(table[next_emit++].row);
    };

    {
        std::lock_guard lock(mu);
        for (auto& cell : table) {
            if (!cell.valid) {
                finish(cell);
                cell.done = true;
            }
        }
        flush();
    }

    parallel_for(cells * reps, jobs, [&](std::size_t task) {
        Cell& cell = table[task / reps];
        if (!cell.valid) return;
        const auto r = static_cast<std::uint32_t>(task % reps);
        stats::EquilibriumEstimate est;
        std::string error;
        try {
            est = analyse_replicate(cell.params, settings.master_seed, r);
        } catch (const std::exception& e) {
            error = e.what();
        }
        std::lock_guard lock(mu);
        cell.runs[r] = est;
        cell.errors[r] = std::move(error);
        if (--cell.remaining == 0) {
            finish(cell);
            cell.done = true;
            flush();
        }
    });
}

std::vector<SweepRow> sweep(const SweepGrid& grid, const SweepSettings& settings, unsigned jobs) {
    std::vector<SweepRow> rows;
    sweep(grid, settings, [&](const SweepRow& row) { rows.push_back(row); }, jobs);
    return rows;
}

}  // namespace mobispread::experiments
