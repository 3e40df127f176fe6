#include "mobispread/world.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mobispread {

World::World(const SimParams& params, RngStream rng) : params_(params), rng_(rng) {
    params_.validate();
    const std::size_t sites = static_cast<std::size_t>(params_.lattice_side) * params_.lattice_side;
    site_begin_.assign(sites + 1, 0);
    sources_at_site_.assign(sites, 0);
    site_agents_.resize(params_.agent_count);
}

World World::init_uniform(const SimParams& params, RngStream rng) {
    World w(params, rng);
    const std::uint32_t n = params.agent_count;
    const std::uint32_t side = params.lattice_side;

    w.positions_.resize(n);
    for (auto& pos : w.positions_) {
        pos.x = static_cast<std::uint32_t>(w.rng_.uniform_index(side));
        pos.y = static_cast<std::uint32_t>(w.rng_.uniform_index(side));
    }

    // nearbyint rounds half to even under the default rounding mode.
    const auto infected =
        static_cast<std::uint32_t>(std::nearbyint(params.initial_infected_fraction * n));
    std::vector<AgentId> order(n);
    std::iota(order.begin(), order.end(), AgentId{0});
    w.infected_.assign(n, 0);
    for (std::uint32_t i = 0; i < infected; ++i) {
        const auto j = i + static_cast<std::uint32_t>(w.rng_.uniform_index(n - i));
        std::swap(order[i], order[j]);
        w.infected_[order[i]] = 1;
    }
    w.infected_count_ = infected;
    w.rebuild_site_index();
    return w;
}

World::World(const SimParams& params, std::vector<Position> positions,
             std::vector<bool> infected, RngStream rng)
    : World(params, rng) {
    if (positions.size() != params_.agent_count || infected.size() != params_.agent_count)
        throw std::invalid_argument("configuration size does not match agent_count");
    for (const auto& p : positions) {
        if (p.x >= params_.lattice_side || p.y >= params_.lattice_side)
            throw std::invalid_argument("agent position outside the lattice");
    }
    positions_ = std::move(positions);
    infected_.resize(infected.size());
    for (std::size_t i = 0; i < infected.size(); ++i) {
        infected_[i] = infected[i] ? 1 : 0;
        infected_count_ += infected_[i];
    }
    rebuild_site_index();
}

std::span<const AgentId> World::agents_at(std::uint32_t x, std::uint32_t y) const {
    if (x >= side() || y >= side()) throw std::out_of_range("site outside the lattice");
    const std::size_t s = site_of({x, y});
    return std::span<const AgentId>(site_agents_).subspan(site_begin_[s],
                                                          site_begin_[s + 1] - site_begin_[s]);
}

void World::rebuild_site_index() {
    const std::size_t n = positions_.size();
    site_of_agent_.resize(n);
    std::fill(site_begin_.begin(), site_begin_.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto s = static_cast<std::uint32_t>(site_of(positions_[i]));
        site_of_agent_[i] = s;
        ++site_begin_[s];
    }
    fill_site_buckets();
}

void World::fill_site_buckets() {
    const std::size_t sites = site_begin_.size() - 1;
    const std::size_t n = positions_.size();
    std::partial_sum(site_begin_.begin(), site_begin_.begin() + sites, site_begin_.begin());
    // Filling from the highest id down leaves each bucket in ascending id order
    // and turns site_begin_[s] from "end of s" into "start of s".
    for (std::size_t i = n; i-- > 0;) {
        site_agents_[--site_begin_[site_of_agent_[i]]] = static_cast<AgentId>(i);
    }
    site_begin_[sites] = static_cast<std::uint32_t>(n);
}

void World::step_move() {
    // Direction offsets as in `Direction`; -1 is written as side - 1 so the
    // wrap is one conditional subtraction.
    const std::uint32_t side = params_.lattice_side;
    const std::uint32_t dx[4] = {1, side - 1, 0, 0};
    const std::uint32_t dy[4] = {0, 0, 1, side - 1};
    const std::size_t n = positions_.size();
    std::fill(site_begin_.begin(), site_begin_.end(), 0);

    RngStream rng = rng_;
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < n; ++i) {
        // 32 directions per raw draw, most significant pair first.
        if (i % 32 == 0) bits = rng.next_u64();
        const auto dir = static_cast<unsigned>(bits >> 62);
        bits <<= 2;

        Position& pos = positions_[i];
        const std::uint32_t x = pos.x + dx[dir];
        const std::uint32_t y = pos.y + dy[dir];
        pos.x = x >= side ? x - side : x;
        pos.y = y >= side ? y - side : y;
        const auto s = static_cast<std::uint32_t>(site_of(pos));
        site_of_agent_[i] = s;
        ++site_begin_[s];
    }
    rng_ = rng;
    fill_site_buckets();
}

void World::take_snapshot() {
    snapshot_ = infected_;
    snapshot_pending_ = true;
}

void World::step_infect() {
    take_snapshot();
    const double p = params_.infect_prob;
    const std::size_t n = positions_.size();
    for (std::size_t a = 0; a < n; ++a) sources_at_site_[site_of_agent_[a]] += snapshot_[a];

    // site_agents_ is already sorted by (row-major site, id). The stream is
    // kept in a local so byte stores to the flags cannot alias its state.
    RngStream rng = rng_;
    std::size_t newly_infected = 0;
    for (const AgentId a : site_agents_) {
        if (snapshot_[a]) continue;
        const std::uint32_t sources = sources_at_site_[site_of_agent_[a]];
        for (std::uint32_t k = 0; k < sources; ++k) {
            if (rng.bernoulli(p)) {
                infected_[a] = 1;
                ++newly_infected;
                break;
            }
        }
    }

    rng_ = rng;
    infected_count_ += newly_infected;
    for (std::size_t a = 0; a < n; ++a) sources_at_site_[site_of_agent_[a]] = 0;
}

void World::step_heal() {
    if (!snapshot_pending_) take_snapshot();
    const double q = params_.heal_prob;
    RngStream rng = rng_;
    std::size_t healed = 0;
    for (std::size_t a = 0; a < infected_.size(); ++a) {
        if (snapshot_[a] && rng.bernoulli(q)) {
            infected_[a] = 0;
            ++healed;
        }
    }
    rng_ = rng;
    infected_count_ -= healed;
    snapshot_pending_ = false;
}

void World::tick() {
    step_move();
    if (infected_count_ != 0) {
        step_infect();
        step_heal();
    }
    ++tick_;
}

}  // namespace mobispread
