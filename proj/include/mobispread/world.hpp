#pragma once

// Discrete-time SIS dynamics of random-walking agents on an L x L torus.
//
// A tick is move -> infect -> heal. Infection and healing both read the
// infection flags as they stood when the infection pass began, so a newly
// infected agent neither spreads nor heals until the following tick.
//
// Random draws are consumed in a fixed canonical order:
//   move:   agents in id order take 2-bit directions from raw 64-bit draws,
//           32 per draw, most significant pair first (so each pair is what
//           uniform_index(4) would return for a fresh draw)
//   infect: sites in row-major order (site = y*L + x); inside a site, healthy
//           agents in id order; each draws bernoulli(p) once per snapshot-
//           infected co-occupant, stopping at the first success
//   heal:   one bernoulli(q) per snapshot-infected agent, in id order
// Given the same parameters and stream, the state sequence is identical on
// every platform.

#include <cstdint>
#include <span>
#include <vector>

#include "mobispread/params.hpp"
#include "mobispread/rng.hpp"

namespace mobispread {

using AgentId = std::uint32_t;

struct Position {
    std::uint32_t x = 0;
    std::uint32_t y = 0;
    friend bool operator==(const Position&, const Position&) = default;
};

/// Index into {(+1,0), (-1,0), (0,+1), (0,-1)}.
enum class Direction : std::uint8_t { east = 0, west = 1, north = 2, south = 3 };

/// Position after one step in `dir` on a torus of side `side`.
constexpr Position displaced(Position pos, Direction dir, std::uint32_t side) noexcept {
    switch (dir) {
        case Direction::east: pos.x = (pos.x + 1 == side) ? 0 : pos.x + 1; break;
        case Direction::west: pos.x = (pos.x == 0) ? side - 1 : pos.x - 1; break;
        case Direction::north: pos.y = (pos.y + 1 == side) ? 0 : pos.y + 1; break;
        case Direction::south: pos.y = (pos.y == 0) ? side - 1 : pos.y - 1; break;
    }
    return pos;
}

class World {
public:
    /// Uniform independent positions (x then y per agent, id order) and
    /// round(f0 * N) infected agents picked by a partial Fisher-Yates shuffle.
    static World init_uniform(const SimParams& params, RngStream rng);

    /// Explicit configuration, used for fixed-configuration experiments.
    /// Throws std::invalid_argument on size mismatch or out-of-range positions.
    World(const SimParams& params, std::vector<Position> positions,
          std::vector<bool> infected, RngStream rng);

    void step_move();
    void step_infect();
    void step_heal();

    /// move, infect, heal; only the move when nobody is infected.
    void tick();

    const SimParams& params() const noexcept { return params_; }
    std::uint32_t side() const noexcept { return params_.lattice_side; }
    std::size_t agent_count() const noexcept { return positions_.size(); }
    std::size_t infected_count() const noexcept { return infected_count_; }
    std::uint64_t tick_count() const noexcept { return tick_; }
    bool absorbed() const noexcept { return infected_count_ == 0; }

    double infected_fraction() const noexcept {
        return static_cast<double>(infected_count_) / static_cast<double>(positions_.size());
    }

    std::span<const Position> positions() const noexcept { return positions_; }
    bool is_infected(AgentId id) const { return infected_[id] != 0; }

    /// Agents at (x, y), ascending id.
    std::span<const AgentId> agents_at(std::uint32_t x, std::uint32_t y) const;

    const RngStream& rng() const noexcept { return rng_; }

private:
    World(const SimParams& params, RngStream rng);

    std::size_t site_of(Position p) const noexcept {
        return static_cast<std::size_t>(p.y) * params_.lattice_side + p.x;
    }
    void rebuild_site_index();
    void fill_site_buckets();
    void take_snapshot();

    SimParams params_;
    RngStream rng_;
    std::vector<Position> positions_;
    std::vector<std::uint8_t> infected_;
    std::vector<std::uint8_t> snapshot_;
    bool snapshot_pending_ = false;
    std::size_t infected_count_ = 0;
    std::uint64_t tick_ = 0;

    // Counting-sort occupancy: agents of site s are
    // site_agents_[site_begin_[s] .. site_begin_[s+1]), ascending id.
    std::vector<std::uint32_t> site_begin_;
    std::vector<AgentId> site_agents_;
    std::vector<std::uint32_t> site_of_agent_;
    std::vector<std::uint32_t> sources_at_site_;  // scratch, zero between passes
};

}  // namespace mobispread
