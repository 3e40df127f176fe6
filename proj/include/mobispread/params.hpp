#pragma once

#include <cstdint>

namespace mobispread {

/// Parameters of one simulation run.
struct SimParams {
    std::uint32_t lattice_side = 128;
    std::uint32_t agent_count = 128 * 128;
    double infect_prob = 0.5;
    double heal_prob = 0.05;
    double initial_infected_fraction = 0.2;
    std::uint64_t max_steps = 10000;
    std::uint64_t seed = 1;

    /// Agents per site, N / L^2. Always recomputed, never stored.
    double density() const noexcept {
        const double sites = static_cast<double>(lattice_side) * lattice_side;
        return static_cast<double>(agent_count) / sites;
    }

    /// Throws std::invalid_argument naming the first offending field.
    void validate() const;

    /// N = round(density * L^2), ties to even.
    static std::uint32_t agents_for_density(std::uint32_t lattice_side, double density);

    friend bool operator==(const SimParams&, const SimParams&) = default;
};

}  // namespace mobispread
