#include "mobispread/params.hpp"

#include <cmath>
#include <stdexcept>

namespace mobispread {

void SimParams::validate() const {
    auto in_unit = [](double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; };
    if (lattice_side == 0) throw std::invalid_argument("lattice_side must be positive");
    if (agent_count == 0) throw std::invalid_argument("agent_count must be positive");
    if (!in_unit(infect_prob)) throw std::invalid_argument("infect_prob must lie in [0,1]");
    if (!in_unit(heal_prob)) throw std::invalid_argument("heal_prob must lie in [0,1]");
    if (!in_unit(initial_infected_fraction))
        throw std::invalid_argument("initial_infected_fraction must lie in [0,1]");
    if (max_steps == 0) throw std::invalid_argument("max_steps must be positive");
}

std::uint32_t SimParams::agents_for_density(std::uint32_t lattice_side, double density) {
    if (!std::isfinite(density) || density < 0.0)
        throw std::invalid_argument("density must be a nonnegative finite number");
    const double sites = static_cast<double>(lattice_side) * lattice_side;
    const double n = std::nearbyint(density * sites);
    if (n > 4.0e9) throw std::invalid_argument("density too large for lattice");
    return static_cast<std::uint32_t>(n);
}

}  // namespace mobispread
