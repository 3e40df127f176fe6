#pragma once

// Mean-field approximation of the lattice SIS model.
//
// A single agent sees the population-averaged infection pressure
//     p'(f) = 1 - (1-p)^(f d)
// (real exponent), and flips between healthy and infected as a two-state
// Markov chain. Its stationary infected probability phi(f) must equal f,
// which gives the self-consistency equation f = phi(f). phi is increasing and
// concave with phi(0) = 0, so a positive root exists iff phi'(0) > 1, i.e.
// iff q < q0(p, d) = a / (1 + a) with a = d ln(1/(1-p)).

#include <array>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace mobispread::meanfield {

struct MeanFieldParams {
    double p = 0.0;
    double q = 0.0;
    double d = 0.0;
};

enum class Regime { extinct, epidemic };

std::string_view to_string(Regime r) noexcept;

struct MeanFieldResult {
    double f_mf = 0.0;
    double q0 = 0.0;
    double p_prime_at_solution = 0.0;
    double residual = 0.0;
    Regime regime = Regime::extinct;
};

/// Rows (healthy, infected), columns (healthy, infected).
using TransitionMatrix = std::array<std::array<double, 2>, 2>;

struct StationaryDistribution {
    double healthy = 0.0;
    double infected = 0.0;
};

/// 1 - (1-p)^(f d). Exactly 0 when f d == 0 and exactly 1 when p == 1, f d > 0.
double p_prime(double p, double f, double d);

TransitionMatrix transition_matrix(double p_prime, double q);

/// Throws std::domain_error when p' = q = 0 (every distribution is stationary).
StationaryDistribution stationary_distribution(double p_prime, double q);

/// Right-hand side of the self-consistency equation. Defined for any real f
/// (including small negative f, for finite differences) whenever the
/// denominator p' + q - p'q is nonzero.
double phi(double f, const MeanFieldParams& params);

/// Closed-form epidemic threshold. 0 for p == 0 or d == 0, 1 for p == 1, d > 0.
double threshold_q0(double p, double d);

inline constexpr double default_tolerance = 1e-10;

/// Solves f = phi(f). Throws std::invalid_argument on non-finite or
/// out-of-range inputs, or tol <= 0.
MeanFieldResult solve_fmf(const MeanFieldParams& params, double tol = default_tolerance);

struct ThresholdPoint {
    double p = 0.0;
    double q0 = 0.0;
};

std::vector<ThresholdPoint> mf_threshold_curve(double d, std::span<const double> p_grid);

}  // namespace mobispread::meanfield
