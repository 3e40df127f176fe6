#pragma once

// Equilibrium analysis of a scalar time series: autocovariance, integrated
// autocorrelation time with a self-consistent (Sokal) window, burn-in
// removal, and the error bar on the equilibrium mean.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace mobispread::stats {

using TimeSeries = std::vector<double>;

/// Raised when a series cannot support the requested estimate.
class AnalysisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double default_window_factor = 7.0;
inline constexpr std::size_t min_series_length = 100;

/// Mean with Neumaier-compensated summation.
double mean(std::span<const double> series);

/// c(t) = 1/(n-t) * sum_i (x_i - mean)(x_{i+t} - mean), for t = 0..max_lag.
/// A constant series gives all zeros. Requires max_lag < series.size().
std::vector<double> autocovariance(std::span<const double> series, std::size_t max_lag);

struct AutocorrelationTime {
    double tau = 1.0;
    std::size_t window = 0;
};

/// tau(W) = 1 + 2 sum_{t=1..W} rho(t), with W the smallest lag satisfying
/// W >= c * tau(W). The reported tau is floored at 0.5.
///
/// Throws AnalysisError if the series is shorter than min_series_length,
/// has zero variance, or needs a window beyond half its length.
AutocorrelationTime integrated_autocorrelation_time(std::span<const double> series,
                                                    double window_factor = default_window_factor);

/// tau evaluated at a fixed window, without the self-consistency search.
double autocorrelation_time_at(std::span<const double> series, std::size_t window);

struct EquilibriumEstimate {
    double tau = 1.0;
    std::size_t burn_in = 0;
    double mean = 0.0;
    double std_error = 0.0;
    double n_effective = 0.0;
    bool extinct = false;
};

/// Burn-in is min(20 * tau_pilot, n/4) with tau_pilot measured on the second
/// half. Series whose second half is constant (absorbed at 0, or saturated)
/// skip the autocorrelation analysis: burn-in is the start of the final
/// constant run, std_error is 0 and tau is reported as 1. A series ending in 0
/// is flagged extinct.
EquilibriumEstimate estimate_equilibrium(std::span<const double> series,
                                         double window_factor = default_window_factor);

}  // namespace mobispread::stats
