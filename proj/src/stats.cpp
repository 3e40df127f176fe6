#include "mobispread/stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mobispread::stats {

namespace {

std::vector<double> centered(std::span<const double> series) {
    const double m = mean(series);
    std::vector<double> y(series.begin(), series.end());
    for (double& v : y) v -= m;
    return y;
}

double lag_covariance(const std::vector<double>& y, std::size_t lag) {
    const std::size_t n = y.size();
    double sum = 0.0;
    for (std::size_t i = 0; i + lag < n; ++i) sum += y[i] * y[i + lag];
    return sum / static_cast<double>(n - lag);
}

// No minimum-length check; estimate_equilibrium feeds it sub-series.
AutocorrelationTime sokal_window(std::span<const double> series, double c) {
    const std::vector<double> y = centered(series);
    const double c0 = lag_covariance(y, 0);
    if (!(c0 > 0.0))
        throw AnalysisError("zero-variance series: autocorrelation time undefined");

    const std::size_t limit = y.size() / 2;
    double tau = 1.0;
    for (std::size_t w = 1;; ++w) {
        if (w > limit)
            throw AnalysisError("series too short relative to its correlation time (window " +
                                std::to_string(w) + " exceeds half of " +
                                std::to_string(y.size()) + " samples)");
        tau += 2.0 * lag_covariance(y, w) / c0;
        if (static_cast<double>(w) >= c * tau) return {std::max(tau, 0.5), w};
    }
}

}  // namespace

double mean(std::span<const double> series) {
    if (series.empty()) return 0.0;
    double sum = 0.0;
    double comp = 0.0;
    for (double v : series) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    return (sum + comp) / static_cast<double>(series.size());
}

std::vector<double> autocovariance(std::span<const double> series, std::size_t max_lag) {
    if (max_lag >= series.size())
        throw std::invalid_argument("autocovariance: max_lag must be below the series length");
    const std::vector<double> y = centered(series);
    std::vector<double> cov(max_lag + 1);
    for (std::size_t t = 0; t <= max_lag; ++t) cov[t] = lag_covariance(y, t);
    return cov;
}

AutocorrelationTime integrated_autocorrelation_time(std::span<const double> series,
                                                    double window_factor) {
    if (series.size() < min_series_length)
        throw AnalysisError("series of " + std::to_string(series.size()) +
                            " samples is too short; at least " +
                            std::to_string(min_series_length) + " are required");
    if (!(window_factor > 0.0)) throw std::invalid_argument("window factor must be positive");
    return sokal_window(series, window_factor);
}

double autocorrelation_time_at(std::span<const double> series, std::size_t window) {
    if (window >= series.size())
        throw std::invalid_argument("window must be below the series length");
    const std::vector<double> cov = autocovariance(series, window);
    if (!(cov[0] > 0.0))
        throw AnalysisError("zero-variance series: autocorrelation time undefined");
    double tau = 1.0;
    for (std::size_t t = 1; t <= window; ++t) tau += 2.0 * cov[t] / cov[0];
    return std::max(tau, 0.5);
}

EquilibriumEstimate estimate_equilibrium(std::span<const double> series, double window_factor) {
    const std::size_t n = series.size();
    if (n < min_series_length)
        throw AnalysisError("series of " + std::to_string(n) +
                            " samples is too short; at least " +
                            std::to_string(min_series_length) + " are required");
    if (!(window_factor > 0.0)) throw std::invalid_argument("window factor must be positive");

    std::size_t run_start = n - 1;
    while (run_start > 0 && series[run_start - 1] == series[run_start]) --run_start;

    EquilibriumEstimate est;
    const bool extinct = series.back() == 0.0;
    if (extinct || run_start <= n / 2) {
        est.extinct = extinct;
        est.burn_in = run_start;
        est.mean = series.back();
        est.tau = 1.0;
        est.n_effective = static_cast<double>(n - run_start) / 2.0;
        return est;
    }

    const AutocorrelationTime pilot = sokal_window(series.subspan(n / 2), window_factor);
    est.burn_in = std::min(static_cast<std::size_t>(std::ceil(20.0 * pilot.tau)), n / 4);

    const auto retained = series.subspan(est.burn_in);
    const AutocorrelationTime act = sokal_window(retained, window_factor);
    const double n_ret = static_cast<double>(retained.size());
    const double c0 = autocovariance(retained, 0)[0];
    est.tau = act.tau;
    est.mean = mean(retained);
    est.std_error = std::sqrt(c0 * 2.0 * act.tau / n_ret);
    est.n_effective = n_ret / (2.0 * act.tau);
    return est;
}

}  // namespace mobispread::stats
