#include "mobispread/meanfield.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mobispread::meanfield {

namespace {

bool in_unit(double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; }

void check_params(const MeanFieldParams& m) {
    if (!in_unit(m.p)) throw std::invalid_argument("mean field: p must lie in [0,1]");
    if (!in_unit(m.q)) throw std::invalid_argument("mean field: q must lie in [0,1]");
    if (!std::isfinite(m.d) || m.d < 0.0)
        throw std::invalid_argument("mean field: d must be finite and nonnegative");
}

}  // namespace

std::string_view to_string(Regime r) noexcept {
    return r == Regime::epidemic ? "epidemic" : "extinct";
}

double p_prime(double p, double f, double d) {
    const double exposure = f * d;
    if (exposure == 0.0 || p == 0.0) return 0.0;
    if (p == 1.0) return exposure > 0.0 ? 1.0 : -std::numeric_limits<double>::infinity();
    // 1 - (1-p)^x = -expm1(x log1p(-p)), accurate for small p and x.
    return -std::expm1(exposure * std::log1p(-p));
}

TransitionMatrix transition_matrix(double pp, double q) {
    const double infect = pp - pp * q;
    return {{{1.0 - infect, infect}, {q, 1.0 - q}}};
}

StationaryDistribution stationary_distribution(double pp, double q) {
    const double norm = pp + q - pp * q;
    if (!(norm > 0.0))
        throw std::domain_error("stationary distribution undefined for p' = q = 0");
    return {q / norm, (pp - pp * q) / norm};
}

double phi(double f, const MeanFieldParams& m) {
    const double pp = p_prime(m.p, f, m.d);
    // Equal to 1 - q / (1 - (1-q)(1-p)^(fd)), written without cancellation.
    return (pp - pp * m.q) / (pp + m.q - pp * m.q);
}

double threshold_q0(double p, double d) {
    if (p == 0.0 || d == 0.0) return 0.0;
    if (p == 1.0) return 1.0;
    const double a = -d * std::log1p(-p);
    return a / (1.0 + a);
}

MeanFieldResult solve_fmf(const MeanFieldParams& m, double tol) {
    check_params(m);
    if (!(tol > 0.0) || !std::isfinite(tol))
        throw std::invalid_argument("mean field: tolerance must be positive");

    MeanFieldResult r;
    r.q0 = threshold_q0(m.p, m.d);
    if (m.q >= r.q0) {
        r.regime = Regime::extinct;
        return r;
    }

    // From here q < q0, which forces p > 0 and d > 0.
    r.regime = Regime::epidemic;
    if (m.q == 0.0) {
        r.f_mf = 1.0;
    } else if (m.p == 1.0) {
        r.f_mf = 1.0 - m.q;
    } else {
        auto excess = [&](double f) { return phi(f, m) - f; };
        double lo = tol;
        // Just below threshold the root can sit under tol; phi'(0) > 1 keeps
        // the excess positive close enough to zero.
        while (excess(lo) <= 0.0 && lo > 1e-300) lo *= 0.5;
        double hi = 1.0;
        for (int iter = 0; iter < 2000; ++iter) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            (excess(mid) > 0.0 ? lo : hi) = mid;
        }
        r.f_mf = std::abs(excess(lo)) <= std::abs(excess(hi)) ? lo : hi;
    }
    r.p_prime_at_solution = p_prime(m.p, r.f_mf, m.d);
    r.residual = std::abs(phi(r.f_mf, m) - r.f_mf);
    return r;
}

std::vector<ThresholdPoint> mf_threshold_curve(double d, std::span<const double> p_grid) {
    std::vector<ThresholdPoint> curve;
    curve.reserve(p_grid.size());
    for (double p : p_grid) {
        if (!in_unit(p)) throw std::invalid_argument("threshold curve: p outside [0,1]");
        curve.push_back({p, threshold_q0(p, d)});
    }
    return curve;
}

}  // namespace mobispread::meanfield
