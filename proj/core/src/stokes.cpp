#include "poltel/stokes.hpp"

#include <algorithm>
#include <cmath>

namespace poltel {

StokesVector stokes_means(const PolarizationState& s) {
    const double ah = s.alpha_h();
    const double av = s.alpha_v();
    return {ah * ah + av * av, ah * ah - av * av, 2.0 * ah * av * std::cos(s.theta), 2.0 * ah * av * std::sin(s.theta)};
}

std::array<FluctuationVector, 4> stokes_fluctuations(const PolarizationState& s) {
    const double ah = s.alpha_h();
    const double av = s.alpha_v();
    const double c = std::cos(s.theta);
    const double sn = std::sin(s.theta);
    const auto& hp = s.h.x_plus;
    const auto& hm = s.h.x_minus;
    const auto& vp = s.v.x_plus;
    const auto& vm = s.v.x_minus;

    return {
        ah * hp + av * vp,
        ah * hp - av * vp,
        ah * (sn * vm + c * vp) + av * (c * hp - sn * hm),
        ah * (sn * vp - c * vm) + av * (c * hm + sn * hp),
    };
}

std::array<double, 3> stokes_variances(const PolarizationState& s) {
    const auto f = stokes_fluctuations(s);
    return {variance(f[1]), variance(f[2]), variance(f[3])};
}

double poincare_radius(double s0) { return std::sqrt(s0 * s0 + 2.0 * s0); }

StokesStatistics stokes_statistics(const PolarizationState& s, const StokesOptions& options) {
    StokesStatistics stats;
    stats.means = stokes_means(s);
    stats.fluct = stokes_fluctuations(s);
    for (std::size_t i = 0; i < 4; ++i) {
        stats.variances[i] = variance(stats.fluct[i]);
    }
    stats.poincare_radius = poincare_radius(stats.means[0]);
    stats.linearized = stats.means[0] >= options.linearization_threshold;
    return stats;
}

std::array<UncertaintyMargin, 3> uncertainty_check(const StokesStatistics& stats, double tolerance) {
    constexpr std::array<std::array<int, 3>, 3> triples{{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}};
    std::array<UncertaintyMargin, 3> out;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto [l, m, n] = triples[i];
        const double bound = stats.means[n] * stats.means[n];
        const double margin = stats.variances[l] * stats.variances[m] - bound;
        out[i] = {l, m, n, margin, margin < -tolerance * std::max(1.0, bound)};
    }
    return out;
}

}  // namespace poltel
