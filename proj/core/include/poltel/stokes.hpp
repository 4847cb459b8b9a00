#pragma once

#include <array>

#include "poltel/optics.hpp"

namespace poltel {

/// Horizontal and vertical constituent modes with relative phase theta.
/// Carrier magnitudes give alpha_H and alpha_V; theta carries the relative phase.
struct PolarizationState {
    OpticalMode h;
    OpticalMode v;
    double theta = 0.0;

    double alpha_h() const { return h.amplitude(); }
    double alpha_v() const { return v.amplitude(); }
};

using StokesVector = std::array<double, 4>;

struct StokesStatistics {
    StokesVector means{};
    std::array<FluctuationVector, 4> fluct;
    /// Variances of S0..S3.
    StokesVector variances{};
    double poincare_radius = 0.0;
    /// False when the total photon number is below the linearization threshold.
    bool linearized = true;
};

struct StokesOptions {
    double linearization_threshold = 100.0;
};

StokesVector stokes_means(const PolarizationState& s);
std::array<FluctuationVector, 4> stokes_fluctuations(const PolarizationState& s);

/// (V_S1, V_S2, V_S3).
std::array<double, 3> stokes_variances(const PolarizationState& s);

/// sqrt(<S0>^2 + 2<S0>).
double poincare_radius(double s0);

StokesStatistics stokes_statistics(const PolarizationState& s, const StokesOptions& options = {});

struct UncertaintyMargin {
    int l = 1;
    int m = 2;
    int n = 3;
    /// V_l V_m - |<S_n>|^2
    double margin = 0.0;
    bool violated = false;
};

/// Evaluates V_l V_m >= |<S_n>|^2 for the cyclic triples (1,2,3), (2,3,1), (3,1,2).
/// A margin below -tolerance * max(1, |<S_n>|^2) is flagged as a violation.
std::array<UncertaintyMargin, 3> uncertainty_check(const StokesStatistics& stats, double tolerance = 1e-9);

}  // namespace poltel
