#pragma once

#include <complex>
#include <optional>
#include <utility>

#include "poltel/fluct.hpp"

namespace poltel {

enum class Quadrature { amplitude, phase };

/// A linearized optical mode: carrier plus amplitude (X+) and phase (X-)
/// quadrature fluctuations, both in shot-noise units.
struct OpticalMode {
    std::complex<double> carrier{0.0, 0.0};
    FluctuationVector x_plus;
    FluctuationVector x_minus;

    double amplitude() const { return std::abs(carrier); }
    const FluctuationVector& quadrature(Quadrature q) const { return q == Quadrature::amplitude ? x_plus : x_minus; }
    FluctuationVector& quadrature(Quadrature q) { return q == Quadrature::amplitude ? x_plus : x_minus; }
};

/// A detected quadrature. Classical record, so it may be copied and scaled freely.
struct Photocurrent {
    FluctuationVector signal;
};

/// Classical modulation variances added on top of the quantum noise of a mode.
struct SignalVariances {
    double plus = 0.0;
    double minus = 0.0;
};

struct ModeSpec {
    enum class Kind { vacuum, coherent, squeezed };

    Kind kind = Kind::vacuum;
    double carrier = 0.0;
    double squeezed_variance = 1.0;
    Quadrature squeezed_quadrature = Quadrature::amplitude;
    std::optional<SignalVariances> signal;

    static ModeSpec vacuum() { return {}; }
    static ModeSpec coherent(double alpha) { return {Kind::coherent, alpha, 1.0, Quadrature::amplitude, std::nullopt}; }
    static ModeSpec squeezed(double v, Quadrature q, double alpha = 0.0) { return {Kind::squeezed, alpha, v, q, std::nullopt}; }

    ModeSpec with_signal(double plus, double minus) const {
        ModeSpec s = *this;
        s.signal = SignalVariances{plus, minus};
        return s;
    }
};

enum class Detection { amplitude_homodyne, phase_homodyne, direct };

OpticalMode make_mode(SourceRegistry& registry, const ModeSpec& spec);

/// c = sqrt(eps) a + sqrt(1-eps) b,  d = sqrt(1-eps) a - sqrt(eps) b.
std::pair<OpticalMode, OpticalMode> beamsplitter(const OpticalMode& a, const OpticalMode& b, double transmittivity);

OpticalMode phase_shift(const OpticalMode& a, double phi);

/// Two orthogonally squeezed beams combined on a 50/50 beamsplitter.
std::pair<OpticalMode, OpticalMode> epr_pair(SourceRegistry& registry, double squeezed_variance);

Photocurrent detect(OpticalMode&& mode, Detection which);

/// Adds gain * photocurrent to one quadrature. The carrier is unchanged.
OpticalMode modulate(OpticalMode mode, Quadrature which, double gain, const Photocurrent& current);

}  // namespace poltel
