#include "poltel/optics.hpp"

#include <cmath>
#include <stdexcept>

namespace poltel {

OpticalMode make_mode(SourceRegistry& registry, const ModeSpec& spec) {
    if (!(spec.squeezed_variance > 0.0) || !std::isfinite(spec.squeezed_variance)) {
        throw std::invalid_argument("squeezed variance must be positive");
    }
    if (spec.signal && (spec.signal->plus < 0.0 || spec.signal->minus < 0.0)) {
        throw std::invalid_argument("signal variances must be non-negative");
    }

    const auto pair = registry.new_quantum_pair();
    double v_plus = 1.0;
    if (spec.kind == ModeSpec::Kind::squeezed) {
        v_plus = spec.squeezed_quadrature == Quadrature::amplitude ? spec.squeezed_variance : 1.0 / spec.squeezed_variance;
    }

    OpticalMode mode;
    mode.carrier = spec.kind == ModeSpec::Kind::vacuum ? 0.0 : spec.carrier;
    mode.x_plus = FluctuationVector::unit(pair.x, std::sqrt(v_plus));
    mode.x_minus = FluctuationVector::unit(pair.p, 1.0 / std::sqrt(v_plus));

    if (spec.signal) {
        if (spec.signal->plus > 0.0) {
            mode.x_plus += FluctuationVector::unit(registry.new_classical(), std::sqrt(spec.signal->plus));
        }
        if (spec.signal->minus > 0.0) {
            mode.x_minus += FluctuationVector::unit(registry.new_classical(), std::sqrt(spec.signal->minus));
        }
    }
    return mode;
}

std::pair<OpticalMode, OpticalMode> beamsplitter(const OpticalMode& a, const OpticalMode& b, double transmittivity) {
    if (!(transmittivity >= 0.0 && transmittivity <= 1.0)) {
        throw std::invalid_argument("beamsplitter transmittivity must lie in [0, 1]");
    }
    const double t = std::sqrt(transmittivity);
    const double r = std::sqrt(1.0 - transmittivity);

    OpticalMode c;
    c.carrier = t * a.carrier + r * b.carrier;
    c.x_plus = t * a.x_plus + r * b.x_plus;
    c.x_minus = t * a.x_minus + r * b.x_minus;

    OpticalMode d;
    d.carrier = r * a.carrier - t * b.carrier;
    d.x_plus = r * a.x_plus - t * b.x_plus;
    d.x_minus = r * a.x_minus - t * b.x_minus;
    return {std::move(c), std::move(d)};
}

OpticalMode phase_shift(const OpticalMode& a, double phi) {
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    OpticalMode out;
    out.carrier = a.carrier * std::polar(1.0, phi);
    out.x_plus = c * a.x_plus - s * a.x_minus;
    out.x_minus = s * a.x_plus + c * a.x_minus;
    return out;
}

std::pair<OpticalMode, OpticalMode> epr_pair(SourceRegistry& registry, double squeezed_variance) {
    if (!(squeezed_variance > 0.0 && squeezed_variance <= 1.0)) {
        throw std::invalid_argument("EPR squeezing must lie in (0, 1]");
    }
    auto amp = make_mode(registry, ModeSpec::squeezed(squeezed_variance, Quadrature::amplitude));
    auto phase = make_mode(registry, ModeSpec::squeezed(squeezed_variance, Quadrature::phase));
    return beamsplitter(amp, phase, 0.5);
}

Photocurrent detect(OpticalMode&& mode, Detection which) {
    switch (which) {
        case Detection::amplitude_homodyne:
            return {std::move(mode.x_plus)};
        case Detection::phase_homodyne:
            return {std::move(mode.x_minus)};
        case Detection::direct:
            if (mode.amplitude() == 0.0) {
                throw std::invalid_argument("direct detection needs a bright carrier");
            }
            return {std::move(mode.x_plus)};
    }
    throw std::invalid_argument("unknown detection kind");
}

OpticalMode modulate(OpticalMode mode, Quadrature which, double gain, const Photocurrent& current) {
    if (gain != 0.0) {
        mode.quadrature(which) += gain * current.signal;
    }
    return mode;
}

}  // namespace poltel
