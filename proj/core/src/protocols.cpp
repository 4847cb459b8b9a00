#include "poltel/protocols.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace poltel {

namespace {

constexpr std::array<std::string_view, 4> kPolarizationNames{"H+", "H-", "V+", "V-"};
constexpr std::array<std::string_view, 2> kSingleModeNames{"X+", "X-"};

void check_squeezing(double v, const char* what) {
    if (!(v > 0.0 && v <= 1.0)) {
        throw std::invalid_argument(std::string(what) + " must lie in (0, 1]");
    }
}

void check_transmittivity(double eps, const char* what) {
    if (!(eps >= 0.0 && eps <= 1.0)) {
        throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
    }
}

QuadratureRecord measure(const SourceRegistry& registry, const FluctuationVector& in, const FluctuationVector& out) {
    const auto in_q = in.filtered(registry, SourceKind::quantum);
    const auto in_c = in.filtered(registry, SourceKind::classical);
    const auto out_q = out.filtered(registry, SourceKind::quantum);
    const auto out_c = out.filtered(registry, SourceKind::classical);

    QuadratureRecord r;
    r.output_variance = variance(out);
    r.output_noise_variance = variance(out_q);
    r.output_signal_variance = variance(out_c);
    r.input_noise_variance = variance(in_q);
    r.input_signal_variance = variance(in_c);
    r.noise_covariance = covariance(in_q, out_q);
    r.signal_gain = r.input_signal_variance > 0.0 ? covariance(in_c, out_c) / r.input_signal_variance
                                                  : r.noise_covariance / r.input_noise_variance;
    return r;
}

void fill_records(TeleportOutcome& outcome, std::span<const std::string_view> names, std::span<const bool> information) {
    const auto& registry = *outcome.registry;
    outcome.records.clear();
    for (std::size_t m = 0; m < outcome.outputs.size(); ++m) {
        for (auto q : {Quadrature::amplitude, Quadrature::phase}) {
            const std::size_t index = outcome.records.size();
            auto r = measure(registry, outcome.inputs[m].quadrature(q), outcome.outputs[m].quadrature(q));
            r.name = names[index];
            r.mode = m;
            r.quadrature = q;
            r.information = information[index];
            outcome.records.push_back(r);
        }
    }
}

TeleportOutcome polarization_outcome(Scheme scheme, std::shared_ptr<SourceRegistry> registry,
                                     const PolarizationState& input, OpticalMode out_h, OpticalMode out_v) {
    // Output carriers replicate the input carrier polarisation.
    out_h.carrier = input.h.carrier;
    out_v.carrier = input.v.carrier;

    TeleportOutcome outcome;
    outcome.scheme = scheme;
    outcome.inputs = {input.h, input.v};
    outcome.outputs = {out_h, out_v};
    outcome.input_state = input;
    outcome.output_state = PolarizationState{std::move(out_h), std::move(out_v), input.theta};
    outcome.registry = std::move(registry);

    const std::array<bool, 4> information{true, true, true, scheme == Scheme::twin};
    fill_records(outcome, kPolarizationNames, information);
    return outcome;
}

OpticalMode direct_detection_arm(SourceRegistry& registry, const OpticalMode& input, const ProtocolParams& p) {
    auto sq3 = make_mode(registry, ModeSpec::squeezed(p.v_sq3, p.sq3_quadrature, input.amplitude()));
    OpticalMode detected = input;
    const auto current = detect(std::move(detected), Detection::direct);
    const double gain = resolve_gain(registry, p.gains.v_plus, input.x_plus, sq3.x_plus, current);
    return modulate(std::move(sq3), Quadrature::amplitude, gain, current);
}

/// Vertical arm shared by BET and the optimized twin: `first` and `second`
/// are combined on eps1; one output is mixed with the input on eps2 and the
/// two ports are homodyned and fed forward onto the other eps1 output.
OpticalMode biased_arm(SourceRegistry& registry, const OpticalMode& input, const OpticalMode& first,
                       const OpticalMode& second, const ProtocolParams& p) {
    auto [carrier_beam, mixed_beam] = beamsplitter(first, second, p.eps1);
    auto [port1, port2] = beamsplitter(input, mixed_beam, p.eps2);

    auto& amplitude_port = p.polarity == Polarity::positive ? port2 : port1;
    auto& phase_port = p.polarity == Polarity::positive ? port1 : port2;
    const auto i_plus = detect(std::move(amplitude_port), Detection::amplitude_homodyne);
    const auto i_minus = detect(std::move(phase_port), Detection::phase_homodyne);

    const double g_plus = resolve_gain(registry, p.gains.v_plus, input.x_plus, carrier_beam.x_plus, i_plus);
    const double g_minus = resolve_gain(registry, p.gains.v_minus, input.x_minus, carrier_beam.x_minus, i_minus);
    auto out = modulate(std::move(carrier_beam), Quadrature::amplitude, g_plus, i_plus);
    return modulate(std::move(out), Quadrature::phase, g_minus, i_minus);
}

Quadrature orthogonal(Quadrature q) { return q == Quadrature::amplitude ? Quadrature::phase : Quadrature::amplitude; }

void require_vertical_carrier(const PolarizationState& input, std::string_view scheme) {
    if (input.alpha_h() != 0.0) {
        throw std::invalid_argument(std::string(scheme) + " requires a vertically polarised carrier (alpha_H = 0)");
    }
}

}  // namespace

std::string_view to_string(Scheme scheme) {
    switch (scheme) {
        case Scheme::twin:
            return "twin";
        case Scheme::sqd:
            return "sqd";
        case Scheme::bet:
            return "bet";
        case Scheme::optimized_twin:
            return "optimized-twin";
    }
    return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
    for (auto s : {Scheme::twin, Scheme::sqd, Scheme::bet, Scheme::optimized_twin}) {
        if (name == to_string(s)) {
            return s;
        }
    }
    return std::nullopt;
}

ProtocolParams ProtocolParams::twin(double v_sq) {
    ProtocolParams p;
    p.scheme = Scheme::twin;
    p.v_sq = v_sq;
    return p;
}

ProtocolParams ProtocolParams::sqd(double v_sq, double v_sq3) {
    ProtocolParams p;
    p.scheme = Scheme::sqd;
    p.v_sq = v_sq;
    p.v_sq3 = v_sq3;
    p.sq3_quadrature = Quadrature::amplitude;
    return p;
}

ProtocolParams ProtocolParams::bet(double v_sq, double v_sq3, double eps1, double eps2, Quadrature sq3,
                                   Polarity polarity) {
    ProtocolParams p;
    p.scheme = Scheme::bet;
    p.v_sq = v_sq;
    p.v_sq3 = v_sq3;
    p.sq3_quadrature = sq3;
    p.eps1 = eps1;
    p.eps2 = eps2;
    p.polarity = polarity;
    p.gains.v_minus = FeedforwardGain::minimum_noise();
    return p;
}

ProtocolParams ProtocolParams::optimized_twin(double v, double eps1, double eps2, Quadrature sq3, Polarity polarity) {
    ProtocolParams p = bet(v, v, eps1, eps2, sq3, polarity);
    p.scheme = Scheme::optimized_twin;
    return p;
}

void ProtocolParams::validate() const {
    check_squeezing(v_sq, "EPR squeezing V_SQ");
    if (scheme != Scheme::twin) {
        check_squeezing(v_sq3, "third-beam squeezing V_SQ3");
    }
    if (scheme == Scheme::bet || scheme == Scheme::optimized_twin) {
        check_transmittivity(eps1, "eps1");
        check_transmittivity(eps2, "eps2");
    }
    if (scheme == Scheme::optimized_twin && v_sq != v_sq3) {
        throw std::invalid_argument("optimized-twin requires all four squeezers equal (V_SQ3 = V_SQ)");
    }
    for (double s : {signal.h_plus, signal.h_minus, signal.v_plus, signal.v_minus}) {
        if (!(s >= 0.0) || !std::isfinite(s)) {
            throw std::invalid_argument("input signal variances must be finite and non-negative");
        }
    }
}

const QuadratureRecord& TeleportOutcome::record(std::size_t mode, Quadrature q) const {
    const std::size_t index = 2 * mode + (q == Quadrature::amplitude ? 0 : 1);
    if (index >= records.size()) {
        throw std::out_of_range("no such quadrature record");
    }
    return records[index];
}

double resolve_gain(const SourceRegistry& registry, const FeedforwardGain& gain, const FluctuationVector& input,
                    const FluctuationVector& target, const Photocurrent& current) {
    if (gain.mode == FeedforwardGain::Mode::minimum_noise) {
        const auto photo_q = current.signal.filtered(registry, SourceKind::quantum);
        const double var_q = variance(photo_q);
        if (var_q == 0.0) {
            return 0.0;
        }
        return -covariance(target.filtered(registry, SourceKind::quantum), photo_q) / var_q;
    }
    if (gain.value == 0.0) {
        return 0.0;
    }
    // Fraction of the input quadrature carried by the photocurrent.
    const double transfer = covariance(input, current.signal) / variance(input);
    if (!(std::abs(transfer) > 1e-12)) {
        throw std::domain_error("requested signal gain is unreachable: the detector sees no input");
    }
    return gain.value / transfer;
}

OpticalMode quadrature_teleport(SourceRegistry& registry, const OpticalMode& input, double v_sq,
                                const FeedforwardGain& plus, const FeedforwardGain& minus) {
    check_squeezing(v_sq, "EPR squeezing V_SQ");
    auto [epr1, epr2] = epr_pair(registry, v_sq);
    auto [amp_port, phase_port] = beamsplitter(input, epr1, 0.5);
    const auto i_plus = detect(std::move(amp_port), Detection::amplitude_homodyne);
    const auto i_minus = detect(std::move(phase_port), Detection::phase_homodyne);

    const double g_plus = resolve_gain(registry, plus, input.x_plus, epr2.x_plus, i_plus);
    const double g_minus = resolve_gain(registry, minus, input.x_minus, epr2.x_minus, i_minus);
    auto out = modulate(std::move(epr2), Quadrature::amplitude, g_plus, i_plus);
    out = modulate(std::move(out), Quadrature::phase, g_minus, i_minus);
    out.carrier = input.carrier;
    return out;
}

TeleportOutcome teleport_single_mode(double v_sq, const FeedforwardGain& plus, const FeedforwardGain& minus,
                                     SignalVariances signal) {
    auto registry = std::make_shared<SourceRegistry>();
    auto input = make_mode(*registry, ModeSpec::coherent(0.0).with_signal(signal.plus, signal.minus));
    auto output = quadrature_teleport(*registry, input, v_sq, plus, minus);

    TeleportOutcome outcome;
    outcome.inputs = {std::move(input)};
    outcome.outputs = {std::move(output)};
    outcome.registry = std::move(registry);
    const std::array<bool, 2> information{true, true};
    fill_records(outcome, kSingleModeNames, information);
    return outcome;
}

std::pair<std::shared_ptr<SourceRegistry>, PolarizationState> prepare_input(const ProtocolParams& params,
                                                                            const InputSpec& input) {
    if (input.alpha_h < 0.0 || input.alpha_v < 0.0) {
        throw std::invalid_argument("carrier amplitudes must be non-negative");
    }
    auto registry = std::make_shared<SourceRegistry>();
    const auto& s = params.signal;
    PolarizationState state;
    state.h = make_mode(*registry, ModeSpec::coherent(input.alpha_h).with_signal(s.h_plus, s.h_minus));
    state.v = make_mode(*registry, ModeSpec::coherent(input.alpha_v).with_signal(s.v_plus, s.v_minus));
    state.theta = input.theta;
    return {std::move(registry), std::move(state)};
}

TeleportOutcome twin_teleport(std::shared_ptr<SourceRegistry> registry, const PolarizationState& input,
                              const ProtocolParams& params) {
    params.validate();
    const auto& g = params.gains;
    auto out_h = quadrature_teleport(*registry, input.h, params.v_sq, g.h_plus, g.h_minus);
    auto out_v = quadrature_teleport(*registry, input.v, params.v_sq, g.v_plus, g.v_minus);
    return polarization_outcome(Scheme::twin, std::move(registry), input, std::move(out_h), std::move(out_v));
}

TeleportOutcome sqd_teleport(std::shared_ptr<SourceRegistry> registry, const PolarizationState& input,
                             const ProtocolParams& params) {
    params.validate();
    require_vertical_carrier(input, "sqd");
    const auto& g = params.gains;
    auto out_h = quadrature_teleport(*registry, input.h, params.v_sq, g.h_plus, g.h_minus);
    auto out_v = direct_detection_arm(*registry, input.v, params);
    return polarization_outcome(Scheme::sqd, std::move(registry), input, std::move(out_h), std::move(out_v));
}

TeleportOutcome bet_teleport(std::shared_ptr<SourceRegistry> registry, const PolarizationState& input,
                             const ProtocolParams& params) {
    params.validate();
    require_vertical_carrier(input, "bet");
    const auto& g = params.gains;
    auto out_h = quadrature_teleport(*registry, input.h, params.v_sq, g.h_plus, g.h_minus);
    const auto sq3 = make_mode(*registry, ModeSpec::squeezed(params.v_sq3, params.sq3_quadrature));
    const auto vacuum = make_mode(*registry, ModeSpec::vacuum());
    auto out_v = biased_arm(*registry, input.v, sq3, vacuum, params);
    return polarization_outcome(Scheme::bet, std::move(registry), input, std::move(out_h), std::move(out_v));
}

TeleportOutcome optimized_twin_teleport(std::shared_ptr<SourceRegistry> registry, const PolarizationState& input,
                                        const ProtocolParams& params) {
    params.validate();
    const auto& g = params.gains;
    auto out_h = quadrature_teleport(*registry, input.h, params.v_sq, g.h_plus, g.h_minus);
    const auto sq3 = make_mode(*registry, ModeSpec::squeezed(params.v_sq3, params.sq3_quadrature));
    const auto sq4 = make_mode(*registry, ModeSpec::squeezed(params.v_sq3, orthogonal(params.sq3_quadrature)));
    auto out_v = biased_arm(*registry, input.v, sq3, sq4, params);
    return polarization_outcome(Scheme::optimized_twin, std::move(registry), input, std::move(out_h),
                                std::move(out_v));
}

TeleportOutcome run_protocol(const ProtocolParams& params, const InputSpec& input) {
    auto [registry, state] = prepare_input(params, input);
    switch (params.scheme) {
        case Scheme::twin:
            return twin_teleport(std::move(registry), state, params);
        case Scheme::sqd:
            return sqd_teleport(std::move(registry), state, params);
        case Scheme::bet:
            return bet_teleport(std::move(registry), state, params);
        case Scheme::optimized_twin:
            return optimized_twin_teleport(std::move(registry), state, params);
    }
    throw std::invalid_argument("unknown scheme");
}

}  // namespace poltel
