#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "poltel/optics.hpp"
#include "poltel/stokes.hpp"

namespace poltel {

enum class Scheme { twin, sqd, bet, optimized_twin };

std::string_view to_string(Scheme scheme);
std::optional<Scheme> parse_scheme(std::string_view name);

/// Which epsilon2 output port drives the amplitude modulator in the biased
/// (BET and optimized-twin) vertical arm.
///
/// With the input entering the first port of the epsilon2 beamsplitter, the
/// two ports are P1 = sqrt(e2) in + sqrt(1-e2) b and P2 = sqrt(1-e2) in - sqrt(e2) b,
/// where b is the biased beam.
///  - positive: amplitude homodyne on P2, phase homodyne on P1. The amplitude
///    modulator gain is positive and the biased beam reaches the output with
///    the opposite sign to its partner. This is the best fidelity regime.
///  - negative: amplitude homodyne on P1, phase homodyne on P2.
enum class Polarity { positive, negative };

/// Feedforward gain for one quadrature.
///
/// `calibrated` gains are expressed as the achieved signal gain: 1.0 is unity
/// gain, whatever the electro-optic gain needed to get there. For the standard
/// teleporter the raw gain is sqrt(2) * g. For the direct-detection loop of the
/// SQD scheme the raw gain equals g, and relates to the g+ used in the
/// literature transfer formula 4 g+^2 / (4 g+^2 + V) through g = 2 g+.
///
/// `minimum_noise` picks the gain minimizing the signal-free output variance
/// of the target quadrature (least-squares cancellation against the photocurrent).
struct FeedforwardGain {
    enum class Mode { calibrated, minimum_noise };
    Mode mode = Mode::calibrated;
    double value = 1.0;

    static FeedforwardGain unity() { return {}; }
    static FeedforwardGain calibrated(double g) { return {Mode::calibrated, g}; }
    static FeedforwardGain minimum_noise() { return {Mode::minimum_noise, 0.0}; }
};

struct QuadratureGains {
    FeedforwardGain h_plus;
    FeedforwardGain h_minus;
    FeedforwardGain v_plus;
    FeedforwardGain v_minus;
};

/// Classical modulation variances on the four input quadratures.
struct InputSignal {
    double h_plus = 1.0;
    double h_minus = 1.0;
    double v_plus = 1.0;
    double v_minus = 1.0;
};

struct ProtocolParams {
    Scheme scheme = Scheme::twin;
    /// Squeezed-quadrature variance of the beams forming each EPR pair, in (0, 1].
    double v_sq = 1.0;
    /// Squeezed-quadrature variance of the third (and, for optimized-twin, fourth) beam.
    double v_sq3 = 1.0;
    Quadrature sq3_quadrature = Quadrature::amplitude;
    double eps1 = 0.5;
    double eps2 = 0.5;
    Polarity polarity = Polarity::positive;
    QuadratureGains gains;
    InputSignal signal;

    static ProtocolParams twin(double v_sq);
    static ProtocolParams sqd(double v_sq, double v_sq3);
    static ProtocolParams bet(double v_sq, double v_sq3, double eps1, double eps2,
                              Quadrature sq3 = Quadrature::phase, Polarity polarity = Polarity::positive);
    static ProtocolParams optimized_twin(double v, double eps1, double eps2,
                                         Quadrature sq3 = Quadrature::phase, Polarity polarity = Polarity::positive);

    /// Throws std::invalid_argument on out-of-range values for the scheme.
    void validate() const;
};

/// Carrier configuration of the coherent input polarisation state.
struct InputSpec {
    double alpha_h = 0.0;
    double alpha_v = 100.0;
    double theta = 0.0;
};

struct QuadratureRecord {
    std::string_view name;
    std::size_t mode = 0;
    Quadrature quadrature = Quadrature::amplitude;
    bool information = true;

    double output_variance = 0.0;
    /// Output variance with the input signal switched off.
    double output_noise_variance = 0.0;
    double output_signal_variance = 0.0;
    double input_noise_variance = 0.0;
    double input_signal_variance = 0.0;
    /// Covariance between the signal-free input and output quadratures.
    double noise_covariance = 0.0;
    double signal_gain = 0.0;
};

/// Result of one teleportation run. Input and output share one source
/// registry, so every input/output moment stays computable.
struct TeleportOutcome {
    std::optional<Scheme> scheme;
    std::shared_ptr<const SourceRegistry> registry;
    std::vector<OpticalMode> inputs;
    std::vector<OpticalMode> outputs;
    std::optional<PolarizationState> input_state;
    std::optional<PolarizationState> output_state;
    /// Two records per mode, (plus, minus), modes in order H, V.
    std::vector<QuadratureRecord> records;

    std::size_t mode_count() const { return outputs.size(); }
    const QuadratureRecord& record(std::size_t mode, Quadrature q) const;
};

/// Builds the raw feedforward gain for `gain` given the input quadrature, the
/// quadrature that will be modulated and the detected photocurrent.
double resolve_gain(const SourceRegistry& registry, const FeedforwardGain& gain, const FluctuationVector& input,
                    const FluctuationVector& target, const Photocurrent& current);

/// Standard quadrature teleporter: input and EPR beam 1 on a 50/50
/// beamsplitter, amplitude and phase homodyne, feedforward onto EPR beam 2.
OpticalMode quadrature_teleport(SourceRegistry& registry, const OpticalMode& input, double v_sq,
                                const FeedforwardGain& plus = FeedforwardGain::unity(),
                                const FeedforwardGain& minus = FeedforwardGain::unity());

/// Single-mode teleportation of a coherent input with the given signal.
TeleportOutcome teleport_single_mode(double v_sq, const FeedforwardGain& plus, const FeedforwardGain& minus,
                                     SignalVariances signal = {1.0, 1.0});

/// Builds a fresh registry holding the coherent input state of `params`.
std::pair<std::shared_ptr<SourceRegistry>, PolarizationState> prepare_input(const ProtocolParams& params,
                                                                            const InputSpec& input);

TeleportOutcome twin_teleport(std::shared_ptr<SourceRegistry> registry, const PolarizationState& input,
                              const ProtocolParams& params);
TeleportOutcome sqd_teleport(std::shared_ptr<SourceRegistry> registry, const PolarizationState& input,
                             const ProtocolParams& params);
TeleportOutcome bet_teleport(std::shared_ptr<SourceRegistry> registry, const PolarizationState& input,
                             const ProtocolParams& params);
TeleportOutcome optimized_twin_teleport(std::shared_ptr<SourceRegistry> registry, const PolarizationState& input,
                                        const ProtocolParams& params);

/// Prepares the input and dispatches on params.scheme.
TeleportOutcome run_protocol(const ProtocolParams& params, const InputSpec& input = {});

}  // namespace poltel
