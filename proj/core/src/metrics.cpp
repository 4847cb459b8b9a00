#include "poltel/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace poltel {

double fidelity_unity_gain(double v_plus_out, double v_minus_out) {
    return 2.0 / std::sqrt((v_plus_out + 1.0) * (v_minus_out + 1.0));
}

bool counts_for_tv(const TeleportOutcome& outcome, const QuadratureRecord& record, const MetricOptions& options) {
    if (record.information) {
        return true;
    }
    // Only the vertical phase quadrature is ever optional.
    return options.include_v_minus && outcome.mode_count() == 2 && record.mode == 1 &&
           record.quadrature == Quadrature::phase;
}

double classical_fidelity_limit(const TeleportOutcome& outcome) {
    if (!outcome.scheme) {
        return 0.5;
    }
    return *outcome.scheme == Scheme::twin ? 0.25 : 1.0 / std::sqrt(6.0);
}

FidelityReport polarization_fidelity(const TeleportOutcome& outcome, const MetricOptions& options) {
    for (const auto& r : outcome.records) {
        if (std::abs(r.input_noise_variance - 1.0) > 1e-9) {
            throw std::domain_error("fidelity formula needs a coherent input (V_in = 1)");
        }
        if (r.information && std::abs(r.signal_gain - 1.0) > options.unity_tolerance) {
            throw std::domain_error("fidelity is only defined at unity gain; " + std::string(r.name) +
                                    " has gain " + std::to_string(r.signal_gain));
        }
    }
    FidelityReport report;
    report.total = 1.0;
    for (std::size_t m = 0; m < outcome.mode_count(); ++m) {
        const double f = fidelity_unity_gain(outcome.record(m, Quadrature::amplitude).output_noise_variance,
                                             outcome.record(m, Quadrature::phase).output_noise_variance);
        report.per_mode.push_back(f);
        report.total *= f;
    }
    report.classical_limit = classical_fidelity_limit(outcome);
    return report;
}

double transfer_coefficient(const QuadratureRecord& r) {
    if (!(r.input_signal_variance > 0.0)) {
        throw std::invalid_argument("transfer coefficient needs an input signal on " + std::string(r.name));
    }
    const double snr_in = r.input_signal_variance / r.input_noise_variance;
    const double snr_out = r.output_signal_variance / r.output_noise_variance;
    return snr_out / snr_in;
}

double conditional_variance(const QuadratureRecord& r) {
    return r.output_noise_variance - r.noise_covariance * r.noise_covariance / r.input_noise_variance;
}

TransferReport transfer_coefficients(const TeleportOutcome& outcome, const MetricOptions& options) {
    TransferReport report;
    for (const auto& r : outcome.records) {
        double t = 0.0;
        if (counts_for_tv(outcome, r, options)) {
            t = transfer_coefficient(r);
            report.total += t;
        }
        report.per_quadrature.push_back(t);
    }
    return report;
}

ConditionalVarianceReport conditional_variances(const TeleportOutcome& outcome, const MetricOptions& options) {
    ConditionalVarianceReport report;
    std::size_t counted = 0;
    for (const auto& r : outcome.records) {
        const double vcv = conditional_variance(r);
        report.per_quadrature.push_back(vcv);
        if (counts_for_tv(outcome, r, options)) {
            report.average += vcv;
            ++counted;
        }
    }
    if (counted > 0) {
        report.average /= static_cast<double>(counted);
    }
    return report;
}

namespace {

void check_monotone(const std::vector<double>& values, const char* what) {
    bool increasing = true;
    bool decreasing = true;
    for (std::size_t i = 1; i < values.size(); ++i) {
        increasing = increasing && values[i] >= values[i - 1];
        decreasing = decreasing && values[i] <= values[i - 1];
    }
    if (!increasing && !decreasing) {
        throw std::invalid_argument(std::string(what) + " must be monotone");
    }
}

void set_calibrated(FeedforwardGain& gain, double value) {
    if (gain.mode == FeedforwardGain::Mode::calibrated) {
        gain.value = value;
    }
}

}  // namespace

std::vector<TVPoint> tv_trajectory(const ProtocolParams& base, const std::vector<double>& gains, GainTarget target,
                                   const MetricOptions& options) {
    check_monotone(gains, "gain sweep");
    std::vector<TVPoint> points;
    points.reserve(gains.size());
    for (double g : gains) {
        ProtocolParams p = base;
        if (target != GainTarget::vertical) {
            set_calibrated(p.gains.h_plus, g);
            set_calibrated(p.gains.h_minus, g);
        }
        if (target != GainTarget::horizontal) {
            set_calibrated(p.gains.v_plus, g);
            if (p.scheme == Scheme::twin) {
                set_calibrated(p.gains.v_minus, g);
            }
        }
        const auto outcome = run_protocol(p);
        points.push_back({transfer_coefficients(outcome, options).total,
                          conditional_variances(outcome, options).average, g});
    }
    return points;
}

std::vector<TVPoint> unity_gain_locus(const ProtocolParams& base, const std::vector<double>& squeezing,
                                      const MetricOptions& options) {
    check_monotone(squeezing, "squeezing sweep");
    std::vector<TVPoint> points;
    points.reserve(squeezing.size());
    for (double v : squeezing) {
        ProtocolParams p = base;
        for (auto* g : {&p.gains.h_plus, &p.gains.h_minus, &p.gains.v_plus, &p.gains.v_minus}) {
            set_calibrated(*g, 1.0);
        }
        p.v_sq = v;
        if (p.scheme != Scheme::twin) {
            p.v_sq3 = v;
        }
        const auto outcome = run_protocol(p);
        points.push_back({transfer_coefficients(outcome, options).total,
                          conditional_variances(outcome, options).average, 1.0});
    }
    return points;
}

}  // namespace poltel
