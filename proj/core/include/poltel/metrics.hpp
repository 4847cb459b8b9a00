#pragma once

#include <vector>

#include "poltel/protocols.hpp"

namespace poltel {

/// Gaussian fidelity for a coherent input at unity gain:
/// F = 2 / sqrt((V+ + 1)(V- + 1)).
double fidelity_unity_gain(double v_plus_out, double v_minus_out);

struct FidelityReport {
    double total = 0.0;
    /// One factor per reconstructed mode (H, V for polarisation outcomes).
    std::vector<double> per_mode;
    double classical_limit = 0.0;
};

struct MetricOptions {
    /// Tolerance on the achieved signal gain of information quadratures.
    double unity_tolerance = 1e-6;
    /// Include the vertical phase quadrature in SQD/BET/optimized-twin T-V sums.
    bool include_v_minus = false;
};

/// Throws std::domain_error if any information quadrature misses unity gain
/// or the input is not coherent.
FidelityReport polarization_fidelity(const TeleportOutcome& outcome, const MetricOptions& options = {});

/// Classical fidelity bound that applies to the scheme.
double classical_fidelity_limit(const TeleportOutcome& outcome);

/// SNR_out / SNR_in for one quadrature. Throws std::invalid_argument without input signal.
double transfer_coefficient(const QuadratureRecord& record);

/// V_out - <dX_in dX_out>^2 / V_in on the signal-free parts of one quadrature.
double conditional_variance(const QuadratureRecord& record);

struct TransferReport {
    /// T per record, aligned with outcome.records; zero for quadratures
    /// outside the information set.
    std::vector<double> per_quadrature;
    double total = 0.0;
};

/// T = SNR_out / SNR_in per information quadrature, summed into T_q.
/// Throws std::invalid_argument when an information quadrature has no input signal.
TransferReport transfer_coefficients(const TeleportOutcome& outcome, const MetricOptions& options = {});

struct ConditionalVarianceReport {
    std::vector<double> per_quadrature;
    /// Mean over the information quadratures (1/4 twin, 1/3 SQD/BET).
    double average = 0.0;
};

/// V_cv = V_out - <dX_in dX_out>^2 / V_in, with signals switched off.
ConditionalVarianceReport conditional_variances(const TeleportOutcome& outcome, const MetricOptions& options = {});

/// Quadratures counted by the T-V figures for this outcome.
bool counts_for_tv(const TeleportOutcome& outcome, const QuadratureRecord& record, const MetricOptions& options);

struct TVPoint {
    double tq = 0.0;
    double vcv = 0.0;
    double gain = 0.0;
};

/// Which feedforward gains a sweep drives.
enum class GainTarget { all, horizontal, vertical };

/// Runs `base` once per gain, replacing the targeted calibrated gains.
/// Minimum-noise gains are left untouched. The sweep must be monotone.
std::vector<TVPoint> tv_trajectory(const ProtocolParams& base, const std::vector<double>& gains,
                                   GainTarget target = GainTarget::all, const MetricOptions& options = {});

/// Unity-gain (T_q, V_cv) points across a squeezing sweep. For SQD and BET the
/// third beam follows the EPR squeezing (V_SQ3 = V_SQ).
std::vector<TVPoint> unity_gain_locus(const ProtocolParams& base, const std::vector<double>& squeezing,
                                      const MetricOptions& options = {});

}  // namespace poltel
