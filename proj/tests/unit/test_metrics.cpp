#include <cmath>

#include <gtest/gtest.h>

#include "poltel/metrics.hpp"

using namespace poltel;

TEST(metrics, fidelity_formula) {
    EXPECT_DOUBLE_EQ(fidelity_unity_gain(1.0, 1.0), 1.0);
    EXPECT_DOUBLE_EQ(fidelity_unity_gain(3.0, 3.0), 0.5);
}

TEST(metrics, fidelity_requires_unity_gain) {
    auto p = ProtocolParams::twin(0.5);
    p.gains.h_plus = FeedforwardGain::calibrated(0.8);
    EXPECT_THROW(polarization_fidelity(run_protocol(p)), std::domain_error);
}

TEST(metrics, classical_limits) {
    EXPECT_DOUBLE_EQ(classical_fidelity_limit(run_protocol(ProtocolParams::twin(1.0))), 0.25);
    EXPECT_DOUBLE_EQ(classical_fidelity_limit(run_protocol(ProtocolParams::sqd(1.0, 1.0))), 1.0 / std::sqrt(6.0));
    const auto single = teleport_single_mode(1.0, FeedforwardGain::unity(), FeedforwardGain::unity());
    EXPECT_DOUBLE_EQ(classical_fidelity_limit(single), 0.5);
    EXPECT_NEAR(polarization_fidelity(single).total, 0.5, 1e-12);
}

TEST(metrics, single_mode_tv_classical_point) {
    const auto o = teleport_single_mode(1.0, FeedforwardGain::unity(), FeedforwardGain::unity());
    EXPECT_NEAR(transfer_coefficients(o).total, 2.0 / 3.0, 1e-12);
    EXPECT_NEAR(conditional_variances(o).average, 2.0, 1e-12);
}

TEST(metrics, twin_tv_points) {
    const auto classical = run_protocol(ProtocolParams::twin(1.0));
    EXPECT_NEAR(transfer_coefficients(classical).total, 4.0 / 3.0, 1e-12);
    EXPECT_NEAR(conditional_variances(classical).average, 2.0, 1e-12);

    const auto squeezed = run_protocol(ProtocolParams::twin(0.1));
    EXPECT_NEAR(transfer_coefficients(squeezed).total, 10.0 / 3.0, 1e-12);
    EXPECT_NEAR(conditional_variances(squeezed).average, 0.2, 1e-12);

    const auto ideal = run_protocol(ProtocolParams::twin(1e-6));
    EXPECT_GE(transfer_coefficients(ideal).total, 3.99);
    EXPECT_LE(conditional_variances(ideal).average, 0.01);
}

TEST(metrics, gaussian_identity_per_quadrature) {
    for (double g : {0.3, 1.0, 2.5}) {
        auto p = ProtocolParams::bet(0.4, 0.3, 0.3, 0.6);
        p.gains.h_plus = FeedforwardGain::calibrated(g);
        p.gains.v_plus = FeedforwardGain::calibrated(1.0 / g);
        const auto o = run_protocol(p);
        for (const auto& r : o.records) {
            EXPECT_NEAR(conditional_variance(r), r.output_noise_variance * (1.0 - transfer_coefficient(r)), 1e-12);
        }
    }
}

TEST(metrics, transfer_needs_signal) {
    QuadratureRecord r;
    r.input_noise_variance = 1.0;
    r.output_noise_variance = 2.0;
    EXPECT_THROW(transfer_coefficient(r), std::invalid_argument);
}

TEST(metrics, sqd_conditional_variance_independent_of_gain) {
    for (double v3 : {0.1, 0.5, 1.0}) {
        double first = -1.0;
        for (double g = 0.1; g <= 100.0; g *= 1.5) {
            auto p = ProtocolParams::sqd(0.5, v3);
            p.gains.v_plus = FeedforwardGain::calibrated(g);
            const auto& r = run_protocol(p).record(1, Quadrature::amplitude);
            if (first < 0) first = conditional_variance(r);
            EXPECT_NEAR(conditional_variance(r), first, 1e-9);
            EXPECT_NEAR(conditional_variance(r), v3, 1e-9);
            EXPECT_NEAR(transfer_coefficient(r), g * g / (g * g + v3), 1e-12);
        }
    }
}

TEST(metrics, sqd_ideal_large_gain_endpoint) {
    auto p = ProtocolParams::sqd(1e-6, 1e-6);
    p.gains.v_plus = FeedforwardGain::calibrated(1e3);
    const auto o = run_protocol(p);
    EXPECT_GE(transfer_coefficients(o).total, 2.99);
    EXPECT_LE(conditional_variances(o).average, 0.01);
}

TEST(metrics, counting_rules) {
    const auto twin = run_protocol(ProtocolParams::twin(0.5));
    EXPECT_EQ(transfer_coefficients(twin).per_quadrature.size(), 4u);
    const auto sqd = run_protocol(ProtocolParams::sqd(0.5, 0.5));
    const auto& vminus = sqd.record(1, Quadrature::phase);
    EXPECT_FALSE(vminus.information);
    EXPECT_FALSE(counts_for_tv(sqd, vminus, {}));
    EXPECT_TRUE(counts_for_tv(sqd, vminus, {.unity_tolerance = 1e-6, .include_v_minus = true}));
    EXPECT_DOUBLE_EQ(transfer_coefficients(sqd).per_quadrature[3], 0.0);
}

TEST(metrics, tv_trajectory_and_locus) {
    const auto traj = tv_trajectory(ProtocolParams::twin(1.0), {0.0, 0.5, 1.0, 2.0});
    ASSERT_EQ(traj.size(), 4u);
    EXPECT_NEAR(traj[2].tq, 4.0 / 3.0, 1e-12);
    EXPECT_NEAR(traj[2].vcv, 2.0, 1e-12);
    EXPECT_DOUBLE_EQ(traj[3].gain, 2.0);
    EXPECT_THROW(tv_trajectory(ProtocolParams::twin(1.0), {1.0, 0.5, 2.0}), std::invalid_argument);

    const auto locus = unity_gain_locus(ProtocolParams::twin(1.0), {1.0, 0.1});
    EXPECT_NEAR(locus[1].tq, 10.0 / 3.0, 1e-12);
    EXPECT_NEAR(locus[1].vcv, 0.2, 1e-12);

    // Vertical-only target leaves the teleported H arm at unity.
    const auto vert = tv_trajectory(ProtocolParams::sqd(1e-6, 1e-6), {1.0, 10.0, 1000.0}, GainTarget::vertical);
    EXPECT_GE(vert.back().tq, 2.99);
}
