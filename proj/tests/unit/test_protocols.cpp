#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "poltel/closed_form.hpp"
#include "poltel/metrics.hpp"
#include "poltel/protocols.hpp"

using namespace poltel;

namespace {

double fid(const ProtocolParams& p) { return polarization_fidelity(run_protocol(p)).total; }

// Vertical-arm noise variances of the positive-polarity biased arm, written out
// as explicit coefficient sums over (input, SQ3, fourth beam).
std::pair<double, double> biased_arm_oracle(double e1, double e2, double sq3_plus, double sq3_minus, double b_plus,
                                            double b_minus) {
    const double t1 = std::sqrt(e1), r1 = std::sqrt(1 - e1), t2 = std::sqrt(e2), r2 = std::sqrt(1 - e2);
    // amplitude: out = c + g P2, P2 = r2 in - t2 d, c = t1 s + r1 b, d = r1 s - t1 b, g = 1/r2.
    const double g = 1.0 / r2;
    const double cs = t1 - g * t2 * r1;
    const double cb = r1 + g * t2 * t1;
    const double v_plus = 1.0 + cs * cs * sq3_plus + cb * cb * b_plus;
    // phase: out = c + g P1, P1 = t2 in + r2 d, g chosen to minimize the variance.
    const double var_c = e1 * sq3_minus + (1 - e1) * b_minus;
    const double var_p = e2 + (1 - e2) * ((1 - e1) * sq3_minus + e1 * b_minus);
    const double cov = r2 * (t1 * r1 * sq3_minus - r1 * t1 * b_minus);
    const double v_minus = var_c - cov * cov / var_p;
    return {v_plus, v_minus};
}

}  // namespace

TEST(protocols, scheme_names_round_trip) {
    for (auto s : {Scheme::twin, Scheme::sqd, Scheme::bet, Scheme::optimized_twin}) {
        EXPECT_EQ(parse_scheme(to_string(s)), s);
    }
    EXPECT_EQ(to_string(Scheme::optimized_twin), "optimized-twin");
    EXPECT_FALSE(parse_scheme("quad").has_value());
}

TEST(protocols, single_mode_teleporter_penalty) {
    for (double v : {1.0, 0.5, 0.1, 1e-6}) {
        const auto o = teleport_single_mode(v, FeedforwardGain::unity(), FeedforwardGain::unity(), {0.0, 0.0});
        for (const auto& r : o.records) {
            EXPECT_NEAR(r.output_noise_variance, 1.0 + 2.0 * v, 1e-12);
        }
    }
    const auto half = teleport_single_mode(0.5, FeedforwardGain::unity(), FeedforwardGain::unity());
    EXPECT_NEAR(polarization_fidelity(half).total, 2.0 / 3.0, 1e-12);
    for (const auto& r : half.records) EXPECT_NEAR(r.signal_gain, 1.0, 1e-9);
}

TEST(protocols, quadrature_teleport_rejects_bad_squeezing) {
    SourceRegistry reg;
    const auto in = make_mode(reg, ModeSpec::coherent(1.0));
    EXPECT_THROW(quadrature_teleport(reg, in, 0.0), std::invalid_argument);
    EXPECT_THROW(quadrature_teleport(reg, in, 1.2), std::invalid_argument);
}

TEST(protocols, twin_examples) {
    EXPECT_NEAR(fid(ProtocolParams::twin(1.0)), 0.25, 1e-12);
    EXPECT_NEAR(fid(ProtocolParams::twin(0.5)), 4.0 / 9.0, 1e-12);
    for (int i = 1; i <= 50; ++i) {
        const double v = i / 50.0;
        EXPECT_NEAR(fid(ProtocolParams::twin(v)), 1.0 / ((1 + v) * (1 + v)), 1e-9);
    }
}

TEST(protocols, sqd_examples) {
    EXPECT_NEAR(fid(ProtocolParams::sqd(1.0, 1.0)), 1.0 / std::sqrt(6.0), 1e-12);
    EXPECT_NEAR(fid(ProtocolParams::sqd(1e-9, 1.0)), std::sqrt(2.0 / 3.0), 1e-6);
    EXPECT_NEAR(fid(ProtocolParams::sqd(0.5, 0.5)), 0.4869, 1e-4);
    for (double v : {0.05, 0.3, 0.8}) {
        for (double v3 : {0.05, 0.4, 1.0}) {
            EXPECT_NEAR(fid(ProtocolParams::sqd(v, v3)), 2.0 / ((1 + v) * std::sqrt((v3 + 2) * (1 / v3 + 1))), 1e-9);
        }
    }
}

TEST(protocols, sqd_vertical_variances) {
    for (double v3 : {0.1, 0.5, 1.0}) {
        const auto o = run_protocol(ProtocolParams::sqd(0.4, v3));
        EXPECT_NEAR(o.record(1, Quadrature::amplitude).output_noise_variance, v3 + 1.0, 1e-12);
        EXPECT_NEAR(o.record(1, Quadrature::phase).output_noise_variance, 1.0 / v3, 1e-12);
    }
}

TEST(protocols, sqd_and_bet_require_vertical_carrier) {
    ProtocolParams p = ProtocolParams::sqd(0.5, 0.5);
    EXPECT_THROW(run_protocol(p, InputSpec{1.0, 100.0, 0.0}), std::invalid_argument);
    p = ProtocolParams::bet(0.5, 0.5, 0.5, 0.5);
    EXPECT_THROW(run_protocol(p, InputSpec{1.0, 100.0, 0.0}), std::invalid_argument);
    EXPECT_NO_THROW(run_protocol(ProtocolParams::twin(0.5), InputSpec{1.0, 100.0, 0.0}));
}

TEST(protocols, parameter_validation) {
    EXPECT_THROW(ProtocolParams::twin(0.0).validate(), std::invalid_argument);
    EXPECT_THROW(ProtocolParams::sqd(0.5, 1.5).validate(), std::invalid_argument);
    EXPECT_THROW(ProtocolParams::bet(0.5, 0.5, 1.5, 0.5).validate(), std::invalid_argument);
    EXPECT_THROW(ProtocolParams::bet(0.5, 0.5, 0.5, -0.1).validate(), std::invalid_argument);
    auto ot = ProtocolParams::optimized_twin(0.5, 0.5, 0.5);
    ot.v_sq3 = 0.3;
    EXPECT_THROW(ot.validate(), std::invalid_argument);
}

TEST(protocols, bet_reduces_to_sqd) {
    for (double v : {0.1, 0.5, 1.0}) {
        for (double v3 : {0.2, 1.0}) {
            const auto a = run_protocol(ProtocolParams::sqd(v, v3));
            const auto b = run_protocol(ProtocolParams::bet(v, v3, 1.0, 0.0, Quadrature::amplitude));
            ASSERT_EQ(a.records.size(), b.records.size());
            for (std::size_t i = 0; i < a.records.size(); ++i) {
                EXPECT_NEAR(a.records[i].output_variance, b.records[i].output_variance, 1e-12);
                EXPECT_NEAR(a.records[i].output_noise_variance, b.records[i].output_noise_variance, 1e-12);
                EXPECT_NEAR(a.records[i].noise_covariance, b.records[i].noise_covariance, 1e-12);
                EXPECT_NEAR(a.records[i].signal_gain, b.records[i].signal_gain, 1e-12);
            }
        }
    }
}

TEST(protocols, bet_without_squeezing_stays_classical) {
    for (double e1 : {0.0, 0.2, 0.7, 1.0}) {
        for (double e2 : {0.0, 0.1, 0.6}) {
            EXPECT_LE(fid(ProtocolParams::bet(1.0, 1.0, e1, e2)), 1.0 / std::sqrt(6.0) + 1e-12);
        }
    }
    EXPECT_NEAR(fid(ProtocolParams::bet(1.0, 1.0, 1.0, 0.0)), 1.0 / std::sqrt(6.0), 1e-12);
    EXPECT_NEAR(fid(ProtocolParams::bet(1.0, 1.0, 0.3, 0.0)), 1.0 / std::sqrt(6.0), 1e-12);
}

TEST(protocols, bet_vertical_arm_matches_explicit_expansion) {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(0.05, 0.95);
    for (int i = 0; i < 100; ++i) {
        const double v = u(rng), v3 = u(rng), e1 = u(rng), e2 = u(rng);
        const auto o = run_protocol(ProtocolParams::bet(v, v3, e1, e2));
        // Phase-squeezed SQ3, vacuum partner.
        const auto [vp, vm] = biased_arm_oracle(e1, e2, 1.0 / v3, v3, 1.0, 1.0);
        EXPECT_NEAR(o.record(1, Quadrature::amplitude).output_noise_variance, vp, 1e-9);
        EXPECT_NEAR(o.record(1, Quadrature::phase).output_noise_variance, vm, 1e-9);
        EXPECT_NEAR(o.record(1, Quadrature::amplitude).signal_gain, 1.0, 1e-9);
    }
}

TEST(protocols, optimized_twin_vertical_arm_matches_explicit_expansion) {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> u(0.05, 0.95);
    for (int i = 0; i < 100; ++i) {
        const double v = u(rng), e1 = u(rng), e2 = u(rng);
        const auto o = run_protocol(ProtocolParams::optimized_twin(v, e1, e2));
        // SQ3 phase squeezed, fourth beam amplitude squeezed.
        const auto [vp, vm] = biased_arm_oracle(e1, e2, 1.0 / v, v, v, 1.0 / v);
        EXPECT_NEAR(o.record(1, Quadrature::amplitude).output_noise_variance, vp, 1e-9);
        EXPECT_NEAR(o.record(1, Quadrature::phase).output_noise_variance, vm, 1e-9);
        EXPECT_NEAR(o.record(0, Quadrature::amplitude).output_noise_variance, 1.0 + 2.0 * v, 1e-9);
    }
}

TEST(protocols, optimized_twin_balanced_is_twin) {
    for (double v : {1.0, 0.5, 0.1}) {
        auto p = ProtocolParams::optimized_twin(v, 0.5, 0.5);
        p.gains.v_minus = FeedforwardGain::unity();
        const auto a = run_protocol(p);
        const auto b = run_protocol(ProtocolParams::twin(v));
        for (std::size_t i = 0; i < a.records.size(); ++i) {
            EXPECT_NEAR(a.records[i].output_noise_variance, b.records[i].output_noise_variance, 1e-12);
        }
        EXPECT_NEAR(polarization_fidelity(a).total, closed_form::twin(v), 1e-12);
    }
}

TEST(protocols, unity_gain_on_information_quadratures) {
    for (const auto& p : {ProtocolParams::twin(0.3), ProtocolParams::sqd(0.3, 0.6), ProtocolParams::bet(0.3, 0.3, 0.4, 0.2),
                          ProtocolParams::optimized_twin(0.3, 0.4, 0.2)}) {
        const auto o = run_protocol(p);
        for (const auto& r : o.records) {
            if (r.information) EXPECT_NEAR(r.signal_gain, 1.0, 1e-9) << to_string(p.scheme) << ' ' << r.name;
        }
    }
}

TEST(protocols, outcome_bookkeeping) {
    const auto o = run_protocol(ProtocolParams::twin(0.5));
    ASSERT_EQ(o.mode_count(), 2u);
    ASSERT_EQ(o.records.size(), 4u);
    EXPECT_EQ(o.records[0].name, "H+");
    EXPECT_EQ(o.records[3].name, "V-");
    EXPECT_TRUE(o.input_state.has_value());
    EXPECT_TRUE(o.output_state.has_value());
    EXPECT_DOUBLE_EQ(o.output_state->alpha_v(), o.input_state->alpha_v());
    // Input/output share one registry, so cross moments are available.
    EXPECT_NEAR(covariance(o.inputs[1].x_plus, o.outputs[1].x_plus), o.record(1, Quadrature::amplitude).noise_covariance +
                                                                      o.record(1, Quadrature::amplitude).input_signal_variance,
                1e-9);
}

TEST(protocols, calibrated_gain_needs_a_transfer_path) {
    SourceRegistry reg;
    const auto in = make_mode(reg, ModeSpec::coherent(1.0));
    const auto other = make_mode(reg, ModeSpec::vacuum());
    const Photocurrent unrelated{other.x_plus};
    EXPECT_THROW(resolve_gain(reg, FeedforwardGain::unity(), in.x_plus, other.x_plus, unrelated), std::domain_error);
}
