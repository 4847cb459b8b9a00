#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "poltel/closed_form.hpp"
#include "poltel/metrics.hpp"
#include "poltel/optimizer.hpp"

using namespace poltel;

TEST(optimizer, smooth_bounded_maximum) {
    OptimizationProblem p;
    p.parameters = {{"x", -1.0, 2.0}, {"y", -1.0, 2.0}};
    p.objective = [](std::span<const double> x) {
        return -(x[0] - 0.3) * (x[0] - 0.3) - 2.0 * (x[1] - 1.1) * (x[1] - 1.1);
    };
    const auto r = maximize(p);
    EXPECT_NEAR(r.best_params[0], 0.3, 1e-4);
    EXPECT_NEAR(r.best_params[1], 1.1, 1e-4);
    EXPECT_NEAR(r.best_value, 0.0, 1e-8);
}

TEST(optimizer, maximum_on_the_boundary) {
    OptimizationProblem p;
    p.parameters = {{"x", 0.0, 1.0}};
    p.objective = [](std::span<const double> x) { return x[0]; };
    const auto r = maximize(p);
    EXPECT_DOUBLE_EQ(r.best_params[0], 1.0);
}

TEST(optimizer, degenerate_problem_single_evaluation) {
    OptimizationProblem p;
    p.objective = [](std::span<const double>) { return closed_form::twin(0.4); };
    const auto r = maximize(p);
    EXPECT_EQ(r.evaluations, 1u);
    EXPECT_DOUBLE_EQ(r.best_value, closed_form::twin(0.4));
}

TEST(optimizer, nonfinite_everywhere_fails) {
    OptimizationProblem p;
    p.parameters = {{"x", 0.0, 1.0}};
    p.objective = [](std::span<const double>) { return std::numeric_limits<double>::quiet_NaN(); };
    EXPECT_THROW(maximize(p), std::runtime_error);
}

TEST(optimizer, dominates_grid_and_reference_points) {
    OptimizationProblem p;
    p.parameters = {{"x", 0.0, 1.0}, {"y", 0.0, 1.0}};
    p.objective = [](std::span<const double> x) { return std::sin(7 * x[0]) * std::cos(5 * x[1]) + x[0] * x[1]; };
    p.reference_points = {{0.123, 0.987}};
    p.keep_trace = true;
    const auto r = maximize(p);
    ASSERT_FALSE(r.trace.empty());
    for (const auto& t : r.trace) EXPECT_LE(t.value, r.best_value);
}

TEST(optimizer, deterministic_across_parallelism) {
    const auto base = ProtocolParams::bet(0.2, 0.2, 0.5, 0.5);
    SearchOptions serial;
    SearchOptions threaded;
    threaded.parallelism = 4;
    const auto a = maximize(fidelity_problem(base, serial));
    const auto b = maximize(fidelity_problem(base, threaded));
    EXPECT_EQ(a.best_value, b.best_value);
    EXPECT_EQ(a.best_params, b.best_params);
    EXPECT_EQ(a.evaluations, b.evaluations);
}

TEST(optimizer, bet_without_third_beam_squeezing) {
    const auto regimes = optimize_regimes(Scheme::bet, kIdealSqueezingFloor, 1.0);
    const auto& best = best_of(regimes);
    EXPECT_NEAR(best.fidelity, std::sqrt(2.0 / 3.0), 1e-4);
}

TEST(optimizer, bet_near_ideal_optimum) {
    const auto regimes = optimize_regimes(Scheme::bet, 1e-4, 1e-4);
    ASSERT_EQ(regimes.size(), 4u);
    EXPECT_NEAR(regimes[0].fidelity, 2.0 * std::sqrt(2.0) / 3.0, 0.005);
    EXPECT_EQ(&best_of(regimes), &regimes[0]);
    EXPECT_EQ(regimes[0].sq3_quadrature, Quadrature::phase);
    EXPECT_EQ(regimes[0].polarity, Polarity::positive);
    int above = 0;
    for (const auto& r : regimes) above += r.fidelity > std::sqrt(2.0 / 3.0) ? 1 : 0;
    EXPECT_EQ(above, 3);
}

TEST(optimizer, reference_point_dominance) {
    for (double v : {0.05, 0.3, 0.7}) {
        const auto regimes = optimize_regimes(Scheme::bet, v, v);
        const double sqd_point = polarization_fidelity(run_protocol(ProtocolParams::sqd(v, v))).total;
        EXPECT_GE(best_of(regimes).fidelity, sqd_point - 1e-12);
    }
}

TEST(optimizer, grid_refinement_consistency) {
    for (double v : {1e-4, 0.1, 0.5}) {
        SearchOptions coarse;
        SearchOptions fine;
        fine.grid_points = 65;
        const double a = best_of(optimize_regimes(Scheme::bet, v, v, coarse)).fidelity;
        const double b = best_of(optimize_regimes(Scheme::bet, v, v, fine)).fidelity;
        EXPECT_LT(std::abs(a - b), 1e-4) << v;
    }
}

TEST(optimizer, optimized_twin_beats_balanced) {
    for (double v : {0.2, 0.5}) {
        const auto best = best_of(optimize_regimes(Scheme::optimized_twin, v, v));
        EXPECT_GE(best.fidelity, closed_form::twin(v) - 1e-12);
    }
}

TEST(optimizer, sweep_rows) {
    const auto twin = sweep_fidelity(Scheme::twin, {1.0, 0.5, 0.1});
    ASSERT_EQ(twin.size(), 3u);
    EXPECT_NEAR(twin[0].fidelity, 0.25, 1e-12);
    EXPECT_NEAR(twin[1].fidelity, 4.0 / 9.0, 1e-12);
    EXPECT_NEAR(twin[2].fidelity, 1.0 / 1.21, 1e-12);
    EXPECT_LE(*twin[2].abs_diff(), 1e-12);

    SweepOptions unsqueezed;
    unsqueezed.v_sq3 = 1.0;
    const auto tied = sweep_fidelity(Scheme::sqd, {0.8, 0.4, 0.1});
    const auto free3 = sweep_fidelity(Scheme::sqd, {0.8, 0.4, 0.1}, unsqueezed);
    for (std::size_t i = 0; i < tied.size(); ++i) EXPECT_LT(tied[i].fidelity, free3[i].fidelity);

    const auto bet = sweep_fidelity(Scheme::bet, {0.8, 0.4, 0.1});
    for (std::size_t i = 0; i < bet.size(); ++i) {
        EXPECT_GE(bet[i].fidelity, free3[i].fidelity);
        ASSERT_TRUE(bet[i].closed_form.has_value());
        EXPECT_LE(*bet[i].abs_diff(), 1e-9);
    }

    SweepOptions threaded;
    threaded.parallelism = 3;
    const auto again = sweep_fidelity(Scheme::bet, {0.8, 0.4, 0.1}, threaded);
    for (std::size_t i = 0; i < bet.size(); ++i) EXPECT_EQ(bet[i].fidelity, again[i].fidelity);
}
