#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "poltel/fluct.hpp"

using namespace poltel;

TEST(fluct, variance_of_unit_source) {
    SourceRegistry reg;
    const auto pair = reg.new_quantum_pair();
    EXPECT_DOUBLE_EQ(variance(FluctuationVector::unit(pair.x)), 1.0);
    EXPECT_NEAR(variance(FluctuationVector::unit(pair.x, std::sqrt(0.5))), 0.5, 1e-15);
}

TEST(fluct, variance_sum_of_squares_monte_carlo) {
    SourceRegistry reg;
    const auto a = reg.new_quantum_pair();
    const auto b = reg.new_quantum_pair();
    const FluctuationVector v{{a.x, 0.7}, {b.x, 0.5}};
    EXPECT_NEAR(variance(v), 0.74, 1e-15);
    const auto cov = oracle::sample_covariance({v}, reg.size(), 200000, 7);
    EXPECT_NEAR(cov[0][0], 0.74, 0.01);
}

TEST(fluct, covariance_examples) {
    SourceRegistry reg;
    const auto x1 = reg.new_quantum_pair().x;
    const auto x2 = reg.new_quantum_pair().x;
    const FluctuationVector u{{x1, 1.0}, {x2, 0.5}};
    const FluctuationVector v{{x2, 2.0}};
    EXPECT_DOUBLE_EQ(covariance(u, v), 1.0);
    EXPECT_DOUBLE_EQ(covariance(FluctuationVector::unit(x1), FluctuationVector::unit(x2)), 0.0);
    EXPECT_DOUBLE_EQ(covariance(u, u), variance(u));
    const auto sample = oracle::sample_covariance({u, v}, reg.size(), 200000, 11);
    EXPECT_NEAR(sample[0][1], 1.0, 0.02);
}

TEST(fluct, variance_parts_split_quantum_and_classical) {
    SourceRegistry reg;
    const auto q = reg.new_quantum_pair();
    const auto c = reg.new_classical();
    const FluctuationVector v{{q.x, 1.0}, {c, 2.0}};
    const auto parts = variance_parts(reg, v);
    EXPECT_DOUBLE_EQ(parts.quantum, 1.0);
    EXPECT_DOUBLE_EQ(parts.classical, 4.0);
    EXPECT_DOUBLE_EQ(parts.total(), 5.0);
    EXPECT_EQ(v.filtered(reg, SourceKind::classical).terms().size(), 1u);
}

TEST(fluct, linear_algebra_and_zero_dropping) {
    SourceRegistry reg;
    const auto p = reg.new_quantum_pair();
    const FluctuationVector a{{p.x, 1.0}, {p.p, 2.0}};
    const auto d = a - a;
    EXPECT_TRUE(d.empty());
    const auto s = 2.0 * a + (-a);
    EXPECT_DOUBLE_EQ(s.coefficient(p.x), 1.0);
    EXPECT_DOUBLE_EQ(s.coefficient(p.p), 2.0);
    EXPECT_DOUBLE_EQ(s.coefficient(99), 0.0);
}

TEST(fluct, symplectic_product_of_canonical_modes) {
    SourceRegistry reg;
    const auto p = reg.new_quantum_pair();
    const auto x = FluctuationVector::unit(p.x);
    const auto pp = FluctuationVector::unit(p.p);
    EXPECT_DOUBLE_EQ(symplectic_product(reg, x, pp), 1.0);
    EXPECT_DOUBLE_EQ(symplectic_product(reg, std::sqrt(0.1) * x, (1.0 / std::sqrt(0.1)) * pp), 1.0);
    const auto c = reg.new_classical();
    EXPECT_DOUBLE_EQ(symplectic_product(reg, x + FluctuationVector::unit(c, 3.0), pp), 1.0);
    EXPECT_DOUBLE_EQ(symplectic_form(reg, pp, x), -1.0);
}

TEST(fluct, random_vector_properties) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    SourceRegistry reg;
    for (int i = 0; i < 6; ++i) reg.new_quantum_pair();
    for (int i = 0; i < 4; ++i) reg.new_classical();
    auto random_vector = [&] {
        FluctuationVector v;
        for (SourceId id = 0; id < reg.size(); ++id) {
            if (rng() % 2) v += FluctuationVector::unit(id, coef(rng));
        }
        return v;
    };
    for (int t = 0; t < 500; ++t) {
        const auto u = random_vector();
        const auto v = random_vector();
        EXPECT_GE(variance(u), 0.0);
        EXPECT_LE(covariance(u, v) * covariance(u, v), variance(u) * variance(v) + 1e-12);
        EXPECT_NEAR(variance(u + v), variance(u) + variance(v) + 2.0 * covariance(u, v), 1e-12);
    }
}

TEST(fluct, registry_pairs_and_kinds) {
    SourceRegistry reg;
    const auto p = reg.new_quantum_pair();
    const auto c = reg.new_classical();
    EXPECT_TRUE(reg.is_quantum(p.x));
    EXPECT_TRUE(reg.is_quantum(p.p));
    EXPECT_FALSE(reg.is_quantum(c));
    EXPECT_TRUE(reg.source(p.x).is_x);
    EXPECT_FALSE(reg.source(p.p).is_x);
    EXPECT_EQ(reg.source(p.x).pair, reg.source(p.p).pair);
    EXPECT_FALSE(reg.source(c).pair.has_value());
    EXPECT_EQ(reg.pairs().size(), 1u);
}
