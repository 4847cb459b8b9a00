#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "poltel/protocols.hpp"

namespace poltel {

struct Parameter {
    std::string name;
    double lower = 0.0;
    double upper = 1.0;
};

/// Returns the value to maximize. Non-finite values mark infeasible points.
using Objective = std::function<double(std::span<const double>)>;

struct OptimizationProblem {
    Objective objective;
    std::vector<Parameter> parameters;
    std::size_t grid_points = 33;
    /// Convergence tolerance on the objective for the simplex polish.
    double tolerance = 1e-8;
    std::size_t max_evaluations = 20000;
    /// Extra seed points evaluated alongside the grid (e.g. known special cases).
    std::vector<std::vector<double>> reference_points;
    bool keep_trace = false;
    unsigned parallelism = 1;
};

struct TracePoint {
    std::vector<double> params;
    double value = 0.0;
};

struct OptimizationResult {
    std::vector<double> best_params;
    double best_value = 0.0;
    std::size_t evaluations = 0;
    std::vector<TracePoint> trace;
};

/// Coarse grid scan followed by a bounded Nelder-Mead polish from the best
/// seed. Deterministic for a fixed problem, independent of parallelism.
/// Throws std::runtime_error if the objective is non-finite on every seed.
OptimizationResult maximize(const OptimizationProblem& problem);

struct SearchOptions {
    std::size_t grid_points = 33;
    double tolerance = 1e-8;
    unsigned parallelism = 1;
};

/// Fidelity-maximization problem over (eps1, eps2) for a BET or optimized-twin
/// configuration. g+ is held at unity and g- at its minimum-noise value.
OptimizationProblem fidelity_problem(const ProtocolParams& base, const SearchOptions& options = {});

struct RegimeOptimum {
    Quadrature sq3_quadrature = Quadrature::phase;
    Polarity polarity = Polarity::positive;
    ProtocolParams params;
    double fidelity = 0.0;
    OptimizationResult search;
};

/// Optimizes every (squeezed quadrature, polarity) regime, in the order
/// (phase, positive), (phase, negative), (amplitude, positive), (amplitude, negative).
std::vector<RegimeOptimum> optimize_regimes(Scheme scheme, double v_sq, double v_sq3,
                                            const SearchOptions& options = {});

/// Highest-fidelity entry; ties resolve to the earlier regime.
const RegimeOptimum& best_of(const std::vector<RegimeOptimum>& regimes);

struct SweepRow {
    Scheme scheme = Scheme::twin;
    double v_sq = 1.0;
    double v_sq3 = 1.0;
    double eps1 = 0.5;
    double eps2 = 0.5;
    double fidelity = 0.0;
    /// Empty where no closed form covers the selected regime.
    std::optional<double> closed_form;
    std::string regime;

    std::optional<double> abs_diff() const;
};

struct SweepOptions {
    /// Fixed third-beam squeezing; empty ties it to V_SQ.
    std::optional<double> v_sq3;
    SearchOptions search;
    /// Row-level parallelism. Rows are emitted in grid order regardless.
    unsigned parallelism = 1;
};

/// One row per squeezing value. Fixed-parameter schemes (twin, sqd) are
/// evaluated directly; bet and optimized-twin are maximized over all regimes.
std::vector<SweepRow> sweep_fidelity(Scheme scheme, const std::vector<double>& squeezing,
                                     const SweepOptions& options = {});

/// Smallest squeezing variance used to stand in for ideal squeezing.
inline constexpr double kIdealSqueezingFloor = 1e-6;

}  // namespace poltel
