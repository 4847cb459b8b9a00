#include "poltel/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "poltel/closed_form.hpp"
#include "poltel/metrics.hpp"
#include "poltel/parallel.hpp"

namespace poltel {

namespace {

constexpr double kWorst = std::numeric_limits<double>::infinity();

using Point = std::vector<double>;

/// Wraps the objective as a bounded minimization of -f.
class Evaluator {
public:
    explicit Evaluator(const OptimizationProblem& problem) : problem_(problem) {}

    Point clamp(Point x) const {
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] = std::clamp(x[i], problem_.parameters[i].lower, problem_.parameters[i].upper);
        }
        return x;
    }

    double cost(const Point& x) {
        ++evaluations;
        const double f = problem_.objective(x);
        if (problem_.keep_trace) {
            trace.push_back({x, f});
        }
        return std::isfinite(f) ? -f : kWorst;
    }

    bool exhausted() const { return evaluations >= problem_.max_evaluations; }

    std::size_t evaluations = 0;
    std::vector<TracePoint> trace;

private:
    const OptimizationProblem& problem_;
};

struct Vertex {
    Point x;
    double cost = kWorst;
};

double diameter(const std::vector<Vertex>& simplex) {
    double d = 0.0;
    for (std::size_t i = 1; i < simplex.size(); ++i) {
        for (std::size_t k = 0; k < simplex[i].x.size(); ++k) {
            d = std::max(d, std::abs(simplex[i].x[k] - simplex[0].x[k]));
        }
    }
    return d;
}

Vertex nelder_mead(Evaluator& eval, Vertex start, const std::vector<double>& steps, double tolerance,
                   double min_size) {
    const std::size_t n = start.x.size();
    std::vector<Vertex> simplex{start};
    for (std::size_t i = 0; i < n; ++i) {
        Point x = start.x;
        x[i] += steps[i];
        x = eval.clamp(x);
        if (x[i] == start.x[i]) {
            x[i] = start.x[i] - steps[i];
            x = eval.clamp(x);
        }
        simplex.push_back({x, eval.cost(x)});
    }

    auto by_cost = [](const Vertex& a, const Vertex& b) { return a.cost < b.cost; };
    auto blend = [&](const Point& from, const Point& to, double t) {
        Point x(n);
        for (std::size_t k = 0; k < n; ++k) {
            x[k] = from[k] + t * (to[k] - from[k]);
        }
        return eval.clamp(x);
    };

    while (!eval.exhausted()) {
        std::stable_sort(simplex.begin(), simplex.end(), by_cost);
        const double spread = simplex.back().cost - simplex.front().cost;
        if (spread <= tolerance && diameter(simplex) <= min_size) {
            break;
        }
        if (diameter(simplex) <= 1e-14) {
            break;
        }

        Point centroid(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                centroid[k] += simplex[i].x[k] / static_cast<double>(n);
            }
        }
        auto& worst = simplex.back();

        const Point xr = blend(worst.x, centroid, 2.0);
        const double fr = eval.cost(xr);
        if (fr < simplex.front().cost) {
            const Point xe = blend(worst.x, centroid, 3.0);
            const double fe = eval.cost(xe);
            worst = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
            continue;
        }
        if (fr < simplex[n - 1].cost) {
            worst = {xr, fr};
            continue;
        }
        const bool outside = fr < worst.cost;
        const Point xc = outside ? blend(worst.x, centroid, 1.5) : blend(worst.x, centroid, 0.5);
        const double fc = eval.cost(xc);
        if (fc < std::min(fr, worst.cost)) {
            worst = {xc, fc};
            continue;
        }
        for (std::size_t i = 1; i <= n; ++i) {
            simplex[i].x = blend(simplex[0].x, simplex[i].x, 0.5);
            simplex[i].cost = eval.cost(simplex[i].x);
        }
    }
    return *std::min_element(simplex.begin(), simplex.end(), by_cost);
}

std::vector<Point> grid_points(const OptimizationProblem& problem) {
    const std::size_t dims = problem.parameters.size();
    const std::size_t per_dim = std::max<std::size_t>(problem.grid_points, 2);
    std::size_t total = 1;
    for (std::size_t d = 0; d < dims; ++d) {
        total *= per_dim;
    }
    std::vector<Point> points;
    points.reserve(total + problem.reference_points.size());
    for (std::size_t index = 0; index < total; ++index) {
        Point x(dims);
        std::size_t rest = index;
        for (std::size_t d = 0; d < dims; ++d) {
            const auto& p = problem.parameters[d];
            const std::size_t k = rest % per_dim;
            rest /= per_dim;
            x[d] = p.lower + (p.upper - p.lower) * static_cast<double>(k) / static_cast<double>(per_dim - 1);
        }
        points.push_back(std::move(x));
    }
    for (const auto& ref : problem.reference_points) {
        if (ref.size() != dims) {
            throw std::invalid_argument("reference point has the wrong dimension");
        }
        points.push_back(ref);
    }
    return points;
}

}  // namespace

OptimizationResult maximize(const OptimizationProblem& problem) {
    if (!problem.objective) {
        throw std::invalid_argument("optimization problem has no objective");
    }
    for (const auto& p : problem.parameters) {
        if (!std::isfinite(p.lower) || !std::isfinite(p.upper) || p.lower > p.upper) {
            throw std::invalid_argument("parameter bounds must be finite and ordered: " + p.name);
        }
    }

    Evaluator eval(problem);
    if (problem.parameters.empty()) {
        const double c = eval.cost({});
        if (!std::isfinite(c)) {
            throw std::runtime_error("objective is not finite");
        }
        return {{}, -c, eval.evaluations, std::move(eval.trace)};
    }

    // Seed scan. Values land in grid order so the reduction does not depend
    // on the thread count.
    const auto seeds = grid_points(problem);
    std::vector<double> values(seeds.size());
    parallel_for(seeds.size(), problem.parallelism, [&](std::size_t i) { values[i] = problem.objective(seeds[i]); });
    eval.evaluations += seeds.size();
    if (problem.keep_trace) {
        for (std::size_t i = 0; i < seeds.size(); ++i) {
            eval.trace.push_back({seeds[i], values[i]});
        }
    }

    std::optional<std::size_t> best_seed;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        if (std::isfinite(values[i]) && (!best_seed || values[i] > values[*best_seed])) {
            best_seed = i;
        }
    }
    if (!best_seed) {
        throw std::runtime_error("objective is non-finite over the entire grid");
    }

    Vertex best{seeds[*best_seed], -values[*best_seed]};
    const std::size_t dims = problem.parameters.size();
    std::vector<double> steps(dims);
    double range = 0.0;
    for (std::size_t d = 0; d < dims; ++d) {
        const auto& p = problem.parameters[d];
        steps[d] = (p.upper - p.lower) / static_cast<double>(std::max<std::size_t>(problem.grid_points, 2) - 1);
        range = std::max(range, p.upper - p.lower);
    }
    const double min_size = 1e-9 * std::max(range, 1.0);

    for (int restart = 0; restart < 30 && !eval.exhausted(); ++restart) {
        const Vertex polished = nelder_mead(eval, best, steps, problem.tolerance, min_size);
        const double gain = best.cost - polished.cost;
        if (polished.cost < best.cost) {
            best = polished;
        }
        if (gain <= problem.tolerance) {
            break;
        }
        for (auto& s : steps) {
            s *= 0.5;
        }
    }

    return {best.x, -best.cost, eval.evaluations, std::move(eval.trace)};
}

OptimizationProblem fidelity_problem(const ProtocolParams& base, const SearchOptions& options) {
    if (base.scheme != Scheme::bet && base.scheme != Scheme::optimized_twin) {
        throw std::invalid_argument("fidelity search is defined for bet and optimized-twin");
    }
    OptimizationProblem problem;
    problem.parameters = {{"eps1", 0.0, 1.0}, {"eps2", 0.0, 1.0}};
    problem.grid_points = options.grid_points;
    problem.tolerance = options.tolerance;
    problem.parallelism = options.parallelism;
    // The SQD special case and the balanced twin.
    problem.reference_points = {{1.0, 0.0}, {0.5, 0.5}};
    problem.objective = [base](std::span<const double> x) {
        ProtocolParams p = base;
        p.eps1 = x[0];
        p.eps2 = x[1];
        p.gains.v_plus = FeedforwardGain::unity();
        p.gains.v_minus = FeedforwardGain::minimum_noise();
        try {
            return polarization_fidelity(run_protocol(p)).total;
        } catch (const std::domain_error&) {
            return std::numeric_limits<double>::quiet_NaN();
        }
    };
    return problem;
}

std::vector<RegimeOptimum> optimize_regimes(Scheme scheme, double v_sq, double v_sq3, const SearchOptions& options) {
    std::vector<RegimeOptimum> out;
    for (auto quad : {Quadrature::phase, Quadrature::amplitude}) {
        for (auto polarity : {Polarity::positive, Polarity::negative}) {
            ProtocolParams base = scheme == Scheme::bet
                                      ? ProtocolParams::bet(v_sq, v_sq3, 0.5, 0.5, quad, polarity)
                                      : ProtocolParams::optimized_twin(v_sq, 0.5, 0.5, quad, polarity);
            if (scheme == Scheme::optimized_twin && v_sq3 != v_sq) {
                throw std::invalid_argument("optimized-twin requires V_SQ3 = V_SQ");
            }
            auto search = maximize(fidelity_problem(base, options));
            base.eps1 = search.best_params[0];
            base.eps2 = search.best_params[1];
            out.push_back({quad, polarity, base, search.best_value, std::move(search)});
        }
    }
    return out;
}

const RegimeOptimum& best_of(const std::vector<RegimeOptimum>& regimes) {
    if (regimes.empty()) {
        throw std::invalid_argument("no regimes to choose from");
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < regimes.size(); ++i) {
        if (regimes[i].fidelity > regimes[best].fidelity) {
            best = i;
        }
    }
    return regimes[best];
}

std::optional<double> SweepRow::abs_diff() const {
    if (!closed_form) {
        return std::nullopt;
    }
    return std::abs(fidelity - *closed_form);
}

namespace {

std::string regime_label(Quadrature q, Polarity p) {
    std::string s = q == Quadrature::phase ? "phase" : "amplitude";
    s += p == Polarity::positive ? "/positive" : "/negative";
    return s;
}

std::optional<double> try_closed_form(auto&& fn) {
    try {
        return fn();
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
}

SweepRow sweep_row(Scheme scheme, double v, const SweepOptions& options) {
    SweepRow row;
    row.scheme = scheme;
    row.v_sq = v;
    row.v_sq3 = options.v_sq3.value_or(v);

    switch (scheme) {
        case Scheme::twin: {
            row.v_sq3 = v;
            row.fidelity = polarization_fidelity(run_protocol(ProtocolParams::twin(v))).total;
            row.closed_form = closed_form::twin(v);
            row.regime = "balanced";
            break;
        }
        case Scheme::sqd: {
            row.eps1 = 1.0;
            row.eps2 = 0.0;
            row.fidelity = polarization_fidelity(run_protocol(ProtocolParams::sqd(v, row.v_sq3))).total;
            row.closed_form = closed_form::sqd(v, row.v_sq3);
            row.regime = "direct";
            break;
        }
        case Scheme::bet:
        case Scheme::optimized_twin: {
            if (scheme == Scheme::optimized_twin) {
                row.v_sq3 = v;
            }
            const auto regimes = optimize_regimes(scheme, v, row.v_sq3, options.search);
            const auto& best = best_of(regimes);
            row.eps1 = best.params.eps1;
            row.eps2 = best.params.eps2;
            row.fidelity = best.fidelity;
            row.regime = regime_label(best.sq3_quadrature, best.polarity);
            const double h_factor = 1.0 / (1.0 + v);
            if (best.polarity == Polarity::positive) {
                if (scheme == Scheme::bet) {
                    const double v_plus = best.sq3_quadrature == Quadrature::phase ? 1.0 / row.v_sq3 : row.v_sq3;
                    row.closed_form =
                        try_closed_form([&] { return h_factor * closed_form::bet_best(v_plus, row.eps1, row.eps2); });
                } else if (best.sq3_quadrature == Quadrature::phase) {
                    row.closed_form =
                        try_closed_form([&] { return h_factor * closed_form::four_sq(v, row.eps1, row.eps2); });
                }
            }
            break;
        }
    }
    return row;
}

}  // namespace

std::vector<SweepRow> sweep_fidelity(Scheme scheme, const std::vector<double>& squeezing,
                                     const SweepOptions& options) {
    for (std::size_t i = 1; i < squeezing.size(); ++i) {
        if ((squeezing[i] - squeezing[i - 1]) * (squeezing[1] - squeezing[0]) < 0.0) {
            throw std::invalid_argument("squeezing grid must be monotone");
        }
    }
    std::vector<SweepRow> rows(squeezing.size());
    parallel_for(squeezing.size(), options.parallelism,
                 [&](std::size_t i) { rows[i] = sweep_row(scheme, squeezing[i], options); });
    return rows;
}

}  // namespace poltel
