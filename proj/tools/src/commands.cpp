#include "poltel/app/commands.hpp"

#include <stdexcept>

#include "poltel/metrics.hpp"
#include "poltel/optimizer.hpp"
#include "poltel/stokes.hpp"

namespace poltel::app {

namespace {

std::string quadrature_name(Quadrature q) { return q == Quadrature::amplitude ? "amplitude" : "phase"; }

std::string polarity_name(Polarity p) { return p == Polarity::positive ? "positive" : "negative"; }

SearchOptions search_options(const RunConfig& config) {
    SearchOptions s;
    s.parallelism = config.parallel;
    return s;
}

}  // namespace

ProtocolParams make_params(const RunConfig& config, double v_sq) {
    const double v3 = config.vsq3.value_or(v_sq);
    ProtocolParams p;
    switch (config.scheme) {
        case Scheme::twin:
            p = ProtocolParams::twin(v_sq);
            break;
        case Scheme::sqd:
            p = ProtocolParams::sqd(v_sq, v3);
            break;
        case Scheme::bet:
            p = ProtocolParams::bet(v_sq, v3, config.eps1, config.eps2);
            break;
        case Scheme::optimized_twin:
            p = ProtocolParams::optimized_twin(v_sq, config.eps1, config.eps2);
            break;
    }
    p.validate();
    return p;
}

std::vector<double> squeezing_values(const RunConfig& config) {
    if (config.vsq) {
        return {*config.vsq};
    }
    return config.grid;
}

CommandResult run_sweep_fidelity(const RunConfig& config) {
    SweepOptions options;
    options.v_sq3 = config.vsq3;
    options.search = search_options(config);
    options.parallelism = config.parallel;
    const auto rows = sweep_fidelity(config.scheme, squeezing_values(config), options);

    CommandResult result;
    result.table.columns = {"scheme", "V_SQ", "V_SQ3", "eps1", "eps2", "fidelity", "fidelity_closed_form", "abs_diff",
                            "regime"};
    std::size_t mismatches = 0;
    for (const auto& r : rows) {
        const auto diff = r.abs_diff();
        if (diff && *diff > config.strict_tolerance) {
            ++mismatches;
        }
        result.table.add_row({std::string(to_string(r.scheme)), r.v_sq, r.v_sq3, r.eps1, r.eps2, r.fidelity,
                              optional_cell(r.closed_form), optional_cell(diff), r.regime});
    }
    if (mismatches > 0) {
        result.message = std::to_string(mismatches) + " row(s) differ from the closed form by more than " +
                         format_number(config.strict_tolerance);
        if (config.strict) {
            result.exit_code = 1;
        }
    }
    return result;
}

CommandResult run_tv(const RunConfig& config) {
    CommandResult result;
    result.table.columns = {"block", "scheme", "V_SQ", "gain", "T_q", "V_cv"};
    const std::string scheme(to_string(config.scheme));
    for (double v : squeezing_values(config)) {
        for (const auto& pt : tv_trajectory(make_params(config, v), config.gains, config.gain_target)) {
            result.table.add_row({std::string("trajectory"), scheme, v, pt.gain, pt.tq, pt.vcv});
        }
    }
    const auto locus = unity_gain_locus(make_params(config, config.grid.front()), config.grid);
    for (std::size_t i = 0; i < locus.size(); ++i) {
        result.table.add_row({std::string("unity-locus"), scheme, config.grid[i], locus[i].gain, locus[i].tq,
                              locus[i].vcv});
    }
    return result;
}

CommandResult run_optimize(const RunConfig& config) {
    CommandResult result;
    result.table.columns = {"scheme",   "V_SQ",       "V_SQ3",      "sq3_quadrature", "polarity", "eps1",
                            "eps2",     "fidelity",   "V_plus_out", "V_minus_out",    "evaluations", "best"};
    const std::string scheme(to_string(config.scheme));
    for (double v : squeezing_values(config)) {
        const double v3 = config.vsq3.value_or(v);
        if (config.scheme == Scheme::twin || config.scheme == Scheme::sqd) {
            const auto outcome = run_protocol(make_params(config, v));
            const auto f = polarization_fidelity(outcome);
            result.table.add_row({scheme, v, config.scheme == Scheme::twin ? v : v3, std::monostate{},
                                  std::monostate{}, std::monostate{}, std::monostate{}, f.total,
                                  outcome.record(1, Quadrature::amplitude).output_noise_variance,
                                  outcome.record(1, Quadrature::phase).output_noise_variance, 1LL, 1LL});
            continue;
        }
        const auto regimes = optimize_regimes(config.scheme, v, v3, search_options(config));
        const auto& best = best_of(regimes);
        for (const auto& r : regimes) {
            const auto outcome = run_protocol(r.params);
            result.table.add_row({scheme, v, r.params.v_sq3, quadrature_name(r.sq3_quadrature),
                                  polarity_name(r.polarity), r.params.eps1, r.params.eps2, r.fidelity,
                                  outcome.record(1, Quadrature::amplitude).output_noise_variance,
                                  outcome.record(1, Quadrature::phase).output_noise_variance,
                                  static_cast<long long>(r.search.evaluations), &r == &best ? 1LL : 0LL});
        }
    }
    return result;
}

PolarizationState make_stokes_state(SourceRegistry& registry, const RunConfig& config) {
    auto spec = [](double alpha, const std::optional<std::pair<Quadrature, double>>& squeeze,
                   SignalVariances signal) {
        ModeSpec s = squeeze ? ModeSpec::squeezed(squeeze->second, squeeze->first, alpha) : ModeSpec::coherent(alpha);
        if (signal.plus > 0.0 || signal.minus > 0.0) {
            s = s.with_signal(signal.plus, signal.minus);
        }
        return s;
    };
    PolarizationState state;
    state.h = make_mode(registry, spec(config.alpha_h, config.h_squeeze, config.h_signal));
    state.v = make_mode(registry, spec(config.alpha_v, config.v_squeeze, config.v_signal));
    state.theta = config.theta;
    return state;
}

CommandResult run_stokes(const RunConfig& config) {
    SourceRegistry registry;
    const auto state = make_stokes_state(registry, config);
    const auto stats = stokes_statistics(state);

    CommandResult result;
    result.table.columns = {"quantity", "value"};
    for (int i = 0; i < 4; ++i) {
        result.table.add_row({"S" + std::to_string(i), stats.means[static_cast<std::size_t>(i)]});
    }
    for (int i = 1; i < 4; ++i) {
        result.table.add_row({"V_S" + std::to_string(i), stats.variances[static_cast<std::size_t>(i)]});
    }
    result.table.add_row({std::string("poincare_radius"), stats.poincare_radius});
    bool violated = false;
    for (const auto& m : uncertainty_check(stats)) {
        result.table.add_row({"margin_V" + std::to_string(m.l) + "V" + std::to_string(m.m) + "_S" + std::to_string(m.n),
                              m.margin});
        violated = violated || m.violated;
    }
    result.table.add_row({std::string("linearized"), stats.linearized ? 1LL : 0LL});
    if (!stats.linearized) {
        result.message = "warning: total photon number below the linearization threshold";
    }
    if (violated) {
        result.message = "uncertainty relation violated";
        result.exit_code = 1;
    }
    return result;
}

}  // namespace poltel::app
