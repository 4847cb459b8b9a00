#pragma once

#include <string>

#include "poltel/app/config.hpp"
#include "poltel/app/table.hpp"

namespace poltel::app {

/// Output of one subcommand: the rendered table plus its exit status.
struct CommandResult {
    Table table;
    int exit_code = 0;
    /// Human-readable note for stderr (e.g. strict-mode mismatches).
    std::string message;
};

/// Base parameters for `scheme` at squeezing `v_sq`, with config overrides applied.
ProtocolParams make_params(const RunConfig& config, double v_sq);

/// V_SQ values a command iterates over: the single --vsq if given, else the grid.
std::vector<double> squeezing_values(const RunConfig& config);

CommandResult run_sweep_fidelity(const RunConfig& config);
CommandResult run_tv(const RunConfig& config);
CommandResult run_optimize(const RunConfig& config);
CommandResult run_stokes(const RunConfig& config);

/// Builds the polarisation state described by the stokes settings.
PolarizationState make_stokes_state(SourceRegistry& registry, const RunConfig& config);

}  // namespace poltel::app
