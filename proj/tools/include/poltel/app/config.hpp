#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "poltel/metrics.hpp"
#include "poltel/protocols.hpp"

namespace poltel::app {

enum class OutputFormat { csv, json };

/// Everything a run depends on. A run is reproducible from its config alone.
struct RunConfig {
    Scheme scheme = Scheme::twin;
    /// Squeezing grid (V_SQ values) for sweeps and loci.
    std::vector<double> grid{1.0, 0.5, 0.1};
    /// Single V_SQ for tv / optimize; empty means "use the grid".
    std::optional<double> vsq;
    /// Third-beam squeezing; empty ties it to V_SQ.
    std::optional<double> vsq3;
    double eps1 = 0.5;
    double eps2 = 0.5;
    std::vector<double> gains{0.0, 0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 2.0, 3.0};
    GainTarget gain_target = GainTarget::all;
    OutputFormat format = OutputFormat::csv;
    std::string out;
    bool strict = false;
    double strict_tolerance = 1e-9;
    unsigned parallel = 1;
    std::uint64_t seed = 20031;

    // stokes
    double alpha_h = 0.0;
    double alpha_v = 10.0;
    double theta = 0.0;
    std::optional<std::pair<Quadrature, double>> h_squeeze;
    std::optional<std::pair<Quadrature, double>> v_squeeze;
    SignalVariances h_signal{};
    SignalVariances v_signal{};

    /// Applies one `key = value` setting. Keys match the long CLI flags.
    /// Throws std::invalid_argument on unknown keys or malformed values.
    void set(std::string_view key, std::string_view value);

    /// Canonical `key = value` serialization; parse(serialize()) round-trips.
    std::string serialize() const;
};

/// Reads `key = value` lines; '#' starts a comment.
void load_config(std::istream& in, RunConfig& config);
void load_config_file(const std::string& path, RunConfig& config);

/// A squeezing variance, given either directly (0 < V <= 1) or in dB ("3dB" -> 10^-0.3).
double parse_squeezing(std::string_view text);

/// Comma list ("1,0.5,3dB"), or lin:a:b:n / log:a:b:n.
std::vector<double> parse_grid(std::string_view text, bool squeezing);

/// "plus:0.5" or "minus:0.5".
std::pair<Quadrature, double> parse_squeeze_spec(std::string_view text);

GainTarget parse_gain_target(std::string_view text);

}  // namespace poltel::app
