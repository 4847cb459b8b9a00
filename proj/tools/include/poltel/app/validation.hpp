#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "poltel/app/config.hpp"
#include "poltel/stokes.hpp"

namespace poltel::app {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    /// Measured values backing the verdict.
    std::string detail;
};

/// Comparison that is reported but never decides the exit status.
struct ReportOnly {
    std::string title;
    std::string detail;
};

struct ValidationReport {
    std::vector<CriterionResult> criteria;
    std::vector<ReportOnly> notes;

    bool passed() const;
    std::string text() const;
};

inline constexpr int kCriterionCount = 12;

/// Runs one acceptance criterion (1..12). Randomized criteria draw from config.seed.
CriterionResult run_criterion(int id, const RunConfig& config);

ValidationReport run_validation(const RunConfig& config);

std::vector<ReportOnly> closed_form_agreement();

using BeamsplitterFn = std::function<std::pair<OpticalMode, OpticalMode>(const OpticalMode&, const OpticalMode&, double)>;

struct NetworkCheck {
    std::size_t networks = 0;
    std::size_t operations = 0;
    /// Largest deviation from the canonical commutators over every mode pair.
    double max_deviation = 0.0;
};

/// Random beamsplitter / phase-shift networks over 2..6 modes.
NetworkCheck symplectic_network_check(std::size_t count, std::uint64_t seed, const BeamsplitterFn& beamsplitter);

/// Beamsplitter with the sign of the reflected term flipped on the second port.
/// Preserves every single-mode product, breaks the cross-mode commutators.
std::pair<OpticalMode, OpticalMode> tampered_beamsplitter(const OpticalMode& a, const OpticalMode& b, double eps);

/// Stokes variances by the expanded variance formulas, term by term.
std::array<double, 3> stokes_variances_expanded(const SourceRegistry& registry, const PolarizationState& state);

}  // namespace poltel::app
