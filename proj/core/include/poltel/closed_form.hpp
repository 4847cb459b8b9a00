#pragma once

#include <span>
#include <string_view>

// Closed-form fidelity expressions, transcribed term by term. None of these
// touch the simulation path; they serve as independent references.
namespace poltel::closed_form {

/// Twin teleporters with four equally squeezed beams: 1 / (V + 1)^2.
double twin(double v_sq);

/// SQD teleporter: 2 / ((1 + V_SQ) sqrt((V_SQ3 + 2)(1/V_SQ3 + 1))).
double sqd(double v_sq, double v_sq3);

/// Best-regime BET vertical factor A / sqrt(B C). `v_plus` is the
/// amplitude-quadrature variance of the third squeezed beam (1/V- when it is
/// phase squeezed). Throws std::domain_error on a negative radicand.
double bet_best(double v_plus, double eps1, double eps2);

/// Optimized twin vertical factor D / sqrt(M N), all four beams squeezed to `v`.
double four_sq(double v, double eps1, double eps2);

enum class Name { twin, sqd, bet_best, four_sq };

/// Dispatcher: twin(V), sqd(V_SQ, V_SQ3), bet-best(V+, eps1, eps2), four-sq(V, eps1, eps2).
double evaluate(Name name, std::span<const double> args);

Name parse_name(std::string_view name);

}  // namespace poltel::closed_form
