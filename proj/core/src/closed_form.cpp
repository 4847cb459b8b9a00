#include "poltel/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace poltel::closed_form {

namespace {

double checked_sqrt(double radicand, const char* where) {
    if (!(radicand >= 0.0)) {
        throw std::domain_error(std::string("negative radicand in ") + where);
    }
    return std::sqrt(radicand);
}

// numerator_radicand and denominator_radicand may both be negative: the
// printed expressions are then a ratio of two imaginary numbers, which is real.
double real_ratio(double scale, double numerator_radicand, double denominator_radicand, const char* where) {
    const auto num = scale * std::sqrt(std::complex<double>(numerator_radicand, 0.0));
    const auto den = std::sqrt(std::complex<double>(denominator_radicand, 0.0));
    if (std::abs(den) == 0.0) {
        throw std::domain_error(std::string("zero denominator in ") + where);
    }
    const auto ratio = num / den;
    if (std::abs(ratio.imag()) > 1e-12 * std::max(1.0, std::abs(ratio.real()))) {
        throw std::domain_error(std::string("complex value in ") + where);
    }
    return ratio.real();
}

}  // namespace

double twin(double v_sq) { return 1.0 / ((v_sq + 1.0) * (v_sq + 1.0)); }

double sqd(double v_sq, double v_sq3) {
    if (!(v_sq3 > 0.0)) {
        throw std::domain_error("sqd closed form needs V_SQ3 > 0");
    }
    return 2.0 / ((1.0 + v_sq) * checked_sqrt((v_sq3 + 2.0) * (1.0 / v_sq3 + 1.0), "sqd"));
}

double bet_best(double v_plus, double eps1, double eps2) {
    const double e1 = eps1;
    const double e2 = eps2;
    const double v = v_plus;
    const double a_radicand = (e2 - 1.0) * (e2 * (v - 1.0) * (e1 - 1.0) - e1 * (v - 1.0) - 1.0);
    const double b = 2.0 * e2 * (v - 1.0) * (e1 - 1.0) - e1 * (v - 1.0) - 2.0;
    const double c = e2 * (3.0 - 2.0 * e1 + v * (2.0 * e1 - 1.0)) +
                     2.0 * (v - 1.0) * checked_sqrt(e2 * (1.0 - e2) * e1 * (1.0 - e1), "C") - e1 * (v - 1.0) - 3.0;
    return real_ratio(2.0, a_radicand, b * c, "A/sqrt(BC)");
}

double four_sq(double v, double eps1, double eps2) {
    const double e1 = eps1;
    const double e2 = eps2;
    const double d_radicand = v * (e2 - 1.0) * (e2 * (v - 1.0) * (v * (e1 - 1.0) + e1) + v * v * (1.0 - e1) + e1);
    const double m = (1.0 + v) * (e2 * (v - 1.0) * (1.0 - 2.0 * e1) + e1 * (v - 1.0) - v);
    const double n = e2 * (1.0 - 2.0 * v - 2.0 * e1 - v * v * (1.0 - 2.0 * e1)) +
                     (1.0 - v * v) * (e1 - 2.0 * checked_sqrt(e2 * (1.0 - e2) * e1 * (1.0 - e1), "N")) + 2.0 * v +
                     v * v;
    return real_ratio(2.0, d_radicand, m * n, "D/sqrt(MN)");
}

double evaluate(Name name, std::span<const double> args) {
    auto need = [&](std::size_t n) {
        if (args.size() != n) {
            throw std::invalid_argument("closed form expects " + std::to_string(n) + " arguments");
        }
    };
    switch (name) {
        case Name::twin:
            need(1);
            return twin(args[0]);
        case Name::sqd:
            need(2);
            return sqd(args[0], args[1]);
        case Name::bet_best:
            need(3);
            return bet_best(args[0], args[1], args[2]);
        case Name::four_sq:
            need(3);
            return four_sq(args[0], args[1], args[2]);
    }
    throw std::invalid_argument("unknown closed form");
}

Name parse_name(std::string_view name) {
    if (name == "twin") return Name::twin;
    if (name == "sqd") return Name::sqd;
    if (name == "bet-best") return Name::bet_best;
    if (name == "four-sq") return Name::four_sq;
    throw std::invalid_argument("unknown closed form: " + std::string(name));
}

}  // namespace poltel::closed_form
