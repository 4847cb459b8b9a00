#include "poltel/app/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace poltel::app {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

double parse_double(std::string_view text) {
    text = trim(text);
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    }
    return value;
}

bool parse_bool(std::string_view text) {
    text = trim(text);
    if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
    if (text == "false" || text == "0" || text == "no" || text == "off") return false;
    throw std::invalid_argument("not a boolean: '" + std::string(text) + "'");
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return parts;
}

SignalVariances parse_signal(std::string_view text) {
    const auto parts = split(text, ',');
    if (parts.size() != 2) {
        throw std::invalid_argument("signal must be PLUS,MINUS");
    }
    SignalVariances s{parse_double(parts[0]), parse_double(parts[1])};
    if (s.plus < 0.0 || s.minus < 0.0) {
        throw std::invalid_argument("signal variances must be non-negative");
    }
    return s;
}

std::string format_number(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::string join(const std::vector<double>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) s += ',';
        s += format_number(values[i]);
    }
    return s;
}

std::string squeeze_text(const std::optional<std::pair<Quadrature, double>>& spec) {
    if (!spec) return "none";
    return std::string(spec->first == Quadrature::amplitude ? "plus:" : "minus:") + format_number(spec->second);
}

}  // namespace

double parse_squeezing(std::string_view text) {
    text = trim(text);
    double v = 0.0;
    if (text.size() > 2 && (text.ends_with("dB") || text.ends_with("db"))) {
        const double db = parse_double(text.substr(0, text.size() - 2));
        v = std::pow(10.0, -db / 10.0);
    } else {
        v = parse_double(text);
    }
    if (!(v > 0.0 && v <= 1.0)) {
        throw std::invalid_argument("squeezing variance must lie in (0, 1]: '" + std::string(text) + "'");
    }
    return v;
}

std::vector<double> parse_grid(std::string_view text, bool squeezing) {
    text = trim(text);
    std::vector<double> values;
    if (text.starts_with("lin:") || text.starts_with("log:")) {
        const auto parts = split(text.substr(4), ':');
        if (parts.size() != 3) {
            throw std::invalid_argument("range grid must be lin:a:b:n or log:a:b:n");
        }
        const double a = squeezing ? parse_squeezing(parts[0]) : parse_double(parts[0]);
        const double b = squeezing ? parse_squeezing(parts[1]) : parse_double(parts[1]);
        const double count = parse_double(parts[2]);
        if (count < 1 || count != std::floor(count)) {
            throw std::invalid_argument("grid point count must be a positive integer");
        }
        const auto n = static_cast<std::size_t>(count);
        const bool logarithmic = text.starts_with("log:");
        if (logarithmic && !(a > 0.0 && b > 0.0)) {
            throw std::invalid_argument("log grid needs positive endpoints");
        }
        for (std::size_t i = 0; i < n; ++i) {
            const double t = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
            values.push_back(logarithmic ? std::exp(std::log(a) + t * (std::log(b) - std::log(a))) : a + t * (b - a));
        }
    } else {
        for (auto part : split(text, ',')) {
            values.push_back(squeezing ? parse_squeezing(part) : parse_double(part));
        }
    }
    if (values.empty()) {
        throw std::invalid_argument("empty grid");
    }
    return values;
}

std::pair<Quadrature, double> parse_squeeze_spec(std::string_view text) {
    const auto parts = split(text, ':');
    if (parts.size() != 2) {
        throw std::invalid_argument("squeeze spec must be plus:V or minus:V");
    }
    Quadrature q;
    if (parts[0] == "plus") {
        q = Quadrature::amplitude;
    } else if (parts[0] == "minus") {
        q = Quadrature::phase;
    } else {
        throw std::invalid_argument("squeezed quadrature must be plus or minus");
    }
    const double v = parse_double(parts[1]);
    if (!(v > 0.0)) {
        throw std::invalid_argument("squeezed variance must be positive");
    }
    return {q, v};
}

GainTarget parse_gain_target(std::string_view text) {
    text = trim(text);
    if (text == "all") return GainTarget::all;
    if (text == "horizontal") return GainTarget::horizontal;
    if (text == "vertical") return GainTarget::vertical;
    throw std::invalid_argument("gain target must be all, horizontal or vertical");
}

void RunConfig::set(std::string_view key, std::string_view value) {
    key = trim(key);
    value = trim(value);
    if (key == "scheme") {
        const auto s = parse_scheme(value);
        if (!s) throw std::invalid_argument("unknown scheme '" + std::string(value) + "'");
        scheme = *s;
    } else if (key == "grid") {
        grid = parse_grid(value, true);
    } else if (key == "vsq") {
        vsq = parse_squeezing(value);
    } else if (key == "vsq3") {
        if (value == "tied") {
            vsq3.reset();
        } else {
            vsq3 = parse_squeezing(value);
        }
    } else if (key == "eps1" || key == "eps2") {
        const double e = parse_double(value);
        if (!(e >= 0.0 && e <= 1.0)) throw std::invalid_argument(std::string(key) + " must lie in [0, 1]");
        (key == "eps1" ? eps1 : eps2) = e;
    } else if (key == "gain") {
        gains = parse_grid(value, false);
    } else if (key == "gain-target") {
        gain_target = parse_gain_target(value);
    } else if (key == "format") {
        if (value == "csv") {
            format = OutputFormat::csv;
        } else if (value == "json") {
            format = OutputFormat::json;
        } else {
            throw std::invalid_argument("format must be csv or json");
        }
    } else if (key == "out") {
        out = std::string(value);
    } else if (key == "strict") {
        strict = parse_bool(value);
    } else if (key == "strict-tolerance") {
        strict_tolerance = parse_double(value);
    } else if (key == "parallel") {
        const double p = parse_double(value);
        if (p < 1 || p != std::floor(p)) throw std::invalid_argument("parallel must be a positive integer");
        parallel = static_cast<unsigned>(p);
    } else if (key == "seed") {
        std::uint64_t s = 0;
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), s);
        if (ec != std::errc{} || ptr != value.data() + value.size()) throw std::invalid_argument("bad seed");
        seed = s;
    } else if (key == "aH" || key == "aV") {
        const double a = parse_double(value);
        if (a < 0.0) throw std::invalid_argument("carrier amplitudes must be non-negative");
        (key == "aH" ? alpha_h : alpha_v) = a;
    } else if (key == "theta") {
        theta = parse_double(value);
    } else if (key == "h-squeeze" || key == "v-squeeze") {
        auto& target = key == "h-squeeze" ? h_squeeze : v_squeeze;
        if (value == "none") {
            target.reset();
        } else {
            target = parse_squeeze_spec(value);
        }
    } else if (key == "h-signal") {
        h_signal = parse_signal(value);
    } else if (key == "v-signal") {
        v_signal = parse_signal(value);
    } else {
        throw std::invalid_argument("unknown config key '" + std::string(key) + "'");
    }
}

std::string RunConfig::serialize() const {
    std::ostringstream os;
    os << "scheme = " << to_string(scheme) << '\n';
    os << "grid = " << join(grid) << '\n';
    if (vsq) os << "vsq = " << format_number(*vsq) << '\n';
    os << "vsq3 = " << (vsq3 ? format_number(*vsq3) : std::string("tied")) << '\n';
    os << "eps1 = " << format_number(eps1) << '\n';
    os << "eps2 = " << format_number(eps2) << '\n';
    os << "gain = " << join(gains) << '\n';
    os << "gain-target = "
       << (gain_target == GainTarget::all ? "all" : gain_target == GainTarget::horizontal ? "horizontal" : "vertical")
       << '\n';
    os << "format = " << (format == OutputFormat::csv ? "csv" : "json") << '\n';
    if (!out.empty()) os << "out = " << out << '\n';
    os << "strict = " << (strict ? "true" : "false") << '\n';
    os << "strict-tolerance = " << format_number(strict_tolerance) << '\n';
    os << "parallel = " << parallel << '\n';
    os << "seed = " << seed << '\n';
    os << "aH = " << format_number(alpha_h) << '\n';
    os << "aV = " << format_number(alpha_v) << '\n';
    os << "theta = " << format_number(theta) << '\n';
    os << "h-squeeze = " << squeeze_text(h_squeeze) << '\n';
    os << "v-squeeze = " << squeeze_text(v_squeeze) << '\n';
    os << "h-signal = " << format_number(h_signal.plus) << ',' << format_number(h_signal.minus) << '\n';
    os << "v-signal = " << format_number(v_signal.plus) << ',' << format_number(v_signal.minus) << '\n';
    return os.str();
}

void load_config(std::istream& in, RunConfig& config) {
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::string_view view(line);
        if (const auto hash = view.find('#'); hash != std::string_view::npos) {
            view = view.substr(0, hash);
        }
        view = trim(view);
        if (view.empty()) {
            continue;
        }
        const auto eq = view.find('=');
        if (eq == std::string_view::npos) {
            throw std::invalid_argument("config line " + std::to_string(number) + ": expected key = value");
        }
        try {
            config.set(view.substr(0, eq), view.substr(eq + 1));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("config line " + std::to_string(number) + ": " + e.what());
        }
    }
}

void load_config_file(const std::string& path, RunConfig& config) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config file " + path);
    }
    load_config(in, config);
}

}  // namespace poltel::app
