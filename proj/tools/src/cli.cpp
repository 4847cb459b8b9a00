#include "poltel/app/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "poltel/app/commands.hpp"
#include "poltel/app/validation.hpp"

namespace poltel::app {

namespace {

struct Flags {
    std::string config_file;
    std::map<std::string, std::string> values;
};

void add_flag(CLI::App* app, Flags& flags, const std::string& key, const std::string& help) {
    app->add_option_function<std::string>(
        "--" + key, [&flags, key](const std::string& v) { flags.values[key] = v; }, help);
}

void add_common(CLI::App* app, Flags& flags) {
    app->add_option("--config", flags.config_file, "key = value config file, applied before flags");
    add_flag(app, flags, "format", "csv | json");
    add_flag(app, flags, "out", "output file (default stdout)");
    add_flag(app, flags, "parallel", "worker threads");
}

void add_protocol(CLI::App* app, Flags& flags) {
    add_flag(app, flags, "scheme", "twin | sqd | bet | optimized-twin");
    add_flag(app, flags, "vsq", "EPR squeezing, variance or dB (e.g. 3dB)");
    add_flag(app, flags, "vsq3", "third-beam squeezing, or 'tied'");
    add_flag(app, flags, "eps1", "first beamsplitter transmittivity");
    add_flag(app, flags, "eps2", "second beamsplitter transmittivity");
    add_flag(app, flags, "grid", "squeezing grid: list, lin:a:b:n or log:a:b:n");
}

int emit(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err) {
    if (path.empty()) {
        out << text;
        return kExitSuccess;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        err << "error: cannot write " << path << '\n';
        return kExitBadArguments;
    }
    file << text;
    return kExitSuccess;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Polarisation teleportation simulator", "polteleport"};
    app.require_subcommand(1);

    Flags flags;
    auto* sweep = app.add_subcommand("sweep-fidelity", "fidelity versus squeezing");
    add_common(sweep, flags);
    add_protocol(sweep, flags);
    sweep->add_flag_callback("--strict", [&flags] { flags.values["strict"] = "true"; },
                             "exit 1 when any row differs from its closed form");

    auto* tv = app.add_subcommand("tv", "T-V trajectories over feedforward gain, plus the unity-gain locus");
    add_common(tv, flags);
    add_protocol(tv, flags);
    add_flag(tv, flags, "gain", "gain sweep: list, lin:a:b:n or log:a:b:n");
    add_flag(tv, flags, "gain-target", "all | horizontal | vertical");

    auto* optimize = app.add_subcommand("optimize", "maximize fidelity over every regime");
    add_common(optimize, flags);
    add_protocol(optimize, flags);

    auto* validate = app.add_subcommand("validate", "run the acceptance checks");
    add_common(validate, flags);
    add_flag(validate, flags, "seed", "seed for randomized checks");

    auto* stokes = app.add_subcommand("stokes", "Stokes means, variances and uncertainty margins");
    add_common(stokes, flags);
    for (const auto& key : {"aH", "aV", "theta", "h-squeeze", "v-squeeze", "h-signal", "v-signal"}) {
        add_flag(stokes, flags, key, "stokes state setting");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitSuccess;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, err, err);
        return code == 0 ? kExitSuccess : kExitBadArguments;
    }

    RunConfig config;
    try {
        if (!flags.config_file.empty()) {
            load_config_file(flags.config_file, config);
        }
        for (const auto& [key, value] : flags.values) {
            config.set(key, value);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadArguments;
    }

    try {
        if (validate->parsed()) {
            const auto report = run_validation(config);
            std::string text = report.text();
            if (config.format == OutputFormat::json) {
                Table t;
                t.columns = {"criterion", "title", "passed", "detail"};
                for (const auto& c : report.criteria) {
                    t.add_row({static_cast<long long>(c.id), c.title, c.passed ? 1LL : 0LL, c.detail});
                }
                for (const auto& n : report.notes) {
                    t.add_row({std::monostate{}, n.title, std::monostate{}, n.detail});
                }
                text = to_json(t);
            }
            const int code = emit(text, config.out, out, err);
            if (code != kExitSuccess) return code;
            return report.passed() ? kExitSuccess : kExitValidationFailure;
        }

        CommandResult result;
        if (sweep->parsed()) {
            result = run_sweep_fidelity(config);
        } else if (tv->parsed()) {
            result = run_tv(config);
        } else if (optimize->parsed()) {
            result = run_optimize(config);
        } else {
            result = run_stokes(config);
        }
        const int code = emit(render(result.table, config.format), config.out, out, err);
        if (!result.message.empty()) {
            err << result.message << '\n';
        }
        return code != kExitSuccess ? code : result.exit_code;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadArguments;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidationFailure;
    }
}

}  // namespace poltel::app
