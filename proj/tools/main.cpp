// Command-line front end for the bivariate Baskakov-Kantorovich operator
// experiments: moment checks, convergence and rate tables, Voronovskaja-type
// limits, derivative experiments, and the full verification suite.

#include <cstdio>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "gbkop/catalog.hpp"
#include "gbkop/config.hpp"
#include "gbkop/runner.hpp"

namespace {

int dispatch(gbkop::Command command, const std::string& config_path, double a_override,
             double eps_override, const std::string& out_override) {
    gbkop::RunConfig config;
    config.command = command;
    if (!config_path.empty()) {
        std::ifstream file(config_path, std::ios::binary);
        if (!file) {
            std::fprintf(stderr, "error: cannot read config file '%s'\n",
                         config_path.c_str());
            return 2;
        }
        std::ostringstream text;
        text << file.rdbuf();
        try {
            config = gbkop::parse_config(text.str());
        } catch (const gbkop::ConfigError& e) {
            std::fprintf(stderr, "error: %s: %s\n", config_path.c_str(), e.what());
            return 2;
        }
        if (config.command != command) {
            std::fprintf(stderr,
                         "error: config section [%s] does not match the '%s' command\n",
                         gbkop::command_name(config.command).c_str(),
                         gbkop::command_name(command).c_str());
            return 2;
        }
    }
    if (a_override >= 0.0) config.a = a_override;
    if (eps_override > 0.0) config.eps = eps_override;
    if (!out_override.empty()) config.out_dir = out_override;
    try {
        config.validate();
        return gbkop::run(config);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bivariate generalized Baskakov-Kantorovich operator lab"};
    app.require_subcommand(0, 1);

    bool list_functions = false;
    app.add_flag("--list-functions", list_functions, "print the function catalog");

    struct SubOptions {
        std::string config;
        double a = -1.0;
        double eps = -1.0;
        std::string out;
    };

    std::vector<std::pair<gbkop::Command, SubOptions>> subs;
    subs.reserve(6);
    for (gbkop::Command cmd :
         {gbkop::Command::Moments, gbkop::Command::Converge, gbkop::Command::Rate,
          gbkop::Command::Voronovskaja, gbkop::Command::Derivative,
          gbkop::Command::VerifyAll}) {
        subs.emplace_back(cmd, SubOptions{});
        auto& opts = subs.back().second;
        CLI::App* sub = app.add_subcommand(gbkop::command_name(cmd));
        sub->add_option("--config", opts.config, "experiment config file");
        sub->add_option("--a", opts.a, "override the shape parameter a");
        sub->add_option("--eps", opts.eps, "override the series tolerance");
        sub->add_option("--out", opts.out, "override the output directory");
    }

    CLI11_PARSE(app, argc, argv);

    if (list_functions) {
        for (const auto& name : gbkop::catalog_names()) {
            std::printf("%s\n", name.c_str());
        }
        return 0;
    }

    for (const auto& [cmd, opts] : subs) {
        if (app.get_subcommand(gbkop::command_name(cmd))->parsed()) {
            return dispatch(cmd, opts.config, opts.a, opts.eps, opts.out);
        }
    }
    std::printf("%s\n", app.help().c_str());
    return 0;
}
