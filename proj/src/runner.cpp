#include "gbkop/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "gbkop/catalog.hpp"
#include "gbkop/csv.hpp"
#include "gbkop/verify.hpp"

#include <unistd.h>

namespace gbkop {

namespace {

std::string sanitize(const std::string& name) {
    std::string out;
    for (char c : name) {
        out += (std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-')
                   ? c
                   : '_';
    }
    return out;
}

std::string now_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

bool use_color() {
    return ::isatty(::fileno(stdout)) && std::getenv("NO_COLOR") == nullptr;
}

void print_status(bool pass, const std::string& text) {
    if (use_color()) {
        std::printf("%s%s\033[0m %s\n", pass ? "\033[32mPASS" : "\033[31mFAIL",
                    "", text.c_str());
    } else {
        std::printf("%s %s\n", pass ? "PASS" : "FAIL", text.c_str());
    }
}

std::vector<std::pair<int, int>> diagonal(const std::vector<int>& ns) {
    std::vector<std::pair<int, int>> seq;
    for (int n : ns) seq.emplace_back(n, n);
    return seq;
}

EvaluationGrid config_grid(const RunConfig& c) {
    EvaluationGrid g;
    g.shift_resolution = c.shift_resolution;
    for (double v = c.grid_start; v <= c.grid_stop * (1.0 + 1e-12); v += c.grid_step) {
        g.x_points.push_back(v);
    }
    g.y_points = g.x_points;
    g.validate();
    return g;
}

void emit(const RunConfig& c, const std::string& name, const ExperimentTable& table) {
    std::filesystem::create_directories(c.out_dir);
    write_csv(c.out_dir + "/" + sanitize(name) + ".csv", table);
}

int run_moments(const RunConfig& c) {
    static const std::pair<int, int> items[] = {{0, 0}, {1, 0}, {0, 1}, {2, 0},
                                                {0, 2}, {3, 0}, {0, 3}};
    static const double xs[] = {0.0, 0.5, 1.0, 2.0, 5.0};
    double max_diff = 0.0;
    for (const auto& [i, j] : items) {
        const Function2D& f =
            catalog_function("e_{" + std::to_string(i) + "," + std::to_string(j) + "}");
        ExperimentTable table;
        table.meta.a = c.a;
        table.meta.function_label = f.label;
        table.meta.eps = c.eps;
        table.meta.observed_desc = "series";
        table.meta.bound_desc = "closed form";
        for (int n : c.n_list) {
            const BasisParams p(n, c.a);
            for (double x : xs) {
                for (double y : xs) {
                    ExperimentRow row{n, n, x, y};
                    row.observed = apply_2d(p, p, f, x, y, c.eps);
                    row.bound_or_limit = test_moment_2d_closed(p, p, i, j, x, y);
                    row.ratio = row.bound_or_limit != 0.0
                                    ? row.observed / row.bound_or_limit
                                    : 0.0;
                    max_diff = std::max(max_diff,
                                        std::abs(row.observed - row.bound_or_limit));
                    table.rows.push_back(row);
                }
            }
        }
        emit(c, "moments_e_" + std::to_string(i) + "_" + std::to_string(j), table);
    }
    const bool pass = max_diff <= 1e-10;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "moment identities: max |series - closed| = %.3g",
                  max_diff);
    print_status(pass, buf);
    return pass ? 0 : 1;
}

int count_failed(const ExperimentTable& table) {
    int failed = 0;
    for (const auto& row : table.rows) failed += row.failed ? 1 : 0;
    return failed;
}

int run_converge(const RunConfig& c) {
    const Function2D& f = catalog_function(c.function);
    ExperimentTable table =
        convergence_experiment(f, diagonal(c.n_list), c.a, c.points, c.eps);
    table.meta.timestamp = now_utc();
    emit(c, "converge_" + c.function, table);
    const int failed = count_failed(table);
    std::printf("converge %s: %zu rows, first error %.6g, last error %.6g\n",
                c.function.c_str(), table.rows.size(), table.rows.front().observed,
                table.rows.back().observed);
    return failed == 0 ? 0 : 1;
}

int run_rate(const RunConfig& c) {
    const Function2D& f = catalog_function(c.function);
    const RateBoundVariant variant = c.variant == "modulus"
                                         ? RateBoundVariant::Modulus
                                         : RateBoundVariant::DerivativeNorm;
    ExperimentTable table = rate_bound_experiment(f, diagonal(c.n_list), c.a, c.points,
                                                  config_grid(c), c.eps, variant);
    table.meta.timestamp = now_utc();
    emit(c, "rate_" + c.variant + "_" + c.function, table);
    double fitted = 0.0;
    for (const auto& row : table.rows) fitted = std::max(fitted, row.ratio);
    std::printf("rate %s (%s bound): fitted constant = %.6g\n", c.function.c_str(),
                c.variant.c_str(), fitted);
    return count_failed(table) == 0 ? 0 : 1;
}

int run_voronovskaja(const RunConfig& c) {
    const Function2D& f = catalog_function(c.function);
    int status = 0;
    for (const auto& [x, y] : c.points) {
        const VoronovskajaResult vr = voronovskaja_limit(f, c.a, x, y, c.n_list, c.eps);
        const double rhs_m = voronovskaja_rhs(f, c.a, x, y, VoronovskajaVariant::Moment);
        const double rhs_p = voronovskaja_rhs(f, c.a, x, y, VoronovskajaVariant::Paper);
        const double res_m = std::abs(vr.estimate - rhs_m);
        const double res_p = std::abs(vr.estimate - rhs_p);
        const char* winner =
            res_m <= res_p ? "x(x+1)/2 (central-moment limit)" : "x(x+2)/2 (printed)";
        std::printf("voronovskaja %s at (%g, %g), a=%g: limit = %.8g (r2 %.4f); "
                    "winning coefficient variant: %s, residual %.3g\n",
                    c.function.c_str(), x, y, c.a, vr.estimate, vr.fit.r_squared,
                    winner, std::min(res_m, res_p));
        if (vr.fit.r_squared < 0.9) status = 1; // non-convergent sequence
        ExperimentTable table;
        table.meta.a = c.a;
        table.meta.function_label = f.label;
        table.meta.eps = c.eps;
        table.meta.observed_desc = "n (K f - f)";
        table.meta.bound_desc = "closer rhs variant";
        for (size_t i = 0; i < vr.ns.size(); ++i) {
            ExperimentRow row{vr.ns[i], vr.ns[i], x, y};
            row.observed = vr.values[i];
            row.bound_or_limit = res_m <= res_p ? rhs_m : rhs_p;
            row.ratio = row.bound_or_limit != 0.0 ? row.observed / row.bound_or_limit
                                                  : 0.0;
            table.rows.push_back(row);
        }
        emit(c, "voronovskaja_" + c.function + "_x" + format_number(x) + "_y" +
                    format_number(y),
             table);
    }
    return status;
}

int run_derivative(const RunConfig& c) {
    const Function2D& f = catalog_function(c.function);
    int status = 0;
    for (const auto& [x, y] : c.points) {
        ExperimentTable table = derivative_convergence(f, c.a, x, y, c.n_list, c.eps);
        table.meta.timestamp = now_utc();
        emit(c, "derivative_" + c.function + "_x" + format_number(x) + "_y" +
                    format_number(y),
             table);
        if (count_failed(table) > 0) status = 1;
        std::printf("derivative %s at (%g, %g): |dK/dx - f_x| from %.6g to %.6g\n",
                    c.function.c_str(), x, y, table.rows.front().observed,
                    table.rows.back().observed);
    }
    return status;
}

int run_verify_all(const RunConfig& c) {
    VerifyOptions options;
    options.out_dir = c.out_dir;
    options.eps = c.eps;
    const auto results = run_verification(options);
    for (const auto& r : results) {
        print_status(r.pass, "criterion " + r.id + " (" + r.name + "): " + r.detail);
    }
    std::filesystem::create_directories(c.out_dir);
    std::ofstream report(c.out_dir + "/report.txt", std::ios::binary);
    report << render_report(results, now_utc());
    return all_pass(results) ? 0 : 1;
}

} // namespace

int run(const RunConfig& config) {
    config.validate();
    switch (config.command) {
        case Command::Moments: return run_moments(config);
        case Command::Converge: return run_converge(config);
        case Command::Rate: return run_rate(config);
        case Command::Voronovskaja: return run_voronovskaja(config);
        case Command::Derivative: return run_derivative(config);
        case Command::VerifyAll: return run_verify_all(config);
    }
    return 2;
}

} // namespace gbkop
