#include "gbkop/verify.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <sstream>

#include "gbkop/analysis.hpp"
#include "gbkop/catalog.hpp"
#include "gbkop/csv.hpp"

namespace gbkop {

namespace {

const std::vector<int> kDefaultNs = {10, 20, 40, 80, 160, 320, 640};
const std::vector<double> kMomentXs = {0.0, 0.5, 1.0, 2.0, 5.0};
const std::vector<int> kMomentNs = {5, 10, 50, 100};
const std::vector<double> kMomentAs = {0.0, 1.0, 2.0};

std::string sanitize(const std::string& name) {
    std::string out;
    for (char c : name) {
        out += (std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-')
                   ? c
                   : '_';
    }
    return out;
}

std::string fmt(double v, int prec = 3) {
    std::ostringstream os;
    os.precision(prec);
    os << v;
    return os.str();
}

class Emitter {
public:
    explicit Emitter(const std::string& out_dir) : out_dir_(out_dir) {
        if (!out_dir_.empty()) std::filesystem::create_directories(out_dir_);
    }

    void emit(const std::string& name, const ExperimentTable& table) {
        if (out_dir_.empty()) return;
        write_csv(out_dir_ + "/" + sanitize(name) + ".csv", table);
    }

private:
    std::string out_dir_;
};

/// f(u,v) = (u - center)^r on one axis, constant on the other.
Function2D central_axis_function(Axis axis, int r, double center) {
    Function2D f;
    f.label = axis == Axis::U ? "(u-x)^" + std::to_string(r)
                              : "(v-y)^" + std::to_string(r);
    const Function1D power = Function1D::from_poly(ShiftedPoly::power(center, r), "power");
    const Function1D one = Function1D::from_poly(ShiftedPoly::monomial(0), "1");
    if (axis == Axis::U) {
        f.growth_x = r;
        f.eval = [center, r](double u, double) { return std::pow(u - center, r); };
        f.tensor_terms = {TensorTerm{power, one}};
    } else {
        f.growth_y = r;
        f.eval = [center, r](double, double v) { return std::pow(v - center, r); };
        f.tensor_terms = {TensorTerm{one, power}};
    }
    return f;
}

// ---- criterion 1: closed moment identities vs the series -------------------

struct MomentSweep {
    double max_diff = 0.0;
    double seconds = 0.0;
};

ExperimentTable moment_item_table(int i, int j, double eps) {
    ExperimentTable table;
    table.meta.function_label = "e_{" + std::to_string(i) + "," + std::to_string(j) + "}";
    table.meta.eps = eps;
    table.meta.observed_desc = "series K(e_ij)";
    table.meta.bound_desc = "closed form";
    const Function2D& f = catalog_function(table.meta.function_label);
    for (int n : kMomentNs) {
        for (double a : kMomentAs) {
            const BasisParams p(n, a);
            for (double x : kMomentXs) {
                for (double y : kMomentXs) {
                    ExperimentRow row{n, n, x, y};
                    row.observed = apply_2d(p, p, f, x, y, eps);
                    row.bound_or_limit = test_moment_2d_closed(p, p, i, j, x, y);
                    row.ratio = row.bound_or_limit != 0.0
                                    ? row.observed / row.bound_or_limit
                                    : 0.0;
                    table.rows.push_back(row);
                }
            }
        }
    }
    return table;
}

ExperimentTable central_item_table(Axis axis, int r, double eps) {
    ExperimentTable table;
    table.meta.function_label = axis == Axis::U ? "central-u-r" + std::to_string(r)
                                                : "central-v-r" + std::to_string(r);
    table.meta.eps = eps;
    table.meta.observed_desc = "series central moment";
    table.meta.bound_desc = "closed form";
    for (int n : kMomentNs) {
        for (double a : kMomentAs) {
            const BasisParams p(n, a);
            for (double x : kMomentXs) {
                for (double y : kMomentXs) {
                    ExperimentRow row{n, n, x, y};
                    const double center = axis == Axis::U ? x : y;
                    const Function2D f = central_axis_function(axis, r, center);
                    row.observed = apply_2d(p, p, f, x, y, eps);
                    row.bound_or_limit = central_moment_2d_closed(p, p, axis, r, x, y);
                    row.ratio = row.bound_or_limit != 0.0
                                    ? row.observed / row.bound_or_limit
                                    : 0.0;
                    table.rows.push_back(row);
                }
            }
        }
    }
    return table;
}

CheckResult check_moment_identities(Emitter& emitter, double eps) {
    CheckResult result{"1", "moment identities (closed forms vs series)"};
    const auto start = std::chrono::steady_clock::now();
    double max_diff = 0.0;
    static const std::pair<int, int> items[] = {{0, 0}, {1, 0}, {0, 1}, {2, 0},
                                                {0, 2}, {3, 0}, {0, 3}};
    for (const auto& [i, j] : items) {
        ExperimentTable table = moment_item_table(i, j, eps);
        for (const auto& row : table.rows) {
            max_diff = std::max(max_diff, std::abs(row.observed - row.bound_or_limit));
        }
        emitter.emit("moments_e_" + std::to_string(i) + "_" + std::to_string(j), table);
    }
    for (Axis axis : {Axis::U, Axis::V}) {
        for (int r : {1, 2}) {
            ExperimentTable table = central_item_table(axis, r, eps);
            for (const auto& row : table.rows) {
                max_diff =
                    std::max(max_diff, std::abs(row.observed - row.bound_or_limit));
            }
            emitter.emit(std::string("moments_central_") +
                             (axis == Axis::U ? "u" : "v") + std::to_string(r),
                         table);
        }
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.pass = max_diff <= 1e-10 && seconds < 60.0;
    result.detail = "max |series - closed| = " + fmt(max_diff) + " (tol 1e-10), " +
                    fmt(seconds) + " s (limit 60)";
    return result;
}

// ---- criterion 2: partition of unity ---------------------------------------

CheckResult check_partition(Emitter& emitter) {
    CheckResult result{"2", "partition of unity of the basis window"};
    ExperimentTable table;
    table.meta.observed_desc = "|sum W - 1|";
    table.meta.bound_desc = "1e-12 + certified tail";
    double worst_margin = -1.0;
    bool pass = true;
    for (int n : {5, 10, 50, 100, 200, 500}) {
        for (double a : kMomentAs) {
            const BasisParams p(n, a);
            for (double x : kMomentXs) {
                const TruncatedBasis tb = truncate_basis(p, x, 1e-12, 0);
                const double dev = std::abs(tb.weight_sum() - 1.0);
                const double allowed = 1e-12 + tb.tail_bound;
                ExperimentRow row{n, n, x, 0.0};
                row.observed = dev;
                row.bound_or_limit = allowed;
                row.ratio = allowed != 0.0 ? dev / allowed : 0.0;
                table.rows.push_back(row);
                if (dev > allowed) pass = false;
                worst_margin = std::max(worst_margin, dev - allowed);
            }
        }
    }
    emitter.emit("partition", table);
    result.pass = pass;
    result.detail = "worst (deviation - allowance) = " + fmt(worst_margin) +
                    " over n up to 500";
    return result;
}

// ---- criterion 3: second-central-moment bound -------------------------------

CheckResult check_remark_bound(Emitter& emitter, double eps) {
    CheckResult result{"3", "second central moment below delta bound"};
    ExperimentTable table;
    table.meta.observed_desc = "series K((u-x)^2)";
    table.meta.bound_desc = "delta_n^2(x)/(n+1) + 1e-12";
    bool pass = true;
    double worst = -1.0;
    for (int n : kMomentNs) {
        for (double a : kMomentAs) {
            const BasisParams p(n, a);
            for (double x : kMomentXs) {
                for (double y : kMomentXs) {
                    const Function2D f = central_axis_function(Axis::U, 2, x);
                    const double value = apply_2d(p, p, f, x, y, eps);
                    const double allowed = delta_bound(p, x).bound + 1e-12;
                    ExperimentRow row{n, n, x, y};
                    row.observed = value;
                    row.bound_or_limit = allowed;
                    row.ratio = value / allowed;
                    table.rows.push_back(row);
                    if (value > allowed) pass = false;
                    worst = std::max(worst, value - allowed);
                }
            }
        }
    }
    emitter.emit("remark_bound", table);
    result.pass = pass;
    result.detail = "worst (moment - bound) = " + fmt(worst);
    return result;
}

// ---- criterion 4: central moment asymptotic orders ---------------------------

CheckResult check_central_orders(Emitter& emitter) {
    CheckResult result{"4", "central moment orders at x = 1, a = 1"};
    const std::vector<int> ns = {50, 100, 200, 400, 800};
    const double expected[] = {-1.0, -1.0, -2.0, -2.0};
    bool pass = true;
    std::string detail;
    for (int r = 1; r <= 4; ++r) {
        ExperimentTable table;
        table.meta.function_label = "|u_{n," + std::to_string(r) + "}|";
        table.meta.observed_desc = "|central moment|";
        std::vector<double> values;
        for (int n : ns) {
            const double u = central_moment_numeric(BasisParams(n, 1.0), r, 1.0, 1e-13);
            values.push_back(std::abs(u));
            ExperimentRow row{n, n, 1.0, 0.0};
            row.observed = std::abs(u);
            table.rows.push_back(row);
        }
        emitter.emit("central_order_r" + std::to_string(r), table);
        if (!detail.empty()) detail += "; ";
        try {
            const SlopeFit fit = fit_loglog(ns, values);
            const bool ok = std::abs(fit.slope - expected[r - 1]) <= 0.15 &&
                            fit.r_squared >= 0.98;
            if (!ok) pass = false;
            detail += "r" + std::to_string(r) + ": slope " + fmt(fit.slope, 4) +
                      " (want " + fmt(expected[r - 1], 2) + "±0.15), r2 " +
                      fmt(fit.r_squared, 4) + (ok ? "" : " [FAIL]");
        } catch (const std::exception&) {
            pass = false;
            detail += "r" + std::to_string(r) +
                      ": moment vanishes identically at x=1, a=1 (the first-moment "
                      "numerator -x + ax/(1+x) + 1/2 is zero there); slope undefined "
                      "[FAIL]";
        }
    }
    result.pass = pass;
    result.detail = detail;
    return result;
}

// ---- criterion 5: convergence ------------------------------------------------

CheckResult check_convergence(Emitter& emitter, double eps) {
    CheckResult result{"5", "convergence on smooth catalog functions (a = 0)"};
    bool pass = true;
    std::string detail;
    std::vector<std::pair<int, int>> seq;
    for (int n : kDefaultNs) seq.emplace_back(n, n);
    for (const char* name : {"e_{1,1}", "exp-decay", "sin-product"}) {
        const Function2D& f = catalog_function(name);
        ExperimentTable table =
            convergence_experiment(f, seq, 0.0, {{1.0, 1.0}}, eps);
        emitter.emit(std::string("converge_") + name, table);
        const double first = table.rows.front().observed;
        const double last = table.rows.back().observed;
        bool decreasing = true;
        for (size_t i = 1; i < table.rows.size(); ++i) {
            if (table.rows[i - 1].n1 >= 40 &&
                !(table.rows[i].observed < table.rows[i - 1].observed)) {
                decreasing = false;
            }
        }
        const bool ok = last < first / 10.0 && decreasing;
        if (!ok) pass = false;
        if (!detail.empty()) detail += "; ";
        detail += std::string(name) + ": err(640)/err(10) = " + fmt(last / first) +
                  (decreasing ? ", decreasing" : ", NOT decreasing") +
                  (ok ? "" : " [FAIL]");
    }
    result.pass = pass;
    result.detail = detail;
    return result;
}

// ---- criterion 6: rate bounds and weighted boundedness ------------------------

struct FittedConstant {
    double full = 0.0;
    double upper = 0.0;
    bool stable(double factor = 2.0) const {
        return std::isfinite(full) && full > 0.0 && upper > 0.0 &&
               full / upper < factor && upper / full < factor;
    }
};

FittedConstant fitted_max_ratio(const ExperimentTable& table, int upper_from) {
    FittedConstant fc;
    for (const auto& row : table.rows) {
        if (row.failed) continue;
        fc.full = std::max(fc.full, row.ratio);
        if (row.n1 >= upper_from) fc.upper = std::max(fc.upper, row.ratio);
    }
    return fc;
}

CheckResult check_rate_bounds(Emitter& emitter, double eps) {
    CheckResult result{"6", "rate bounds: fitted constants finite and stable"};
    bool pass = true;
    std::string detail;
    std::vector<std::pair<int, int>> seq;
    for (int n : kDefaultNs) seq.emplace_back(n, n);
    const EvaluationGrid grid = EvaluationGrid::uniform(10.0, 0.5, 0.01);
    const std::vector<std::pair<double, double>> points = {{1.0, 1.0}, {0.5, 2.0}};

    // First-derivative-norm bound.
    {
        ExperimentTable table = rate_bound_experiment(
            catalog_function("affine"), seq, 1.0, points, grid, eps,
            RateBoundVariant::DerivativeNorm);
        emitter.emit("rate_derivative_affine", table);
        const FittedConstant fc = fitted_max_ratio(table, 80);
        if (!fc.stable()) pass = false;
        detail += "M5(affine) = " + fmt(fc.full) + " (upper-half " + fmt(fc.upper) + ")";
    }
    // Weighted-modulus bound.
    {
        ExperimentTable table = rate_bound_experiment(
            catalog_function("sin-product"), seq, 1.0, {{1.0, 1.0}}, grid, eps,
            RateBoundVariant::Modulus);
        emitter.emit("rate_modulus_sin-product", table);
        const FittedConstant fc = fitted_max_ratio(table, 80);
        if (!fc.stable()) pass = false;
        detail += "; M9(sin-product) = " + fmt(fc.full) + " (upper-half " +
                  fmt(fc.upper) + ")";
    }
    // Weighted boundedness of the operator, per axis weight.
    double m1_gamma1 = 0.0;
    for (int gamma : {0, 1, 2}) {
        ExperimentTable table = weighted_boundedness_check(gamma, kDefaultNs, 1.0, grid);
        emitter.emit("boundedness_g" + std::to_string(gamma), table);
        double max_i = 0.0, min_i = 1e300, max_ii = 0.0, min_ii = 1e300;
        double upper_i = 0.0, upper_ii = 0.0;
        for (const auto& row : table.rows) {
            max_i = std::max(max_i, row.observed);
            min_i = std::min(min_i, row.observed);
            max_ii = std::max(max_ii, row.bound_or_limit);
            min_ii = std::min(min_ii, row.bound_or_limit);
            if (row.n1 >= 80) {
                upper_i = std::max(upper_i, row.observed);
                upper_ii = std::max(upper_ii, row.bound_or_limit);
            }
        }
        if (gamma == 1) m1_gamma1 = max_i;
        const bool ok = max_i / min_i < 10.0 && max_ii / min_ii < 10.0 &&
                        max_i / upper_i < 2.0 && max_ii / upper_ii < 2.0;
        if (!ok) pass = false;
        detail += "; M1(g=" + std::to_string(gamma) + ") = " + fmt(max_i) +
                  ", M2 = " + fmt(max_ii) + (ok ? "" : " [FAIL]");
    }
    // Norm boundedness of the bivariate operator against the per-axis maxima.
    {
        const Function2D& f = catalog_function("e_{1,1}");
        const double norm_f_true = 1.0; // sup xy/((1+x)(1+y)) over the quadrant
        double worst_ratio = 0.0;
        bool ok = true;
        for (int n : kDefaultNs) {
            const BasisParams p(n, 1.0);
            double norm_kf = 0.0;
            for (double x : grid.x_points) {
                for (double y : grid.y_points) {
                    const double v = apply_2d(p, p, f, x, y, eps);
                    norm_kf = std::max(norm_kf, std::abs(v) * weight2(1, 1, x, y));
                }
            }
            worst_ratio = std::max(worst_ratio, norm_kf / norm_f_true);
            if (norm_kf > m1_gamma1 * m1_gamma1 * norm_f_true + 1e-9) ok = false;
        }
        if (!ok) pass = false;
        detail += "; M3 fit = " + fmt(worst_ratio) + " vs M1(1)^2 = " +
                  fmt(m1_gamma1 * m1_gamma1) + (ok ? "" : " [FAIL]");
    }
    result.pass = pass;
    result.detail = detail;
    return result;
}

// ---- criterion 7: Voronovskaja limit and coefficient arbitration ---------------

CheckResult check_voronovskaja(Emitter& emitter, double eps) {
    CheckResult result{"7", "Voronovskaja limits decide the coefficient variant"};
    bool pass = true;
    std::string detail;
    int moment_wins = 0, paper_wins = 0, cases = 0;
    double worst_residual = 0.0;

    for (double a : {0.0, 1.0}) {
        // Independent oracle: exact limit for e_{2,0} from the closed second
        // moment: n(K(u^2) - x^2) -> -x^2 + 2x + 2ax^2/(1+x).
        const double x = 1.0;
        const double exact = -x * x + 2.0 * x + 2.0 * a * x * x / (1.0 + x);
        const VoronovskajaResult oracle = voronovskaja_limit(
            catalog_function("e_{2,0}"), a, 1.0, 1.0, kDefaultNs, eps);
        if (std::abs(oracle.estimate - exact) > 1e-3 * std::max(1.0, std::abs(exact))) {
            pass = false;
            detail += "e_{2,0} oracle mismatch at a=" + fmt(a, 2) + ": est " +
                      fmt(oracle.estimate, 6) + " vs exact " + fmt(exact, 6) + "; ";
        }
        for (const char* name :
             {"e_{2,0}", "e_{0,2}", "e_{2,0}+e_{0,2}", "exp-decay"}) {
            const Function2D& f = catalog_function(name);
            const VoronovskajaResult vr =
                voronovskaja_limit(f, a, 1.0, 1.0, kDefaultNs, eps);
            const double rhs_m =
                voronovskaja_rhs(f, a, 1.0, 1.0, VoronovskajaVariant::Moment);
            const double rhs_p =
                voronovskaja_rhs(f, a, 1.0, 1.0, VoronovskajaVariant::Paper);
            const bool match_m = std::abs(vr.estimate - rhs_m) <= 0.01 * std::abs(rhs_m);
            const bool match_p = std::abs(vr.estimate - rhs_p) <= 0.01 * std::abs(rhs_p);
            ++cases;
            if (match_m == match_p) {
                pass = false;
                detail += std::string(name) + " a=" + fmt(a, 2) +
                          ": no unique variant (est " + fmt(vr.estimate, 6) + "); ";
            } else if (match_m) {
                ++moment_wins;
                worst_residual = std::max(
                    worst_residual, std::abs(vr.estimate - rhs_m) / std::abs(rhs_m));
            } else {
                ++paper_wins;
                worst_residual = std::max(
                    worst_residual, std::abs(vr.estimate - rhs_p) / std::abs(rhs_p));
            }
            ExperimentTable table;
            table.meta.a = a;
            table.meta.function_label = name;
            table.meta.eps = eps;
            table.meta.observed_desc = "n (K f - f)";
            table.meta.bound_desc = "moment-variant rhs";
            for (size_t i = 0; i < vr.ns.size(); ++i) {
                ExperimentRow row{vr.ns[i], vr.ns[i], 1.0, 1.0};
                row.observed = vr.values[i];
                row.bound_or_limit = rhs_m;
                row.ratio = rhs_m != 0.0 ? row.observed / rhs_m : 0.0;
                table.rows.push_back(row);
            }
            emitter.emit("voronovskaja_" + std::string(name) + "_a" + fmt(a, 2), table);
        }
    }
    if (moment_wins > 0 && paper_wins > 0) pass = false;
    const std::string winner = moment_wins >= paper_wins ? "x(x+1)/2 (central-moment limit)"
                                                         : "x(x+2)/2 (printed)";
    result.pass = pass && moment_wins + paper_wins == cases;
    result.detail = "winning second-order coefficient: " + winner + " in " +
                    std::to_string(std::max(moment_wins, paper_wins)) + "/" +
                    std::to_string(cases) + " cases, worst residual " +
                    fmt(worst_residual) + "; " + detail;
    return result;
}

// ---- criterion 8: simultaneous approximation ----------------------------------

CheckResult check_simultaneous(Emitter& emitter, double eps) {
    CheckResult result{"8", "partial derivatives of the operator converge"};
    const Function2D& f = catalog_function("e_{2,1}");
    const std::vector<int> ns = {20, 40, 80, 160, 320, 640};
    ExperimentTable table = derivative_convergence(f, 1.0, 1.0, 1.0, ns, eps);
    emitter.emit("simultaneous_e_2_1", table);
    std::vector<double> errors;
    for (const auto& row : table.rows) errors.push_back(row.observed);
    const SlopeFit fit = fit_loglog(ns, errors);
    const bool slope_ok = std::abs(fit.slope + 1.0) <= 0.2;

    // Analytic partials vs central finite differences of the full operator.
    const BasisParams p(20, 1.0);
    const double h = 1e-5;
    const double ax = partial_x(p, p, f, 1.0, 1.0, 1e-13);
    const double fd_x = (apply_2d(p, p, f, 1.0 + h, 1.0, 1e-14) -
                         apply_2d(p, p, f, 1.0 - h, 1.0, 1e-14)) /
                        (2 * h);
    const double ay = partial_y(p, p, f, 1.0, 1.0, 1e-13);
    const double fd_y = (apply_2d(p, p, f, 1.0, 1.0 + h, 1e-14) -
                         apply_2d(p, p, f, 1.0, 1.0 - h, 1e-14)) /
                        (2 * h);
    const double rel_x = std::abs(ax - fd_x) / std::abs(fd_x);
    const double rel_y = std::abs(ay - fd_y) / std::abs(fd_y);
    const bool fd_ok = rel_x <= 1e-5 && rel_y <= 1e-5;

    result.pass = slope_ok && fd_ok;
    result.detail = "error slope " + fmt(fit.slope, 4) + " (want -1±0.2), r2 " +
                    fmt(fit.r_squared, 4) + "; FD agreement rel " + fmt(rel_x) + " (x), " +
                    fmt(rel_y) + " (y) at n=20 (tol 1e-5)";
    return result;
}

// ---- criterion 9: derivative Voronovskaja --------------------------------------

CheckResult check_derivative_voronovskaja(Emitter& emitter, double eps) {
    CheckResult result{"9", "derivative Voronovskaja asymptotics for cubics"};
    bool pass = true;
    std::string detail;
    const std::vector<int> ns = {20, 40, 80, 160, 320, 640};
    for (double a : {0.0, 1.0}) {
        for (const char* name : {"e_{1,0}", "e_{2,0}", "e_{1,1}", "e_{2,1}", "e_{3,0}"}) {
            const Function2D& f = catalog_function(name);
            const double fx = f.partial(1, 0, 1.0, 1.0);
            std::vector<double> values;
            for (int n : ns) {
                const BasisParams p(n, a);
                const double d = partial_x(p, p, f, 1.0, 1.0, eps / n);
                values.push_back(n * (d - fx));
            }
            const double v1 = values[values.size() - 2], v2 = values.back();
            const double n1 = ns[ns.size() - 2], n2 = ns.back();
            const double estimate = (n2 * v2 - n1 * v1) / (n2 - n1);
            const double rhs = derivative_voronovskaja_rhs(f, a, 1.0, 1.0, DerivAxis::X);
            const bool ok = std::abs(estimate - rhs) <= 0.02 * std::abs(rhs) + 1e-3;
            if (!ok) pass = false;
            if (!detail.empty()) detail += "; ";
            detail += std::string(name) + " a=" + fmt(a, 2) + ": est " +
                      fmt(estimate, 5) + " vs rhs " + fmt(rhs, 5) + (ok ? "" : " [FAIL]");
            ExperimentTable table;
            table.meta.a = a;
            table.meta.function_label = name;
            table.meta.observed_desc = "n (d/dx K f - f_x)";
            table.meta.bound_desc = "asymptotic rhs";
            for (size_t i = 0; i < values.size(); ++i) {
                ExperimentRow row{ns[i], ns[i], 1.0, 1.0};
                row.observed = values[i];
                row.bound_or_limit = rhs;
                row.ratio = rhs != 0.0 ? values[i] / rhs : 0.0;
                table.rows.push_back(row);
            }
            emitter.emit("deriv_voronovskaja_" + std::string(name) + "_a" + fmt(a, 2),
                         table);
        }
    }
    result.pass = pass;
    result.detail = detail;
    return result;
}

// ---- criterion 10: Steklov inequalities ----------------------------------------

CheckResult check_steklov(Emitter& emitter) {
    CheckResult result{"10", "Steklov mean inequalities"};
    const EvaluationGrid grid = EvaluationGrid::uniform(6.0, 0.25, 0.01);
    const double h = 0.2, d = 0.2;
    bool pass = true;
    std::string detail;
    ExperimentTable table;
    table.meta.observed_desc = "lhs sup";
    table.meta.bound_desc = "allowed rhs (5% slack)";
    for (const char* name : {"affine", "sin-product", "exp-decay"}) {
        const Function2D& f = catalog_function(name);
        const double omega = weighted_modulus(f, h, d, grid);
        double sup_diff = 0.0, sup_dx = 0.0, sup_dy = 0.0;
        const double s = 1e-6;
        for (double x : grid.x_points) {
            for (double y : grid.y_points) {
                const double w = weight2(f.growth_x, f.growth_y, x, y);
                sup_diff = std::max(sup_diff,
                                    std::abs(steklov(f, h, d, x, y) - f(x, y)) * w);
                const double x0 = std::max(x - s, 0.0);
                const double dx =
                    (steklov(f, h, d, x + s, y) - steklov(f, h, d, x0, y)) / (x + s - x0);
                sup_dx = std::max(sup_dx, std::abs(dx) * w);
                const double y0 = std::max(y - s, 0.0);
                const double dy =
                    (steklov(f, h, d, x, y + s) - steklov(f, h, d, x, y0)) / (y + s - y0);
                sup_dy = std::max(sup_dy, std::abs(dy) * w);
            }
        }
        const bool ok_diff = sup_diff <= 1.05 * omega;
        const bool ok_dx = sup_dx <= 1.05 * 2.0 / h * omega;
        const bool ok_dy = sup_dy <= 1.05 * 2.0 / d * omega;
        if (!(ok_diff && ok_dx && ok_dy)) pass = false;
        if (!detail.empty()) detail += "; ";
        detail += std::string(name) + ": diff " + fmt(sup_diff) + "<=" +
                  fmt(1.05 * omega) + ", ddx " + fmt(sup_dx) + "<=" +
                  fmt(1.05 * 2.0 / h * omega) + ", ddy " + fmt(sup_dy) +
                  ((ok_diff && ok_dx && ok_dy) ? "" : " [FAIL]");
        int idx = 1;
        for (double lhs : {sup_diff, sup_dx, sup_dy}) {
            ExperimentRow row{0, 0, h, d};
            row.observed = lhs;
            row.bound_or_limit =
                idx == 1 ? 1.05 * omega : 1.05 * 2.0 / (idx == 2 ? h : d) * omega;
            row.ratio = lhs / row.bound_or_limit;
            row.note = name;
            table.rows.push_back(row);
            ++idx;
        }
    }
    emitter.emit("steklov", table);
    result.pass = pass;
    result.detail = detail;
    return result;
}

// ---- criterion 11: determinism ---------------------------------------------------

CheckResult check_determinism(double eps) {
    CheckResult result{"11", "byte-identical CSV output on repeated runs"};
    auto snapshot = [eps]() {
        std::vector<std::string> blobs;
        std::vector<std::pair<int, int>> seq;
        for (int n : {10, 20, 40, 80}) seq.emplace_back(n, n);
        for (const char* name : {"e_{1,1}", "exp-decay", "sin-product"}) {
            blobs.push_back(to_csv(convergence_experiment(catalog_function(name), seq,
                                                          0.0, {{1.0, 1.0}}, eps)));
        }
        blobs.push_back(to_csv(moment_item_table(2, 0, eps)));
        const EvaluationGrid grid = EvaluationGrid::uniform(6.0, 0.5, 0.01);
        blobs.push_back(to_csv(rate_bound_experiment(catalog_function("affine"), seq, 1.0,
                                                     {{1.0, 1.0}}, grid, eps,
                                                     RateBoundVariant::DerivativeNorm)));
        blobs.push_back(to_csv(weighted_boundedness_check(2, {10, 20, 40, 80}, 1.0, grid)));
        return blobs;
    };
    const auto first = snapshot();
    const auto second = snapshot();
    bool pass = first.size() == second.size();
    int mismatches = 0;
    for (size_t i = 0; pass && i < first.size(); ++i) {
        if (first[i] != second[i]) ++mismatches;
    }
    pass = pass && mismatches == 0;
    result.pass = pass;
    result.detail = std::to_string(first.size()) + " tables recomputed twice, " +
                    std::to_string(mismatches) + " byte mismatches";
    return result;
}

// ---- extra: local-approximation bound components ---------------------------------

CheckResult check_theorem41_envelope(Emitter& emitter, double eps) {
    CheckResult result{"12", "K-functional envelope constant finite and stable"};
    const Function2D& f = catalog_function("sin-product");
    const EvaluationGrid grid = EvaluationGrid::uniform(8.0, 0.5, 0.01);
    const double norm_f = 1.0; // sup |sin sin| on the quadrant
    double fitted_full = 0.0, fitted_upper = 0.0;
    ExperimentTable table;
    table.meta.function_label = f.label;
    table.meta.observed_desc = "|K f - f|";
    table.meta.bound_desc = "omega2(sqrt(M)) + min(1,M) |f| + omega(first-moment radius)";
    for (int n : kDefaultNs) {
        const BasisParams p(n, 1.0);
        for (auto [x, y] : std::vector<std::pair<double, double>>{
                 {1.0, 1.0}, {0.5, 0.5}, {2.0, 1.0}}) {
            const Theorem41Components comp =
                theorem41_components(f, p, p, x, y, grid, eps);
            double omega2 = 0.0;
            for (double slice : {0.5, 1.0, 2.0}) {
                const Function1D fx = Function1D::from_lambda(
                    [&f, slice](double t) { return f(t, slice); }, 0, "x-slice");
                const Function1D fy = Function1D::from_lambda(
                    [&f, slice](double t) { return f(slice, t); }, 0, "y-slice");
                omega2 = std::max({omega2, second_modulus(fx, comp.M_term, grid),
                                   second_modulus(fy, comp.M_term, grid)});
            }
            const double envelope =
                omega2 + std::min(1.0, comp.M_term) * norm_f + comp.omega_term;
            const double c = envelope > 0.0 ? comp.error / envelope : 0.0;
            fitted_full = std::max(fitted_full, c);
            if (n >= 80) fitted_upper = std::max(fitted_upper, c);
            ExperimentRow row{n, n, x, y};
            row.observed = comp.error;
            row.bound_or_limit = envelope;
            row.ratio = c;
            table.rows.push_back(row);
        }
    }
    emitter.emit("theorem41_envelope", table);
    const bool stable = fitted_full > 0.0 && fitted_upper > 0.0 &&
                        fitted_full / fitted_upper < 2.0;
    result.pass = std::isfinite(fitted_full) && stable;
    result.detail = "fitted C = " + fmt(fitted_full) + " (upper-half " +
                    fmt(fitted_upper) + ")";
    return result;
}

} // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    Emitter emitter(options.out_dir);
    std::vector<CheckResult> results;
    results.push_back(check_moment_identities(emitter, options.eps));
    results.push_back(check_partition(emitter));
    results.push_back(check_remark_bound(emitter, options.eps));
    results.push_back(check_central_orders(emitter));
    results.push_back(check_convergence(emitter, options.eps));
    results.push_back(check_rate_bounds(emitter, options.eps));
    results.push_back(check_voronovskaja(emitter, options.eps));
    results.push_back(check_simultaneous(emitter, options.eps));
    results.push_back(check_derivative_voronovskaja(emitter, options.eps));
    results.push_back(check_steklov(emitter));
    results.push_back(check_determinism(options.eps));
    results.push_back(check_theorem41_envelope(emitter, options.eps));
    return results;
}

bool all_pass(const std::vector<CheckResult>& results) {
    for (const auto& r : results) {
        if (!r.pass) return false;
    }
    return true;
}

std::string render_report(const std::vector<CheckResult>& results,
                          const std::string& timestamp) {
    std::string out = "operator verification report\ngenerated: " + timestamp + "\n\n";
    for (const auto& r : results) {
        out += (r.pass ? "PASS" : "FAIL");
        out += "  criterion " + r.id + " (" + r.name + "): " + r.detail + "\n";
    }
    out += "\nresult: ";
    out += all_pass(results) ? "ALL CHECKS PASSED" : "SOME CHECKS FAILED";
    out += "\n";
    return out;
}

} // namespace gbkop
