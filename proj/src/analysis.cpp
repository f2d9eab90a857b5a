#include "gbkop/analysis.hpp"

#include <algorithm>
#include <cmath>

namespace gbkop {

namespace {

SlopeFit linear_fit(const std::vector<double>& xs, const std::vector<double>& ys,
                    int n_min, int n_max) {
    SlopeFit fit;
    fit.n_min = n_min;
    fit.n_max = n_max;
    fit.points = static_cast<int>(xs.size());
    const size_t m = xs.size();
    double sx = 0, sy = 0;
    for (size_t i = 0; i < m; ++i) {
        sx += xs[i];
        sy += ys[i];
    }
    const double mx = sx / m, my = sy / m;
    double sxx = 0, sxy = 0, syy = 0;
    for (size_t i = 0; i < m; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (sxx <= 0.0 || syy <= 1e-28) {
        // Degenerate input (constant abscissas or constant values): flag via
        // r_squared = 0 rather than failing.
        fit.slope = 0.0;
        fit.intercept = my;
        fit.r_squared = 0.0;
        return fit;
    }
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0.0;
    for (size_t i = 0; i < m; ++i) {
        const double pred = fit.intercept + fit.slope * xs[i];
        ss_res += (ys[i] - pred) * (ys[i] - pred);
    }
    fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
    return fit;
}

double safe_ratio(double observed, double bound) {
    return bound != 0.0 ? observed / bound : 0.0;
}

} // namespace

ExperimentTable convergence_experiment(const Function2D& f,
                                       const std::vector<std::pair<int, int>>& params_seq,
                                       double a,
                                       const std::vector<std::pair<double, double>>& points,
                                       double eps) {
    ExperimentTable table;
    table.meta.a = a;
    table.meta.function_label = f.label;
    table.meta.eps = eps;
    table.meta.observed_desc = "|K f - f|";
    table.meta.bound_desc = "f(x,y)";
    for (const auto& [n1, n2] : params_seq) {
        for (const auto& [x, y] : points) {
            ExperimentRow row{n1, n2, x, y};
            try {
                const double target = f(x, y);
                const double value = apply_2d(BasisParams(n1, a), BasisParams(n2, a), f,
                                              x, y, eps);
                row.observed = std::abs(value - target);
                row.bound_or_limit = target;
                row.ratio = safe_ratio(row.observed, row.bound_or_limit);
            } catch (const std::exception& e) {
                row.failed = true;
                row.note = e.what();
            }
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

ExperimentTable rate_bound_experiment(const Function2D& f,
                                      const std::vector<std::pair<int, int>>& params_seq,
                                      double a,
                                      const std::vector<std::pair<double, double>>& points,
                                      const EvaluationGrid& grid, double eps,
                                      RateBoundVariant variant) {
    ExperimentTable table;
    table.meta.a = a;
    table.meta.function_label = f.label;
    table.meta.eps = eps;
    table.meta.observed_desc = "w(x,y) |K f - f|";
    table.meta.bound_desc = variant == RateBoundVariant::DerivativeNorm
                                ? "|f_x| delta_n1/sqrt(n1+1) + |f_y| delta_n2/sqrt(n2+1)"
                                : "weighted modulus at per-axis delta/sqrt(n+1)";

    double norm_fx = 0.0, norm_fy = 0.0;
    if (variant == RateBoundVariant::DerivativeNorm) {
        if (!f.has_partial(1, 0) || !f.has_partial(0, 1)) {
            throw std::invalid_argument(
                "rate_bound_experiment: derivative-norm variant needs declared "
                "first partials");
        }
        Function2D fx = f;
        fx.eval = [&f](double x, double y) { return f.partial(1, 0, x, y); };
        fx.tensor_terms.clear();
        Function2D fy = f;
        fy.eval = [&f](double x, double y) { return f.partial(0, 1, x, y); };
        fy.tensor_terms.clear();
        norm_fx = weighted_sup_norm(fx, grid);
        norm_fy = weighted_sup_norm(fy, grid);
    }

    for (const auto& [n1, n2] : params_seq) {
        const BasisParams p1(n1, a), p2(n2, a);
        for (const auto& [x, y] : points) {
            ExperimentRow row{n1, n2, x, y};
            try {
                const double err = std::abs(apply_2d(p1, p2, f, x, y, eps) - f(x, y));
                row.observed = err * weight2(f.growth_x, f.growth_y, x, y);
                const double s1 = std::sqrt(delta_bound(p1, x).delta_sq / (n1 + 1.0));
                const double s2 = std::sqrt(delta_bound(p2, y).delta_sq / (n2 + 1.0));
                row.bound_or_limit = variant == RateBoundVariant::DerivativeNorm
                                         ? norm_fx * s1 + norm_fy * s2
                                         : weighted_modulus(f, s1, s2, grid);
                row.ratio = safe_ratio(row.observed, row.bound_or_limit);
            } catch (const std::exception& e) {
                row.failed = true;
                row.note = e.what();
            }
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

ExperimentTable weighted_boundedness_check(int gamma, const std::vector<int>& ns, double a,
                                           const EvaluationGrid& grid) {
    if (gamma < 0) throw std::invalid_argument("weighted_boundedness_check: gamma >= 0");
    grid.validate();
    ExperimentTable table;
    table.meta.a = a;
    table.meta.function_label = "1/w_" + std::to_string(gamma);
    table.meta.observed_desc = "sup_x w(x) K(1/w; x)";
    table.meta.bound_desc = "sup_x w(x) K((t-x)^2/w(t); x) (n+1)/delta_n^2(x)";
    // 1/w_gamma(t) = 1 + t^gamma, a polynomial: cells are exact.
    ShiftedPoly recip_weight = ShiftedPoly::monomial(0);
    recip_weight.coeffs.resize(gamma + 1, 0.0);
    recip_weight.coeffs[0] = 1.0;
    recip_weight.coeffs[gamma] += 1.0;

    for (int n : ns) {
        const BasisParams p(n, a);
        ExperimentRow row{n, n, 0.0, 0.0};
        double sup_i = 0.0, sup_ii = 0.0;
        const Function1D f1 = Function1D::from_poly(recip_weight, "1+t^g");
        for (double x : grid.x_points) {
            const double w = weight(gamma, x);
            sup_i = std::max(sup_i, w * apply_1d(p, f1, x, 1e-12));
            // (t-x)^2 (1 + t^gamma) expanded around x: nonnegative coefficients.
            const ShiftedPoly prod =
                ShiftedPoly::power(x, 2).times(recip_weight.rebased(x));
            const Function1D f2 = Function1D::from_poly(prod, "(t-x)^2 (1+t^g)");
            const double scale = (n + 1.0) / delta_bound(p, x).delta_sq;
            sup_ii = std::max(sup_ii, w * apply_1d(p, f2, x, 1e-12) * scale);
        }
        row.observed = sup_i;
        row.bound_or_limit = sup_ii;
        row.ratio = safe_ratio(sup_i, sup_ii);
        table.rows.push_back(row);
    }
    return table;
}

double voronovskaja_rhs(const Function2D& f, double a, double x, double y,
                        VoronovskajaVariant variant) {
    const double bx = -x + a * x / (1.0 + x) + 0.5;
    const double by = -y + a * y / (1.0 + y) + 0.5;
    const double cx = variant == VoronovskajaVariant::Paper ? 0.5 * x * (x + 2.0)
                                                            : 0.5 * x * (x + 1.0);
    const double cy = variant == VoronovskajaVariant::Paper ? 0.5 * y * (y + 2.0)
                                                            : 0.5 * y * (y + 1.0);
    return bx * f.partial(1, 0, x, y) + by * f.partial(0, 1, x, y) +
           cx * f.partial(2, 0, x, y) + cy * f.partial(0, 2, x, y);
}

VoronovskajaResult voronovskaja_limit(const Function2D& f, double a, double x, double y,
                                      const std::vector<int>& ns, double eps) {
    if (ns.size() < 4) {
        throw std::invalid_argument("voronovskaja_limit: need at least 4 n values");
    }
    VoronovskajaResult result;
    result.ns = ns;
    const double target = f(x, y);
    for (int n : ns) {
        const BasisParams p(n, a);
        // Tail tolerance scaled down so multiplying by n keeps eps meaning.
        const double value = apply_2d(p, p, f, x, y, eps / std::max(1, n));
        result.values.push_back(n * (value - target));
    }
    const size_t m = ns.size();
    const double v1 = result.values[m - 2], v2 = result.values[m - 1];
    const double n1 = ns[m - 2], n2 = ns[m - 1];
    result.estimate = (n2 * v2 - n1 * v1) / (n2 - n1);
    result.fit = fit_against_reciprocal(ns, result.values);
    return result;
}

ExperimentTable derivative_convergence(const Function2D& f, double a, double x, double y,
                                       const std::vector<int>& ns, double eps) {
    if (!(x > 0.0 && y > 0.0)) {
        throw std::domain_error("derivative_convergence: requires x > 0 and y > 0");
    }
    ExperimentTable table;
    table.meta.a = a;
    table.meta.function_label = f.label;
    table.meta.eps = eps;
    table.meta.observed_desc = "|d/dx K f - f_x|";
    table.meta.bound_desc = "|d/dy K f - f_y|";
    const double fx = f.partial(1, 0, x, y);
    const double fy = f.partial(0, 1, x, y);
    for (int n : ns) {
        const BasisParams p(n, a);
        ExperimentRow row{n, n, x, y};
        try {
            row.observed = std::abs(partial_x(p, p, f, x, y, eps) - fx);
            row.bound_or_limit = std::abs(partial_y(p, p, f, x, y, eps) - fy);
            row.ratio = safe_ratio(row.observed, row.bound_or_limit);
        } catch (const std::exception& e) {
            row.failed = true;
            row.note = e.what();
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

double derivative_voronovskaja_rhs(const Function2D& f, double a, double x, double y,
                                   DerivAxis axis) {
    if (axis == DerivAxis::X) {
        return (-1.0 + a / ((1.0 + x) * (1.0 + x))) * f.partial(1, 0, x, y) +
               (1.0 + a * x / (1.0 + x)) * f.partial(2, 0, x, y) +
               (-y + a * y / (1.0 + y) + 0.5) * f.partial(1, 1, x, y) +
               0.5 * y * (1.0 + y) * f.partial(1, 2, x, y) +
               0.5 * x * (1.0 + x) * f.partial(3, 0, x, y);
    }
    return (-1.0 + a / ((1.0 + y) * (1.0 + y))) * f.partial(0, 1, x, y) +
           (1.0 + a * y / (1.0 + y)) * f.partial(0, 2, x, y) +
           (-x + a * x / (1.0 + x) + 0.5) * f.partial(1, 1, x, y) +
           0.5 * x * (1.0 + x) * f.partial(2, 1, x, y) +
           0.5 * y * (1.0 + y) * f.partial(0, 3, x, y);
}

Theorem41Components theorem41_components(const Function2D& f, const BasisParams& p1,
                                         const BasisParams& p2, double x, double y,
                                         const EvaluationGrid& grid, double eps) {
    Theorem41Components out;
    out.M_term = delta_bound(p1, x).bound + delta_bound(p2, y).bound;
    const double u1 = central_moment_closed(p1, 1, x);
    const double u2 = central_moment_closed(p2, 1, y);
    out.omega_term = complete_modulus(f, std::hypot(u1, u2), grid);
    out.error = std::abs(apply_2d(p1, p2, f, x, y, eps) - f(x, y));
    return out;
}

SlopeFit fit_loglog(const std::vector<int>& ns, const std::vector<double>& values) {
    if (ns.size() != values.size()) {
        throw std::invalid_argument("fit_loglog: size mismatch");
    }
    if (ns.size() < 4) throw std::invalid_argument("fit_loglog: need at least 4 points");
    std::vector<double> xs, ys;
    for (size_t i = 0; i < ns.size(); ++i) {
        if (!(values[i] > 0.0)) {
            throw std::domain_error("fit_loglog: values must be positive");
        }
        xs.push_back(std::log(static_cast<double>(ns[i])));
        ys.push_back(std::log(values[i]));
    }
    return linear_fit(xs, ys, *std::min_element(ns.begin(), ns.end()),
                      *std::max_element(ns.begin(), ns.end()));
}

SlopeFit fit_against_reciprocal(const std::vector<int>& ns,
                                const std::vector<double>& values) {
    if (ns.size() != values.size() || ns.size() < 2) {
        throw std::invalid_argument("fit_against_reciprocal: bad input sizes");
    }
    std::vector<double> xs;
    for (int n : ns) xs.push_back(1.0 / n);
    return linear_fit(xs, values, *std::min_element(ns.begin(), ns.end()),
                      *std::max_element(ns.begin(), ns.end()));
}

SlopeFit order_fit(const ExperimentTable& table, TableColumn column) {
    std::vector<int> ns;
    std::vector<double> values;
    for (const auto& row : table.rows) {
        if (row.failed) continue;
        ns.push_back(row.n1);
        switch (column) {
            case TableColumn::Observed: values.push_back(row.observed); break;
            case TableColumn::BoundOrLimit: values.push_back(row.bound_or_limit); break;
            case TableColumn::Ratio: values.push_back(row.ratio); break;
        }
    }
    return fit_loglog(ns, values);
}

} // namespace gbkop
