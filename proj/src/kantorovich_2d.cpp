#include "gbkop/kantorovich_2d.hpp"

#include <cmath>

#include "gbkop/quadrature.hpp"
#include "gbkop/summation.hpp"

namespace gbkop {

namespace {

void require_shared_a(const BasisParams& p1, const BasisParams& p2) {
    if (p1.a != p2.a) {
        throw std::invalid_argument(
            "bivariate operator: both axes must share the shape parameter a");
    }
}

// Double series with optional derivative kernel on the x-axis. The y-axis
// weights and node positions are computed once and reused for every k1 row.
double double_series(const BasisParams& p1, const BasisParams& p2, const Function2D& f,
                     double x, double y, double eps, const CellQuadrature& q,
                     bool x_derivative) {
    double eps_x = eps / 4.0;
    int growth_x = f.growth_x;
    if (x_derivative) {
        eps_x /= std::max(1.0, (p1.n + 1.0) / x);
        growth_x += 1;
    }
    const TruncatedBasis wx = truncate_basis(p1, x, eps_x, growth_x);
    const TruncatedBasis wy = truncate_basis(p2, y, eps / 4.0, f.growth_y);
    const GaussLegendre& rule = gauss_legendre(q.nodes_per_cell);
    const int g = static_cast<int>(rule.nodes.size());
    const double hx = 1.0 / (p1.n + 1.0);
    const double hy = 1.0 / (p2.n + 1.0);

    // Flattened y-axis sample positions and combined weights W_{k2} w_j / 2.
    std::vector<double> yv, yw;
    yv.reserve(wy.weights.size() * g);
    yw.reserve(wy.weights.size() * g);
    for (size_t i2 = 0; i2 < wy.weights.size(); ++i2) {
        const int k2 = wy.first + static_cast<int>(i2);
        const double mid = (k2 + 0.5) * hy;
        for (int j = 0; j < g; ++j) {
            yv.push_back(mid + 0.5 * hy * rule.nodes[j]);
            yw.push_back(wy.weights[i2] * 0.5 * rule.weights[j]);
        }
    }

    const double denom = x * (1.0 + x) * (1.0 + x);
    CompensatedSum outer;
    for (size_t i1 = 0; i1 < wx.weights.size(); ++i1) {
        const int k1 = wx.first + static_cast<int>(i1);
        double wk1 = wx.weights[i1];
        if (x_derivative) {
            wk1 *= ((k1 - p1.n * x) * (1.0 + x) - p1.a * x) / denom;
        }
        const double mid = (k1 + 0.5) * hx;
        double row = 0.0;
        for (int i = 0; i < g; ++i) {
            const double u = mid + 0.5 * hx * rule.nodes[i];
            double inner = 0.0;
            for (size_t t = 0; t < yv.size(); ++t) inner += yw[t] * f(u, yv[t]);
            row += 0.5 * rule.weights[i] * inner;
        }
        outer.add(wk1 * row);
    }
    return outer.value();
}

double tensor_series(const BasisParams& p1, const BasisParams& p2, const Function2D& f,
                     double x, double y, double eps, const CellQuadrature& q,
                     bool x_derivative) {
    const double term_eps = eps / (2.0 * static_cast<double>(f.tensor_terms.size()));
    CompensatedSum acc;
    for (const auto& term : f.tensor_terms) {
        const double fx = x_derivative
                              ? apply_1d_derivative(p1, term.fx, x, term_eps, q)
                              : apply_1d(p1, term.fx, x, term_eps, q);
        const double fy = apply_1d(p2, term.fy, y, term_eps, q);
        acc.add(fx * fy);
    }
    return acc.value();
}

} // namespace

BoundFactors delta_bound(const BasisParams& params, double x) {
    if (!(x >= 0.0)) throw std::invalid_argument("delta_bound: x must be >= 0");
    const double phi_sq = x * (1.0 + x);
    const double delta_sq = phi_sq + (1.0 + params.a) * (1.0 + params.a) / (params.n + 1.0);
    return BoundFactors{std::sqrt(phi_sq), delta_sq, delta_sq / (params.n + 1.0)};
}

double apply_2d(const BasisParams& p1, const BasisParams& p2, const Function2D& f,
                double x, double y, double eps, const CellQuadrature& q) {
    require_shared_a(p1, p2);
    if (!(x >= 0.0 && y >= 0.0)) throw std::invalid_argument("apply_2d: x, y must be >= 0");
    if (!(eps > 0.0)) throw std::invalid_argument("apply_2d: eps must be > 0");
    if (f.separable()) return tensor_series(p1, p2, f, x, y, eps, q, false);
    return double_series(p1, p2, f, x, y, eps, q, false);
}

double test_moment_2d_closed(const BasisParams& p1, const BasisParams& p2, int i, int j,
                             double x, double y) {
    require_shared_a(p1, p2);
    if (i < 0 || j < 0 || i > 3 || j > 3) {
        throw std::invalid_argument("test_moment_2d_closed: indices limited to 0..3");
    }
    return raw_moment_closed(p1, i, x) * raw_moment_closed(p2, j, y);
}

double central_moment_2d_closed(const BasisParams& p1, const BasisParams& p2, Axis axis,
                                int r, double x, double y) {
    require_shared_a(p1, p2);
    if (r < 1 || r > 2) {
        throw std::invalid_argument("central_moment_2d_closed: r must be 1 or 2");
    }
    return axis == Axis::U ? central_moment_closed(p1, r, x)
                           : central_moment_closed(p2, r, y);
}

double partial_x(const BasisParams& p1, const BasisParams& p2, const Function2D& f,
                 double x, double y, double eps, const CellQuadrature& q) {
    require_shared_a(p1, p2);
    if (!(x > 0.0)) {
        throw std::domain_error("partial_x: requires x > 0; the derivative is defined "
                                "on the open quadrant only");
    }
    if (f.separable()) return tensor_series(p1, p2, f, x, y, eps, q, true);
    return double_series(p1, p2, f, x, y, eps, q, true);
}

double partial_y(const BasisParams& p1, const BasisParams& p2, const Function2D& f,
                 double x, double y, double eps, const CellQuadrature& q) {
    require_shared_a(p1, p2);
    if (!(y > 0.0)) {
        throw std::domain_error("partial_y: requires y > 0; the derivative is defined "
                                "on the open quadrant only");
    }
    // Mirror through the axis swap.
    Function2D swapped;
    swapped.eval = [&f](double v, double u) { return f(u, v); };
    swapped.growth_x = f.growth_y;
    swapped.growth_y = f.growth_x;
    swapped.label = f.label;
    for (const auto& term : f.tensor_terms) {
        swapped.tensor_terms.push_back(TensorTerm{term.fy, term.fx});
    }
    return partial_x(p2, p1, swapped, y, x, eps, q);
}

} // namespace gbkop
