#include "gbkop/kantorovich_1d.hpp"

#include <cmath>

#include "gbkop/quadrature.hpp"
#include "gbkop/summation.hpp"

namespace gbkop {

double cell_average(const Function1D& f, int n, int k, const CellQuadrature& q) {
    if (k < 0) throw std::invalid_argument("cell_average: k must be >= 0");
    const double h = 1.0 / (n + 1.0);
    const double mid = (k + 0.5) * h;
    if (f.poly) {
        const ShiftedPoly& p = *f.poly;
        const double d = mid - p.center;
        double acc = 0.0;
        for (int m = 0; m <= p.degree(); ++m) {
            if (p.coeffs[m] != 0.0) acc += p.coeffs[m] * shifted_power_cell_mean(m, d, h);
        }
        return acc;
    }
    const GaussLegendre& rule = gauss_legendre(q.nodes_per_cell);
    double acc = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        acc += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
    }
    return 0.5 * acc; // Gauss weights sum to 2 on [-1,1]
}

double apply_1d(const BasisParams& params, const Function1D& f, double x, double eps,
                const CellQuadrature& q) {
    if (!(eps > 0.0)) throw std::invalid_argument("apply_1d: eps must be > 0");
    const TruncatedBasis tb = truncate_basis(params, x, eps / 2.0, f.growth);
    CompensatedSum acc;
    for (size_t i = 0; i < tb.weights.size(); ++i) {
        const int k = tb.first + static_cast<int>(i);
        acc.add(tb.weights[i] * cell_average(f, params.n, k, q));
    }
    return acc.value();
}

double apply_1d_derivative(const BasisParams& params, const Function1D& f, double x,
                           double eps, const CellQuadrature& q) {
    if (!(x > 0.0)) {
        throw std::domain_error(
            "apply_1d_derivative: requires x > 0; the derivative series is "
            "defined on the open quadrant only");
    }
    if (!(eps > 0.0)) throw std::invalid_argument("apply_1d_derivative: eps must be > 0");
    const double tighten = std::max(1.0, (params.n + 1.0) / x);
    const TruncatedBasis tb =
        truncate_basis(params, x, eps / (2.0 * tighten), f.growth + 1);
    const double denom = x * (1.0 + x) * (1.0 + x);
    CompensatedSum acc;
    for (size_t i = 0; i < tb.weights.size(); ++i) {
        const int k = tb.first + static_cast<int>(i);
        const double kernel = ((k - params.n * x) * (1.0 + x) - params.a * x) / denom;
        acc.add(tb.weights[i] * kernel * cell_average(f, params.n, k, q));
    }
    return acc.value();
}

double raw_moment_closed(const BasisParams& params, int r, double x) {
    if (!(x >= 0.0)) throw std::invalid_argument("raw_moment_closed: x must be >= 0");
    if (r < 0 || r > 3) {
        throw std::invalid_argument("raw_moment_closed: no closed form for r = " +
                                    std::to_string(r));
    }
    const double n = params.n;
    const double n1 = n + 1.0;
    const double lam = params.a * x / (1.0 + x);
    switch (r) {
        case 0:
            return 1.0;
        case 1:
            return (n * x + lam + 0.5) / n1;
        case 2:
            return (n * n * x * x + n * x * x + 2.0 * n * x + 2.0 * n * x * lam +
                    lam * lam + 2.0 * lam + 1.0 / 3.0) /
                   (n1 * n1);
        default: {
            // Third moment of the Poisson(lambda) + negative-binomial index
            // distribution pushed through the cell means.
            const double b = n * n * n * x * x * x + 1.5 * n * n * x * x * (3.0 + 2.0 * x) +
                             1.5 * n * x * x + 0.5 * n * x * (4.0 * x * x + 6.0 * x + 7.0) +
                             3.0 * n * n * x * x * lam + 3.0 * n * x * lam * (3.0 + x) +
                             3.0 * n * x * lam * lam +
                             lam * (3.5 + 4.5 * lam + lam * lam) + 0.25;
            return b / (n1 * n1 * n1);
        }
    }
}

double central_moment_closed(const BasisParams& params, int r, double x) {
    if (!(x >= 0.0)) throw std::invalid_argument("central_moment_closed: x must be >= 0");
    if (r < 0 || r > 2) {
        throw std::invalid_argument("central_moment_closed: no closed form for r = " +
                                    std::to_string(r));
    }
    const double n = params.n;
    const double n1 = n + 1.0;
    const double lam = params.a * x / (1.0 + x);
    switch (r) {
        case 0:
            return 1.0;
        case 1:
            return (-x + lam + 0.5) / n1;
        default:
            return ((n + 1.0) * x * x + (n - 1.0) * x + lam * lam +
                    2.0 * lam * (1.0 - x) + 1.0 / 3.0) /
                   (n1 * n1);
    }
}

double central_moment_numeric(const BasisParams& params, int r, double x, double eps) {
    if (r < 0 || r > 8) {
        throw std::invalid_argument("central_moment_numeric: r must be in 0..8");
    }
    Function1D f = Function1D::from_poly(ShiftedPoly::power(x, r),
                                         "(t-x)^" + std::to_string(r));
    return apply_1d(params, f, x, eps);
}

} // namespace gbkop
