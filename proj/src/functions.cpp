#include "gbkop/functions.hpp"

#include <cmath>

namespace gbkop {

namespace {

double binom(int m, int j) {
    double r = 1.0;
    for (int i = 1; i <= j; ++i) r *= static_cast<double>(m - j + i) / i;
    return r;
}

} // namespace

double ShiftedPoly::operator()(double t) const {
    const double s = t - center;
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * s + *it;
    return acc;
}

ShiftedPoly ShiftedPoly::monomial(int r) { return power(0.0, r); }

ShiftedPoly ShiftedPoly::power(double center, int r) {
    if (r < 0) throw std::invalid_argument("ShiftedPoly::power: r must be >= 0");
    ShiftedPoly p{center, std::vector<double>(r + 1, 0.0)};
    p.coeffs[r] = 1.0;
    return p;
}

ShiftedPoly ShiftedPoly::rebased(double new_center) const {
    const double d = new_center - center; // (t - c) = (t - c') + d
    ShiftedPoly out{new_center, std::vector<double>(coeffs.size(), 0.0)};
    for (int m = 0; m < static_cast<int>(coeffs.size()); ++m) {
        if (coeffs[m] == 0.0) continue;
        for (int j = 0; j <= m; ++j) {
            out.coeffs[j] += coeffs[m] * binom(m, j) * std::pow(d, m - j);
        }
    }
    return out;
}

ShiftedPoly ShiftedPoly::times(const ShiftedPoly& other) const {
    const ShiftedPoly rhs = (other.center == center) ? other : other.rebased(center);
    ShiftedPoly out{center, std::vector<double>(coeffs.size() + rhs.coeffs.size() - 1, 0.0)};
    for (size_t i = 0; i < coeffs.size(); ++i) {
        for (size_t j = 0; j < rhs.coeffs.size(); ++j) {
            out.coeffs[i + j] += coeffs[i] * rhs.coeffs[j];
        }
    }
    return out;
}

double shifted_power_cell_mean(int m, double d, double h) {
    double acc = 0.0;
    const double half = h / 2.0;
    for (int j = 0; j <= m; j += 2) {
        acc += binom(m, j) * std::pow(d, m - j) * std::pow(half, j) / (j + 1);
    }
    return acc;
}

Function1D Function1D::from_poly(ShiftedPoly p, std::string label) {
    Function1D f;
    f.growth = p.degree();
    f.label = std::move(label);
    f.poly = p;
    f.eval = [p = std::move(p)](double t) { return p(t); };
    return f;
}

Function1D Function1D::from_lambda(std::function<double(double)> fn, int growth,
                                   std::string label) {
    Function1D f;
    f.eval = std::move(fn);
    f.growth = growth;
    f.label = std::move(label);
    return f;
}

bool Function2D::has_partial(int dx, int dy) const {
    if (dx < 0 || dy < 0 || dx > 3 || dy > 3 || dx + dy > 3) return false;
    return static_cast<bool>(partials[dx][dy]);
}

double Function2D::partial(int dx, int dy, double x, double y) const {
    if (!has_partial(dx, dy)) {
        throw std::invalid_argument("Function2D: partial d^(" + std::to_string(dx) + "," +
                                    std::to_string(dy) + ") not declared for " + label);
    }
    return partials[dx][dy](x, y);
}

void Function2D::validate() const {
    static const double pts[] = {0.0, 0.5, 1.0, 2.0, 3.0};
    if (separable()) {
        for (double x : pts) {
            for (double y : pts) {
                double s = 0.0;
                for (const auto& term : tensor_terms) s += term.fx(x) * term.fy(y);
                if (std::abs(s - eval(x, y)) > 1e-12 * (1.0 + std::abs(s))) {
                    throw std::logic_error("Function2D: tensor terms do not reproduce " +
                                           label);
                }
            }
        }
    }
    static const double spot[] = {0.5, 1.0, 1.5};
    const double h = 1e-5;
    auto check = [&](double got, double fd, const char* what) {
        if (std::abs(got - fd) > 1e-4 * (1.0 + std::abs(got))) {
            throw std::logic_error(std::string("Function2D: declared ") + what +
                                   " disagrees with finite differences for " + label);
        }
    };
    for (double x : spot) {
        for (double y : spot) {
            if (has_partial(1, 0)) {
                check(partial(1, 0, x, y),
                      (eval(x + h, y) - eval(x - h, y)) / (2 * h), "d/dx");
            }
            if (has_partial(0, 1)) {
                check(partial(0, 1, x, y),
                      (eval(x, y + h) - eval(x, y - h)) / (2 * h), "d/dy");
            }
            if (has_partial(2, 0)) {
                check(partial(2, 0, x, y),
                      (eval(x + h, y) - 2 * eval(x, y) + eval(x - h, y)) / (h * h),
                      "d2/dx2");
            }
            if (has_partial(0, 2)) {
                check(partial(0, 2, x, y),
                      (eval(x, y + h) - 2 * eval(x, y) + eval(x, y - h)) / (h * h),
                      "d2/dy2");
            }
            if (has_partial(1, 1)) {
                check(partial(1, 1, x, y),
                      (eval(x + h, y + h) - eval(x + h, y - h) - eval(x - h, y + h) +
                       eval(x - h, y - h)) /
                          (4 * h * h),
                      "d2/dxdy");
            }
        }
    }
}

} // namespace gbkop
