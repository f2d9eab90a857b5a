#include "gbkop/function_spaces.hpp"

#include <algorithm>
#include <cmath>

#include "gbkop/quadrature.hpp"

namespace gbkop {

namespace {

// Multiples of res up to limit (inclusive within a relative fuzz). Nested for
// growing limits at fixed res, which is what makes the moduli monotone in
// their step arguments on a fixed grid.
std::vector<double> probe_steps(double limit, double res) {
    std::vector<double> out;
    if (!(limit > 0.0) || !(res > 0.0)) return out;
    const double count = std::floor(limit / res * (1.0 + 1e-12));
    if (count > 200000) {
        throw std::invalid_argument(
            "shift_resolution too fine for the requested step range");
    }
    for (int m = 1; m <= static_cast<int>(count); ++m) out.push_back(m * res);
    return out;
}

} // namespace

EvaluationGrid EvaluationGrid::uniform(double max, double step, double shift_resolution) {
    EvaluationGrid g;
    g.shift_resolution = shift_resolution;
    for (double v = 0.0; v <= max * (1.0 + 1e-12); v += step) {
        g.x_points.push_back(v);
    }
    g.y_points = g.x_points;
    g.validate();
    return g;
}

void EvaluationGrid::validate() const {
    if (x_points.empty() || y_points.empty()) {
        throw std::invalid_argument("EvaluationGrid: empty point set");
    }
    if (!(shift_resolution > 0.0)) {
        throw std::invalid_argument("EvaluationGrid: shift_resolution must be > 0");
    }
    auto ordered = [](const std::vector<double>& v) {
        for (size_t i = 1; i < v.size(); ++i) {
            if (!(v[i] > v[i - 1])) return false;
        }
        return true;
    };
    if (!ordered(x_points) || !ordered(y_points)) {
        throw std::invalid_argument("EvaluationGrid: points must be strictly increasing");
    }
}

double weight(int gamma, double x) {
    if (gamma < 0) throw std::invalid_argument("weight: gamma must be >= 0");
    if (!(x >= 0.0)) throw std::invalid_argument("weight: x must be >= 0");
    return 1.0 / (1.0 + std::pow(x, gamma));
}

double weight2(int gamma1, int gamma2, double x, double y) {
    return weight(gamma1, x) * weight(gamma2, y);
}

double weighted_sup_norm(const Function2D& f, const EvaluationGrid& grid) {
    grid.validate();
    double best = 0.0;
    for (double x : grid.x_points) {
        for (double y : grid.y_points) {
            best = std::max(best,
                            std::abs(f(x, y)) * weight2(f.growth_x, f.growth_y, x, y));
        }
    }
    return best;
}

double weighted_modulus(const Function2D& f, double t, double s,
                        const EvaluationGrid& grid) {
    grid.validate();
    if (!(t >= 0.0) || !(s >= 0.0)) {
        throw std::invalid_argument("weighted_modulus: step arguments must be >= 0");
    }
    const auto hs = probe_steps(t, grid.shift_resolution);
    const auto ds = probe_steps(s, grid.shift_resolution);
    double best = 0.0;
    for (double h : hs) {
        for (double d : ds) {
            for (double x : grid.x_points) {
                for (double y : grid.y_points) {
                    const double diff = f(x + h, y + d) - f(x, y);
                    best = std::max(best, std::abs(diff) *
                                              weight2(f.growth_x, f.growth_y, x, y));
                }
            }
        }
    }
    return best;
}

double complete_modulus(const Function2D& f, double delta, const EvaluationGrid& grid) {
    grid.validate();
    if (!(delta >= 0.0)) throw std::invalid_argument("complete_modulus: delta must be >= 0");
    const auto radii = probe_steps(delta, grid.shift_resolution);
    constexpr int kDirections = 24;
    double best = 0.0;
    for (double x : grid.x_points) {
        for (double y : grid.y_points) {
            const double base = f(x, y);
            for (double r : radii) {
                for (int d = 0; d < kDirections; ++d) {
                    const double theta = 2.0 * M_PI * d / kDirections;
                    const double u = x + r * std::cos(theta);
                    const double v = y + r * std::sin(theta);
                    if (u < 0.0 || v < 0.0) continue;
                    best = std::max(best, std::abs(f(u, v) - base));
                }
            }
        }
    }
    return best;
}

double partial_modulus(const Function2D& f, GridAxis axis, double delta,
                       const EvaluationGrid& grid) {
    grid.validate();
    if (!(delta >= 0.0)) throw std::invalid_argument("partial_modulus: delta must be >= 0");
    const auto hs = probe_steps(delta, grid.shift_resolution);
    double best = 0.0;
    for (double x : grid.x_points) {
        for (double y : grid.y_points) {
            for (double h : hs) {
                const double diff = axis == GridAxis::X ? f(x + h, y) - f(x, y)
                                                        : f(x, y + h) - f(x, y);
                best = std::max(best, std::abs(diff));
            }
        }
    }
    return best;
}

double second_modulus(const Function1D& f, double delta, const EvaluationGrid& grid) {
    grid.validate();
    if (!(delta >= 0.0)) throw std::invalid_argument("second_modulus: delta must be >= 0");
    const auto hs = probe_steps(std::sqrt(delta), grid.shift_resolution);
    double best = 0.0;
    for (double x : grid.x_points) {
        for (double h : hs) {
            best = std::max(best, std::abs(f(x + 2 * h) - 2 * f(x + h) + f(x)));
        }
    }
    return best;
}

double steklov(const Function2D& f, double h, double delta, double x, double y,
               const CellQuadrature& q) {
    if (!(h > 0.0) || !(delta > 0.0)) {
        throw std::invalid_argument("steklov: h and delta must be > 0");
    }
    const GaussLegendre& rule = gauss_legendre(q.nodes_per_cell);
    double acc = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        const double u = 0.5 * h * (1.0 + rule.nodes[i]);
        double inner = 0.0;
        for (size_t j = 0; j < rule.nodes.size(); ++j) {
            const double v = 0.5 * delta * (1.0 + rule.nodes[j]);
            inner += rule.weights[j] * f(x + u, y + v);
        }
        acc += rule.weights[i] * 0.5 * inner;
    }
    return 0.5 * acc;
}

} // namespace gbkop
