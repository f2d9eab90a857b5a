#pragma once

#include <vector>

#include "gbkop/functions.hpp"
#include "gbkop/kantorovich_1d.hpp"

namespace gbkop {

/// Probe lattice for suprema over the quadrant. Every supremum computed on a
/// grid is a lower estimate of the true value; refining the grid or the shift
/// resolution can only increase it, so inequality checks are phrased in the
/// direction refinement cannot break.
struct EvaluationGrid {
    std::vector<double> x_points;
    std::vector<double> y_points;
    double shift_resolution = 0.01;

    static EvaluationGrid uniform(double max, double step, double shift_resolution);
    void validate() const;
};

/// Polynomial weight w_gamma(x) = 1/(1 + x^gamma); gamma = 0 gives the
/// constant 1/2 (x^0 = 1 by the nonnegative-integer convention).
double weight(int gamma, double x);

/// Product weight w_{g1}(x) w_{g2}(y).
double weight2(int gamma1, int gamma2, double x, double y);

/// Grid estimate of sup |f| w_{g1,g2} with the function's declared growth
/// exponents as the weight indices.
double weighted_sup_norm(const Function2D& f, const EvaluationGrid& grid);

/// Grid estimate of the weighted modulus: sup over 0 < h < t, 0 < d < s of
/// the weighted sup norm of f(x+h, y+d) - f(x, y). Zero when t or s is zero.
double weighted_modulus(const Function2D& f, double t, double s,
                        const EvaluationGrid& grid);

/// Grid estimate of the complete (unweighted) modulus: sup |f(u,v) - f(x,y)|
/// over pairs at Euclidean distance <= delta.
double complete_modulus(const Function2D& f, double delta, const EvaluationGrid& grid);

enum class GridAxis { X, Y };

/// Partial modulus along one axis (unweighted).
double partial_modulus(const Function2D& f, GridAxis axis, double delta,
                       const EvaluationGrid& grid);

/// Second-order modulus of a univariate function or axis slice:
/// sup over 0 < h <= sqrt(delta) of |f(x+2h) - 2 f(x+h) + f(x)|.
double second_modulus(const Function1D& f, double delta, const EvaluationGrid& grid);

/// Steklov mean (1/(h d)) int_0^h int_0^d f(x+u, y+v) dv du by tensor
/// Gauss-Legendre quadrature.
double steklov(const Function2D& f, double h, double delta, double x, double y,
               const CellQuadrature& q = {});

} // namespace gbkop
