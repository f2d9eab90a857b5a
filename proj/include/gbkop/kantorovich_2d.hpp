#pragma once

#include "gbkop/kantorovich_1d.hpp"

namespace gbkop {

/// Ingredients of the second-central-moment bound: phi(x) = sqrt(x(1+x)),
/// delta_n^2(x) = phi^2(x) + (1+a)^2/(n+1), and the bound delta_n^2/(n+1)
/// that dominates K((u-x)^2; x, .).
struct BoundFactors {
    double phi;
    double delta_sq;
    double bound;
};

BoundFactors delta_bound(const BasisParams& params, double x);

enum class Axis { U, V };

/// K_{n1,n2}^a(f; x, y). Both axes must share the shape parameter a.
/// Separable f (tensor terms declared) is evaluated as a sum of products of
/// univariate applications; otherwise the double series runs over certified
/// per-axis windows with the tensor-product weight.
double apply_2d(const BasisParams& p1, const BasisParams& p2, const Function2D& f,
                double x, double y, double eps, const CellQuadrature& q = {});

/// Closed forms for the test-function images K(e_{i,j}); axis-pure indices
/// come from the univariate moment formulas, mixed indices from the tensor
/// product identity.
double test_moment_2d_closed(const BasisParams& p1, const BasisParams& p2, int i, int j,
                             double x, double y);

/// Closed first and second central moments per axis (r in {1,2}); axis U uses
/// (n1, x), axis V uses (n2, y).
double central_moment_2d_closed(const BasisParams& p1, const BasisParams& p2, Axis axis,
                                int r, double x, double y);

/// (d/dw K_{n1,n2}^a(f; w, y)) at w = x, analytic via the basis weight
/// derivative on the x-axis. Requires x > 0.
double partial_x(const BasisParams& p1, const BasisParams& p2, const Function2D& f,
                 double x, double y, double eps, const CellQuadrature& q = {});

/// Symmetric counterpart in y. Requires y > 0.
double partial_y(const BasisParams& p1, const BasisParams& p2, const Function2D& f,
                 double x, double y, double eps, const CellQuadrature& q = {});

} // namespace gbkop
