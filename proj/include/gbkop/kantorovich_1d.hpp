#pragma once

#include "gbkop/basis.hpp"
#include "gbkop/functions.hpp"

namespace gbkop {

/// Fixed Gauss-Legendre rule mapped to each Kantorovich cell
/// [k/(n+1), (k+1)/(n+1)]. Exact for polynomials of degree <= 2G - 1, but
/// declared polynomials bypass quadrature entirely (exact cell means).
struct CellQuadrature {
    int nodes_per_cell = 10;
};

/// (n+1) * integral of f over the k-th Kantorovich cell, i.e. the mean of f
/// over the cell. Exact for Function1D carrying a polynomial description.
double cell_average(const Function1D& f, int n, int k, const CellQuadrature& q = {});

/// K_n^a(f; x): the basis-weighted series of cell averages over a certified
/// window. The truncated tail is bounded by eps times a growth constant of f;
/// half the eps budget goes to the tail, half to accumulated cell error
/// (zero for polynomial f).
double apply_1d(const BasisParams& params, const Function1D& f, double x, double eps,
                const CellQuadrature& q = {});

/// d/dx K_n^a(f; x), computed analytically through the basis weight
/// derivative. Requires x > 0. The window tolerance is tightened by
/// max(1, (n+1)/x) to absorb the derivative kernel's magnitude, and the
/// certified growth is raised by one for the kernel's linear factor.
double apply_1d_derivative(const BasisParams& params, const Function1D& f, double x,
                           double eps, const CellQuadrature& q = {});

/// Closed form of K_n^a(t^r; x) for r in {0,1,2,3}.
double raw_moment_closed(const BasisParams& params, int r, double x);

/// Closed form of the central moment u_{n,r}^a(x) = K_n^a((t-x)^r; x) for
/// r in {0,1,2}.
double central_moment_closed(const BasisParams& params, int r, double x);

/// Series evaluation of u_{n,r}^a(x) for r <= 8 with exact per-cell binomial
/// expansion of (t-x)^r. Oracle for the closed forms and for asymptotic-order
/// experiments.
double central_moment_numeric(const BasisParams& params, int r, double x, double eps);

} // namespace gbkop
