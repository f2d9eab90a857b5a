#pragma once

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gbkop {

/// Polynomial in powers of (t - center). Keeping the expansion point explicit
/// lets cell averages of (t - x)^r be formed from nonnegative-magnitude terms
/// instead of antiderivative differences, which cancel catastrophically for
/// narrow cells far from x.
struct ShiftedPoly {
    double center = 0.0;
    std::vector<double> coeffs; // coeffs[m] multiplies (t - center)^m

    double operator()(double t) const;
    int degree() const { return coeffs.empty() ? 0 : static_cast<int>(coeffs.size()) - 1; }

    /// t^r
    static ShiftedPoly monomial(int r);
    /// (t - center)^r
    static ShiftedPoly power(double center, int r);

    /// Same polynomial re-expanded around new_center.
    ShiftedPoly rebased(double new_center) const;
    /// Product; operands are rebased to a common center first.
    ShiftedPoly times(const ShiftedPoly& other) const;
};

/// Mean of (t - center)^m over a cell of width h around cell midpoint at
/// distance d = midpoint - center: sum over even j of C(m,j) d^{m-j} (h/2)^j/(j+1).
double shifted_power_cell_mean(int m, double d, double h);

/// Real function on [0, inf) with a declared polynomial growth exponent.
/// When `poly` is set, Kantorovich cell averages are computed exactly.
struct Function1D {
    std::function<double(double)> eval;
    int growth = 0;
    std::string label;
    std::optional<ShiftedPoly> poly;

    double operator()(double t) const { return eval(t); }

    static Function1D from_poly(ShiftedPoly p, std::string label);
    static Function1D from_lambda(std::function<double(double)> f, int growth,
                                  std::string label);
};

/// One separable component f1(x) f2(y).
struct TensorTerm {
    Function1D fx;
    Function1D fy;
};

/// Real function on the quadrant with declared growth exponents (gamma1,
/// gamma2), an optional finite tensor-sum decomposition (a single term is the
/// separable case), and optional partial derivatives up to total order 3.
struct Function2D {
    std::function<double(double, double)> eval;
    int growth_x = 0;
    int growth_y = 0;
    std::string label;
    std::vector<TensorTerm> tensor_terms;

    // partials[dx][dy], dx + dy <= 3; empty std::function means undeclared.
    std::array<std::array<std::function<double(double, double)>, 4>, 4> partials{};

    double operator()(double x, double y) const { return eval(x, y); }
    bool separable() const { return !tensor_terms.empty(); }
    bool has_partial(int dx, int dy) const;
    double partial(int dx, int dy, double x, double y) const;

    /// Spot checks: tensor terms reproduce the evaluator on a 5x5 grid to
    /// 1e-12, and declared first/second partials match central finite
    /// differences to relative 1e-4.
    void validate() const;
};

} // namespace gbkop
