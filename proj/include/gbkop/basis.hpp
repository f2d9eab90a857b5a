#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gbkop {

/// One univariate generalized Baskakov basis family: operator index n >= 1
/// and shape parameter a >= 0 (a = 0 recovers the classical Baskakov basis).
struct BasisParams {
    int n;
    double a;

    BasisParams(int n_, double a_) : n(n_), a(a_) {
        if (n < 1) throw std::invalid_argument("BasisParams: n must be >= 1");
        if (!(a >= 0.0)) throw std::invalid_argument("BasisParams: a must be >= 0");
    }
};

/// Raised when a certified window would exceed the hard index cap.
struct WindowCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Contiguous window of basis weights W_{n,k}^a(x) with a certified bound on
/// the neglected mass. Immutable once built; safe to share across threads.
struct TruncatedBasis {
    BasisParams params;
    double x;
    int first = 0;                    // index k of weights.front()
    std::vector<double> weights;
    double tail_bound = 0.0;          // certified bound on total mass outside the window
    double weighted_tail_bound = 0.0; // growth-adjusted bound actually certified against eps
    int growth = 0;

    int last() const { return first + static_cast<int>(weights.size()) - 1; }
    double weight_sum() const;
};

/// log((n)_i) for the rising factorial (n)_0 = 1, (n)_i = n(n+1)...(n+i-1).
double pochhammer_log(int n, int i);

/// log P_k(n,a) where P_k(n,a) = sum_{i=0}^{k} C(k,i) (n)_i a^{k-i},
/// evaluated by log-sum-exp over the (all nonnegative) terms.
double poly_p_log(int k, const BasisParams& params);

/// P_k(n,a) as a plain double. Throws std::overflow_error when the value
/// exceeds the double range (k around 170 and beyond); window evaluation
/// never needs the direct value and works through the log form.
double poly_p(int k, const BasisParams& params);

/// log P_k table for k = 0..k_max via the recurrence
/// P_{k+1} = (a + n + k) P_k - a k P_{k-1}, carried in log space through the
/// ratio R_k = P_{k+1}/P_k (forward stable: R_k >= n + k, so the subtracted
/// term is at most a/(n+k-1) in relative size).
std::vector<double> poly_p_log_table(const BasisParams& params, int k_max);

/// W_{n,k}^a(x) = e^{-ax/(1+x)} P_k(n,a)/k! x^k/(1+x)^{n+k}, assembled in log
/// space with one exponentiation. Convention 0^0 = 1 at x = 0.
double basis_weight(const BasisParams& params, int k, double x);

/// d/dx W_{n,k}^a(x) = W_{n,k}^a(x) ((k - nx)(1+x) - ax) / (x (1+x)^2).
/// Requires x > 0; the derivative kernel is defined on the open quadrant only.
double basis_weight_derivative(const BasisParams& params, int k, double x);

/// Certified window around the weight mode (near n x + a x/(1+x)). The window
/// grows until the neglected tail, majorized by a geometric ratio bound and
/// adjusted for an integrand of polynomial growth `growth`, drops below eps.
/// Throws WindowCapError if the window would exceed hard_cap indices.
TruncatedBasis truncate_basis(const BasisParams& params, double x, double eps,
                              int growth, std::int64_t hard_cap = 10'000'000);

} // namespace gbkop
