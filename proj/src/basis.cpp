#include "gbkop/basis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gbkop/summation.hpp"

namespace gbkop {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_binomial(int k, int i) {
    return std::lgamma(k + 1.0) - std::lgamma(i + 1.0) - std::lgamma(k - i + 1.0);
}

// Incremental per-(params, x) evaluation state. log k! and log P_k tables are
// grown on demand so window expansion costs O(1) per new index. The tables
// are carried in extended precision: the log terms reach magnitude ~1e4 for
// windows thousands of indices wide, and double quantization of such logs
// alone costs ~2e-12 relative weight error, which would eat the whole
// partition-of-unity budget.
class WeightSeries {
public:
    WeightSeries(const BasisParams& p, double x)
        : p_(p),
          log_x_(x > 0.0 ? std::log(static_cast<long double>(x)) : 0.0L),
          log_1px_(std::log1p(static_cast<long double>(x))),
          lam_(static_cast<long double>(p.a) * x / (1.0L + x)) {
        log_fact_ = {0.0L};
        log_p_ = {0.0L};
        ratio_ = {static_cast<long double>(p_.a) + p_.n}; // R_0 = P_1/P_0
    }

    double weight(int k) {
        ensure(k);
        long double lw = -lam_ + log_p_[k] - log_fact_[k] -
                         (static_cast<long double>(p_.n) + k) * log_1px_;
        if (k > 0) lw += k * log_x_; // 0 * log 0 := 0 at k = 0
        return static_cast<double>(std::exp(lw));
    }

private:
    void ensure(int k) {
        while (static_cast<int>(log_p_.size()) <= k) {
            const int m = static_cast<int>(log_p_.size()); // computing index m
            log_fact_.push_back(log_fact_.back() + std::log(static_cast<long double>(m)));
            log_p_.push_back(log_p_.back() + std::log(ratio_.back()));
            // R_m = a + n + m - a m / R_{m-1}
            ratio_.push_back(static_cast<long double>(p_.a) + p_.n + m -
                             static_cast<long double>(p_.a) * m / ratio_.back());
        }
    }

    BasisParams p_;
    long double log_x_;
    long double log_1px_;
    long double lam_;
    std::vector<long double> log_fact_;
    std::vector<long double> log_p_;
    std::vector<long double> ratio_;
};

} // namespace

double pochhammer_log(int n, int i) {
    if (n < 1) throw std::invalid_argument("pochhammer_log: n must be >= 1");
    if (i < 0) throw std::invalid_argument("pochhammer_log: i must be >= 0");
    if (i == 0) return 0.0;
    return std::lgamma(static_cast<double>(n) + i) - std::lgamma(static_cast<double>(n));
}

double poly_p_log(int k, const BasisParams& params) {
    if (k < 0) throw std::invalid_argument("poly_p_log: k must be >= 0");
    if (k == 0) return 0.0;
    if (params.a == 0.0) return pochhammer_log(params.n, k); // only the i = k term survives
    const double log_a = std::log(params.a);
    std::vector<double> terms(k + 1);
    double peak = kNegInf;
    for (int i = 0; i <= k; ++i) {
        terms[i] = log_binomial(k, i) + pochhammer_log(params.n, i) + (k - i) * log_a;
        peak = std::max(peak, terms[i]);
    }
    CompensatedSum acc;
    for (double t : terms) acc.add(std::exp(t - peak));
    return peak + std::log(acc.value());
}

double poly_p(int k, const BasisParams& params) {
    const double lp = poly_p_log(k, params);
    if (lp >= std::log(std::numeric_limits<double>::max())) {
        throw std::overflow_error("poly_p: value exceeds double range for k = " +
                                  std::to_string(k) + "; use poly_p_log");
    }
    return std::exp(lp);
}

std::vector<double> poly_p_log_table(const BasisParams& params, int k_max) {
    if (k_max < 0) throw std::invalid_argument("poly_p_log_table: k_max must be >= 0");
    std::vector<double> table(k_max + 1, 0.0);
    double ratio = params.a + params.n;
    for (int k = 1; k <= k_max; ++k) {
        table[k] = table[k - 1] + std::log(ratio);
        ratio = params.a + params.n + k - params.a * k / ratio;
    }
    return table;
}

double basis_weight(const BasisParams& params, int k, double x) {
    if (k < 0) throw std::invalid_argument("basis_weight: k must be >= 0");
    if (!(x >= 0.0)) throw std::invalid_argument("basis_weight: x must be >= 0");
    if (x == 0.0) return k == 0 ? 1.0 : 0.0;
    const double lam = params.a * x / (1.0 + x);
    const double lw = -lam + poly_p_log(k, params) - std::lgamma(k + 1.0) +
                      k * std::log(x) - (params.n + k) * std::log1p(x);
    return std::exp(lw);
}

double basis_weight_derivative(const BasisParams& params, int k, double x) {
    if (k < 0) throw std::invalid_argument("basis_weight_derivative: k must be >= 0");
    if (!(x > 0.0)) {
        throw std::domain_error(
            "basis_weight_derivative: requires x > 0; the derivative of the "
            "basis weight is defined on the open quadrant only");
    }
    const double w = basis_weight(params, k, x);
    const double kernel =
        ((k - params.n * x) * (1.0 + x) - params.a * x) / (x * (1.0 + x) * (1.0 + x));
    return w * kernel;
}

double TruncatedBasis::weight_sum() const {
    CompensatedSum acc;
    for (double w : weights) acc.add(w);
    return acc.value();
}

TruncatedBasis truncate_basis(const BasisParams& params, double x, double eps,
                              int growth, std::int64_t hard_cap) {
    if (!(x >= 0.0)) throw std::invalid_argument("truncate_basis: x must be >= 0");
    if (!(eps > 0.0)) throw std::invalid_argument("truncate_basis: eps must be > 0");
    if (growth < 0) throw std::invalid_argument("truncate_basis: growth must be >= 0");

    TruncatedBasis tb{params, x};
    tb.growth = growth;
    if (x == 0.0) {
        // All mass sits at k = 0.
        tb.first = 0;
        tb.weights = {1.0};
        tb.tail_bound = 0.0;
        tb.weighted_tail_bound = 0.0;
        return tb;
    }

    WeightSeries series(params, x);
    const double n1 = params.n + 1.0;
    const double ratio_x = x / (1.0 + x);
    const int center = static_cast<int>(
        std::llround(std::max(0.0, params.n * x + params.a * x / (1.0 + x))));

    const double half_eps = eps / 2.0;

    // Right boundary: W_{k+1}/W_k <= (a+n+k)/(k+1) * x/(1+x), decreasing in k.
    // With the growth factor (1 + t^g) folded in, the weighted tail beyond kR
    // is <= W_{kR} * (1 + ((kR+2)/(n+1))^g) * rho / (1 - q), q the uniform
    // ratio bound of the weighted terms.
    int k_right = center;
    double right_mass = 0.0, right_weighted = 0.0;
    for (;; ++k_right) {
        if (k_right - center + 1 > hard_cap) {
            throw WindowCapError("truncate_basis: certified window exceeds the hard cap");
        }
        const double rho = (params.a + params.n + k_right) / (k_right + 1.0) * ratio_x;
        if (rho < 1.0) {
            const double q =
                rho * std::pow((k_right + 3.0) / (k_right + 2.0), growth);
            if (q < 1.0) {
                const double w = series.weight(k_right);
                const double g0 = 1.0 + std::pow((k_right + 2.0) / n1, growth);
                right_weighted = w * g0 * rho / (1.0 - q);
                right_mass = w * rho / (1.0 - rho);
                if (right_weighted <= half_eps) break;
            }
        }
    }

    // Left boundary: W_{k-1}/W_k <= k (1+x) / (x (n+k-1)), increasing in k, so
    // the value at kL majorizes every deeper ratio. Cells below kL all have
    // t <= (kL+1)/(n+1), so the growth factor is a constant there.
    int k_left = std::min(center, k_right);
    double left_mass = 0.0, left_weighted = 0.0;
    for (;; --k_left) {
        if (k_left == 0) {
            left_mass = 0.0;
            left_weighted = 0.0;
            break;
        }
        const double rho = k_left * (1.0 + x) / (x * (params.n + k_left - 1.0));
        if (rho < 1.0) {
            const double w = series.weight(k_left);
            const double gl = 1.0 + std::pow((k_left + 1.0) / n1, growth);
            left_weighted = w * gl * rho / (1.0 - rho);
            left_mass = w * rho / (1.0 - rho);
            if (left_weighted <= half_eps) break;
        }
        if (k_right - (k_left - 1) + 1 > hard_cap) {
            throw WindowCapError("truncate_basis: certified window exceeds the hard cap");
        }
    }

    tb.first = k_left;
    tb.weights.resize(k_right - k_left + 1);
    for (int k = k_left; k <= k_right; ++k) {
        tb.weights[k - k_left] = series.weight(k);
    }
    tb.tail_bound = left_mass + right_mass;
    tb.weighted_tail_bound = left_weighted + right_weighted;
    return tb;
}

} // namespace gbkop
