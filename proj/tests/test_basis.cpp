#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "gbkop/basis.hpp"
#include "gbkop/summation.hpp"

using namespace gbkop;

namespace {

// Brute-force weight via the convolution identity, independent of the window
// machinery: classical Baskakov factor mixed with a Poisson factor.
double poisson_pmf(double lambda, int j) {
    if (lambda == 0.0) return j == 0 ? 1.0 : 0.0;
    return std::exp(-lambda + j * std::log(lambda) - std::lgamma(j + 1.0));
}

double baskakov_classic(int n, int m, double x) {
    if (x == 0.0) return m == 0 ? 1.0 : 0.0;
    const double lp = std::lgamma(static_cast<double>(n) + m) -
                      std::lgamma(static_cast<double>(n)) - std::lgamma(m + 1.0);
    return std::exp(lp + m * std::log(x) - (n + m) * std::log1p(x));
}

double weight_by_convolution(const BasisParams& p, int k, double x) {
    const double lambda = p.a * x / (1.0 + x);
    CompensatedSum acc;
    for (int j = 0; j <= k; ++j) {
        acc.add(poisson_pmf(lambda, j) * baskakov_classic(p.n, k - j, x));
    }
    return acc.value();
}

} // namespace

TEST_CASE("pochhammer log values") {
    CHECK(pochhammer_log(5, 0) == doctest::Approx(0.0));
    CHECK(pochhammer_log(2, 3) == doctest::Approx(std::log(24.0)));
    CHECK(pochhammer_log(1, 4) == doctest::Approx(std::log(24.0)));
    CHECK_THROWS_AS(pochhammer_log(0, 1), std::invalid_argument);
}

TEST_CASE("coefficient polynomial small cases") {
    CHECK(poly_p(0, BasisParams(7, 3.25)) == doctest::Approx(1.0));
    // k=1: a + n
    CHECK(poly_p(1, BasisParams(3, 2.0)) == doctest::Approx(5.0));
    // k=2: a^2 + 2na + n(n+1)
    CHECK(poly_p(2, BasisParams(2, 1.0)) == doctest::Approx(11.0).epsilon(1e-14));
}

TEST_CASE("coefficient polynomial overflow is signaled") {
    CHECK_THROWS_AS(poly_p(5000, BasisParams(50, 1.0)), std::overflow_error);
    CHECK_NOTHROW(poly_p_log(5000, BasisParams(50, 1.0)));
}

TEST_CASE("recurrence table matches the direct log-sum-exp") {
    for (int n : {1, 5, 50, 500}) {
        for (double a : {0.0, 0.5, 2.0, 5.0}) {
            const BasisParams p(n, a);
            const auto table = poly_p_log_table(p, 2000);
            for (int k : {0, 1, 2, 17, 100, 555, 2000}) {
                const double direct = poly_p_log(k, p);
                CAPTURE(n);
                CAPTURE(a);
                CAPTURE(k);
                CHECK(table[k] == doctest::Approx(direct).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("basis weight at x = 0") {
    const BasisParams p(3, 1.5);
    CHECK(basis_weight(p, 0, 0.0) == 1.0);
    CHECK(basis_weight(p, 1, 0.0) == 0.0);
    CHECK(basis_weight(p, 2, 0.0) == 0.0);
}

TEST_CASE("basis weight closed value at a = 0") {
    // W_{2,1}^0(1) = (2)_1/1! * 1/2^3 = 0.25
    CHECK(basis_weight(BasisParams(2, 0.0), 1, 1.0) ==
          doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("window weights sum to one") {
    const BasisParams p(10, 2.0);
    const TruncatedBasis tb = truncate_basis(p, 1.5, 1e-13, 0);
    CHECK(std::abs(tb.weight_sum() - 1.0) <= 1e-12 + tb.tail_bound);
}

TEST_CASE("partition of unity across the parameter box") {
    for (int n : {1, 2, 5, 20, 100, 500}) {
        for (double a : {0.0, 0.5, 1.0, 2.0, 5.0}) {
            const BasisParams p(n, a);
            for (double x : {0.0, 0.1, 0.7, 1.0, 3.0, 10.0}) {
                const TruncatedBasis tb = truncate_basis(p, x, 1e-12, 0);
                const double sum = tb.weight_sum();
                CAPTURE(n);
                CAPTURE(a);
                CAPTURE(x);
                CHECK(std::abs(sum - 1.0) <= 1e-12 + tb.tail_bound);
                CHECK(sum <= 1.0 + 1e-12);
                CHECK(sum + tb.tail_bound >= 1.0 - 1e-12);
                for (double w : tb.weights) {
                    CHECK(w >= 0.0);
                }
            }
        }
    }
}

TEST_CASE("window example: n=50, a=1, x=2 at eps 1e-12") {
    const TruncatedBasis tb = truncate_basis(BasisParams(50, 1.0), 2.0, 1e-12, 0);
    const double sum = tb.weight_sum();
    CHECK(sum >= 1.0 - 1e-12);
    CHECK(sum <= 1.0 + 1e-12);
    // Compare against a brute-force sum over k <= 10 n x.
    CompensatedSum brute;
    for (int k = 0; k <= 1000; ++k) {
        brute.add(weight_by_convolution(BasisParams(50, 1.0), k, 2.0));
    }
    CHECK(std::abs(sum - brute.value()) <= tb.tail_bound + 1e-12);
}

TEST_CASE("growth-certified window reproduces fourth-moment contributions") {
    const BasisParams p(20, 0.0);
    const double x = 1.0;
    const TruncatedBasis tb = truncate_basis(p, x, 1e-10, 4);
    auto cell_t4 = [&](int k) {
        const double h = 1.0 / (p.n + 1.0);
        const double mid = (k + 0.5) * h;
        // mean of t^4 over the cell via the even-power midpoint expansion
        return std::pow(mid, 4) + 6.0 * mid * mid * (h * h / 4.0) / 3.0 +
               std::pow(h / 2.0, 4) / 5.0;
    };
    CompensatedSum windowed;
    for (size_t i = 0; i < tb.weights.size(); ++i) {
        windowed.add(tb.weights[i] * cell_t4(tb.first + static_cast<int>(i)));
    }
    CompensatedSum wide;
    const int wide_max = (tb.last() + 1) * 10;
    for (int k = 0; k <= wide_max; ++k) {
        wide.add(weight_by_convolution(p, k, x) * cell_t4(k));
    }
    CHECK(std::abs(windowed.value() - wide.value()) <= 1e-9);
}

TEST_CASE("window at x = 0 is the single index 0") {
    const TruncatedBasis tb = truncate_basis(BasisParams(7, 2.0), 0.0, 1e-14, 0);
    CHECK(tb.first == 0);
    REQUIRE(tb.weights.size() == 1);
    CHECK(tb.weights[0] == 1.0);
    CHECK(tb.tail_bound == 0.0);
}

TEST_CASE("window cap failure is signaled") {
    CHECK_THROWS_AS(truncate_basis(BasisParams(500, 1.0), 10.0, 1e-12, 0, 50),
                    WindowCapError);
}

TEST_CASE("convolution decomposition identity") {
    for (int n : {1, 5, 50}) {
        for (double a : {0.5, 1.0, 3.0}) {
            const BasisParams p(n, a);
            for (double x : {0.3, 1.0, 2.7}) {
                for (int k : {0, 1, 2, 5, 20, 100, 200}) {
                    CAPTURE(n);
                    CAPTURE(a);
                    CAPTURE(x);
                    CAPTURE(k);
                    const double direct = basis_weight(p, k, x);
                    const double conv = weight_by_convolution(p, k, x);
                    CHECK(std::abs(direct - conv) <= 1e-12);
                }
            }
        }
    }
}

TEST_CASE("derivative vanishes when k = n x and a = 0") {
    CHECK(basis_weight_derivative(BasisParams(3, 0.0), 3, 1.0) == doctest::Approx(0.0));
}

TEST_CASE("derivative closed value") {
    // d/dx W_{2,0}^1(x) at x=1: W * ((0-2)*2 - 1)/(1*4) = -(5/4) e^{-1/2} / 4
    const double got = basis_weight_derivative(BasisParams(2, 1.0), 0, 1.0);
    const double want = -(5.0 / 4.0) * std::exp(-0.5) / 4.0;
    CHECK(got == doctest::Approx(want).epsilon(1e-13));
}

TEST_CASE("derivative matches central finite differences") {
    const BasisParams p(5, 2.0);
    const int k = 4;
    const double x = 0.7;
    const double h = 1e-6;
    const double fd = (basis_weight(p, k, x + h) - basis_weight(p, k, x - h)) / (2 * h);
    CHECK(basis_weight_derivative(p, k, x) == doctest::Approx(fd).epsilon(1e-6));
}

TEST_CASE("derivative finite-difference sweep") {
    const BasisParams p(12, 1.0);
    for (double x : {0.1, 0.5, 1.0, 2.5, 5.0}) {
        const double h = 1e-6 * std::max(1.0, x);
        for (int k : {0, 3, 10, 25}) {
            const double fd =
                (basis_weight(p, k, x + h) - basis_weight(p, k, x - h)) / (2 * h);
            const double an = basis_weight_derivative(p, k, x);
            CAPTURE(x);
            CAPTURE(k);
            if (std::abs(fd) > 1e-12) {
                CHECK(an == doctest::Approx(fd).epsilon(1e-5));
            } else {
                CHECK(std::abs(an - fd) <= 1e-10);
            }
        }
    }
}

TEST_CASE("derivative sum over a window vanishes") {
    const BasisParams p(30, 1.0);
    const double x = 1.3;
    const TruncatedBasis tb = truncate_basis(p, x, 1e-14, 1);
    CompensatedSum acc;
    for (size_t i = 0; i < tb.weights.size(); ++i) {
        const int k = tb.first + static_cast<int>(i);
        acc.add(basis_weight_derivative(p, k, x));
    }
    CHECK(std::abs(acc.value()) <= 1e-10);
}

TEST_CASE("derivative refuses the boundary") {
    CHECK_THROWS_AS(basis_weight_derivative(BasisParams(3, 1.0), 2, 0.0),
                    std::domain_error);
}

TEST_CASE("parameter domain is enforced") {
    CHECK_THROWS_AS(BasisParams(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(BasisParams(3, -0.5), std::invalid_argument);
    CHECK_THROWS_AS(truncate_basis(BasisParams(3, 1.0), -1.0, 1e-12, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(truncate_basis(BasisParams(3, 1.0), 1.0, 0.0, 0),
                    std::invalid_argument);
}
