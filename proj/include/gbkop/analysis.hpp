#pragma once

#include <utility>

#include "gbkop/function_spaces.hpp"
#include "gbkop/kantorovich_2d.hpp"

namespace gbkop {

struct ExperimentRow {
    int n1 = 0;
    int n2 = 0;
    double x = 0.0;
    double y = 0.0;
    double observed = 0.0;
    double bound_or_limit = 0.0;
    double ratio = 0.0;
    bool failed = false;
    std::string note;
};

struct ExperimentMeta {
    double a = 0.0;
    std::string function_label;
    double eps = 0.0;
    std::string grid_spec;
    std::string observed_desc;
    std::string bound_desc;
    std::string timestamp; // set by the runner; never written into data files
};

struct ExperimentTable {
    std::vector<ExperimentRow> rows;
    ExperimentMeta meta;
};

/// Least-squares fit diagnostics; r_squared is reported, never hidden.
struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    int n_min = 0;
    int n_max = 0;
    int points = 0;
};

enum class RateBoundVariant { DerivativeNorm, Modulus };
enum class VoronovskajaVariant { Paper, Moment };
enum class TableColumn { Observed, BoundOrLimit, Ratio };

/// |K_{n1,n2}^a f - f| at each point for an increasing parameter sequence.
/// observed = error, bound_or_limit = f(x,y), ratio = observed/limit.
ExperimentTable convergence_experiment(const Function2D& f,
                                       const std::vector<std::pair<int, int>>& params_seq,
                                       double a,
                                       const std::vector<std::pair<double, double>>& points,
                                       double eps);

/// Weighted error against the first-derivative-norm bound (variant
/// DerivativeNorm) or the weighted-modulus bound (variant Modulus). The ratio
/// column carries the empirical constant; its maximum is the fitted M.
ExperimentTable rate_bound_experiment(const Function2D& f,
                                      const std::vector<std::pair<int, int>>& params_seq,
                                      double a,
                                      const std::vector<std::pair<double, double>>& points,
                                      const EvaluationGrid& grid, double eps,
                                      RateBoundVariant variant);

/// Per-n suprema of w(x) K_n^a(1/w; x) (observed column) and of
/// w(x) K_n^a((t-x)^2/w(t); x) (n+1)/delta_n^2(x) (bound column); both must
/// stay bounded uniformly in n.
ExperimentTable weighted_boundedness_check(int gamma, const std::vector<int>& ns, double a,
                                           const EvaluationGrid& grid);

/// First-order asymptotic right-hand side; the two variants differ in the
/// second-order coefficient c(x): x(x+2)/2 (Paper) vs x(x+1)/2 (Moment, the
/// limit of n u_{n,2}/2 implied by the central second moment).
double voronovskaja_rhs(const Function2D& f, double a, double x, double y,
                        VoronovskajaVariant variant);

struct VoronovskajaResult {
    double estimate = 0.0; // Richardson extrapolation from the two largest n
    SlopeFit fit;          // linear fit of the values against 1/n
    std::vector<int> ns;
    std::vector<double> values; // n (K_{n,n} f - f)
};

/// Richardson-extrapolated limit of n (K_{n,n} f - f) at (x, y).
VoronovskajaResult voronovskaja_limit(const Function2D& f, double a, double x, double y,
                                      const std::vector<int>& ns, double eps);

/// observed = |d/dx K_{n,n} f - f_x|, bound_or_limit = |d/dy K_{n,n} f - f_y|.
ExperimentTable derivative_convergence(const Function2D& f, double a, double x, double y,
                                       const std::vector<int>& ns, double eps);

enum class DerivAxis { X, Y };

/// Right-hand side of the first-order asymptotic for the operator's partial
/// derivative; requires partials up to total order 3.
double derivative_voronovskaja_rhs(const Function2D& f, double a, double x, double y,
                                   DerivAxis axis);

struct Theorem41Components {
    double M_term = 0.0;     // delta_{n1}^2(x)/(n1+1) + delta_{n2}^2(y)/(n2+1)
    double omega_term = 0.0; // complete modulus at the first-moment deviation radius
    double error = 0.0;      // |K f - f|
};

Theorem41Components theorem41_components(const Function2D& f, const BasisParams& p1,
                                         const BasisParams& p2, double x, double y,
                                         const EvaluationGrid& grid, double eps);

/// Log-log least squares of a positive table column against n1.
SlopeFit order_fit(const ExperimentTable& table, TableColumn column);

/// Same fit from raw value pairs.
SlopeFit fit_loglog(const std::vector<int>& ns, const std::vector<double>& values);

/// Linear least squares of values against 1/n (Voronovskaja diagnostics).
SlopeFit fit_against_reciprocal(const std::vector<int>& ns,
                                const std::vector<double>& values);

} // namespace gbkop
