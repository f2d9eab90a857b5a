#pragma once

#include <vector>

namespace gbkop {

/// Gauss-Legendre rule on [-1, 1]. Exact for polynomials of degree <= 2n - 1.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Cached rule with `points` nodes. Nodes are computed once by Newton
/// iteration on the Legendre recurrence and reused for the process lifetime.
const GaussLegendre& gauss_legendre(int points);

} // namespace gbkop
