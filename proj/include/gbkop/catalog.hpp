#pragma once

#include <string>
#include <vector>

#include "gbkop/functions.hpp"

namespace gbkop {

/// Built-in test functions: monomials e_{i,j} for 0 <= i,j <= 3, the sum
/// e_{2,0}+e_{0,2}, exp-decay, sin-product, affine, constant. All carry
/// declared growth, tensor-sum decompositions, and analytic partials up to
/// total order 3. Throws std::invalid_argument for unknown names.
const Function2D& catalog_function(const std::string& name);

/// Names in deterministic (sorted) order.
std::vector<std::string> catalog_names();

} // namespace gbkop
