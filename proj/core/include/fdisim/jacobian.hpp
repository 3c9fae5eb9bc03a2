#pragma once

#include <functional>

#include "fdisim/types.hpp"

namespace fdisim {

/// Central-difference Jacobian of F at `point`:
/// column i = (F(x + eps e_i) - F(x - eps e_i)) / (2 eps).
Mat numeric_jacobian(const std::function<Vec(const Vec&)>& map, const Vec& point,
                     double eps = 1e-5);

}  // namespace fdisim
