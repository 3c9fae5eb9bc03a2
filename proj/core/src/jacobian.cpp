#include "fdisim/jacobian.hpp"

namespace fdisim {

Mat numeric_jacobian(const std::function<Vec(const Vec&)>& map, const Vec& point,
                     double eps) {
  require(eps > 0, "numeric_jacobian: eps must be positive");
  const int k = static_cast<int>(point.size());
  Vec f0 = map(point);
  const int j = static_cast<int>(f0.size());
  Mat J(j, k);
  for (int i = 0; i < k; ++i) {
    Vec xp = point, xm = point;
    xp(i) += eps;
    xm(i) -= eps;
    J.col(i) = (map(xp) - map(xm)) / (2.0 * eps);
  }
  if (!J.allFinite())
    throw NumericalError("numeric_jacobian: non-finite entries");
  return J;
}

}  // namespace fdisim
