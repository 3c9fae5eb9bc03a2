#pragma once

#include <functional>
#include <optional>

#include "fdisim/types.hpp"

namespace fdisim {

/// Discrete-time plant  x_{t+1} = f(x_t, u_t) + w_t,  y_t = h(x_t) + v_t
/// with i.i.d. zero-mean Gaussian noises of covariance process_cov and
/// measurement_cov.
struct PlantModel {
  int state_dim = 0;
  int input_dim = 0;
  int output_dim = 0;
  std::function<Vec(const Vec&, const Vec&)> transition;  // f(x, u)
  std::function<Vec(const Vec&)> observation;             // h(x)
  Mat process_cov;      // R_w, n x n SPD
  Mat measurement_cov;  // R_v, p x p SPD
  std::optional<double> lipschitz_f;
  std::optional<double> lipschitz_h;
  // Declared input-affine form f(x) + B u; enables the input-free attack
  // recursion.
  bool input_affine = false;

  /// Checks dimensions and that both covariances admit a Cholesky factor.
  void validate() const;
};

/// f(x, u) + w. Throws NumericalError on a non-finite result.
Vec step_plant(const PlantModel& plant, const Vec& x, const Vec& u, const Vec& w);

/// h(x) + v. Throws NumericalError on a non-finite result.
Vec measure(const PlantModel& plant, const Vec& x, const Vec& v);

}  // namespace fdisim
