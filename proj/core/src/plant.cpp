#include "fdisim/plant.hpp"

namespace fdisim {

void PlantModel::validate() const {
  require(state_dim > 0, "plant state_dim must be positive");
  require(input_dim >= 0, "plant input_dim must be nonnegative");
  require(output_dim > 0, "plant output_dim must be positive");
  require(static_cast<bool>(transition), "plant transition map is unset");
  require(static_cast<bool>(observation), "plant observation map is unset");
  require(process_cov.rows() == state_dim && process_cov.cols() == state_dim,
          "process_cov must be n x n");
  require(measurement_cov.rows() == output_dim &&
              measurement_cov.cols() == output_dim,
          "measurement_cov must be p x p");
  if (Eigen::LLT<Mat>(process_cov).info() != Eigen::Success)
    throw ConfigError("process_cov is not symmetric positive definite");
  if (Eigen::LLT<Mat>(measurement_cov).info() != Eigen::Success)
    throw ConfigError("measurement_cov is not symmetric positive definite");
}

Vec step_plant(const PlantModel& plant, const Vec& x, const Vec& u, const Vec& w) {
  require(x.size() == plant.state_dim, "step_plant: state dimension mismatch");
  require(u.size() == plant.input_dim, "step_plant: input dimension mismatch");
  require(w.size() == plant.state_dim, "step_plant: noise dimension mismatch");
  Vec next = plant.transition(x, u) + w;
  if (!next.allFinite())
    throw NumericalError("step_plant: non-finite state produced");
  return next;
}

Vec measure(const PlantModel& plant, const Vec& x, const Vec& v) {
  require(x.size() == plant.state_dim, "measure: state dimension mismatch");
  require(v.size() == plant.output_dim, "measure: noise dimension mismatch");
  Vec y = plant.observation(x) + v;
  if (!y.allFinite()) throw NumericalError("measure: non-finite output produced");
  return y;
}

}  // namespace fdisim
