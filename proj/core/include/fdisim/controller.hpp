#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "fdisim/types.hpp"

namespace fdisim {

/// Feedback controller in state-space form
///   X_t = f_c(X_{t-1}, y_t^c),   u_t = h_c(X_t, y_t^c).
/// Note that the output uses the already-updated internal state.
/// Both maps must be deterministic.
struct ControllerModel {
  int internal_dim = 0;
  int input_dim = 0;   // dimension of y_c consumed
  int output_dim = 0;  // dimension of u produced
  std::function<Vec(const Vec&, const Vec&)> update;  // f_c(X_prev, y_c)
  std::function<Vec(const Vec&, const Vec&)> output;  // h_c(X, y_c)
  Vec initial_state;  // X at start of operation, chosen deterministically
  std::optional<double> lipschitz_fc;
  std::optional<double> lipschitz_hc;
  // Optional hook: expected measurement for the upcoming step given X_{t-1}.
  // Set by estimator-based controllers; used by residual monitors and the
  // outlier-rejection wrapper.
  std::function<Vec(const Vec&)> predict_measurement;
};

/// One controller step; returns (X_t, u_t).
std::pair<Vec, Vec> step_controller(const ControllerModel& ctrl, const Vec& X_prev,
                                    const Vec& y_c);

/// Memoryless output-feedback controller u = law(y).
ControllerModel make_static_controller(int output_dim, int measurement_dim,
                                       std::function<Vec(const Vec&)> law);

}  // namespace fdisim
