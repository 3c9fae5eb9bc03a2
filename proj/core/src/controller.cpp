#include "fdisim/controller.hpp"

namespace fdisim {

std::pair<Vec, Vec> step_controller(const ControllerModel& ctrl, const Vec& X_prev,
                                    const Vec& y_c) {
  require(X_prev.size() == ctrl.internal_dim,
          "step_controller: internal state dimension mismatch");
  require(y_c.size() == ctrl.input_dim,
          "step_controller: measurement dimension mismatch");
  Vec X = ctrl.update(X_prev, y_c);
  Vec u = ctrl.output(X, y_c);
  if (!X.allFinite() || !u.allFinite())
    throw NumericalError("step_controller: non-finite controller result");
  return {std::move(X), std::move(u)};
}

ControllerModel make_static_controller(int output_dim, int measurement_dim,
                                       std::function<Vec(const Vec&)> law) {
  ControllerModel ctrl;
  ctrl.internal_dim = 0;
  ctrl.input_dim = measurement_dim;
  ctrl.output_dim = output_dim;
  ctrl.initial_state = Vec::Zero(0);
  ctrl.update = [](const Vec& X, const Vec&) { return X; };
  ctrl.output = [law = std::move(law)](const Vec&, const Vec& y) { return law(y); };
  return ctrl;
}

}  // namespace fdisim
