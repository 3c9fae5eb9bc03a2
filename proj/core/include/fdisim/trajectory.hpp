#pragma once

#include <cstdint>
#include <optional>

#include "fdisim/types.hpp"

namespace fdisim {

/// One closed-loop rollout over steps t = 0..length-1. Column t of every
/// matrix belongs to step t; all series have equal length. When a numerical
/// blowup truncates the run, blowup_step holds the first invalid step and the
/// series end just before it.
struct Trajectory {
  Mat states;             // x_t
  Mat controller_states;  // X_t
  Mat inputs;             // u_t
  Mat true_outputs;       // y_t (before injection)
  Mat received_outputs;   // y_t^c = y_t + a_t
  Mat attacks;            // a_t, zero when attack-free
  Mat predicted_outputs;  // monitor's expected measurement; 0x0 if no monitor
  std::optional<int> blowup_step;

  int length() const { return static_cast<int>(states.cols()); }
  bool has_predictions() const { return predicted_outputs.cols() > 0; }
};

/// Attacked/attack-free rollouts driven by one common noise realization
/// (w_t^a = w_t, v_t^a = v_t) from the same post-warmup state.
struct TrajectoryPair {
  Trajectory free;
  Trajectory attacked;
  // x_t^f = x_t^a - s_t, recorded when the attack generator tracks s_t;
  // 0x0 otherwise.
  Mat fake_states;
  // Innovation covariance of the residual monitor (0x0 if no monitor).
  Mat innovation_cov;
  std::uint64_t master_seed = 0;
  std::uint64_t stream_id = 0;

  bool has_fake_states() const { return fake_states.cols() > 0; }
};

}  // namespace fdisim
