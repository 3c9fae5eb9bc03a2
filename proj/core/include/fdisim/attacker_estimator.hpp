#pragma once

#include <functional>
#include <memory>

#include "fdisim/attack.hpp"
#include "fdisim/noise.hpp"
#include "fdisim/plant.hpp"
#include "fdisim/types.hpp"

namespace fdisim {

/// Attacker-side state estimator feeding attack model II.
///
/// Case 1 listens to the system's own sensor outputs (before injection) and
/// may use them with a one-step lag: x̂_t^a = E_t(y_{-T}:y_{-1}, y_0^a:y_{t-1}^a).
/// Case 2 owns a private sensor suite y'_t = h'(x_t) + v'_t and may use y'_t
/// at time t.
class AttackerEstimator {
 public:
  virtual ~AttackerEstimator() = default;
  /// Consume the attack-free warmup history; must leave the estimator ready.
  virtual void begin(const AttackWarmupContext& ctx) = 0;
  /// Case-2 hook: sample private sensors during the measurement phase of step t.
  virtual void on_measurement_phase(const Vec& true_state) { (void)true_state; }
  /// End of step t: system output before injection plus the attacker's input
  /// estimate (the shadow controller output).
  virtual void on_step_complete(const Vec& true_output, const Vec& shadow_input) {
    (void)true_output;
    (void)shadow_input;
  }
  /// x̂_t^a for the step being processed. Throws NotReadyError before begin().
  virtual Vec state_estimate() const = 0;
  /// Declared bound b_zeta (case 1) or b'_zeta (case 2) on ||x̂ - x||.
  virtual double declared_error_bound() const = 0;
};

/// Case 1 default: an attacker-side EKF clone. It replays the controller from
/// its design-time initial state over the snooped warmup measurements to
/// reconstruct inputs, then tracks the plant through the system outputs with a
/// fixed gain. The estimate used at step t is the one-step prediction from
/// data through t-1.
class Case1EkfEstimator final : public AttackerEstimator {
 public:
  /// calibration_window: number of trailing warmup measurements ingested
  /// (-1 = all provided).
  Case1EkfEstimator(const PlantModel& plant, Mat gain, double declared_bound,
                    int calibration_window = -1);
  void begin(const AttackWarmupContext& ctx) override;
  void on_step_complete(const Vec& true_output, const Vec& shadow_input) override;
  Vec state_estimate() const override;
  double declared_error_bound() const override { return declared_bound_; }

 private:
  const PlantModel* plant_;
  Mat gain_;
  double declared_bound_;
  int calibration_window_;
  Vec predicted_;  // x̂_{t|t-1}
  Vec last_input_;
  bool ready_ = false;
};

/// Case 2: private sensors y' = h'(x) + v' fused with a fixed-gain filter.
/// With h' = identity, R_v' = 0 and unit gain this degenerates to a perfect
/// side channel (x̂ = x, b' = 0).
class Case2SensorEstimator final : public AttackerEstimator {
 public:
  Case2SensorEstimator(const PlantModel& plant,
                       std::function<Vec(const Vec&)> own_observation,
                       Mat own_noise_cov, Mat gain, double declared_bound);
  /// Perfect side channel: x̂_t^a = x_t^a exactly.
  static std::unique_ptr<Case2SensorEstimator> perfect(const PlantModel& plant);

  void begin(const AttackWarmupContext& ctx) override;
  void on_measurement_phase(const Vec& true_state) override;
  void on_step_complete(const Vec& true_output, const Vec& shadow_input) override;
  Vec state_estimate() const override;
  double declared_error_bound() const override { return declared_bound_; }

 private:
  Vec own_measurement(const Vec& true_state);

  const PlantModel* plant_;
  std::function<Vec(const Vec&)> own_observation_;
  Mat own_noise_chol_;  // 0x0 when the private sensors are noiseless
  Mat gain_;
  double declared_bound_;
  std::unique_ptr<NoiseStream> noise_;
  Vec corrected_;   // x̂_t^a after fusing y'_t
  Vec last_input_;
  bool ready_ = false;
};

}  // namespace fdisim
