#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "fdisim/controller.hpp"
#include "fdisim/plant.hpp"
#include "fdisim/types.hpp"

namespace fdisim {

class AttackerEstimator;  // estimation side, see attacker_estimator.hpp

/// Attack-free warmup context handed to a generator right before t = 0.
/// Histories are ordered oldest-first and cover the final warmup steps.
struct AttackWarmupContext {
  const std::vector<Vec>& states;   // x_t for t = -W..-1
  const std::vector<Vec>& outputs;  // y_t for t = -W..-1
  const ControllerModel& controller;
  std::uint64_t master_seed = 0;
  std::uint64_t stream_id = 0;
};

/// What the generator may see when producing a_t (measurement phase of step t).
struct AttackStepView {
  int t;
  const PlantModel& plant;
  const Vec& true_state;   // x_t^a
  const Vec& true_output;  // y_t^a (noisy, before injection)
};

/// What the generator may see after the controller acted at step t.
struct AttackAdvanceView {
  int t;
  const PlantModel& plant;
  const Vec& true_state;       // x_t^a
  const Vec& true_output;      // y_t^a
  const Vec& input;            // u_t^a
  const Vec& received_output;  // y_t^{c,a}
};

/// Stateful per-rollout attack sequence generator. Causality contract: a_t may
/// depend only on data with index <= t that the generator's knowledge model
/// grants access to (each concrete generator reads only its declared subset of
/// the views).
class AttackGenerator {
 public:
  virtual ~AttackGenerator() = default;
  virtual void begin(const AttackWarmupContext& ctx) { (void)ctx; }
  /// a_t to inject into the measurements of step t.
  virtual Vec attack(const AttackStepView& view) = 0;
  /// Advance internal recursions once u_t^a and y_t^{c,a} exist.
  virtual void advance(const AttackAdvanceView& view) = 0;
  /// Current deviation s_t when the generator tracks one (null otherwise).
  virtual const Vec* shadow_deviation() const { return nullptr; }
};

// ---------------------------------------------------------------------------
// Pure step recursions
// ---------------------------------------------------------------------------

struct AttackStep {
  Vec a;       // injected attack vector
  Vec s_next;  // advanced deviation
};

/// Full-knowledge recursion:
///   s_{t+1} = f(x_t^a, u_t^a) - f(x_t^a - s_t, u_t^a)
///   a_t     = h(x_t^a - s_t) - h(x_t^a)
AttackStep attack1_step(const PlantModel& plant, const Vec& x_a, const Vec& u_a,
                        const Vec& s);

struct AttackStep2 {
  Vec a;
  Vec s_next;
  Vec u_shadow;        // u_t^s from the shadow controller
  Vec shadow_state;    // X_t^s
};

/// Partial-knowledge recursion driven by the state estimate x̂_t^a and the
/// shadow controller fed the compromised measurements:
///   X_t^s   = f_c(X_{t-1}^s, y_t^{c,a}),  u_t^s = h_c(X_t^s, y_t^{c,a})
///   s_{t+1} = f(x̂_t^a, u_t^s) - f(x̂_t^a - s_t, u_t^s)
///   a_t     = h(x̂_t^a - s_t) - h(x̂_t^a)
AttackStep2 attack2_step(const PlantModel& plant, const ControllerModel& ctrl,
                         const Vec& xhat_a, const Vec& s, const Vec& shadow_prev,
                         const Vec& y_ca);

/// Input-affine relaxation: s_{t+1} = f(x) - f(x - s) with no input argument.
/// The plant must be declared input_affine (the transition is evaluated at a
/// zero input, which the affine structure makes immaterial).
AttackStep attack_affine_step(const PlantModel& plant, const Vec& x_ref,
                              const Vec& s);

/// LTI recursion s_{t+1} = A s_t, a_t = -C s_t.
AttackStep attack_lti_step(const Mat& A, const Mat& C, const Vec& s);

// ---------------------------------------------------------------------------
// Initial deviation selection
// ---------------------------------------------------------------------------

enum class S0Mode { unstable_eigvec, min_sensor_support };

/// Picks s_0 of norm `magnitude` along an unstable direction of A.
/// - unstable_eigvec: direction of largest one-step growth within the real
///   (pair of) eigendirection(s) of the eigenvalue of largest modulus > 1.
/// - min_sensor_support: among unstable eigendirections q_i with C q_i != 0,
///   the one whose C q_i has the fewest nonzero entries (|.| > 1e-9 after unit
///   normalization).
/// Throws ConfigError when A has no eigenvalue of modulus > 1.
Vec select_s0(const Mat& A, double magnitude, S0Mode mode, const Mat* C = nullptr);

// ---------------------------------------------------------------------------
// Concrete generators
// ---------------------------------------------------------------------------

/// Attack model I: perfect knowledge of x_t^a and u_t^a.
class ModelIAttack final : public AttackGenerator {
 public:
  explicit ModelIAttack(Vec s0, bool allow_zero_s0 = false);
  void begin(const AttackWarmupContext& ctx) override;
  Vec attack(const AttackStepView& view) override;
  void advance(const AttackAdvanceView& view) override;
  const Vec* shadow_deviation() const override { return &s_; }

 private:
  Vec s0_;
  Vec s_;
};

/// Attack model II: state estimate from an AttackerEstimator plus a shadow
/// controller consuming the compromised measurements.
class ModelIIAttack final : public AttackGenerator {
 public:
  ModelIIAttack(Vec s0, std::shared_ptr<AttackerEstimator> estimator,
                Vec shadow_initial_offset = Vec());
  void begin(const AttackWarmupContext& ctx) override;
  Vec attack(const AttackStepView& view) override;
  void advance(const AttackAdvanceView& view) override;
  const Vec* shadow_deviation() const override { return &s_; }
  const Vec& shadow_controller_state() const { return shadow_state_; }

 private:
  Vec s0_;
  Vec s_;
  std::shared_ptr<AttackerEstimator> estimator_;
  Vec shadow_offset_;
  Vec shadow_state_;
  const ControllerModel* controller_ = nullptr;
  Vec cached_estimate_;
  bool estimate_valid_ = false;
};

/// Input-affine attack: needs no input knowledge. Runs on the true state
/// (model-I knowledge) or, when an estimator is supplied, on its estimate.
class AffineAttack final : public AttackGenerator {
 public:
  explicit AffineAttack(Vec s0,
                        std::shared_ptr<AttackerEstimator> estimator = nullptr);
  void begin(const AttackWarmupContext& ctx) override;
  Vec attack(const AttackStepView& view) override;
  void advance(const AttackAdvanceView& view) override;
  const Vec* shadow_deviation() const override { return &s_; }

 private:
  Vec s0_;
  Vec s_;
  std::shared_ptr<AttackerEstimator> estimator_;
  Vec cached_ref_;
};

/// LTI attack: requires only the matrices A and C.
class LtiAttack final : public AttackGenerator {
 public:
  LtiAttack(Mat A, Mat C, Vec s0);
  void begin(const AttackWarmupContext& ctx) override;
  Vec attack(const AttackStepView& view) override;
  void advance(const AttackAdvanceView& view) override;
  const Vec* shadow_deviation() const override { return &s_; }

 private:
  Mat A_, C_;
  Vec s0_;
  Vec s_;
};

/// Compromises sensor i at t = 0 only: a_0 = magnitude * e_i, a_t = 0 after.
class OneShotOutlierAttack final : public AttackGenerator {
 public:
  OneShotOutlierAttack(int sensor_index, double magnitude);
  Vec attack(const AttackStepView& view) override;
  void advance(const AttackAdvanceView& view) override {}

 private:
  int sensor_index_;
  double magnitude_;
};

/// i.i.d. uniform attack bounded by `bound` in every component. Test battery
/// fodder for the resilience theorem; draws from the attacker noise lane.
class RandomBoundedAttack final : public AttackGenerator {
 public:
  explicit RandomBoundedAttack(double bound);
  void begin(const AttackWarmupContext& ctx) override;
  Vec attack(const AttackStepView& view) override;
  void advance(const AttackAdvanceView& view) override {}

 private:
  double bound_;
  std::uint64_t seed_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace fdisim
