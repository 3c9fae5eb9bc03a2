#include "fdisim/attack.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

#include "fdisim/attacker_estimator.hpp"
#include "fdisim/noise.hpp"

namespace fdisim {

AttackStep attack1_step(const PlantModel& plant, const Vec& x_a, const Vec& u_a,
                        const Vec& s) {
  require(x_a.size() == plant.state_dim && s.size() == plant.state_dim,
          "attack1_step: state dimension mismatch");
  require(u_a.size() == plant.input_dim, "attack1_step: input dimension mismatch");
  AttackStep out;
  out.a = plant.observation(x_a - s) - plant.observation(x_a);
  out.s_next = plant.transition(x_a, u_a) - plant.transition(x_a - s, u_a);
  return out;
}

AttackStep2 attack2_step(const PlantModel& plant, const ControllerModel& ctrl,
                         const Vec& xhat_a, const Vec& s, const Vec& shadow_prev,
                         const Vec& y_ca) {
  AttackStep2 out;
  out.a = plant.observation(xhat_a - s) - plant.observation(xhat_a);
  out.shadow_state = ctrl.update(shadow_prev, y_ca);
  out.u_shadow = ctrl.output(out.shadow_state, y_ca);
  out.s_next =
      plant.transition(xhat_a, out.u_shadow) - plant.transition(xhat_a - s, out.u_shadow);
  return out;
}

AttackStep attack_affine_step(const PlantModel& plant, const Vec& x_ref,
                              const Vec& s) {
  if (!plant.input_affine)
    throw ConfigError("attack_affine_step: plant is not declared input-affine");
  Vec u0 = Vec::Zero(plant.input_dim);
  AttackStep out;
  out.a = plant.observation(x_ref - s) - plant.observation(x_ref);
  out.s_next = plant.transition(x_ref, u0) - plant.transition(x_ref - s, u0);
  return out;
}

AttackStep attack_lti_step(const Mat& A, const Mat& C, const Vec& s) {
  AttackStep out;
  out.a = -(C * s);
  out.s_next = A * s;
  return out;
}

Vec select_s0(const Mat& A, double magnitude, S0Mode mode, const Mat* C) {
  require(A.rows() == A.cols(), "select_s0: A must be square");
  require(magnitude > 0, "select_s0: magnitude must be positive");
  const int n = static_cast<int>(A.rows());
  Eigen::EigenSolver<Mat> es(A);
  const auto& vals = es.eigenvalues();
  const auto& vecs = es.eigenvectors();

  // Real candidate directions from eigenvalues of modulus > 1. A complex pair
  // contributes the direction of largest one-step growth within its real
  // 2-plane, so the recursion stays real.
  struct Candidate {
    Vec dir;
    double growth;
  };
  std::vector<Candidate> cand;
  for (int i = 0; i < n; ++i) {
    double mod = std::abs(vals(i));
    if (mod <= 1.0) continue;
    if (std::abs(vals(i).imag()) < 1e-12) {
      Vec q = vecs.col(i).real();
      double nq = q.norm();
      if (nq < 1e-14) continue;
      q /= nq;
      cand.push_back({q, (A * q).norm()});
    } else {
      if (vals(i).imag() < 0) continue;  // one direction per conjugate pair
      Vec re = vecs.col(i).real(), im = vecs.col(i).imag();
      Candidate best{Vec(), -1.0};
      const int samples = 64;
      for (int k = 0; k < samples; ++k) {
        double phi = M_PI * k / samples;
        Vec q = std::cos(phi) * re + std::sin(phi) * im;
        double nq = q.norm();
        if (nq < 1e-14) continue;
        q /= nq;
        double growth = (A * q).norm();
        if (growth > best.growth) best = {q, growth};
      }
      if (best.growth > 0) cand.push_back(best);
    }
  }
  if (cand.empty())
    throw ConfigError(
        "select_s0: A has no eigenvalue of modulus > 1 (no impactful direction)");

  int pick = -1;
  if (mode == S0Mode::unstable_eigvec) {
    double best = -1;
    for (size_t i = 0; i < cand.size(); ++i)
      if (cand[i].growth > best) {
        best = cand[i].growth;
        pick = static_cast<int>(i);
      }
  } else {
    require(C != nullptr, "select_s0: min_sensor_support needs C");
    int best_support = std::numeric_limits<int>::max();
    for (size_t i = 0; i < cand.size(); ++i) {
      Vec cq = (*C) * cand[i].dir;
      int support = 0;
      for (int j = 0; j < cq.size(); ++j)
        if (std::abs(cq(j)) > 1e-9) ++support;
      if (support == 0) continue;  // C q = 0 makes a_t identically zero
      if (support < best_support) {
        best_support = support;
        pick = static_cast<int>(i);
      }
    }
    if (pick < 0)
      throw ConfigError(
          "select_s0: every unstable direction is invisible through C");
  }
  return magnitude * cand[pick].dir;
}

// ---------------------------------------------------------------------------

ModelIAttack::ModelIAttack(Vec s0, bool allow_zero_s0) : s0_(std::move(s0)) {
  if (!allow_zero_s0 && s0_.norm() == 0.0)
    throw ConfigError("ModelIAttack: s0 = 0 yields the null attack");
  s_ = s0_;
}

void ModelIAttack::begin(const AttackWarmupContext&) { s_ = s0_; }

Vec ModelIAttack::attack(const AttackStepView& view) {
  return view.plant.observation(view.true_state - s_) -
         view.plant.observation(view.true_state);
}

void ModelIAttack::advance(const AttackAdvanceView& view) {
  s_ = view.plant.transition(view.true_state, view.input) -
       view.plant.transition(view.true_state - s_, view.input);
}

// ---------------------------------------------------------------------------

ModelIIAttack::ModelIIAttack(Vec s0, std::shared_ptr<AttackerEstimator> estimator,
                             Vec shadow_initial_offset)
    : s0_(std::move(s0)),
      estimator_(std::move(estimator)),
      shadow_offset_(std::move(shadow_initial_offset)) {
  if (s0_.norm() == 0.0)
    throw ConfigError("ModelIIAttack: s0 = 0 yields the null attack");
  if (!estimator_) throw ConfigError("ModelIIAttack: estimator required");
  s_ = s0_;
}

void ModelIIAttack::begin(const AttackWarmupContext& ctx) {
  s_ = s0_;
  controller_ = &ctx.controller;
  // X_0^s default: the controller's design-time initial state, the best
  // public information; the offset exposes the mismatch term for study.
  shadow_state_ = ctx.controller.initial_state;
  if (shadow_offset_.size() > 0) {
    require(shadow_offset_.size() == shadow_state_.size(),
            "ModelIIAttack: shadow offset dimension mismatch");
    shadow_state_ += shadow_offset_;
  }
  estimator_->begin(ctx);
  estimate_valid_ = false;
}

Vec ModelIIAttack::attack(const AttackStepView& view) {
  estimator_->on_measurement_phase(view.true_state);
  cached_estimate_ = estimator_->state_estimate();
  estimate_valid_ = true;
  return view.plant.observation(cached_estimate_ - s_) -
         view.plant.observation(cached_estimate_);
}

void ModelIIAttack::advance(const AttackAdvanceView& view) {
  if (!estimate_valid_)
    throw NotReadyError("ModelIIAttack: advance before attack");
  Vec shadow_next = controller_->update(shadow_state_, view.received_output);
  Vec u_s = controller_->output(shadow_next, view.received_output);
  shadow_state_ = std::move(shadow_next);
  s_ = view.plant.transition(cached_estimate_, u_s) -
       view.plant.transition(cached_estimate_ - s_, u_s);
  estimator_->on_step_complete(view.true_output, u_s);
  estimate_valid_ = false;
}

// ---------------------------------------------------------------------------

AffineAttack::AffineAttack(Vec s0, std::shared_ptr<AttackerEstimator> estimator)
    : s0_(std::move(s0)), estimator_(std::move(estimator)) {
  if (s0_.norm() == 0.0)
    throw ConfigError("AffineAttack: s0 = 0 yields the null attack");
  s_ = s0_;
}

void AffineAttack::begin(const AttackWarmupContext& ctx) {
  s_ = s0_;
  if (estimator_) estimator_->begin(ctx);
}

Vec AffineAttack::attack(const AttackStepView& view) {
  if (estimator_) {
    estimator_->on_measurement_phase(view.true_state);
    cached_ref_ = estimator_->state_estimate();
  } else {
    cached_ref_ = view.true_state;
  }
  return view.plant.observation(cached_ref_ - s_) -
         view.plant.observation(cached_ref_);
}

void AffineAttack::advance(const AttackAdvanceView& view) {
  s_ = attack_affine_step(view.plant, cached_ref_, s_).s_next;
  if (estimator_)
    estimator_->on_step_complete(view.true_output, Vec::Zero(view.plant.input_dim));
}

// ---------------------------------------------------------------------------

LtiAttack::LtiAttack(Mat A, Mat C, Vec s0)
    : A_(std::move(A)), C_(std::move(C)), s0_(std::move(s0)) {
  require(A_.rows() == A_.cols() && A_.rows() == s0_.size(),
          "LtiAttack: A/s0 dimension mismatch");
  require(C_.cols() == A_.rows(), "LtiAttack: C column count mismatch");
  s_ = s0_;
}

void LtiAttack::begin(const AttackWarmupContext&) { s_ = s0_; }

Vec LtiAttack::attack(const AttackStepView&) { return -(C_ * s_); }

void LtiAttack::advance(const AttackAdvanceView&) { s_ = A_ * s_; }

// ---------------------------------------------------------------------------

OneShotOutlierAttack::OneShotOutlierAttack(int sensor_index, double magnitude)
    : sensor_index_(sensor_index), magnitude_(magnitude) {
  if (!std::isfinite(magnitude))
    throw ConfigError("OneShotOutlierAttack: magnitude must be finite");
}

Vec OneShotOutlierAttack::attack(const AttackStepView& view) {
  Vec a = Vec::Zero(view.plant.output_dim);
  if (view.t == 0) {
    require(sensor_index_ >= 0 && sensor_index_ < view.plant.output_dim,
            "OneShotOutlierAttack: sensor index out of range");
    a(sensor_index_) = magnitude_;
  }
  return a;
}

// ---------------------------------------------------------------------------

RandomBoundedAttack::RandomBoundedAttack(double bound) : bound_(bound) {
  require(bound >= 0, "RandomBoundedAttack: bound must be nonnegative");
}

void RandomBoundedAttack::begin(const AttackWarmupContext& ctx) {
  seed_ = derive_seed(ctx.master_seed, ctx.stream_id, NoiseLane::attacker);
  counter_ = 0;
}

Vec RandomBoundedAttack::attack(const AttackStepView& view) {
  Vec a(view.plant.output_dim);
  for (int i = 0; i < a.size(); ++i) {
    double u = static_cast<double>(splitmix64(seed_ + counter_++) >> 11) *
               (1.0 / 9007199254740992.0);
    a(i) = bound_ * (2.0 * u - 1.0);
  }
  return a;
}

}  // namespace fdisim
