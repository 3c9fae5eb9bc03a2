#pragma once

#include "fdisim/types.hpp"

namespace fdisim {

double spectral_radius(const Mat& A);

/// Kalman rank test for controllability of (A, B).
bool is_controllable(const Mat& A, const Mat& B);
/// Kalman rank test for observability of (A, C).
bool is_observable(const Mat& A, const Mat& C);

/// Solves the discrete algebraic Riccati equation
///   P = A' P A - A' P B (R + B' P B)^-1 B' P A + Q
/// by iterating the Riccati difference equation to a fixed point.
/// Requires (A, B) stabilizable and Q >= 0, R > 0.
Mat solve_dare(const Mat& A, const Mat& B, const Mat& Q, const Mat& R,
               double tol = 1e-12, int max_iter = 200000);

/// LQR state-feedback gain for u = -K x.
Mat lqr_gain(const Mat& A, const Mat& B, const Mat& Q, const Mat& R);

/// Steady-state Kalman gain pieces for x̂ = pred + L (y - C pred).
struct KalmanGain {
  Mat L;               // n x p innovation gain
  Mat prior_cov;       // steady-state prediction covariance P^-
  Mat innovation_cov;  // S = C P^- C' + R_v
};

KalmanGain steady_state_kalman(const Mat& A, const Mat& C, const Mat& Rw,
                               const Mat& Rv);

}  // namespace fdisim
