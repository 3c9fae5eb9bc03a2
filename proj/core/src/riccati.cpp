#include "fdisim/riccati.hpp"

#include <Eigen/Eigenvalues>

namespace fdisim {

double spectral_radius(const Mat& A) {
  Eigen::EigenSolver<Mat> es(A, /*computeEigenvectors=*/false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

namespace {

bool full_rank_reachability(const Mat& A, const Mat& B) {
  const int n = static_cast<int>(A.rows());
  Mat R(n, n * B.cols());
  Mat blk = B;
  for (int k = 0; k < n; ++k) {
    R.middleCols(k * B.cols(), B.cols()) = blk;
    blk = A * blk;
  }
  return Eigen::ColPivHouseholderQR<Mat>(R).rank() == n;
}

}  // namespace

bool is_controllable(const Mat& A, const Mat& B) {
  return full_rank_reachability(A, B);
}

bool is_observable(const Mat& A, const Mat& C) {
  return full_rank_reachability(A.transpose(), C.transpose());
}

Mat solve_dare(const Mat& A, const Mat& B, const Mat& Q, const Mat& R,
               double tol, int max_iter) {
  require(A.rows() == A.cols(), "solve_dare: A must be square");
  require(B.rows() == A.rows(), "solve_dare: B row count mismatch");
  require(Q.rows() == A.rows() && Q.cols() == A.rows(), "solve_dare: Q shape");
  require(R.rows() == B.cols() && R.cols() == B.cols(), "solve_dare: R shape");
  Mat P = Q;
  for (int it = 0; it < max_iter; ++it) {
    Mat BtPB = R + B.transpose() * P * B;
    Mat gain = BtPB.ldlt().solve(B.transpose() * P * A);
    Mat Pn = A.transpose() * P * A - A.transpose() * P * B * gain + Q;
    Pn = 0.5 * (Pn + Pn.transpose());
    double diff = (Pn - P).cwiseAbs().maxCoeff();
    P = Pn;
    if (diff < tol) return P;
  }
  throw NumericalError("solve_dare: fixed-point iteration did not converge");
}

Mat lqr_gain(const Mat& A, const Mat& B, const Mat& Q, const Mat& R) {
  Mat P = solve_dare(A, B, Q, R);
  return (R + B.transpose() * P * B).ldlt().solve(B.transpose() * P * A);
}

KalmanGain steady_state_kalman(const Mat& A, const Mat& C, const Mat& Rw,
                               const Mat& Rv) {
  KalmanGain out;
  out.prior_cov = solve_dare(A.transpose(), C.transpose(), Rw, Rv);
  out.innovation_cov = C * out.prior_cov * C.transpose() + Rv;
  out.L = out.innovation_cov.transpose()
              .ldlt()
              .solve(C * out.prior_cov.transpose())
              .transpose();
  return out;
}

}  // namespace fdisim
