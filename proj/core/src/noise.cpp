#include "fdisim/noise.hpp"

#include <cmath>

namespace fdisim {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t stream_id,
                          NoiseLane lane) {
  std::uint64_t s = splitmix64(master_seed);
  s = splitmix64(s ^ splitmix64(stream_id));
  s = splitmix64(s ^ static_cast<std::uint64_t>(lane));
  return s;
}

NoiseStream::NoiseStream(std::uint64_t master_seed, std::uint64_t stream_id,
                         NoiseLane lane)
    : engine_(derive_seed(master_seed, stream_id, lane)) {}

double NoiseStream::standard_normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // Uniforms in (0, 1]: +1 keeps log() away from zero.
  const double scale = 1.0 / 9007199254740992.0;  // 2^-53
  double u1 = static_cast<double>((engine_() >> 11) + 1) * scale;
  double u2 = static_cast<double>((engine_() >> 11) + 1) * scale;
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 2.0 * M_PI * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

Vec NoiseStream::standard_normal_vector(int k) {
  Vec z(k);
  for (int i = 0; i < k; ++i) z(i) = standard_normal();
  return z;
}

Vec NoiseStream::correlated(const Mat& chol_lower) {
  return chol_lower * standard_normal_vector(static_cast<int>(chol_lower.rows()));
}

NoiseTape make_noise_tape(const Mat& process_cov, const Mat& measurement_cov,
                          int steps, std::uint64_t master_seed,
                          std::uint64_t stream_id) {
  Eigen::LLT<Mat> llt_w(process_cov);
  Eigen::LLT<Mat> llt_v(measurement_cov);
  if (llt_w.info() != Eigen::Success)
    throw ConfigError("process covariance is not symmetric positive definite");
  if (llt_v.info() != Eigen::Success)
    throw ConfigError("measurement covariance is not symmetric positive definite");
  Mat Lw = llt_w.matrixL();
  Mat Lv = llt_v.matrixL();

  NoiseStream stream(master_seed, stream_id, NoiseLane::plant);
  NoiseTape tape;
  tape.w.reserve(steps);
  tape.v.reserve(steps + 1);
  tape.v.push_back(stream.correlated(Lv));
  for (int t = 0; t < steps; ++t) {
    tape.w.push_back(stream.correlated(Lw));
    tape.v.push_back(stream.correlated(Lv));
  }
  return tape;
}

}  // namespace fdisim
