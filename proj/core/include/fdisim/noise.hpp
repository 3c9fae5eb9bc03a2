#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fdisim/types.hpp"

namespace fdisim {

// Reproducible zero-mean Gaussian stream. The generator is pinned so that
// identical (master_seed, stream_id, lane) always reproduce the same draws:
// mt19937_64 seeded through splitmix64, uniforms mapped to normals with the
// Box-Muller transform (both outputs of each pair are consumed in order).
// The name below is recorded in experiment metadata.
inline constexpr const char* kNoiseGeneratorName = "mt19937_64+box-muller";

// Lane separates independent sub-streams of one run (plant noise, the
// attacker's private sensors, detector randomization).
enum class NoiseLane : std::uint64_t { plant = 0, attacker = 1, detector = 2 };

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t stream_id,
                          NoiseLane lane = NoiseLane::plant);

class NoiseStream {
 public:
  NoiseStream(std::uint64_t master_seed, std::uint64_t stream_id,
              NoiseLane lane = NoiseLane::plant);

  double standard_normal();
  Vec standard_normal_vector(int k);

  /// Draw from N(0, R) given the lower Cholesky factor of R.
  Vec correlated(const Mat& chol_lower);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Pregenerated (w_t, v_t) draws for one rollout, so that paired branches
/// consume bit-identical noise. Index k corresponds to simulation step
/// t = k - warmup. Draw order is fixed and documented: v_0 first, then
/// w_t followed by v_{t+1} for each successive step.
struct NoiseTape {
  std::vector<Vec> w;  // process noise, length steps
  std::vector<Vec> v;  // measurement noise, length steps + 1
};

NoiseTape make_noise_tape(const Mat& process_cov, const Mat& measurement_cov,
                          int steps, std::uint64_t master_seed,
                          std::uint64_t stream_id);

}  // namespace fdisim
