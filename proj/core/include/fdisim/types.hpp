#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace fdisim {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

inline constexpr const char* kVersion = "0.1.0";

/// Base class for all library errors.
class SimError : public std::runtime_error {
 public:
  explicit SimError(const std::string& what) : std::runtime_error(what) {}
};

class DimensionError : public SimError {
 public:
  using SimError::SimError;
};

/// Non-finite value produced where the contract requires a finite result.
class NumericalError : public SimError {
 public:
  explicit NumericalError(const std::string& what, int step = -1)
      : SimError(what), step(step) {}
  int step;
};

class ConfigError : public SimError {
 public:
  using SimError::SimError;
};

/// Requested result needs history that has not been accumulated yet.
class NotReadyError : public SimError {
 public:
  using SimError::SimError;
};

class CalibrationUnderpoweredError : public SimError {
 public:
  using SimError::SimError;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw DimensionError(msg);
}

inline bool all_finite(const Vec& v) { return v.allFinite(); }

}  // namespace fdisim
