#pragma once

#include <stdexcept>
#include <string>

namespace kgz {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GridMismatch : Error {
  GridMismatch() : Error("fields are bound to different grids") {}
};

struct MeanNotZero : Error {
  explicit MeanNotZero(double mean_value)
      : Error("field mean " + std::to_string(mean_value) +
              " exceeds the zero-mean tolerance"),
        mean(mean_value) {}
  double mean;
};

struct FrequencyOutOfRange : Error {
  explicit FrequencyOutOfRange(double omega_value)
      : Error("frequency " + std::to_string(omega_value) + " outside the admissible range"),
        omega(omega_value) {}
  double omega;
};

struct NoConvergence : Error {
  explicit NoConvergence(const std::string& what_failed, double residual_value)
      : Error(what_failed + " failed to converge (residual " +
              std::to_string(residual_value) + ")"),
        residual(residual_value) {}
  double residual;
};

struct BlowUp : Error {
  explicit BlowUp(double time, double amplitude)
      : Error("field amplitude " + std::to_string(amplitude) + " exceeded the blow-up guard at t=" +
              std::to_string(time)),
        t(time) {}
  double t;
};

struct EigensolveFailure : Error {
  explicit EigensolveFailure(int info_code)
      : Error("dense symmetric eigensolve failed (info=" + std::to_string(info_code) + ")"),
        info(info_code) {}
  int info;
};

struct CutoffTooLarge : Error {
  CutoffTooLarge() : Error("cutoff support [-2R, 2R] does not fit inside the periodic box") {}
};

struct WindowTooShort : Error {
  WindowTooShort() : Error("time window has fewer than 5 samples") {}
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace kgz
