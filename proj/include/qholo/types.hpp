#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace qholo {

using Complex = std::complex<double>;

using Vec2 = Eigen::Vector2cd;
using Mat2 = Eigen::Matrix2cd;
using Vec4 = Eigen::Vector4cd;
using Mat4 = Eigen::Matrix4cd;

// Physical constants in MeV/fm units. Defaults follow CODATA 2018; every
// value can be overridden from a potential config file or the command line.
struct Constants {
  double hbar_c = 197.3269804;       // MeV fm
  double neutron_mass = 939.56542;   // MeV
  double amu = 931.49410242;         // MeV
  double lambda_pi2 = 2.0;           // fm^2, Thomas spin-orbit scale
};

// Invalid input file or run configuration.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An integration or extraction failed to produce a trustworthy number.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Phase-shift extraction hit a degenerate pair of matching radii.
struct IllConditionedRadii : NumericalError {
  using NumericalError::NumericalError;
};

// An energy bracket whose amplitude minimum sits on the boundary.
struct NoInteriorMinimum : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qholo
