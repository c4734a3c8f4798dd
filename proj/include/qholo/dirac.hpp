#pragma once

// The 4x4 momentum-space Dirac Hamiltonian [[-sigma.k, m], [m, sigma.k]],
// its parity operator P = i [[0, I], [I, 0]] with P^2 = -I, the mirror
// factorization P = Mx My Mz, and the z-as-time hologram: treating the z
// direction as evolution time turns the remaining quantum numbers
// (omega, kx, ky) into parameters of a non-Hermitian 4x4 generator whose
// eigenvalues are the longitudinal momenta kz. Mz plays effective time
// reversal and Mx My effective parity for that generator.

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "types.hpp"

namespace qholo {

inline Mat2 pauli_x() {
  Mat2 s;
  s << 0, 1, 1, 0;
  return s;
}
inline Mat2 pauli_y() {
  Mat2 s;
  s << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return s;
}
inline Mat2 pauli_z() {
  Mat2 s;
  s << 1, 0, 0, -1;
  return s;
}

namespace detail {

inline Mat4 off_diagonal_blocks(const Mat2& upper, const Mat2& lower) {
  Mat4 m = Mat4::Zero();
  m.topRightCorner<2, 2>() = upper;
  m.bottomLeftCorner<2, 2>() = lower;
  return m;
}

inline Mat4 diagonal_blocks(const Mat2& upper, const Mat2& lower) {
  Mat4 m = Mat4::Zero();
  m.topLeftCorner<2, 2>() = upper;
  m.bottomRightCorner<2, 2>() = lower;
  return m;
}

}  // namespace detail

inline Mat4 dirac_hamiltonian(const Eigen::Vector3d& k, double mass) {
  const Mat2 sk = k.x() * pauli_x() + k.y() * pauli_y() + k.z() * pauli_z();
  Mat4 h = detail::diagonal_blocks(-sk, sk);
  h.topRightCorner<2, 2>() = mass * Mat2::Identity();
  h.bottomLeftCorner<2, 2>() = mass * Mat2::Identity();
  return h;
}

// P = i [[0, I], [I, 0]]; P^2 = -I and P^-1 = -P.
inline Mat4 parity_operator() {
  return detail::off_diagonal_blocks(Complex(0, 1) * Mat2::Identity(),
                                     Complex(0, 1) * Mat2::Identity());
}

// M_j = [[0, sigma_j], [sigma_j, 0]], its own inverse.
inline Mat4 mirror_operator(int axis) {
  const Mat2 s = axis == 0   ? pauli_x()
                 : axis == 1 ? pauli_y()
                 : axis == 2 ? pauli_z()
                             : throw std::invalid_argument(
                                   "mirror_operator: axis must be 0, 1, or 2");
  return detail::off_diagonal_blocks(s, s);
}

// ||P^-1 H(k) P - H(-k)||_F, which vanishes identically.
inline double parity_check(const Eigen::Vector3d& k, double mass) {
  const Mat4 p = parity_operator();
  const Mat4 lhs = -p * dirac_hamiltonian(k, mass) * p;  // P^-1 = -P
  return (lhs - dirac_hamiltonian(-k, mass)).norm();
}

// Largest residual among P = Mx My Mz, M_j^2 = I, and P^2 = -I.
inline double mirror_decomposition_check() {
  const Mat4 p = parity_operator();
  double worst =
      (mirror_operator(0) * mirror_operator(1) * mirror_operator(2) - p)
          .norm();
  for (int axis = 0; axis < 3; ++axis) {
    const Mat4 m = mirror_operator(axis);
    worst = std::max(worst, (m * m - Mat4::Identity()).norm());
  }
  worst = std::max(worst, (p * p + Mat4::Identity()).norm());
  return worst;
}

struct DiracParams {
  double omega = 0.0;
  double kx = 0.0;
  double ky = 0.0;
  double mass = 0.0;
};

// Solving H psi = omega psi for the z dependence gives
// i d/dz (psi) = H_eff psi with
//   H_eff = [[omega sz + i(kx sy - ky sx), -m sz], [m sz, -omega sz + i(kx sy - ky sx)]],
// non-Hermitian for any nonzero transverse momentum.
inline Mat4 dirac_hologram_hamiltonian(const DiracParams& p) {
  const Mat2 transverse =
      Complex(0, 1) * (p.kx * pauli_y() - p.ky * pauli_x());
  Mat4 h = detail::diagonal_blocks(p.omega * pauli_z() + transverse,
                                   -p.omega * pauli_z() + transverse);
  h.topRightCorner<2, 2>() = -p.mass * pauli_z();
  h.bottomLeftCorner<2, 2>() = p.mass * pauli_z();
  return h;
}

// Effective time reversal for the hologram generator.
inline Mat4 effective_time_reversal() { return mirror_operator(2); }

// Effective parity Mx My = i diag(sz, sz).
inline Mat4 effective_parity() {
  return detail::diagonal_blocks(Complex(0, 1) * pauli_z(),
                                 Complex(0, 1) * pauli_z());
}

// || (PT) H_eff(omega, kx, ky) (PT) - H_eff(omega, -kx, -ky) ||_F with
// PT = (Mx My) Mz = P; identically zero, so the generator is PT symmetric
// in the effective sense.
inline double pt_identity_check(const DiracParams& p) {
  const Mat4 pt = effective_parity() * effective_time_reversal();
  DiracParams flipped = p;
  flipped.kx = -p.kx;
  flipped.ky = -p.ky;
  const Mat4 lhs = pt * dirac_hologram_hamiltonian(p) * pt;
  return (lhs - dirac_hologram_hamiltonian(flipped)).norm();
}

struct SymmetryOperator {
  std::string name;
  Mat4 matrix;
};

// The named operators of the construction: P, Mx, My, Mz, and the effective
// pair (P_eff, T_eff).
inline SymmetryOperator symmetry_operator(const std::string& name) {
  if (name == "P") return {name, parity_operator()};
  if (name == "Mx") return {name, mirror_operator(0)};
  if (name == "My") return {name, mirror_operator(1)};
  if (name == "Mz") return {name, mirror_operator(2)};
  if (name == "P_eff") return {name, effective_parity()};
  if (name == "T_eff") return {name, effective_time_reversal()};
  throw std::invalid_argument("symmetry_operator: unknown name '" + name +
                              "'");
}

// Eigenvalues of the hologram generator: the longitudinal momenta kz,
// sorted by (real, imaginary) part. At kx = ky = 0 they reduce to the
// two-level pair +/- sqrt(omega^2 - m^2), each doubled.
inline std::array<Complex, 4> hologram_eigenmomenta(const DiracParams& p) {
  Eigen::ComplexEigenSolver<Mat4> solver(dirac_hologram_hamiltonian(p), false);
  if (solver.info() != Eigen::Success)
    throw NumericalError("hologram_eigenmomenta: eigensolver failed");
  std::array<Complex, 4> kz;
  for (int i = 0; i < 4; ++i) kz[i] = solver.eigenvalues()(i);
  std::sort(kz.begin(), kz.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return kz;
}

}  // namespace qholo
