#pragma once

// The two-level non-Hermitian generator [[omega, -m], [m, -omega]] whose
// eigenvalues are the momenta k = +/- sqrt(omega^2 - m^2): real above the
// gap (propagating), zero on it (exceptional point), imaginary inside it
// (evanescent). Classification and right eigenvectors live here.

#include <cmath>
#include <stdexcept>
#include <utility>

#include "types.hpp"

namespace qholo {

struct EffectiveParams {
  double omega = 0.0;  // frequency, same units as mass
  double mass = 0.0;   // gap parameter, >= 0
};

enum class PTPhase { Unbroken, ExceptionalPoint, Broken };

struct PTClassification {
  PTPhase phase;
  Complex k_plus;
  Complex k_minus;
};

namespace detail {

inline void check_params(const EffectiveParams& p) {
  if (!std::isfinite(p.omega) || !std::isfinite(p.mass))
    throw std::invalid_argument("effective params must be finite");
  if (p.mass < 0.0)
    throw std::invalid_argument("effective params require mass >= 0");
}

}  // namespace detail

inline Mat2 effective_hamiltonian(const EffectiveParams& p) {
  detail::check_params(p);
  Mat2 h;
  h << Complex(p.omega, 0.0), Complex(-p.mass, 0.0),  //
      Complex(p.mass, 0.0), Complex(-p.omega, 0.0);
  return h;
}

// k_plus carries nonnegative real part (or nonnegative imaginary part when
// purely evanescent); k_minus = -k_plus. Built from the sign of
// omega^2 - m^2 directly so the branch is exact, not eps-dependent.
inline std::pair<Complex, Complex> eigenmomenta(const EffectiveParams& p) {
  detail::check_params(p);
  const double disc = p.omega * p.omega - p.mass * p.mass;
  const Complex k_plus = disc >= 0.0 ? Complex(std::sqrt(disc), 0.0)
                                     : Complex(0.0, std::sqrt(-disc));
  return {k_plus, -k_plus};
}

// |omega| > m + tol: unbroken (real momenta); |omega| < m - tol: broken
// (imaginary momenta); otherwise exceptional point.
inline PTClassification classify_pt(const EffectiveParams& p, double tol) {
  detail::check_params(p);
  if (!(tol > 0.0)) throw std::invalid_argument("classify_pt: tol must be > 0");
  const auto [k_plus, k_minus] = eigenmomenta(p);
  const double gap = std::abs(p.omega) - p.mass;
  PTPhase phase = PTPhase::ExceptionalPoint;
  if (gap > tol)
    phase = PTPhase::Unbroken;
  else if (gap < -tol)
    phase = PTPhase::Broken;
  return {phase, k_plus, k_minus};
}

struct RightEigenvectors {
  Vec2 v_plus;   // eigenvector of k_plus
  Vec2 v_minus;  // eigenvector of k_minus; equals v_plus when defective
  bool defective = false;   // |omega| = m > 0: the eigenvectors coalesce
  bool degenerate = false;  // omega = m = 0: zero operator, any basis works
};

namespace detail {

// Phase convention: unit norm, first entry of magnitude above 1e-12 made
// real and positive.
inline Vec2 fix_phase(Vec2 v) {
  v.normalize();
  const Complex lead = std::abs(v(0)) > 1e-12 ? v(0) : v(1);
  v *= std::conj(lead) / std::abs(lead);
  return v;
}

}  // namespace detail

inline RightEigenvectors right_eigenvectors(const EffectiveParams& p) {
  detail::check_params(p);
  RightEigenvectors out;
  if (p.omega == 0.0 && p.mass == 0.0) {
    out.degenerate = true;
    out.v_plus = Vec2(1.0, 0.0);
    out.v_minus = Vec2(0.0, 1.0);
    return out;
  }
  const auto [k_plus, k_minus] = eigenmomenta(p);
  if (k_plus == k_minus) {
    // Defective: the kernel of [[omega, -m], [m, -omega]] with |omega| = m
    // is spanned by (m, omega).
    out.defective = true;
    out.v_plus = detail::fix_phase(Vec2(p.mass, p.omega));
    out.v_minus = out.v_plus;
    return out;
  }
  const auto solve = [&p](Complex k) {
    // Rows of (H - k) give two candidate null vectors; keep the larger.
    const Vec2 a(Complex(p.mass, 0.0), Complex(p.omega, 0.0) - k);
    const Vec2 b(Complex(p.omega, 0.0) + k, Complex(p.mass, 0.0));
    return detail::fix_phase(a.norm() >= b.norm() ? a : b);
  };
  out.v_plus = solve(k_plus);
  out.v_minus = solve(k_minus);
  return out;
}

}  // namespace qholo
