#pragma once

// Spherical Bessel/Neumann functions and Legendre polynomials for the
// partial-wave machinery. Orders are capped at 64, far above any physical
// cutoff used here.

#include <cmath>
#include <stdexcept>
#include <string>

namespace qholo {

inline constexpr int kMaxOrder = 64;

namespace detail {

inline void check_order(int l, int l_min, const char* fn) {
  if (l < l_min || l > kMaxOrder)
    throw std::domain_error(std::string(fn) + ": order " + std::to_string(l) +
                            " outside [" + std::to_string(l_min) + ", " +
                            std::to_string(kMaxOrder) + "]");
}

}  // namespace detail

// j_l(x) for x > 0. The upward recurrence j_{n+1} = (2n+1)/x j_n - j_{n-1}
// is stable only for x >= l; below that the result is dominated by the
// admixed irregular solution, so Miller's downward recurrence is used
// instead: seed (0, 1) well above l, recur down to 0, and normalize by
// j_0(x). Intermediate values are rescaled by powers of two with integer
// exponent bookkeeping so the recursion never overflows and tiny true
// values underflow gracefully to zero.
inline double spherical_bessel_j(int l, double x) {
  detail::check_order(l, 0, "spherical_bessel_j");
  if (!(x > 0.0))
    throw std::domain_error("spherical_bessel_j: requires x > 0, got x = " +
                            std::to_string(x));
  const double j0 = std::sin(x) / x;
  if (l == 0) return j0;
  const double j1 = j0 / x - std::cos(x) / x;
  if (l == 1) return j1;

  if (x >= static_cast<double>(l)) {
    double prev = j0, cur = j1;
    for (int n = 1; n < l; ++n) {
      const double next = (2.0 * n + 1.0) / x * cur - prev;
      prev = cur;
      cur = next;
    }
    return cur;
  }

  const int start = l + 11 + static_cast<int>(std::ceil(std::sqrt(40.0 * l)));
  double above = 0.0;  // seed-scale j_{n+1}
  double cur = 1.0;    // seed-scale j_n
  int shifts = 0;      // count of 2^-900 rescalings applied so far
  double at_l = 0.0;
  int shifts_at_l = 0;
  for (int n = start; n >= 1; --n) {
    const double below = (2.0 * n + 1.0) / x * cur - above;
    above = cur;
    cur = below;
    if (n - 1 == l) {
      at_l = cur;
      shifts_at_l = shifts;
    }
    if (std::abs(cur) > 1e250) {
      cur = std::ldexp(cur, -900);
      above = std::ldexp(above, -900);
      ++shifts;
    }
  }
  // cur now holds seed-scale j_0; the true ratio j_l/j_0 needs the
  // rescalings applied between the two stores undone.
  int e_l = 0, e_0 = 0;
  const double m_l = std::frexp(at_l, &e_l);
  const double m_0 = std::frexp(cur, &e_0);
  if (m_0 == 0.0)
    throw std::domain_error("spherical_bessel_j: normalization collapsed");
  const int exp2 = e_l - e_0 + 900 * (shifts_at_l - shifts);
  return j0 * std::ldexp(m_l / m_0, exp2);
}

// n_l(x) for x > 0. The irregular solution grows with order, so the upward
// recurrence is stable everywhere.
inline double spherical_neumann_n(int l, double x) {
  detail::check_order(l, 0, "spherical_neumann_n");
  if (!(x > 0.0))
    throw std::domain_error("spherical_neumann_n: requires x > 0, got x = " +
                            std::to_string(x));
  const double n0 = -std::cos(x) / x;
  if (l == 0) return n0;
  const double n1 = n0 / x - std::sin(x) / x;
  if (l == 1) return n1;
  double prev = n0, cur = n1;
  for (int n = 1; n < l; ++n) {
    const double next = (2.0 * n + 1.0) / x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// P_l(x) on [-1, 1] via the Bonnet recurrence.
inline double legendre_p(int l, double x) {
  detail::check_order(l, 0, "legendre_p");
  if (!(std::abs(x) <= 1.0))
    throw std::domain_error("legendre_p: requires |x| <= 1, got x = " +
                            std::to_string(x));
  if (l == 0) return 1.0;
  if (l == 1) return x;
  double prev = 1.0, cur = x;
  for (int n = 1; n < l; ++n) {
    const double next = ((2.0 * n + 1.0) * x * cur - n * prev) / (n + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

// dP_l/dx on the open interval (-1, 1), where the closed form
// P'_l = l (x P_l - P_{l-1}) / (x^2 - 1) is well defined.
inline double legendre_p_prime(int l, double x) {
  detail::check_order(l, 1, "legendre_p_prime");
  if (!(std::abs(x) < 1.0))
    throw std::domain_error("legendre_p_prime: requires |x| < 1, got x = " +
                            std::to_string(x));
  if (l == 1) return 1.0;
  double prev = 1.0, cur = x;
  for (int n = 1; n < l; ++n) {
    const double next = ((2.0 * n + 1.0) * x * cur - n * prev) / (n + 1.0);
    prev = cur;
    cur = next;
  }
  return l * (x * cur - prev) / (x * x - 1.0);
}

}  // namespace qholo
