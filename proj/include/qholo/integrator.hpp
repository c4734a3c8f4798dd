#pragma once

// Adaptive Dormand-Prince 5(4) integration of i dpsi/dt = H(t) psi for small
// complex systems. The Hamiltonian may be non-Hermitian, so no normalization
// is imposed: growth or decay of the norm carries the signal.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "types.hpp"

namespace qholo {

template <class F, int N>
concept HamiltonianEvaluator = requires(const F& f, double t) {
  { f(t) } -> std::convertible_to<Eigen::Matrix<Complex, N, N>>;
};

template <int N>
struct Trajectory {
  using State = Eigen::Matrix<Complex, N, 1>;
  struct Sample {
    double t;
    State state;
  };
  std::vector<Sample> samples;  // strictly increasing in t; includes t0, t1
  double t0 = 0.0;
  double t1 = 0.0;
  double tolerance = 0.0;
  long step_count = 0;  // accepted steps
};

namespace detail {

// Dormand-Prince coefficients.
inline constexpr double kDpC[7] = {0.0,     1.0 / 5, 3.0 / 10, 4.0 / 5,
                                   8.0 / 9, 1.0,     1.0};
inline constexpr double kDpA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
inline constexpr double kDpB5[7] = {35.0 / 384,    0.0,        500.0 / 1113,
                                    125.0 / 192,   -2187.0 / 6784,
                                    11.0 / 84,     0.0};
inline constexpr double kDpB4[7] = {5179.0 / 57600, 0.0,      7571.0 / 16695,
                                    393.0 / 640,    -92097.0 / 339200,
                                    187.0 / 2100,   1.0 / 40};

}  // namespace detail

// Integrates i dpsi/dt = H(t) psi from t0 to t1 (t1 > t0) and records the
// state at every requested sample time plus both endpoints. sample_times
// must lie in [t0, t1]; duplicates collapse, order is irrelevant. Steps are
// clamped so each sample lands on a step boundary, avoiding dense-output
// interpolation.
// tolerance bounds the local truncation error per unit time and must lie in
// (0, 1e-3].
//
// breakpoints marks times where H may jump. An adaptive controller cannot
// step across a genuine discontinuity (the error estimate stops shrinking
// with the step), so those times become hard step boundaries and the stage
// evaluations next to them are nudged to the correct side.
template <int N, class H>
  requires HamiltonianEvaluator<H, N>
Trajectory<N> integrate_schrodinger(const H& hamiltonian,
                                    const Eigen::Matrix<Complex, N, 1>& psi0,
                                    double t0, double t1, double tolerance,
                                    const std::vector<double>& sample_times,
                                    const std::vector<double>& breakpoints =
                                        {}) {
  using State = Eigen::Matrix<Complex, N, 1>;
  if (!(t1 > t0))
    throw std::invalid_argument("integrate_schrodinger: requires t1 > t0");
  if (!(tolerance > 0.0) || tolerance > 1e-3)
    throw std::invalid_argument(
        "integrate_schrodinger: tolerance must lie in (0, 1e-3]");
  const double span = t1 - t0;
  std::vector<double> targets;
  targets.reserve(sample_times.size() + 2);
  targets.push_back(t0);
  for (double ts : sample_times) {
    if (!(ts >= t0) || !(ts <= t1))
      throw std::invalid_argument(
          "integrate_schrodinger: sample time outside [t0, t1]");
    targets.push_back(ts);
  }
  targets.push_back(t1);
  std::vector<double> cuts;  // sorted breakpoint times, step boundaries only
  for (double tb : breakpoints)
    if (tb > t0 && tb < t1) cuts.push_back(tb);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  targets.insert(targets.end(), cuts.begin(), cuts.end());
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  const auto is_cut = [&cuts](double t) {
    return std::binary_search(cuts.begin(), cuts.end(), t);
  };
  std::vector<double> record_set = sample_times;
  std::sort(record_set.begin(), record_set.end());
  record_set.erase(std::unique(record_set.begin(), record_set.end()),
                   record_set.end());
  const auto record_at = [&record_set, t0, t1](double t) {
    return t == t0 || t == t1 ||
           std::binary_search(record_set.begin(), record_set.end(), t);
  };

  const auto rhs = [&hamiltonian](double t, const State& y) -> State {
    return Complex(0.0, -1.0) * (hamiltonian(t) * y);
  };

  Trajectory<N> traj;
  traj.t0 = t0;
  traj.t1 = t1;
  traj.tolerance = tolerance;

  double t = t0;
  State y = psi0;
  traj.samples.push_back({t, y});

  // Initial step from the size of the initial derivative.
  double h;
  {
    const State f0 = rhs(t0, y);
    const double scale = std::max(1.0, y.template lpNorm<Eigen::Infinity>());
    const double d1 = f0.template lpNorm<Eigen::Infinity>();
    h = 0.01 * scale / std::max(d1, 1e-10);
    h = std::min(h, span);
  }

  const double h_floor = 1e-14 * std::max({1.0, std::abs(t0), std::abs(t1)});
  State k[7];
  std::size_t next_target = 1;
  int consecutive_rejects = 0;
  while (next_target < targets.size()) {
    const double target = targets[next_target];
    const double remaining = target - t;
    if (remaining <= h_floor) {
      if (record_at(target)) traj.samples.push_back({target, y});
      t = target;
      ++next_target;
      continue;
    }
    if (h < h_floor)
      throw NumericalError("integrate_schrodinger: step size underflow at t = " +
                           std::to_string(t));
    const bool clamped = h >= remaining;
    const double h_try = clamped ? remaining : h;

    // Steps never straddle a cut (cuts are step targets), so only the two
    // boundary stage times can coincide with one; evaluate those a hair
    // inside the current smooth segment to get the one-sided generator.
    const double nudge = std::min(0.25 * h_try, 9.3e-10 * std::max(1.0, std::abs(target)));
    const double t_lo = is_cut(t) ? t + nudge : t;
    const double t_hi =
        (clamped && is_cut(target)) ? target - nudge : t + h_try;

    k[0] = rhs(t_lo, y);
    for (int s = 1; s < 7; ++s) {
      State acc = y;
      for (int i = 0; i < s; ++i)
        acc += (h_try * detail::kDpA[s][i]) * k[i];
      const double ts =
          detail::kDpC[s] == 1.0 ? t_hi : t + detail::kDpC[s] * h_try;
      k[s] = rhs(ts, acc);
    }
    State y5 = y, err = State::Zero();
    for (int s = 0; s < 7; ++s) {
      y5 += (h_try * detail::kDpB5[s]) * k[s];
      err += (h_try * (detail::kDpB5[s] - detail::kDpB4[s])) * k[s];
    }
    if (!y5.allFinite())
      throw NumericalError(
          "integrate_schrodinger: non-finite state at t = " +
          std::to_string(t));
    const double err_norm = err.template lpNorm<Eigen::Infinity>();
    const double allowed =
        tolerance * h_try *
        std::max({1.0, y.template lpNorm<Eigen::Infinity>(),
                  y5.template lpNorm<Eigen::Infinity>()});
    const double ratio = err_norm > 0.0 ? allowed / err_norm : 1e10;
    const double factor = std::clamp(0.9 * std::pow(ratio, 0.2), 0.2, 5.0);
    if (err_norm <= allowed) {
      t += h_try;
      y = y5;
      ++traj.step_count;
      consecutive_rejects = 0;
      // A clamped step says nothing new about the natural step size.
      if (!clamped) h = h_try * factor;
      if (t >= target - h_floor) {
        if (record_at(target)) traj.samples.push_back({target, y});
        t = target;
        ++next_target;
      }
    } else {
      if (++consecutive_rejects > 60)
        throw NumericalError(
            "integrate_schrodinger: step control stalled at t = " +
            std::to_string(t));
      h = h_try * factor;
    }
  }
  return traj;
}

}  // namespace qholo
