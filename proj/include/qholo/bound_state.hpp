#pragma once

// Domain-wall bound states by variational shooting. The two-level state
// (psi_L, psi_R) evolves in x under [[E, -m(x)], [m(x), -E]] from the left
// asymptotic region across the mass wall; a bound state is an energy at
// which the final amplitude is minimal, since any mismatch with the decaying
// branch grows exponentially. For the default wall m(x) = -tanh(x) the
// answer is the zero mode E = 0. Points where |m(x)| = |E| are the
// exceptional points of the local generator: the turning points.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "integrator.hpp"
#include "types.hpp"

namespace qholo {

struct MassProfile {
  std::function<double(double)> m;
  std::string name;

  static MassProfile tanh_wall(double center = 0.0) {
    return {[center](double x) { return -std::tanh(x - center); },
            "-tanh(x - " + std::to_string(center) + ")"};
  }
  static MassProfile constant(double value) {
    return {[value](double) { return value; },
            "constant " + std::to_string(value)};
  }
};

struct MajoranaHamiltonian {
  double energy = 0.0;
  MassProfile profile;

  Mat2 operator()(double x) const {
    const double m = profile.m(x);
    Mat2 h;
    h << Complex(energy, 0.0), Complex(-m, 0.0),  //
        Complex(m, 0.0), Complex(-energy, 0.0);
    return h;
  }
};

inline MajoranaHamiltonian majorana_hamiltonian(double energy,
                                                const MassProfile& profile) {
  if (!profile.m)
    throw std::invalid_argument("majorana_hamiltonian: empty mass profile");
  return {energy, profile};
}

struct TrialResult {
  double energy = 0.0;
  double final_amplitude = 0.0;  // ||psi(x1)||
  Trajectory<2> trajectory;
};

// Launches psi(x0) = (1, -i)/sqrt(2), the decaying branch of the left
// asymptotic region, and evolves to x1. n_samples >= 2 uniform sample
// points are recorded (endpoints included).
inline TrialResult evolve_trial(double energy, const MassProfile& profile,
                                double x0 = -5.0, double x1 = 5.0,
                                double tolerance = 1e-10, int n_samples = 2) {
  if (!(x1 > x0))
    throw std::invalid_argument("evolve_trial: requires x1 > x0");
  if (n_samples < 2)
    throw std::invalid_argument("evolve_trial: n_samples must be >= 2");
  const auto h = majorana_hamiltonian(energy, profile);
  const Vec2 psi0(Complex(1.0, 0.0) / std::sqrt(2.0),
                  Complex(0.0, -1.0) / std::sqrt(2.0));
  std::vector<double> samples(n_samples);
  for (int i = 0; i < n_samples; ++i)
    samples[i] = x0 + (x1 - x0) * i / (n_samples - 1.0);
  samples.back() = x1;
  TrialResult out;
  out.energy = energy;
  out.trajectory = integrate_schrodinger<2>(h, psi0, x0, x1, tolerance, samples);
  out.final_amplitude = out.trajectory.samples.back().state.norm();
  return out;
}

struct EnergyScan {
  struct Entry {
    double energy;
    double final_amplitude;
  };
  std::vector<Entry> entries;  // ascending in energy
  double x0 = 0.0, x1 = 0.0;
};

inline EnergyScan scan_energies(const MassProfile& profile,
                                const std::vector<double>& energies,
                                double x0 = -5.0, double x1 = 5.0,
                                double tolerance = 1e-10) {
  if (energies.empty())
    throw std::invalid_argument("scan_energies: no energies given");
  for (std::size_t i = 1; i < energies.size(); ++i)
    if (!(energies[i] > energies[i - 1]))
      throw std::invalid_argument(
          "scan_energies: energies must be strictly increasing");
  EnergyScan scan;
  scan.x0 = x0;
  scan.x1 = x1;
  std::string failures;
  for (const double e : energies) {
    try {
      scan.entries.push_back(
          {e, evolve_trial(e, profile, x0, x1, tolerance).final_amplitude});
    } catch (const std::exception& ex) {
      failures += (failures.empty() ? "" : "; ") + std::string("E = ") +
                  std::to_string(e) + ": " + ex.what();
    }
  }
  if (!failures.empty())
    throw NumericalError("scan_energies: trial failures: " + failures);
  return scan;
}

// Minimizes the final amplitude over [e_lo, e_hi]: a 33-point scan brackets
// the minimum, golden-section refines it to tol_e. A minimum on the bracket
// boundary means no bound state was caught, which is an error, not a number.
inline double find_bound_state(const MassProfile& profile, double e_lo,
                               double e_hi, double tol_e = 1e-4,
                               double x0 = -5.0, double x1 = 5.0,
                               double tolerance = 1e-10) {
  if (!(e_hi > e_lo))
    throw std::invalid_argument("find_bound_state: requires e_hi > e_lo");
  if (!(tol_e > 0.0))
    throw std::invalid_argument("find_bound_state: tol_e must be > 0");
  const auto amplitude = [&](double e) {
    return evolve_trial(e, profile, x0, x1, tolerance).final_amplitude;
  };
  constexpr int n = 33;
  std::vector<double> amp(n);
  double best = 1e300;
  int best_i = 0;
  for (int i = 0; i < n; ++i) {
    const double e = e_lo + (e_hi - e_lo) * i / (n - 1.0);
    amp[i] = amplitude(e);
    if (amp[i] < best) {
      best = amp[i];
      best_i = i;
    }
  }
  if (best_i == 0 || best_i == n - 1)
    throw NoInteriorMinimum(
        "find_bound_state: amplitude minimum sits on the bracket edge [" +
        std::to_string(e_lo) + ", " + std::to_string(e_hi) + "]");
  double a = e_lo + (e_hi - e_lo) * (best_i - 1) / (n - 1.0);
  double b = e_lo + (e_hi - e_lo) * (best_i + 1) / (n - 1.0);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = amplitude(c), fd = amplitude(d);
  while (b - a > tol_e) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = amplitude(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = amplitude(d);
    }
  }
  return 0.5 * (a + b);
}

// Solutions of |m(x)| = |E| on [x_lo, x_hi]: the loci where the local
// generator sits on an exceptional point. Found by a dense scan for sign
// changes of m(x) -/+ |E| followed by bisection; tangencies on grid nodes
// are kept, tangencies between nodes are beyond a sampled method.
inline std::vector<double> turning_points(double energy,
                                          const MassProfile& profile,
                                          double x_lo, double x_hi) {
  if (!profile.m)
    throw std::invalid_argument("turning_points: empty mass profile");
  if (!(x_hi > x_lo))
    throw std::invalid_argument("turning_points: requires x_hi > x_lo");
  const double target = std::abs(energy);
  std::vector<double> roots;
  constexpr int n = 4001;
  const double h = (x_hi - x_lo) / (n - 1);
  const auto scan_level = [&](double level) {
    const auto f = [&](double x) { return profile.m(x) - level; };
    double x_prev = x_lo;
    double f_prev = f(x_prev);
    if (f_prev == 0.0) roots.push_back(x_prev);
    for (int i = 1; i < n; ++i) {
      const double x = x_lo + i * h;
      const double fx = f(x);
      if (fx == 0.0) {
        roots.push_back(x);
      } else if (f_prev != 0.0 && ((f_prev < 0.0) != (fx < 0.0))) {
        double a = x_prev, b = x, fa = f_prev;
        for (int it = 0; it < 100 && b - a > 1e-14; ++it) {
          const double mid = 0.5 * (a + b);
          const double fm = f(mid);
          if (fm == 0.0) {
            a = b = mid;
          } else if ((fa < 0.0) != (fm < 0.0)) {
            b = mid;
          } else {
            a = mid;
            fa = fm;
          }
        }
        roots.push_back(0.5 * (a + b));
      }
      x_prev = x;
      f_prev = fx;
    }
  };
  scan_level(target);
  if (target != 0.0) scan_level(-target);
  std::sort(roots.begin(), roots.end());
  std::vector<double> unique;
  for (const double r : roots)
    if (unique.empty() || r - unique.back() > 1e-9) unique.push_back(r);
  return unique;
}

struct BlochVector {
  double x = 0.0, y = 0.0, z = 0.0;
};

// Pauli expectation values of a (not necessarily normalized) spinor.
inline BlochVector bloch_components(const Vec2& psi) {
  const double n2 = psi.squaredNorm();
  if (!(n2 > 0.0))
    throw std::invalid_argument("bloch_components: zero state");
  const Complex cross = std::conj(psi(0)) * psi(1);
  return {2.0 * cross.real() / n2, 2.0 * cross.imag() / n2,
          (std::norm(psi(0)) - std::norm(psi(1))) / n2};
}

}  // namespace qholo
