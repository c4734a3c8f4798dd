#pragma once

// Radial scattering solved as two-level time evolution. The radial equation
// u'' + [k^2 - 2mV/(hbar c)^2 - l(l+1)/r^2] u = 0 is encoded in the spinor
// (alpha, beta) = (sqrt(2) u, i u' / (sqrt(2) m~)) with m~ = m / hbar c, and
// evolved under the non-Hermitian generator
//   H(t) = v [[0, 2 m~], [E~ - V~_tot(v t), 0]],   r = v t,
// where E~ and V~_tot are the energy and full channel potential (centrifugal
// included) divided by hbar c. The phase shift is then read off from u at
// two exterior radii against the free solutions.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "integrator.hpp"
#include "potential.hpp"
#include "special_functions.hpp"
#include "types.hpp"

namespace qholo {

struct ScatteringChannel {
  int l = 0;
  double j = 0.5;
  double energy = 0.0;  // MeV
  double mass = 0.0;    // MeV
  double hbar_c = 0.0;  // MeV fm
  double k = 0.0;       // fm^-1

  static ScatteringChannel make(int l, double j, double energy, double mass,
                                double hbar_c) {
    spin_orbit_expectation(l, j);  // validates the (l, j) pairing
    if (!(energy > 0.0))
      throw std::invalid_argument("ScatteringChannel: energy must be > 0");
    if (!(mass > 0.0) || !(hbar_c > 0.0))
      throw std::invalid_argument(
          "ScatteringChannel: mass and hbar_c must be > 0");
    ScatteringChannel ch;
    ch.l = l;
    ch.j = j;
    ch.energy = energy;
    ch.mass = mass;
    ch.hbar_c = hbar_c;
    ch.k = std::sqrt(2.0 * mass * energy) / hbar_c;
    return ch;
  }
};

struct RadialOptions {
  double r_start = 1e-3;    // fm
  double v = 1.0;           // scale between r and evolution time, fm per unit t
  double tolerance = 1e-10;
};

// Evaluates H(t) for one channel. Holds its own copy of the potential so it
// can outlive the caller's spec.
struct HologramHamiltonian {
  PotentialSpec spec;
  int l = 0;
  double j = 0.5;
  double v = 1.0;
  double mass = 0.0;    // MeV
  double hbar_c = 0.0;  // MeV fm
  double m_tilde = 0.0;  // fm^-1
  double e_tilde = 0.0;  // fm^-1

  Mat2 operator()(double t) const {
    const double r = v * t;
    const Complex v_tot =
        total_potential(spec, l, j, r, mass, hbar_c) / hbar_c;
    Mat2 h;
    h << Complex(0.0, 0.0), Complex(v * 2.0 * m_tilde, 0.0),  //
        v * (e_tilde - v_tot), Complex(0.0, 0.0);
    return h;
  }
};

inline HologramHamiltonian hologram_hamiltonian(const ScatteringChannel& ch,
                                                const PotentialSpec& spec,
                                                double v) {
  if (!(v > 0.0))
    throw std::invalid_argument("hologram_hamiltonian: v must be > 0");
  HologramHamiltonian h;
  h.spec = spec;
  h.l = ch.l;
  h.j = ch.j;
  h.v = v;
  h.mass = ch.mass;
  h.hbar_c = ch.hbar_c;
  h.m_tilde = ch.mass / ch.hbar_c;
  h.e_tilde = ch.energy / ch.hbar_c;
  return h;
}

struct RadialSample {
  double r;        // fm
  Complex u;       // regular solution, arbitrary overall scale
  Complex du_dr;
};

struct RadialSolution {
  ScatteringChannel channel;
  std::vector<RadialSample> samples;  // at the requested radii, ascending
  long step_count = 0;
};

// Integrates the channel from r_start out to the largest requested radius.
// The start regularizes the centrifugal singularity with the leading
// behavior u = r^(l+1), u' = (l+1) r^l of the regular solution; the overall
// scale is a gauge choice, so the initial spinor is normalized to unit norm.
inline RadialSolution solve_radial(const ScatteringChannel& ch,
                                   const PotentialSpec& spec,
                                   const std::vector<double>& sample_r,
                                   const RadialOptions& opt = {}) {
  if (sample_r.empty())
    throw std::invalid_argument("solve_radial: no sample radii requested");
  if (!(opt.r_start > 0.0))
    throw std::invalid_argument("solve_radial: r_start must be > 0");
  std::vector<double> radii = sample_r;
  std::sort(radii.begin(), radii.end());
  if (std::adjacent_find(radii.begin(), radii.end()) != radii.end())
    throw std::invalid_argument("solve_radial: sample radii must be unique");
  if (!(radii.front() > opt.r_start))
    throw std::invalid_argument(
        "solve_radial: sample radii must exceed r_start");

  const auto h = hologram_hamiltonian(ch, spec, opt.v);
  const double u0 = std::pow(opt.r_start, ch.l + 1);
  const double du0 = (ch.l + 1.0) * std::pow(opt.r_start, ch.l);
  Vec2 psi0(Complex(std::numbers::sqrt2 * u0, 0.0),
            Complex(0.0, du0 / (std::numbers::sqrt2 * h.m_tilde)));
  psi0.normalize();

  std::vector<double> times(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) times[i] = radii[i] / opt.v;
  const double t0 = opt.r_start / opt.v;
  std::vector<double> cuts = potential_breakpoints(spec);
  for (double& c : cuts) c /= opt.v;
  const auto traj = integrate_schrodinger<2>(h, psi0, t0, times.back(),
                                             opt.tolerance, times, cuts);

  RadialSolution out;
  out.channel = ch;
  out.step_count = traj.step_count;
  out.samples.reserve(radii.size());
  std::size_t want = 0;
  for (const auto& s : traj.samples) {
    if (want >= radii.size()) break;
    if (s.t != times[want]) continue;
    const Complex u = s.state(0) / std::numbers::sqrt2;
    const Complex du =
        Complex(0.0, -1.0) * std::numbers::sqrt2 * h.m_tilde * s.state(1);
    out.samples.push_back({radii[want], u, du});
    ++want;
  }
  if (out.samples.size() != radii.size())
    throw NumericalError("solve_radial: sample bookkeeping failed");
  return out;
}

// Phase shift from u at two exterior radii R1 < R2 where the potential has
// died off. With G = R2 u(R1) / (R1 u(R2)),
//   tan(delta) = [j_l(k R1) - G j_l(k R2)] / [n_l(k R1) - G n_l(k R2)],
// complex for absorptive potentials. The real part is reduced to
// (-pi/2, pi/2].
inline Complex extract_phase_shift(Complex u_r1, Complex u_r2,
                                   const ScatteringChannel& ch, double r1,
                                   double r2) {
  if (!(r1 > 0.0) || !(r2 > r1))
    throw std::invalid_argument("extract_phase_shift: requires 0 < R1 < R2");
  if (u_r2 == Complex(0.0, 0.0))
    throw IllConditionedRadii(
        "extract_phase_shift: u(R2) = 0, cannot form the matching ratio");
  const double j1 = spherical_bessel_j(ch.l, ch.k * r1);
  const double j2 = spherical_bessel_j(ch.l, ch.k * r2);
  const double n1 = spherical_neumann_n(ch.l, ch.k * r1);
  const double n2 = spherical_neumann_n(ch.l, ch.k * r2);
  const Complex g = (r2 * u_r1) / (r1 * u_r2);
  const Complex num = j1 - g * j2;
  const Complex den = n1 - g * n2;
  const double scale = std::max({std::abs(j1), std::abs(n1),
                                 std::abs(g) * std::abs(j2),
                                 std::abs(g) * std::abs(n2)});
  if (std::abs(num) < 1e-13 * scale && std::abs(den) < 1e-13 * scale)
    throw IllConditionedRadii(
        "extract_phase_shift: matching radii k R1 = " +
        std::to_string(ch.k * r1) + ", k R2 = " + std::to_string(ch.k * r2) +
        " give a degenerate comparator pair");
  if (den == Complex(0.0, 0.0))
    return {std::numbers::pi / 2.0, 0.0};
  Complex delta = std::atan(num / den);
  if (delta.real() > std::numbers::pi / 2.0)
    delta -= std::numbers::pi;
  else if (delta.real() <= -std::numbers::pi / 2.0)
    delta += std::numbers::pi;
  return delta;
}

struct PhaseShiftTable {
  struct Entry {
    int l;
    double j;
    Complex delta;  // radians
  };
  std::vector<Entry> entries;  // ascending (l, j); l = 0 has only j = 1/2
  double energy = 0.0;         // MeV
  double mass = 0.0;           // MeV
  double hbar_c = 0.0;         // MeV fm
  double k = 0.0;              // fm^-1
  int l_max = 0;

  const Entry* find(int l, double j) const {
    for (const auto& e : entries)
      if (e.l == l && e.j == j) return &e;
    return nullptr;
  }
};

struct ExtractionRadii {
  double r1 = 19.98;  // fm
  double r2 = 20.0;   // fm
};

// Solves every (l, j) channel up to l_max and extracts the phase shifts.
// Any per-channel failure is collected and reported in one error so a run
// never silently drops channels.
inline PhaseShiftTable phase_shift_table(const PotentialSpec& spec,
                                         double energy, double mass,
                                         double hbar_c, int l_max,
                                         const RadialOptions& opt = {},
                                         const ExtractionRadii& radii = {}) {
  if (l_max < 0 || l_max > kMaxOrder)
    throw std::invalid_argument("phase_shift_table: l_max outside [0, 64]");
  if (!(radii.r1 > 0.0) || !(radii.r2 > radii.r1))
    throw std::invalid_argument("phase_shift_table: requires 0 < R1 < R2");
  const PotentialSpec resolved = spec.at_energy(energy);
  PhaseShiftTable table;
  table.energy = energy;
  table.mass = mass;
  table.hbar_c = hbar_c;
  table.l_max = l_max;
  std::string failures;
  for (int l = 0; l <= l_max; ++l) {
    for (const double j :
         l == 0 ? std::vector<double>{0.5}
                : std::vector<double>{l - 0.5, l + 0.5}) {
      try {
        const auto ch = ScatteringChannel::make(l, j, energy, mass, hbar_c);
        table.k = ch.k;
        const auto sol = solve_radial(ch, resolved, {radii.r1, radii.r2}, opt);
        const Complex delta = extract_phase_shift(
            sol.samples[0].u, sol.samples[1].u, ch, radii.r1, radii.r2);
        table.entries.push_back({l, j, delta});
      } catch (const std::exception& e) {
        failures += (failures.empty() ? "" : "; ") + std::string("(l = ") +
                    std::to_string(l) + ", j = " + std::to_string(j) +
                    "): " + e.what();
      }
    }
  }
  if (!failures.empty())
    throw NumericalError("phase_shift_table: channel failures: " + failures);
  return table;
}

struct AngularPoint {
  double theta;   // radians
  Complex f;      // spin-independent amplitude, fm
  Complex g;      // spin-flip amplitude, fm
  double dsigma;  // |f|^2 + |g|^2, fm^2 per sr
};

struct AngularDistribution {
  std::vector<AngularPoint> points;
  double k = 0.0;
};

namespace detail {

// Partial-wave amplitudes at one angle. sin_theta = 0 short-circuits the
// spin-flip sum, whose Legendre-derivative factor is otherwise undefined at
// the poles.
inline std::pair<Complex, Complex> amplitudes_at(
    const PhaseShiftTable& table, const std::vector<Complex>& s_plus,
    const std::vector<Complex>& s_minus, double cos_theta, double sin_theta) {
  Complex f(0.0, 0.0), g(0.0, 0.0);
  for (int l = 0; l <= table.l_max; ++l) {
    const double p_l = legendre_p(l, cos_theta);
    f += ((l + 1.0) * (s_plus[l] - 1.0) +
          static_cast<double>(l) * (s_minus[l] - 1.0)) *
         p_l;
    if (l >= 1 && sin_theta != 0.0)
      g += (s_plus[l] - s_minus[l]) * legendre_p_prime(l, cos_theta);
  }
  f /= Complex(0.0, 2.0 * table.k);
  g *= sin_theta / (2.0 * table.k);
  return {f, g};
}

inline void s_matrix_rows(const PhaseShiftTable& table,
                          std::vector<Complex>& s_plus,
                          std::vector<Complex>& s_minus) {
  s_plus.assign(table.l_max + 1, Complex(1.0, 0.0));
  s_minus.assign(table.l_max + 1, Complex(1.0, 0.0));
  for (int l = 0; l <= table.l_max; ++l) {
    const auto* up = table.find(l, l + 0.5);
    if (!up)
      throw std::invalid_argument(
          "scattering_amplitudes: table is missing (l = " + std::to_string(l) +
          ", j = l + 1/2)");
    s_plus[l] = std::exp(Complex(0.0, 2.0) * up->delta);
    if (l >= 1) {
      const auto* down = table.find(l, l - 0.5);
      if (!down)
        throw std::invalid_argument(
            "scattering_amplitudes: table is missing (l = " +
            std::to_string(l) + ", j = l - 1/2)");
      s_minus[l] = std::exp(Complex(0.0, 2.0) * down->delta);
    }
  }
}

}  // namespace detail

// f and g at each angle in (0, pi), angles in radians.
inline AngularDistribution scattering_amplitudes(
    const PhaseShiftTable& table, const std::vector<double>& thetas) {
  if (!(table.k > 0.0))
    throw std::invalid_argument("scattering_amplitudes: table has no k");
  std::vector<Complex> s_plus, s_minus;
  detail::s_matrix_rows(table, s_plus, s_minus);
  AngularDistribution dist;
  dist.k = table.k;
  dist.points.reserve(thetas.size());
  for (const double theta : thetas) {
    if (!(theta > 0.0) || !(theta < std::numbers::pi))
      throw std::invalid_argument(
          "scattering_amplitudes: angles must lie in (0, pi)");
    const auto [f, g] = detail::amplitudes_at(
        table, s_plus, s_minus, std::cos(theta), std::sin(theta));
    dist.points.push_back({theta, f, g, std::norm(f) + std::norm(g)});
  }
  return dist;
}

struct TotalCrossSections {
  double sigma_elastic = 0.0;  // fm^2
  double sigma_total = 0.0;    // fm^2, from the forward amplitude
};

// sigma_el integrates |f|^2 + |g|^2 over the sphere (Simpson, 2001 nodes);
// sigma_tot = (4 pi / k) Im f(0). They agree for real potentials and split
// apart once absorption removes flux.
inline TotalCrossSections total_cross_sections(const PhaseShiftTable& table) {
  if (!(table.k > 0.0))
    throw std::invalid_argument("total_cross_sections: table has no k");
  std::vector<Complex> s_plus, s_minus;
  detail::s_matrix_rows(table, s_plus, s_minus);
  constexpr int n = 2001;  // even interval count for Simpson
  const double h = std::numbers::pi / (n - 1);
  double integral = 0.0;
  for (int i = 0; i < n; ++i) {
    const double theta = i * h;
    const double sin_theta = (i == 0 || i == n - 1) ? 0.0 : std::sin(theta);
    const auto [f, g] = detail::amplitudes_at(table, s_plus, s_minus,
                                              std::cos(theta), sin_theta);
    const double w = (i == 0 || i == n - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    integral += w * (std::norm(f) + std::norm(g)) * sin_theta;
  }
  integral *= h / 3.0 * 2.0 * std::numbers::pi;
  const auto [f0, g0] =
      detail::amplitudes_at(table, s_plus, s_minus, 1.0, 0.0);
  return {integral, 4.0 * std::numbers::pi / table.k * f0.imag()};
}

struct DataPoint {
  double theta;  // radians
  double value;  // fm^2 per sr
  double sigma;  // fm^2 per sr, > 0
};

struct FitResult {
  double chi2 = 0.0;
  std::vector<double> residuals;  // (model - value) / sigma, data order
};

// chi^2 of the model curve against measured points, with the model linearly
// interpolated in angle. Every data angle must lie inside the model grid.
inline FitResult compare_to_data(const AngularDistribution& dist,
                                 const std::vector<DataPoint>& data) {
  if (dist.points.size() < 2)
    throw std::invalid_argument("compare_to_data: model grid too small");
  if (data.empty())
    throw std::invalid_argument("compare_to_data: no data points");
  FitResult fit;
  fit.residuals.reserve(data.size());
  for (const auto& d : data) {
    if (!(d.sigma > 0.0))
      throw std::invalid_argument("compare_to_data: sigma must be > 0");
    if (!(d.theta >= dist.points.front().theta) ||
        !(d.theta <= dist.points.back().theta))
      throw std::invalid_argument(
          "compare_to_data: data angle outside the model grid");
    const auto it = std::lower_bound(
        dist.points.begin(), dist.points.end(), d.theta,
        [](const AngularPoint& p, double th) { return p.theta < th; });
    double model = 0.0;
    if (it->theta == d.theta) {
      model = it->dsigma;
    } else {
      const auto& hi = *it;
      const auto& lo = *(it - 1);
      const double w = (d.theta - lo.theta) / (hi.theta - lo.theta);
      model = lo.dsigma + w * (hi.dsigma - lo.dsigma);
    }
    const double r = (model - d.value) / d.sigma;
    fit.residuals.push_back(r);
    fit.chi2 += r * r;
  }
  return fit;
}

}  // namespace qholo
