#pragma once

// Channel potentials V_lj(r): Woods-Saxon optical models with optional
// absorptive and spin-orbit terms, square wells, tabulated tables, and the
// free case. Lengths in fm, energies in MeV throughout.

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "types.hpp"

namespace qholo {

enum class WsForm { Volume, SurfaceDerivative };

// One Woods-Saxon term. A negative depth is attractive for the real volume
// term; absorptive terms carry negative depth on the imaginary part of the
// potential. The depth may be an affine function of the lab energy:
// depth(E) = depth + depth_e * E, resolved once per run.
struct WoodsSaxonTerm {
  double depth = 0.0;        // MeV
  double depth_e = 0.0;      // MeV per MeV of lab energy
  double radius = 1.0;       // fm
  double diffuseness = 0.65;  // fm
  WsForm form = WsForm::Volume;

  double depth_at(double energy) const { return depth + depth_e * energy; }
};

// dV/dr-shaped surface terms use the conventional -4a d/dr normalization so
// the peak value equals the quoted depth.
inline double ws_shape(const WoodsSaxonTerm& t, double r) {
  const double f = 1.0 / (1.0 + std::exp((r - t.radius) / t.diffuseness));
  if (t.form == WsForm::Volume) return f;
  return 4.0 * f * (1.0 - f);
}

struct OpticalModelSpec {
  WoodsSaxonTerm real_volume;
  std::optional<WoodsSaxonTerm> imag_volume;
  std::optional<WoodsSaxonTerm> imag_surface;
  std::optional<WoodsSaxonTerm> spin_orbit;  // Thomas form; depth in MeV
  int target_mass_number = 0;  // informational once radii are resolved
  double so_scale = 2.0;       // fm^2 multiplying the Thomas term
};

struct SquareWellSpec {
  Complex depth;        // MeV; imaginary part <= 0 absorbs
  double radius = 1.0;  // fm
};

struct TabulatedSpec {
  std::vector<double> r;   // strictly increasing, >= 2 nodes, fm
  std::vector<Complex> v;  // MeV
};

struct FreeSpec {};

struct PotentialSpec {
  std::variant<FreeSpec, SquareWellSpec, OpticalModelSpec, TabulatedSpec>
      model;

  // Resolves energy-affine depths at the given lab energy, returning a spec
  // whose depths are plain numbers.
  PotentialSpec at_energy(double energy) const {
    PotentialSpec out = *this;
    if (auto* om = std::get_if<OpticalModelSpec>(&out.model)) {
      const auto resolve = [energy](WoodsSaxonTerm& t) {
        t.depth = t.depth_at(energy);
        t.depth_e = 0.0;
      };
      resolve(om->real_volume);
      if (om->imag_volume) resolve(*om->imag_volume);
      if (om->imag_surface) resolve(*om->imag_surface);
      if (om->spin_orbit) resolve(*om->spin_orbit);
    }
    return out;
  }
};

// <L.S> = [j(j+1) - l(l+1) - 3/4]/2 for j = l +/- 1/2.
inline double spin_orbit_expectation(int l, double j) {
  if (l < 0) throw std::invalid_argument("spin_orbit_expectation: l < 0");
  if (std::abs(std::abs(j - l) - 0.5) > 1e-12 || j < 0.25)
    throw std::invalid_argument(
        "spin_orbit_expectation: j must equal l +/- 1/2");
  return 0.5 * (j * (j + 1.0) - l * (l + 1.0) - 0.75);
}

// V_lj(r) without the centrifugal term.
inline Complex evaluate_potential(const PotentialSpec& spec, int l, double j,
                                  double r) {
  if (!(r > 0.0))
    throw std::domain_error("evaluate_potential: requires r > 0");
  spin_orbit_expectation(l, j);  // validates the (l, j) pairing
  if (std::holds_alternative<FreeSpec>(spec.model)) return {0.0, 0.0};
  if (const auto* sw = std::get_if<SquareWellSpec>(&spec.model))
    return r < sw->radius ? sw->depth : Complex(0.0, 0.0);
  if (const auto* tab = std::get_if<TabulatedSpec>(&spec.model)) {
    if (r < tab->r.front() || r > tab->r.back())
      throw std::domain_error(
          "evaluate_potential: r = " + std::to_string(r) +
          " outside tabulated range [" + std::to_string(tab->r.front()) +
          ", " + std::to_string(tab->r.back()) + "]");
    const auto it = std::lower_bound(tab->r.begin(), tab->r.end(), r);
    const std::size_t hi = it == tab->r.end()
                               ? tab->r.size() - 1
                               : static_cast<std::size_t>(it - tab->r.begin());
    if (tab->r[hi] == r) return tab->v[hi];
    const std::size_t lo = hi - 1;
    const double w = (r - tab->r[lo]) / (tab->r[hi] - tab->r[lo]);
    return tab->v[lo] + w * (tab->v[hi] - tab->v[lo]);
  }
  const auto& om = std::get<OpticalModelSpec>(spec.model);
  Complex v(om.real_volume.depth * ws_shape(om.real_volume, r), 0.0);
  if (om.imag_volume)
    v += Complex(0.0, om.imag_volume->depth * ws_shape(*om.imag_volume, r));
  if (om.imag_surface)
    v += Complex(0.0, om.imag_surface->depth * ws_shape(*om.imag_surface, r));
  if (om.spin_orbit) {
    // Thomas form: scale * depth * (1/r) df/dr * <L.S>, with f the volume
    // shape of the spin-orbit geometry.
    const auto& so = *om.spin_orbit;
    const double f = 1.0 / (1.0 + std::exp((r - so.radius) / so.diffuseness));
    const double dfdr = -f * (1.0 - f) / so.diffuseness;
    v += om.so_scale * so.depth * dfdr / r * spin_orbit_expectation(l, j);
  }
  return v;
}

// Radii where V(r) or its slope jumps: a square-well edge, or the nodes of
// a piecewise-linear table. Integrators need these as hard step boundaries;
// smooth models have none.
inline std::vector<double> potential_breakpoints(const PotentialSpec& spec) {
  if (const auto* sw = std::get_if<SquareWellSpec>(&spec.model))
    return {sw->radius};
  if (const auto* tab = std::get_if<TabulatedSpec>(&spec.model))
    return tab->r;
  return {};
}

// V_lj(r) plus the centrifugal barrier (hbar c)^2 l(l+1) / (2 m r^2).
inline Complex total_potential(const PotentialSpec& spec, int l, double j,
                               double r, double mass, double hbar_c) {
  if (!(mass > 0.0) || !(hbar_c > 0.0))
    throw std::invalid_argument("total_potential: mass and hbar_c must be > 0");
  const double centrifugal =
      hbar_c * hbar_c * l * (l + 1.0) / (2.0 * mass * r * r);
  return evaluate_potential(spec, l, j, r) + centrifugal;
}

}  // namespace qholo
