#pragma once

// Command line front end. Four subcommands: pt-scan (two-level phase
// diagram), scatter (optical-model phase shifts and cross sections), bound
// (domain-wall bound state search), dirac-check (operator identities and
// spectrum of the 4x4 hologram). All file output is deterministic:
// identical inputs produce byte-identical outputs.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure,
// 4 energy bracket without an interior amplitude minimum.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bound_state.hpp"
#include "dirac.hpp"
#include "io.hpp"
#include "potential_config.hpp"
#include "pt_core.hpp"
#include "scattering.hpp"
#include "types.hpp"

namespace qholo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitNoMinimum = 4;

inline constexpr double kMbPerFm2 = 10.0;

namespace detail {

using nlohmann::ordered_json;

// Output directory: --outdir beats QHOLO_OUTPUT_DIR beats the working
// directory. Created on demand.
inline std::filesystem::path resolve_outdir(const std::string& flag_value) {
  std::filesystem::path dir;
  if (!flag_value.empty()) {
    dir = flag_value;
  } else if (const char* env = std::getenv("QHOLO_OUTPUT_DIR");
             env && *env) {
    dir = env;
  } else {
    dir = ".";
  }
  std::filesystem::create_directories(dir);
  return dir;
}

inline const char* phase_name(PTPhase p) {
  switch (p) {
    case PTPhase::Unbroken: return "unbroken";
    case PTPhase::Broken: return "broken";
    default: return "exceptional_point";
  }
}

struct PtScanArgs {
  double omega_min = 0.0, omega_max = 0.0, mass = 0.0;
  int steps = 101;
  double ep_tol = 1e-9;
  std::string output;
};

inline int run_pt_scan(const PtScanArgs& a) {
  if (!(a.omega_max > a.omega_min))
    throw ConfigError("pt-scan: requires omega-max > omega-min");
  if (a.steps < 2) throw ConfigError("pt-scan: steps must be >= 2");
  if (a.mass < 0.0) throw ConfigError("pt-scan: mass must be >= 0");
  if (!(a.ep_tol > 0.0)) throw ConfigError("pt-scan: ep-tol must be > 0");
  std::ostringstream body;
  body << "# two-level generator [[omega, -m], [m, -omega]], "
          "k = +/- sqrt(omega^2 - m^2)\n";
  body << "# mass = " << format_double(a.mass) << ", ep_tol = "
       << format_double(a.ep_tol) << "\n";
  body << "omega,re_k_plus,im_k_plus,re_k_minus,im_k_minus,phase\n";
  for (int i = 0; i < a.steps; ++i) {
    const double omega =
        a.omega_min + (a.omega_max - a.omega_min) * i / (a.steps - 1.0);
    const auto c = classify_pt({omega, a.mass}, a.ep_tol);
    body << format_double(omega) << ','
         << format_double(c.k_plus.real()) << ','
         << format_double(c.k_plus.imag()) << ','
         << format_double(c.k_minus.real()) << ','
         << format_double(c.k_minus.imag()) << ','
         << phase_name(c.phase) << "\n";
  }
  if (a.output.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(a.output);
    if (!out) throw ConfigError("cannot write " + a.output);
    out << body.str();
  }
  return kExitOk;
}

inline ordered_json ws_term_json(const WoodsSaxonTerm& t, double energy) {
  ordered_json j;
  j["depth_mev"] = t.depth;
  j["depth_e"] = t.depth_e;
  j["depth_at_energy_mev"] = t.depth_at(energy);
  j["radius_fm"] = t.radius;
  j["diffuseness_fm"] = t.diffuseness;
  j["form"] = t.form == WsForm::Volume ? "volume" : "surface_derivative";
  return j;
}

inline ordered_json potential_json(const ParsedPotential& pot,
                                   double energy) {
  ordered_json j;
  j["type"] = pot.type;
  if (const auto* om = std::get_if<OpticalModelSpec>(&pot.spec.model)) {
    if (om->target_mass_number > 0)
      j["target_mass_number"] = om->target_mass_number;
    j["real_volume"] = ws_term_json(om->real_volume, energy);
    if (om->imag_volume)
      j["imag_volume"] = ws_term_json(*om->imag_volume, energy);
    if (om->imag_surface)
      j["imag_surface"] = ws_term_json(*om->imag_surface, energy);
    if (om->spin_orbit) {
      j["spin_orbit"] = ws_term_json(*om->spin_orbit, energy);
      j["spin_orbit"]["scale_fm2"] = om->so_scale;
    }
  } else if (const auto* sw = std::get_if<SquareWellSpec>(&pot.spec.model)) {
    j["depth_re_mev"] = sw->depth.real();
    j["depth_im_mev"] = sw->depth.imag();
    j["radius_fm"] = sw->radius;
  } else if (const auto* tab = std::get_if<TabulatedSpec>(&pot.spec.model)) {
    j["nodes"] = tab->r.size();
    j["r_min_fm"] = tab->r.front();
    j["r_max_fm"] = tab->r.back();
  }
  return j;
}

struct ScatterArgs {
  std::string potential_file;
  double energy = 0.0;  // MeV
  int l_max = 12;
  double r_start = 1e-3, r1 = 19.98, r2 = 20.0;
  double v = 1.0, tolerance = 1e-10;
  double theta_min = 1.0, theta_max = 179.0, theta_step = 1.0;  // degrees
  std::string data_file;
  bool reduced_mass = false;
  double hbar_c_override = 0.0, neutron_mass_override = 0.0;
  std::string outdir;
};

inline int run_scatter(const ScatterArgs& a) {
  if (!(a.energy > 0.0)) throw ConfigError("scatter: energy must be > 0");
  if (a.l_max < 0 || a.l_max > kMaxOrder - 4)
    throw ConfigError("scatter: l_max must lie in [0, 60]");
  if (!(a.theta_step > 0.0) || !(a.theta_min > 0.0) ||
      !(a.theta_max < 180.0) || !(a.theta_max >= a.theta_min))
    throw ConfigError(
        "scatter: need 0 < theta-min <= theta-max < 180 and theta-step > 0");

  ParsedPotential pot = parse_potential_file(a.potential_file);
  if (a.hbar_c_override > 0.0) pot.constants.hbar_c = a.hbar_c_override;
  if (a.neutron_mass_override > 0.0)
    pot.constants.neutron_mass = a.neutron_mass_override;

  double mass = pot.constants.neutron_mass;
  if (a.reduced_mass) {
    const auto* om = std::get_if<OpticalModelSpec>(&pot.spec.model);
    if (!om || om->target_mass_number <= 0)
      throw ConfigError(
          "scatter: --reduced-mass needs an optical_model potential with "
          "target_mass_number");
    const double target = om->target_mass_number * pot.constants.amu;
    mass = mass * target / (mass + target);
  }

  const RadialOptions opt{a.r_start, a.v, a.tolerance};
  const ExtractionRadii radii{a.r1, a.r2};
  const auto table = phase_shift_table(pot.spec, a.energy, mass,
                                       pot.constants.hbar_c, a.l_max, opt,
                                       radii);

  std::vector<double> thetas_deg;
  for (double th = a.theta_min; th <= a.theta_max + 1e-9; th += a.theta_step)
    thetas_deg.push_back(th);
  std::vector<double> thetas_rad(thetas_deg.size());
  for (std::size_t i = 0; i < thetas_deg.size(); ++i)
    thetas_rad[i] = thetas_deg[i] * std::numbers::pi / 180.0;
  const auto dist = scattering_amplitudes(table, thetas_rad);
  const auto sigma = total_cross_sections(table);

  // Convergence probe: how much sigma_el still moves when the partial-wave
  // cutoff is raised by 4.
  const auto table_check =
      phase_shift_table(pot.spec, a.energy, mass, pot.constants.hbar_c,
                        a.l_max + 4, opt, radii);
  const auto sigma_check = total_cross_sections(table_check);
  const double rel_delta =
      sigma.sigma_elastic != 0.0
          ? std::abs(sigma_check.sigma_elastic - sigma.sigma_elastic) /
                std::abs(sigma.sigma_elastic)
          : 0.0;

  double min_im_delta = 0.0;
  bool first = true;
  for (const auto& e : table.entries) {
    if (first || e.delta.imag() < min_im_delta) min_im_delta = e.delta.imag();
    first = false;
  }

  const auto outdir = resolve_outdir(a.outdir);
  {
    CsvWriter w(outdir / "phase_shifts.csv");
    w.comment("phase shifts delta_lj in radians, complex for absorption");
    w.comment("E = " + format_double(a.energy) + " MeV, k = " +
              format_double(table.k) + " 1/fm, mass = " +
              format_double(mass) + " MeV");
    w.row("l", "j", "re_delta_rad", "im_delta_rad");
    for (const auto& e : table.entries)
      w.row(e.l, e.j, e.delta.real(), e.delta.imag());
  }
  {
    CsvWriter w(outdir / "angular.csv");
    w.comment("differential cross section; f and g in fm, dsigma in mb/sr");
    w.comment("E = " + format_double(a.energy) + " MeV, k = " +
              format_double(table.k) + " 1/fm");
    w.row("theta_deg", "re_f_fm", "im_f_fm", "re_g_fm", "im_g_fm",
          "dsigma_mb_sr");
    for (std::size_t i = 0; i < dist.points.size(); ++i) {
      const auto& p = dist.points[i];
      w.row(thetas_deg[i], p.f.real(), p.f.imag(), p.g.real(), p.g.imag(),
            p.dsigma * kMbPerFm2);
    }
  }

  ordered_json summary;
  summary["subcommand"] = "scatter";
  ordered_json inputs;
  inputs["potential_file"] = a.potential_file;
  inputs["potential"] = potential_json(pot, a.energy);
  inputs["energy_mev"] = a.energy;
  inputs["mass_mev"] = mass;
  inputs["reduced_mass"] = a.reduced_mass;
  inputs["k_fm_inv"] = table.k;
  inputs["l_max"] = a.l_max;
  inputs["r_start_fm"] = a.r_start;
  inputs["r1_fm"] = a.r1;
  inputs["r2_fm"] = a.r2;
  inputs["v_scale"] = a.v;
  inputs["tolerance"] = a.tolerance;
  inputs["theta_min_deg"] = a.theta_min;
  inputs["theta_max_deg"] = a.theta_max;
  inputs["theta_step_deg"] = a.theta_step;
  ordered_json consts;
  consts["hbar_c_mev_fm"] = pot.constants.hbar_c;
  consts["neutron_mass_mev"] = pot.constants.neutron_mass;
  consts["amu_mev"] = pot.constants.amu;
  consts["lambda_pi2_fm2"] = pot.constants.lambda_pi2;
  inputs["constants"] = consts;
  summary["inputs"] = inputs;

  ordered_json results;
  results["sigma_elastic_fm2"] = sigma.sigma_elastic;
  results["sigma_elastic_mb"] = sigma.sigma_elastic * kMbPerFm2;
  results["sigma_total_fm2"] = sigma.sigma_total;
  results["sigma_total_mb"] = sigma.sigma_total * kMbPerFm2;
  results["min_im_delta_rad"] = min_im_delta;
  ordered_json conv;
  conv["l_max_check"] = a.l_max + 4;
  conv["sigma_elastic_fm2_at_check"] = sigma_check.sigma_elastic;
  conv["sigma_elastic_rel_delta"] = rel_delta;
  results["lmax_convergence"] = conv;

  if (!a.data_file.empty()) {
    const auto measured = parse_angular_data(a.data_file);
    std::vector<DataPoint> data;
    data.reserve(measured.size());
    for (const auto& p : measured)
      data.push_back({p.theta_deg * std::numbers::pi / 180.0,
                      p.value_mb / kMbPerFm2, p.sigma_mb / kMbPerFm2});
    const auto fit = compare_to_data(dist, data);
    ordered_json chi;
    chi["data_file"] = a.data_file;
    chi["n_points"] = data.size();
    chi["chi2"] = fit.chi2;
    chi["chi2_per_point"] = fit.chi2 / data.size();
    results["fit"] = chi;
  }
  summary["results"] = results;
  std::ofstream js(outdir / "summary.json");
  if (!js) throw ConfigError("cannot write summary.json");
  js << summary.dump(2) << "\n";
  return kExitOk;
}

struct BoundArgs {
  double x0 = -5.0, x1 = 5.0;
  double bracket_lo = -0.5, bracket_hi = 0.5;
  double tol_e = 1e-4, tolerance = 1e-10;
  double scan_lo = 0.0, scan_hi = 0.0;  // 0/0 means: use the bracket
  int scan_steps = 101;
  double wall_center = 0.0;
  int trajectory_samples = 501;
  std::string outdir;
};

inline int run_bound(const BoundArgs& a) {
  if (!(a.x1 > a.x0)) throw ConfigError("bound: requires x1 > x0");
  if (!(a.bracket_hi > a.bracket_lo))
    throw ConfigError("bound: requires bracket-hi > bracket-lo");
  if (a.scan_steps < 2) throw ConfigError("bound: scan-steps must be >= 2");
  if (a.trajectory_samples < 2)
    throw ConfigError("bound: trajectory-samples must be >= 2");
  const double scan_lo =
      (a.scan_lo == 0.0 && a.scan_hi == 0.0) ? a.bracket_lo : a.scan_lo;
  const double scan_hi =
      (a.scan_lo == 0.0 && a.scan_hi == 0.0) ? a.bracket_hi : a.scan_hi;
  if (!(scan_hi > scan_lo))
    throw ConfigError("bound: requires scan-hi > scan-lo");

  const auto profile = MassProfile::tanh_wall(a.wall_center);
  std::vector<double> grid(a.scan_steps);
  for (int i = 0; i < a.scan_steps; ++i)
    grid[i] = scan_lo + (scan_hi - scan_lo) * i / (a.scan_steps - 1.0);
  const auto scan = scan_energies(profile, grid, a.x0, a.x1, a.tolerance);

  const double e_star = find_bound_state(profile, a.bracket_lo, a.bracket_hi,
                                         a.tol_e, a.x0, a.x1, a.tolerance);
  const auto trial = evolve_trial(e_star, profile, a.x0, a.x1, a.tolerance,
                                  a.trajectory_samples);
  const auto turns = turning_points(e_star, profile, a.x0, a.x1);

  const auto outdir = resolve_outdir(a.outdir);
  {
    CsvWriter w(outdir / "scan.csv");
    w.comment("final amplitude ||psi(x1)|| against trial energy");
    w.comment("wall m(x) = " + profile.name + ", x0 = " +
              format_double(a.x0) + ", x1 = " + format_double(a.x1));
    w.row("energy", "final_amplitude");
    for (const auto& e : scan.entries) w.row(e.energy, e.final_amplitude);
  }
  {
    CsvWriter w(outdir / "trajectory.csv");
    w.comment("state at E = " + format_double(e_star) +
              " in the (psi_L, psi_R) basis");
    w.row("x", "re_psi_l", "im_psi_l", "re_psi_r", "im_psi_r", "sigma_x",
          "sigma_y", "sigma_z", "norm");
    for (const auto& s : trial.trajectory.samples) {
      const auto b = bloch_components(s.state);
      w.row(s.t, s.state(0).real(), s.state(0).imag(), s.state(1).real(),
            s.state(1).imag(), b.x, b.y, b.z, s.state.norm());
    }
  }
  ordered_json result;
  result["subcommand"] = "bound";
  ordered_json inputs;
  inputs["x0"] = a.x0;
  inputs["x1"] = a.x1;
  inputs["bracket"] = {a.bracket_lo, a.bracket_hi};
  inputs["scan"] = {scan_lo, scan_hi};
  inputs["scan_steps"] = a.scan_steps;
  inputs["tol_e"] = a.tol_e;
  inputs["tolerance"] = a.tolerance;
  inputs["wall"] = profile.name;
  inputs["trajectory_samples"] = a.trajectory_samples;
  result["inputs"] = inputs;
  ordered_json res;
  res["e_star"] = e_star;
  res["final_amplitude"] = trial.final_amplitude;
  res["turning_points"] = turns;
  result["results"] = res;
  std::ofstream js(outdir / "result.json");
  if (!js) throw ConfigError("cannot write result.json");
  js << result.dump(2) << "\n";
  return kExitOk;
}

struct DiracArgs {
  std::uint64_t seed = 42;
  int draws = 1000;
  double tol = 1e-12;
};

// Implementation-defined distributions would break byte-identical output
// across standard libraries, so doubles come straight from the raw engine.
inline double uniform_pm(std::mt19937_64& rng, double half_width) {
  const double u = (rng() >> 11) * 0x1.0p-53;  // [0, 1)
  return half_width * (2.0 * u - 1.0);
}

inline int run_dirac_check(const DiracArgs& a) {
  if (a.draws < 1) throw ConfigError("dirac-check: draws must be >= 1");
  std::mt19937_64 rng(a.seed);
  const double mirror = mirror_decomposition_check();
  double parity = 0.0, pt = 0.0, spectrum = 0.0;
  for (int i = 0; i < a.draws; ++i) {
    const double kx = uniform_pm(rng, 2.0);
    const double ky = uniform_pm(rng, 2.0);
    const double kz = uniform_pm(rng, 2.0);
    const double m = uniform_pm(rng, 2.0);
    const double omega = uniform_pm(rng, 2.0);
    parity = std::max(parity, parity_check({kx, ky, kz}, m));
    pt = std::max(pt, pt_identity_check({omega, kx, ky, m}));
  }
  // The dispersion comparison stays away from the exceptional point, where
  // the defective eigenvalue problem amplifies roundoff to sqrt(eps).
  for (int i = 0; i < a.draws; ++i) {
    double omega = 0.0, m = 0.0;
    do {
      omega = uniform_pm(rng, 2.0);
      m = uniform_pm(rng, 2.0);
    } while (std::abs(std::abs(omega) - std::abs(m)) < 0.1);
    const auto kz = hologram_eigenmomenta({omega, 0.0, 0.0, m});
    const auto [kp, km] = eigenmomenta({omega, std::abs(m)});
    const std::array<Complex, 4> expected{km, km, kp, kp};
    // Roundoff in near-zero real parts makes any sort order unstable between
    // conjugate partners, so the quartets are matched as multisets.
    std::array<bool, 4> used{};
    for (int q = 0; q < 4; ++q) {
      double best = std::numeric_limits<double>::infinity();
      int best_j = -1;
      for (int j = 0; j < 4; ++j) {
        if (used[j]) continue;
        const double d = std::abs(kz[q] - expected[j]);
        if (d < best) best = d, best_j = j;
      }
      used[best_j] = true;
      spectrum = std::max(spectrum, best);
    }
  }
  const double worst = std::max({mirror, parity, pt, spectrum});
  std::cout << "mirror decomposition residual: " << format_double(mirror)
            << "\n";
  std::cout << "parity relation max residual (" << a.draws
            << " draws): " << format_double(parity) << "\n";
  std::cout << "pt identity max residual (" << a.draws
            << " draws): " << format_double(pt) << "\n";
  std::cout << "hologram spectrum max deviation (" << a.draws
            << " draws): " << format_double(spectrum) << "\n";
  const bool ok = worst <= a.tol;
  std::cout << "overall: " << (ok ? "PASS" : "FAIL") << " (tolerance "
            << format_double(a.tol) << ")\n";
  return ok ? kExitOk : kExitNumerical;
}

}  // namespace detail

// Entry point shared by the binary and the tests. args excludes argv[0].
inline int run(const std::vector<std::string>& args) {
  CLI::App app{
      "Spatial eigenvalue problems as two-level time evolution: phase "
      "diagrams, scattering phase shifts, domain-wall bound states, and the "
      "4x4 hologram identities."};
  app.require_subcommand(1);

  detail::PtScanArgs pt;
  auto* pt_cmd = app.add_subcommand(
      "pt-scan", "Momentum pair and phase of the two-level generator over "
                 "an omega range");
  pt_cmd->add_option("--omega-min", pt.omega_min, "Lowest omega")->required();
  pt_cmd->add_option("--omega-max", pt.omega_max, "Highest omega")->required();
  pt_cmd->add_option("--mass", pt.mass, "Gap parameter m >= 0")->required();
  pt_cmd->add_option("--steps", pt.steps, "Grid points (default 101)");
  pt_cmd->add_option("--ep-tol", pt.ep_tol,
                     "Half-width of the exceptional-point band");
  pt_cmd->add_option("--output", pt.output, "CSV path (default: stdout)");

  detail::ScatterArgs sc;
  auto* sc_cmd = app.add_subcommand(
      "scatter", "Phase shifts and cross sections for a channel potential");
  sc_cmd->add_option("--potential", sc.potential_file, "Potential config file")
      ->required();
  sc_cmd->add_option("--energy", sc.energy, "Lab energy in MeV")->required();
  sc_cmd->add_option("--lmax", sc.l_max, "Partial-wave cutoff (default 12)");
  sc_cmd->add_option("--r-start", sc.r_start,
                     "Integration start radius in fm (default 1e-3)");
  sc_cmd->add_option("--r1", sc.r1, "First matching radius in fm");
  sc_cmd->add_option("--r2", sc.r2, "Second matching radius in fm");
  sc_cmd->add_option("--v", sc.v, "Radius-per-time scale (default 1)");
  sc_cmd->add_option("--tolerance", sc.tolerance,
                     "Integrator tolerance (default 1e-10)");
  sc_cmd->add_option("--theta-min", sc.theta_min, "Smallest angle, degrees");
  sc_cmd->add_option("--theta-max", sc.theta_max, "Largest angle, degrees");
  sc_cmd->add_option("--theta-step", sc.theta_step, "Angle step, degrees");
  sc_cmd->add_option("--data", sc.data_file,
                     "Measured angular distribution for a chi^2");
  sc_cmd->add_flag("--reduced-mass", sc.reduced_mass,
                   "Use the neutron-target reduced mass");
  sc_cmd->add_option("--hbar-c", sc.hbar_c_override, "Override hbar c");
  sc_cmd->add_option("--neutron-mass", sc.neutron_mass_override,
                     "Override the projectile mass in MeV");
  sc_cmd->add_option("--outdir", sc.outdir,
                     "Output directory (or QHOLO_OUTPUT_DIR)");

  detail::BoundArgs bd;
  auto* bd_cmd = app.add_subcommand(
      "bound", "Search the domain-wall bound state by shooting");
  bd_cmd->add_option("--x0", bd.x0, "Left edge (default -5)");
  bd_cmd->add_option("--x1", bd.x1, "Right edge (default 5)");
  bd_cmd->add_option("--bracket-lo", bd.bracket_lo,
                     "Lower edge of the search bracket (default -0.5)");
  bd_cmd->add_option("--bracket-hi", bd.bracket_hi,
                     "Upper edge of the search bracket (default 0.5)");
  bd_cmd->add_option("--tol-e", bd.tol_e, "Energy tolerance (default 1e-4)");
  bd_cmd->add_option("--tolerance", bd.tolerance,
                     "Integrator tolerance (default 1e-10)");
  bd_cmd->add_option("--scan-lo", bd.scan_lo,
                     "Scan window low edge (default: bracket)");
  bd_cmd->add_option("--scan-hi", bd.scan_hi,
                     "Scan window high edge (default: bracket)");
  bd_cmd->add_option("--scan-steps", bd.scan_steps,
                     "Scan grid points (default 101)");
  bd_cmd->add_option("--wall-center", bd.wall_center,
                     "Center of the tanh wall (default 0)");
  bd_cmd->add_option("--trajectory-samples", bd.trajectory_samples,
                     "Rows in trajectory.csv (default 501)");
  bd_cmd->add_option("--outdir", bd.outdir,
                     "Output directory (or QHOLO_OUTPUT_DIR)");

  detail::DiracArgs dc;
  auto* dc_cmd = app.add_subcommand(
      "dirac-check", "Operator identities and hologram spectrum checks");
  dc_cmd->add_option("--seed", dc.seed, "RNG seed (default 42)");
  dc_cmd->add_option("--draws", dc.draws, "Random draws (default 1000)");
  dc_cmd->add_option("--tol", dc.tol, "Pass threshold (default 1e-12)");

  std::vector<std::string> argv_s;
  argv_s.reserve(args.size() + 1);
  argv_s.push_back("qholo");
  argv_s.insert(argv_s.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(argv_s.size());
  for (const auto& s : argv_s) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (app.got_subcommand(pt_cmd)) return detail::run_pt_scan(pt);
    if (app.got_subcommand(sc_cmd)) return detail::run_scatter(sc);
    if (app.got_subcommand(bd_cmd)) return detail::run_bound(bd);
    return detail::run_dirac_check(dc);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const NoInteriorMinimum& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoMinimum;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}

inline int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? argc - 1 : 0);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args);
}

}  // namespace qholo::cli
