#pragma once

// Strict key = value potential config files. Unknown keys, duplicates,
// malformed numbers, and missing required fields are all hard errors; a
// config that parses is a config that runs.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "potential.hpp"
#include "types.hpp"

namespace qholo {

struct ParsedPotential {
  PotentialSpec spec;
  Constants constants;
  std::string type;  // free | square_well | optical_model | tabulated
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline double parse_number(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(value, &used);
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': cannot parse number '" + value + "'");
  }
  if (used != value.size() || !std::isfinite(out))
    throw ConfigError("key '" + key + "': cannot parse number '" + value + "'");
  return out;
}

// Reads "key = value" lines into an ordered map, rejecting duplicates.
inline std::map<std::string, std::string> read_kv_file(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                        ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                        ": expected 'key = value'");
    if (!kv.emplace(key, value).second)
      throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                        ": duplicate key '" + key + "'");
  }
  return kv;
}

class KvReader {
 public:
  KvReader(std::map<std::string, std::string> kv, std::string source)
      : kv_(std::move(kv)), source_(std::move(source)) {}

  std::optional<std::string> take(const std::string& key) {
    const auto it = kv_.find(key);
    if (it == kv_.end()) return std::nullopt;
    std::string value = it->second;
    kv_.erase(it);
    return value;
  }

  std::optional<double> take_number(const std::string& key) {
    const auto v = take(key);
    if (!v) return std::nullopt;
    return parse_number(key, *v);
  }

  double require_number(const std::string& key) {
    const auto v = take_number(key);
    if (!v) throw ConfigError(source_ + ": missing required key '" + key + "'");
    return *v;
  }

  void finish() const {
    if (kv_.empty()) return;
    std::string names;
    for (const auto& [k, v] : kv_) names += (names.empty() ? "'" : ", '") + k + "'";
    throw ConfigError(source_ + ": unknown key(s) " + names);
  }

  const std::string& source() const { return source_; }

 private:
  std::map<std::string, std::string> kv_;
  std::string source_;
};

inline void read_constants(KvReader& kv, Constants& c) {
  if (const auto v = kv.take_number("constants.hbar_c")) c.hbar_c = *v;
  if (const auto v = kv.take_number("constants.neutron_mass"))
    c.neutron_mass = *v;
  if (const auto v = kv.take_number("constants.amu")) c.amu = *v;
  if (const auto v = kv.take_number("constants.lambda_pi2")) c.lambda_pi2 = *v;
  if (!(c.hbar_c > 0.0) || !(c.neutron_mass > 0.0) || !(c.amu > 0.0))
    throw ConfigError(kv.source() + ": constants must be positive");
}

// Reads one Woods-Saxon term given its key prefix. The geometry accepts
// either an absolute radius or r0 with radius = r0 * A^(1/3).
inline std::optional<WoodsSaxonTerm> read_ws_term(KvReader& kv,
                                                  const std::string& prefix,
                                                  int mass_number,
                                                  bool allow_surface) {
  WoodsSaxonTerm t;
  const auto depth = kv.take_number(prefix + ".depth");
  const auto depth_e = kv.take_number(prefix + ".depth_e");
  const auto radius = kv.take_number(prefix + ".radius");
  const auto r0 = kv.take_number(prefix + ".r0");
  const auto diff = kv.take_number(prefix + ".diffuseness");
  const auto form = kv.take(prefix + ".form");
  if (!depth && !depth_e && !radius && !r0 && !diff && !form)
    return std::nullopt;
  if (!depth)
    throw ConfigError(kv.source() + ": missing required key '" + prefix +
                      ".depth'");
  t.depth = *depth;
  t.depth_e = depth_e.value_or(0.0);
  if (radius && r0)
    throw ConfigError(kv.source() + ": '" + prefix +
                      ".radius' and '" + prefix + ".r0' are exclusive");
  if (radius) {
    t.radius = *radius;
  } else if (r0) {
    if (mass_number <= 0)
      throw ConfigError(kv.source() + ": '" + prefix +
                        ".r0' needs target_mass_number");
    t.radius = *r0 * std::cbrt(static_cast<double>(mass_number));
  } else {
    throw ConfigError(kv.source() + ": '" + prefix +
                      "' needs 'radius' or 'r0'");
  }
  if (!diff)
    throw ConfigError(kv.source() + ": missing required key '" + prefix +
                      ".diffuseness'");
  t.diffuseness = *diff;
  if (!(t.radius > 0.0) || !(t.diffuseness > 0.0))
    throw ConfigError(kv.source() + ": '" + prefix +
                      "' radius and diffuseness must be > 0");
  if (form) {
    if (*form == "volume")
      t.form = WsForm::Volume;
    else if (*form == "surface_derivative")
      t.form = WsForm::SurfaceDerivative;
    else
      throw ConfigError(kv.source() + ": '" + prefix + ".form' must be "
                        "'volume' or 'surface_derivative'");
  }
  if (!allow_surface && t.form == WsForm::SurfaceDerivative)
    throw ConfigError(kv.source() + ": '" + prefix +
                      "' only supports the volume form");
  return t;
}

}  // namespace detail

// Parses a tabulated potential data file. The first non-comment content must
// be preceded by the exact header line '# units: fm MeV'; rows are
// 'r re_v [im_v]' with strictly increasing r.
inline TabulatedSpec parse_tabulated_data(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open data file " + path.string());
  TabulatedSpec tab;
  std::string line;
  int lineno = 0;
  bool units_seen = false;
  int columns = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string trimmed = detail::trim(line);
    if (trimmed.empty()) continue;
    if (trimmed.front() == '#') {
      if (detail::trim(trimmed.substr(1)) == "units: fm MeV")
        units_seen = true;
      continue;
    }
    if (!units_seen)
      throw ConfigError(path.string() +
                        ": data before the required '# units: fm MeV' header");
    std::istringstream row(trimmed);
    double r = 0.0, re = 0.0, im = 0.0;
    if (!(row >> r >> re))
      throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                        ": expected 'r v_re [v_im]'");
    const bool has_im = static_cast<bool>(row >> im);
    std::string rest;
    if (row >> rest)
      throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                        ": trailing content '" + rest + "'");
    const int ncols = has_im ? 3 : 2;
    if (columns == 0)
      columns = ncols;
    else if (columns != ncols)
      throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                        ": inconsistent column count");
    if (!tab.r.empty() && r <= tab.r.back())
      throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                        ": radii must be strictly increasing");
    tab.r.push_back(r);
    tab.v.emplace_back(re, im);
  }
  if (tab.r.size() < 2)
    throw ConfigError(path.string() + ": needs at least two data rows");
  if (!(tab.r.front() >= 0.0))
    throw ConfigError(path.string() + ": radii must be >= 0");
  return tab;
}

// Parses a potential config file. 'type' selects the model; the remaining
// keys must exactly match that model's schema. Constants overrides are
// accepted for every type.
inline ParsedPotential parse_potential_file(
    const std::filesystem::path& path) {
  detail::KvReader kv(detail::read_kv_file(path), path.string());
  ParsedPotential out;
  detail::read_constants(kv, out.constants);
  const auto type = kv.take("type");
  if (!type) throw ConfigError(path.string() + ": missing required key 'type'");
  out.type = *type;
  if (*type == "free") {
    out.spec.model = FreeSpec{};
  } else if (*type == "square_well") {
    SquareWellSpec sw;
    sw.depth = Complex(kv.require_number("depth_re"),
                       kv.take_number("depth_im").value_or(0.0));
    sw.radius = kv.require_number("radius");
    if (!(sw.radius > 0.0))
      throw ConfigError(path.string() + ": radius must be > 0");
    if (sw.depth.imag() > 0.0)
      throw ConfigError(path.string() +
                        ": depth_im must be <= 0 (absorptive)");
    out.spec.model = sw;
  } else if (*type == "tabulated") {
    const auto file = kv.take("file");
    if (!file)
      throw ConfigError(path.string() + ": missing required key 'file'");
    std::filesystem::path data(*file);
    if (data.is_relative()) data = path.parent_path() / data;
    out.spec.model = parse_tabulated_data(data);
  } else if (*type == "optical_model") {
    OpticalModelSpec om;
    om.so_scale = out.constants.lambda_pi2;
    const auto a = kv.take_number("target_mass_number");
    if (a) {
      if (*a <= 0.0 || *a != std::floor(*a))
        throw ConfigError(path.string() +
                          ": target_mass_number must be a positive integer");
      om.target_mass_number = static_cast<int>(*a);
    }
    auto rv = detail::read_ws_term(kv, "real_volume", om.target_mass_number,
                                   false);
    if (!rv)
      throw ConfigError(path.string() + ": optical_model needs a real_volume "
                        "term");
    om.real_volume = *rv;
    om.imag_volume = detail::read_ws_term(kv, "imag_volume",
                                          om.target_mass_number, false);
    om.imag_surface = detail::read_ws_term(kv, "imag_surface",
                                           om.target_mass_number, true);
    if (om.imag_surface && om.imag_surface->form != WsForm::SurfaceDerivative)
      throw ConfigError(path.string() +
                        ": imag_surface.form must be 'surface_derivative'");
    om.spin_orbit = detail::read_ws_term(kv, "spin_orbit",
                                         om.target_mass_number, false);
    out.spec.model = om;
  } else {
    throw ConfigError(path.string() + ": unknown type '" + *type +
                      "' (free | square_well | optical_model | tabulated)");
  }
  kv.finish();
  return out;
}

}  // namespace qholo
