#pragma once

// Deterministic text output and the measured-angular-distribution reader.
// All numbers are printed with %.16g so repeated runs are byte-identical.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "types.hpp"

namespace qholo {

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16g", v);
  return buf;
}

// Angular data rows: 'theta_deg value sigma' with value and sigma in mb/sr.
struct MeasuredPoint {
  double theta_deg;
  double value_mb;
  double sigma_mb;
};

inline std::vector<MeasuredPoint> parse_angular_data(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open data file " + path.string());
  std::vector<MeasuredPoint> points;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream row(line);
    MeasuredPoint p{};
    if (!(row >> p.theta_deg)) continue;  // blank or comment-only line
    if (!(row >> p.value_mb >> p.sigma_mb))
      throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                        ": expected 'theta_deg value_mb sigma_mb'");
    std::string rest;
    if (row >> rest)
      throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                        ": trailing content '" + rest + "'");
    if (!(p.sigma_mb > 0.0))
      throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                        ": sigma must be > 0");
    if (!points.empty() && p.theta_deg <= points.back().theta_deg)
      throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                        ": angles must be strictly increasing");
    points.push_back(p);
  }
  if (points.empty())
    throw ConfigError(path.string() + ": no data rows");
  return points;
}

class CsvWriter {
 public:
  explicit CsvWriter(const std::filesystem::path& path) : out_(path) {
    if (!out_) throw ConfigError("cannot write " + path.string());
  }

  void comment(const std::string& text) { out_ << "# " << text << "\n"; }

  template <class... Ts>
  void row(Ts... fields) {
    bool first = true;
    ((out_ << (first ? "" : ","), first = false, put(fields)), ...);
    out_ << "\n";
  }

  void flush() { out_.flush(); }

 private:
  void put(double v) { out_ << format_double(v); }
  void put(int v) { out_ << v; }
  void put(long v) { out_ << v; }
  void put(const char* v) { out_ << v; }
  void put(const std::string& v) { out_ << v; }

  std::ofstream out_;
};

}  // namespace qholo
