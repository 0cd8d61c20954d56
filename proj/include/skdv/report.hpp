#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "skdv/superfield.hpp"

namespace skdv {

// Sampling grid. A grid without a t axis is a single-variable (y or z)
// sweep; t_* are then unused.
struct GridSpec {
  double x_min = -3.0, x_max = 3.0;
  int nx = 21;
  std::optional<double> t_min, t_max;
  int nt = 1;

  // "x0,x1,nx" or "x0,x1,nx,t0,t1,nt". Throws ConfigError.
  static GridSpec parse(const std::string& text);
  static GridSpec line(double x0, double x1, int n);
  static GridSpec plane(double x0, double x1, int nx, double t0, double t1, int nt);

  void validate() const;
  bool has_t() const { return t_min.has_value(); }
  double x(int i) const;
  double t(int j) const;
  int size() const { return nx * (has_t() ? nt : 1); }
  std::string to_string() const;
};

enum class Measure { Absolute, Relative };

struct BladeStats {
  double max_abs = 0.0;
  double mean_abs = 0.0;
};

struct VerificationReport {
  std::string equation;
  std::string family;
  GridSpec grid;
  Measure measure = Measure::Absolute;
  std::map<std::string, BladeStats> blades;
  int samples = 0;
  int excluded = 0;
  double tolerance = 0.0;
  bool pass = false;

  double max_residual() const;
};

// Accumulates residual samples into a report.
class ReportBuilder {
 public:
  ReportBuilder(std::string equation, std::string family, GridSpec grid, double tolerance,
                Measure measure);

  void add(const Residual& r);
  // A scalar residual, filed under the body blade.
  void add(Complex value, double scale = 0.0);
  void add(const std::string& blade, Complex value, double scale = 0.0);
  void exclude() { ++excluded_; }

  VerificationReport finish() const;

 private:
  void record(const std::string& blade, double value);
  void add_value(const std::string& blade, Complex value, double scale);

  VerificationReport report_;
  struct Acc {
    double max = 0.0, sum = 0.0;
  };
  std::map<std::string, Acc> acc_;
  int samples_ = 0;
  int excluded_ = 0;
};

nlohmann::ordered_json to_json(const GridSpec& g);
nlohmann::ordered_json to_json(const VerificationReport& r);

}  // namespace skdv
