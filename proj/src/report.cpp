#include "skdv/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "skdv/errors.hpp"

namespace skdv {

namespace {

double parse_double(const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ConfigError("grid: cannot parse number '" + s + "'");
  return v;
}

int parse_int(const std::string& s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ConfigError("grid: cannot parse count '" + s + "'");
  return v;
}

double lerp(double lo, double hi, int i, int n) { return (lo * (n - 1 - i) + hi * i) / (n - 1); }

}  // namespace

GridSpec GridSpec::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  GridSpec g;
  if (parts.size() == 3) {
    g = line(parse_double(parts[0]), parse_double(parts[1]), parse_int(parts[2]));
  } else if (parts.size() == 6) {
    g = plane(parse_double(parts[0]), parse_double(parts[1]), parse_int(parts[2]),
              parse_double(parts[3]), parse_double(parts[4]), parse_int(parts[5]));
  } else {
    throw ConfigError("grid: expected x0,x1,nx or x0,x1,nx,t0,t1,nt");
  }
  g.validate();
  return g;
}

GridSpec GridSpec::line(double x0, double x1, int n) {
  GridSpec g;
  g.x_min = x0;
  g.x_max = x1;
  g.nx = n;
  return g;
}

GridSpec GridSpec::plane(double x0, double x1, int nx, double t0, double t1, int nt) {
  GridSpec g = line(x0, x1, nx);
  g.t_min = t0;
  g.t_max = t1;
  g.nt = nt;
  return g;
}

void GridSpec::validate() const {
  if (nx < 2 || !(x_min < x_max)) throw ConfigError("grid: need nx >= 2 and x_min < x_max");
  if (has_t() && (nt < 2 || !t_max || !(*t_min < *t_max)))
    throw ConfigError("grid: need nt >= 2 and t_min < t_max");
}

double GridSpec::x(int i) const { return lerp(x_min, x_max, i, nx); }

double GridSpec::t(int j) const {
  if (!has_t()) return 0.0;
  return lerp(*t_min, *t_max, j, nt);
}

std::string GridSpec::to_string() const {
  std::ostringstream os;
  os << "x in [" << x_min << ", " << x_max << "] x " << nx;
  if (has_t()) os << ", t in [" << *t_min << ", " << *t_max << "] x " << nt;
  return os.str();
}

double VerificationReport::max_residual() const {
  double m = 0.0;
  for (const auto& [name, s] : blades) m = std::max(m, s.max_abs);
  return m;
}

ReportBuilder::ReportBuilder(std::string equation, std::string family, GridSpec grid,
                             double tolerance, Measure measure) {
  report_.equation = std::move(equation);
  report_.family = std::move(family);
  report_.grid = grid;
  report_.tolerance = tolerance;
  report_.measure = measure;
}

void ReportBuilder::record(const std::string& blade, double value) {
  Acc& a = acc_[blade];
  // NaN must never pass silently
  if (std::isnan(value)) value = INFINITY;
  a.max = std::max(a.max, value);
  a.sum += value;
}

void ReportBuilder::add(const Residual& r) {
  ++samples_;
  const double denom = report_.measure == Measure::Relative ? 1.0 + r.scale : 1.0;
  const GeneratorSet& gens = *r.value.generators();
  acc_.try_emplace("1");
  for (const auto& [blade, jet] : r.value.terms())
    record(blade_name(gens, blade), std::abs(jet.value()) / denom);
}

void ReportBuilder::add(Complex value, double scale) {
  ++samples_;
  add_value("1", value, scale);
}

void ReportBuilder::add(const std::string& blade, Complex value, double scale) {
  ++samples_;
  add_value(blade, value, scale);
}

void ReportBuilder::add_value(const std::string& blade, Complex value, double scale) {
  const double denom = report_.measure == Measure::Relative ? 1.0 + scale : 1.0;
  record(blade, std::abs(value) / denom);
}

VerificationReport ReportBuilder::finish() const {
  VerificationReport r = report_;
  r.samples = samples_;
  r.excluded = excluded_;
  for (const auto& [name, a] : acc_)
    r.blades[name] = BladeStats{a.max, samples_ > 0 ? a.sum / samples_ : 0.0};
  r.pass = samples_ > 0 && r.max_residual() <= r.tolerance;
  return r;
}

nlohmann::ordered_json to_json(const GridSpec& g) {
  nlohmann::ordered_json j;
  j["x"] = {g.x_min, g.x_max, g.nx};
  if (g.has_t()) j["t"] = {*g.t_min, *g.t_max, g.nt};
  return j;
}

nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["equation"] = r.equation;
  j["family"] = r.family;
  j["grid"] = to_json(r.grid);
  j["measure"] = r.measure == Measure::Relative ? "relative" : "absolute";
  nlohmann::ordered_json blades = nlohmann::ordered_json::object();
  for (const auto& [name, s] : r.blades) blades[name] = {{"max", s.max_abs}, {"mean", s.mean_abs}};
  j["blades"] = blades;
  j["max_residual"] = r.max_residual();
  j["samples"] = r.samples;
  j["excluded"] = r.excluded;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  return j;
}

}  // namespace skdv
