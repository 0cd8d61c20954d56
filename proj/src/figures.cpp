#include "skdv/figures.hpp"

#include <charconv>
#include <fstream>

#include "skdv/errors.hpp"
#include "skdv/hirota.hpp"
#include "skdv/reduction.hpp"

namespace skdv {

namespace {

double node(double lo, double hi, int i) {
  const int n = kFigurePoints - 1;
  return (lo * (n - i) + hi * i) / n;
}

FigureTable travelling_profile() {
  FigureTable tab{"fig1.csv", {"y", "u", "re_rho0", "im_rho0"}, {}};
  for (int i = 0; i < kFigurePoints; ++i) {
    const double y = node(-10, 10, i);
    const Jet Y = line_seed(y, 0);
    const Complex rho = soliton_rho0(Y).value();
    tab.rows.push_back({y, soliton_u(Y).value().real(), rho.real(), rho.imag()});
  }
  return tab;
}

std::vector<FigureTable> rational_profiles() {
  std::vector<FigureTable> out;
  for (double t : {-10.0, 0.0, 10.0}) {
    FigureTable tab{"fig2_t" + format_number(t) + ".csv", {"x", "im_u"}, {}};
    for (int i = 0; i < kFigurePoints; ++i) {
      const double x = node(-10, 10, i);
      std::optional<double> value;
      if (!near_similarity_pole(x, t)) value = similarity_u(JetCaps{0, 0}, x, t).value().imag();
      tab.rows.push_back({x, value});
    }
    out.push_back(std::move(tab));
  }
  return out;
}

std::vector<FigureTable> soliton_profiles(const std::string& stem, const SolitonSpec& spec,
                                          std::initializer_list<double> times) {
  const ComponentField f = fields_from_taus(nsoliton_taus(spec));
  std::vector<FigureTable> out;
  for (double t : times) {
    FigureTable tab{stem + "_t" + format_number(t) + ".csv", {"x", "abs_u"}, {}};
    for (int i = 0; i < kFigurePoints; ++i) {
      const double x = node(-20, 20, i);
      std::optional<double> value;
      try {
        value = std::abs(f.u(JetCaps{0, 0}, x, t).body().value());
      } catch (const NearPoleError&) {
      }
      tab.rows.push_back({x, value});
    }
    out.push_back(std::move(tab));
  }
  return out;
}

SolitonSpec with_unit_amplitudes(std::initializer_list<double> kappas) {
  SolitonSpec spec;
  for (double k : kappas) spec.solitons.push_back({k, Complex(0.0, 1.0)});
  return spec;
}

}  // namespace

std::vector<FigureTable> figure_tables(int which) {
  switch (which) {
    case 1:
      return {travelling_profile()};
    case 2:
      return rational_profiles();
    case 3:
      return soliton_profiles("fig3", with_unit_amplitudes({1.0, 0.5}), {-10.0, 0.0, 10.0});
    case 4:
      return soliton_profiles("fig4", with_unit_amplitudes({1.0, 0.7, 0.4}), {-15.0, 0.0, 15.0});
    default:
      throw ConfigError("figure must be 1, 2, 3 or 4");
  }
}

std::string format_number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw IntegrityError("number formatting failed");
  return std::string(buf, ptr);
}

std::string to_csv(const FigureTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.header.size(); ++i) out += (i ? "," : "") + table.header[i];
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      if (row[i]) out += format_number(*row[i]);
    }
    out += '\n';
  }
  return out;
}

std::vector<std::filesystem::path> write_figure(int which, const std::filesystem::path& dir) {
  const std::vector<FigureTable> tables = figure_tables(which);
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> paths;
  for (const FigureTable& tab : tables) {
    const std::filesystem::path p = dir / tab.name;
    std::ofstream os(p, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + p.string() + " for writing");
    os << to_csv(tab);
    if (!os) throw std::runtime_error("write failed for " + p.string());
    paths.push_back(p);
  }
  return paths;
}

}  // namespace skdv
