// skdv: verification, polynomial listing and figure data for the a = -2
// N=2 super KdV equation.
//
// Exit status: 0 pass, 1 verification failure, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "skdv/errors.hpp"
#include "skdv/figures.hpp"
#include "skdv/suites.hpp"
#include "skdv/yablonskii.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct VerifyArgs {
  std::string family;
  std::string grid;
  std::optional<double> tol;
  std::uint64_t seed = 42;
  bool json = false;
  std::string out;
};

void print_text(const skdv::SuiteResult& r, std::ostream& os) {
  char line[256];
  for (const auto& rep : r.reports) {
    std::snprintf(line, sizeof line, "%-4s %-28s max=%.3e tol=%.1e samples=%d excluded=%d %s\n",
                  rep.pass ? "PASS" : "FAIL", rep.equation.c_str(), rep.max_residual(),
                  rep.tolerance, rep.samples, rep.excluded,
                  rep.measure == skdv::Measure::Relative ? "relative" : "absolute");
    os << line;
  }
  os << r.family << ": " << (r.pass() ? "PASS" : "FAIL") << "\n";
}

int run_verify(const VerifyArgs& a) {
  skdv::SuiteOptions opts;
  if (!a.grid.empty()) opts.grid = skdv::GridSpec::parse(a.grid);
  opts.tolerance = a.tol;
  opts.seed = a.seed;
  const skdv::SuiteResult r = skdv::run_suite(a.family, opts);
  const std::string json = skdv::to_json(r).dump(2) + "\n";
  if (!a.out.empty()) {
    std::ofstream os(a.out, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + a.out);
    os << json;
  }
  if (a.json)
    std::cout << json;
  else
    print_text(r, std::cout);
  return r.pass() ? kPass : kFail;
}

int run_yablonskii(int n, bool all, bool json) {
  if (n < 0 || n > 12) throw skdv::ConfigError("n must lie in [0, 12]");
  const auto seq = skdv::yv_sequence(n);
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (int k = all ? 0 : n; k <= n; ++k) {
    const skdv::ScaledPoly& q = seq[static_cast<std::size_t>(k)];
    if (!json) {
      std::cout << skdv::yv_text(k, q) << "\n";
      continue;
    }
    nlohmann::ordered_json j;
    j["n"] = k;
    j["k"] = q.k;
    j["degree"] = q.p.degree();
    j["coefficients"] = nlohmann::ordered_json::array();
    for (const auto& c : q.p.coeffs()) j["coefficients"].push_back(c.str());
    j["text"] = skdv::yv_text(k, q);
    arr.push_back(j);
  }
  if (json) std::cout << (all ? arr : arr[0]).dump(2) << "\n";
  return kPass;
}

int run_figure(const std::string& which, const std::string& out) {
  std::vector<int> figs;
  if (which == "all")
    figs = {1, 2, 3, 4};
  else if (which == "1" || which == "2" || which == "3" || which == "4")
    figs = {which[0] - '0'};
  else
    throw skdv::ConfigError("figure must be 1, 2, 3, 4 or all");
  for (int f : figs)
    for (const auto& p : skdv::write_figure(f, out)) std::cout << p.string() << "\n";
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification lab for the a = -2 N=2 supersymmetric KdV equation"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a verification family");
  std::string families;
  for (const auto& f : skdv::suite_families()) families += (families.empty() ? "" : ", ") + f;
  verify->add_option("family", va.family, "One of: " + families)->required();
  verify->add_option("--grid", va.grid, "x0,x1,nx[,t0,t1,nt]");
  verify->add_option("--tol", va.tol, "Override the family tolerance");
  verify->add_option("--seed", va.seed, "Seed for random parameters")->capture_default_str();
  verify->add_flag("--json", va.json, "Print the JSON report");
  verify->add_option("--out", va.out, "Also write the JSON report to this file");

  VerifyArgs ia;
  ia.family = "identities:appendix2";
  auto* identities = app.add_subcommand("identities", "Check the bilinear identities");
  identities->add_option("--seed", ia.seed, "Seed for random parameters")->capture_default_str();
  identities->add_option("--tol", ia.tol, "Override the tolerance");
  identities->add_flag("--json", ia.json, "Print the JSON report");
  identities->add_option("--out", ia.out, "Also write the JSON report to this file");

  int yv_n = 0;
  bool yv_all = false, yv_json = false;
  auto* yab = app.add_subcommand("yablonskii", "Print exact Yablonskii-Vorob'ev polynomials");
  yab->add_option("n", yv_n, "Index, 0..12")->required();
  yab->add_flag("--all", yv_all, "List Q0..Qn");
  yab->add_flag("--json", yv_json, "JSON output");

  std::string fig_which, fig_out = ".";
  auto* figure = app.add_subcommand("figure", "Write CSV data for a figure");
  figure->add_option("which", fig_which, "1, 2, 3, 4 or all")->required();
  figure->add_option("--out", fig_out, "Output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*verify) return run_verify(va);
    if (*identities) return run_verify(ia);
    if (*yab) return run_yablonskii(yv_n, yv_all, yv_json);
    if (*figure) return run_figure(fig_which, fig_out);
  } catch (const skdv::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
