#include "skdv/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "skdv/errors.hpp"
#include "skdv/reduction.hpp"
#include "skdv/yablonskii.hpp"

namespace skdv {

namespace {

const Complex kI{0.0, 1.0};

using SampleFn = std::function<std::vector<Residual>(double x, double t)>;

struct Check {
  std::string equation;
  double tolerance;
  Measure measure;
};

// Evaluates every check at each grid point; a pole or domain violation
// excludes the point from all checks.
std::vector<VerificationReport> sweep(const std::string& family, const GridSpec& grid,
                                      const std::vector<Check>& checks, const SampleFn& fn) {
  grid.validate();
  std::vector<ReportBuilder> builders;
  for (const Check& c : checks) builders.emplace_back(c.equation, family, grid, c.tolerance, c.measure);
  const int nt = grid.has_t() ? grid.nt : 1;
  for (int j = 0; j < nt; ++j)
    for (int i = 0; i < grid.nx; ++i) {
      std::vector<Residual> rs;
      try {
        rs = fn(grid.x(i), grid.t(j));
      } catch (const NearPoleError&) {
        for (auto& b : builders) b.exclude();
        continue;
      } catch (const DomainError&) {
        for (auto& b : builders) b.exclude();
        continue;
      }
      if (rs.size() != builders.size()) throw IntegrityError("suite sample returned the wrong arity");
      for (std::size_t k = 0; k < rs.size(); ++k) builders[k].add(rs[k]);
    }
  std::vector<VerificationReport> out;
  for (const auto& b : builders) out.push_back(b.finish());
  return out;
}

Residual scalar_residual(Complex value, double scale = 0.0) {
  static const GeneratorSetPtr none = GeneratorSet::make({});
  return Residual{SuperJet(none, Jet(JetCaps{0, 0}, value)), scale};
}

double max_of(std::initializer_list<Complex> terms) {
  double m = 0.0;
  for (Complex c : terms) m = std::max(m, std::abs(c));
  return m;
}

std::vector<Check> field_checks(double tol, Measure m) {
  return {{"superfield", tol, m},        {"component:u", tol, m},   {"component:v", tol, m},
          {"component:xi1", tol, m},     {"component:xi2", tol, m}, {"rho:+", tol, m},
          {"rho:-", tol, m}};
}

std::vector<Residual> field_residuals(const ComponentField& f, double x, double t) {
  const EquationParams p;
  ComponentResiduals c = residual_components(f, p, x, t);
  return {residual_main(f, p, x, t),        std::move(c.u),
          std::move(c.v),                   std::move(c.xi1),
          std::move(c.xi2),                 residual_rho(f, p, RhoSign::Plus, x, t),
          residual_rho(f, p, RhoSign::Minus, x, t)};
}

std::vector<Check> bilinear_checks(double tol) {
  return {{"bilinear:mkdv", tol, Measure::Relative}, {"bilinear:susy", tol, Measure::Relative}};
}

std::vector<Residual> bilinear_residuals(const TauPair& tp, double x, double t) {
  BilinearResidual b = bilinear_residual(tp, x, t, JetCaps{4, 1});
  return {std::move(b.mkdv), std::move(b.susy)};
}

// --- families -------------------------------------------------------------

SuiteResult one_soliton(const SuiteOptions& o) {
  const std::string family = "one-soliton";
  const GridSpec grid = o.grid.value_or(GridSpec::plane(-3, 3, 21, -3, 3, 21));
  const double tol = o.tolerance.value_or(1e-10);
  const ComponentField f = lift_travelling();
  std::vector<Check> checks = field_checks(tol, Measure::Absolute);
  checks.push_back({"bosonized:u", tol, Measure::Absolute});
  checks.push_back({"bosonized:v", tol, Measure::Absolute});

  ScalarSampler u = [](JetCaps caps, double x, double t) {
    return soliton_u(jet_seed(caps, Variable::X, x) - jet_seed(caps, Variable::T, t));
  };
  ScalarSampler v = dx_scalar(u, kI);
  auto reports = sweep(family, grid, checks, [&](double x, double t) {
    std::vector<Residual> rs = field_residuals(f, x, t);
    const auto bos = residual_bosonized(u, v, EquationParams{}, x, t);
    rs.push_back(scalar_residual(bos[0]));
    rs.push_back(scalar_residual(bos[1]));
    return rs;
  });
  return {family, reports};
}

int parse_index(const std::string& text, int lo, int hi, const std::string& family) {
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(text, &used);
    if (used != text.size()) throw ConfigError("");
  } catch (const std::exception&) {
    throw ConfigError("family " + family + ": cannot parse index '" + text + "'");
  }
  if (n < lo || n > hi)
    throw ConfigError("family " + family + ": index must lie in [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
  return n;
}

SuiteResult nsoliton(int n, bool bilinear_only, const SuiteOptions& o) {
  const std::string family = std::string(bilinear_only ? "bilinear:" : "") + "nsoliton:" +
                             std::to_string(n);
  const GridSpec grid = o.grid.value_or(GridSpec::plane(-3, 3, 10, -3, 3, 10));
  const double tol = o.tolerance.value_or(1e-9);
  SplitMix64 rng(o.seed);
  const TauPair tp = nsoliton_taus(soliton_spec(random_kappas(n, rng)));
  std::vector<Check> checks = bilinear_checks(tol);
  if (bilinear_only) return {family, sweep(family, grid, checks, [&](double x, double t) {
                               return bilinear_residuals(tp, x, t);
                             })};
  const ComponentField f = fields_from_taus(tp);
  for (Check c : field_checks(tol, Measure::Relative)) checks.push_back(c);
  return {family, sweep(family, grid, checks, [&](double x, double t) {
            std::vector<Residual> rs = bilinear_residuals(tp, x, t);
            for (Residual& r : field_residuals(f, x, t)) rs.push_back(std::move(r));
            return rs;
          })};
}

SuiteResult rational(int n, bool bilinear_only, const SuiteOptions& o) {
  const std::string family = std::string(bilinear_only ? "bilinear:" : "") + "rational:" +
                             std::to_string(n);
  const GridSpec grid = o.grid.value_or(GridSpec::plane(1, 4, 11, 1, 2, 11));
  const double tol = o.tolerance.value_or(1e-8);
  const TauPair tp = rational_taus(n);
  std::vector<Check> checks = bilinear_checks(tol);
  if (bilinear_only) return {family, sweep(family, grid, checks, [&](double x, double t) {
                               return bilinear_residuals(tp, x, t);
                             })};
  const ComponentField f = fields_from_taus(tp);
  for (Check c : field_checks(tol, Measure::Relative)) checks.push_back(c);
  // u from the taus against the direct similarity lift of w_n
  checks.push_back({"lift:u", tol, Measure::Relative});
  return {family, sweep(family, grid, checks, [&](double x, double t) {
            std::vector<Residual> rs = bilinear_residuals(tp, x, t);
            for (Residual& r : field_residuals(f, x, t)) rs.push_back(std::move(r));
            const Complex from_tau = f.u(JetCaps{0, 0}, x, t).body().value();
            const Complex lifted = u_n_lift(n, x, t);
            rs.push_back(scalar_residual(from_tau - lifted, max_of({from_tau, lifted})));
            return rs;
          })};
}

SuiteResult similarity_bessel(const SuiteOptions& o) {
  const std::string family = "similarity-bessel";
  const GridSpec grid = o.grid.value_or(GridSpec::plane(1, 4, 11, 1, 2, 11));
  const double tol = o.tolerance.value_or(1e-8);
  const ComponentField f = lift_similarity();
  std::vector<Check> checks = field_checks(tol, Measure::Relative);
  checks.push_back({"v-i*u_x", tol, Measure::Relative});
  return {family, sweep(family, grid, checks, [&](double x, double t) {
            std::vector<Residual> rs = field_residuals(f, x, t);
            const Complex v = similarity_v(JetCaps{0, 0}, x, t).value();
            const Complex ux = similarity_u(JetCaps{1, 0}, x, t).derivative(1, 0);
            rs.push_back(scalar_residual(v - kI * ux, max_of({v, ux})));
            return rs;
          })};
}

SuiteResult second_solutions(const SuiteOptions& o) {
  const std::string family = "second-solutions";
  const double tol = o.tolerance.value_or(1e-8);
  SuiteResult out{family, {}};

  // travelling: xi'' + (6 sech^2 - 1) xi = 0 along y = x - t
  const GridSpec ygrid = o.grid.value_or(GridSpec::line(-2, 2, 30));
  std::vector<Complex> wr;
  auto trav = sweep(family, ygrid,
                    {{"travelling:second", tol, Measure::Relative},
                     {"travelling:u_y", tol, Measure::Relative}},
                    [&](double y, double) {
                      const Jet Y = line_seed(y, 4);
                      const Jet u = soliton_u(Y);
                      const Jet xi = second_fermionic_travelling(Y);
                      const Jet uy = u.dx();
                      wr.push_back(wronskian(uy, xi));
                      auto scale = [&](const Jet& f) {
                        return max_of({f.derivative(2, 0), 6.0 * u.value() * u.value() * f.value(),
                                       f.value()});
                      };
                      return std::vector<Residual>{
                          scalar_residual(residual_trav_homogeneous(xi, u), scale(xi)),
                          scalar_residual(residual_trav_homogeneous(uy, u), scale(uy))};
                    });
  for (auto& r : trav) out.reports.push_back(std::move(r));

  // Wronskian of {u_y, second}: constant and nonzero
  ReportBuilder w("travelling:wronskian-variation", family, ygrid, tol, Measure::Absolute);
  if (!wr.empty()) {
    Complex mean = 0.0;
    for (Complex c : wr) mean += c;
    mean /= static_cast<double>(wr.size());
    double spread = 0.0;
    for (Complex c : wr) spread = std::max(spread, std::abs(c - mean));
    w.add(std::abs(mean) > 1e-6 ? spread / std::abs(mean) : INFINITY);
  }
  out.reports.push_back(w.finish());

  // similarity: phi'' + (6 w0^2 - z/3) phi = 0 with w0 = i/z
  const GridSpec zgrid = GridSpec::line(0.5, 4, 30);
  auto sim = sweep(family, zgrid, {{"similarity:second", tol, Measure::Relative}},
                   [&](double z, double) {
                     const Jet Z = line_seed(z, 4);
                     const Jet w0 = kI * inv(Z);
                     const Jet phi = second_fermionic_similarity(Z);
                     const Complex w2 = w0.value() * w0.value();
                     const double scale = max_of(
                         {phi.derivative(2, 0), 6.0 * w2 * phi.value(), z * phi.value() / 3.0});
                     return std::vector<Residual>{
                         scalar_residual(residual_sim_homogeneous(phi, w0, z), scale)};
                   });
  for (auto& r : sim) out.reports.push_back(std::move(r));
  return out;
}

SuiteResult reduced_travelling(const SuiteOptions& o) {
  const std::string family = "reduced:travelling";
  const GridSpec grid = o.grid.value_or(GridSpec::line(-3, 3, 30));
  const double tol = o.tolerance.value_or(1e-12);
  return {family, sweep(family, grid,
                        {{"travelling:u", tol, Measure::Absolute},
                         {"travelling:rho0", tol, Measure::Absolute}},
                        [](double y, double) {
                          const Jet Y = line_seed(y, 4);
                          const Jet u = soliton_u(Y);
                          return std::vector<Residual>{
                              scalar_residual(residual_trav_u(u, -2.0, -1.0, 0.0)),
                              scalar_residual(residual_trav_rho(soliton_rho0(Y), u, -2.0, -1.0, 0.0))};
                        })};
}

// Points in the complex box [-3,3]^2 where neither Q_n nor Q_{n+1} is small.
std::vector<Complex> pole_avoiding_points(int n, int count, SplitMix64& rng) {
  const ScaledPoly qa = yv(n);
  const ScaledPoly qb = yv(n + 1);
  std::vector<Complex> pts;
  while (static_cast<int>(pts.size()) < count) {
    const Complex z(rng.uniform(-3, 3), rng.uniform(-3, 3));
    const double ref = std::pow(1.0 + std::abs(z), qb.p.degree());
    if (std::abs(qa.p.eval(z)) < 1e-2 * ref || std::abs(qb.p.eval(z)) < 1e-2 * ref) continue;
    pts.push_back(z);
  }
  return pts;
}

SuiteResult reduced_similarity(const SuiteOptions& o) {
  const std::string family = "reduced:similarity";
  const double tol = o.tolerance.value_or(1e-9);
  SuiteResult out{family, {}};

  const GridSpec zgrid = o.grid.value_or(GridSpec::line(0.5, 4, 30));
  auto base = sweep(
      family, zgrid,
      {{"similarity:w1", tol, Measure::Relative},
       {"similarity:phi", tol, Measure::Relative},
       {"similarity:bessel-ode", tol, Measure::Relative}},
      [](double z, double) {
        const Jet Z = line_seed(z, 4);
        const Jet w = similarity_w1(Z);
        const Jet phi = bessel_phi(Z);
        const Complex w0 = w.value();
        const double w_scale =
            max_of({w.derivative(2, 0), 2.0 * w0 * w0 * w0, z * w0 / 3.0, 2.0 / 3.0});
        const double phi_scale = max_of({phi.derivative(2, 0), (z / 3.0 + 6.0 * w0 * w0) * phi.value(),
                                         6.0 * w.derivative(1, 0) * phi.value()});
        const Complex q = (36.0 + z * z * z) / (3.0 * z * z);
        const Complex bessel = phi.derivative(2, 0) - q * phi.value();
        return std::vector<Residual>{
            scalar_residual(residual_sim_w(w, z, -2.0, Complex(0.0, 2.0 / 3.0)), w_scale),
            scalar_residual(residual_sim_phi(phi, w, z, -2.0, 0.0), phi_scale),
            scalar_residual(bessel, max_of({phi.derivative(2, 0), q * phi.value()}))};
      });
  for (auto& r : base) out.reports.push_back(std::move(r));

  // w_n^pm against the similarity ODE with c2 = -+ i(n+1)/3, n <= 4
  SplitMix64 rng(o.seed);
  for (int n = 0; n <= 4; ++n)
    for (Branch b : {Branch::Plus, Branch::Minus}) {
      const RationalFn w = w_n(n, b);
      const Complex c2 = c2_n(n, b);
      const std::string name =
          "hierarchy:w" + std::to_string(n) + (b == Branch::Plus ? "+" : "-");
      ReportBuilder rb(name, family, GridSpec::line(0, 49, 50), tol, Measure::Relative);
      for (Complex z : pole_avoiding_points(n, 50, rng)) {
        const Jet wj = w.eval(line_seed(z, 2));
        const Complex w0 = wj.value();
        rb.add(residual_sim_w(wj, z, -2.0, c2),
               max_of({wj.derivative(2, 0), 2.0 * w0 * w0 * w0, z * w0 / 3.0, c2}));
      }
      out.reports.push_back(rb.finish());
    }

  // exact identities: direct == recombined, W_{n+1}^- == W_n^+
  ReportBuilder exact("hierarchy:W-exact", family, GridSpec::line(0, 4, 5), 0.0, Measure::Absolute);
  for (int n = 0; n <= 4; ++n) {
    bool ok = same_function(w_cal(n + 1, Branch::Minus, WForm::Direct),
                            w_cal(n, Branch::Plus, WForm::Direct));
    for (Branch b : {Branch::Plus, Branch::Minus})
      ok = ok && same_function(w_cal(n, b, WForm::Direct), w_cal(n, b, WForm::Recombined));
    exact.add(ok ? 0.0 : 1.0);
  }
  out.reports.push_back(exact.finish());
  return out;
}

SuiteResult appendix2(const SuiteOptions& o) {
  const std::string family = "identities:appendix2";
  const double tol = o.tolerance.value_or(1e-12);
  auto gens = GeneratorSet::make({"theta", "zeta1", "zeta2"});
  const JetCaps caps{5, 1};
  SplitMix64 rng(o.seed);

  std::vector<Check> checks;
  for (int n = 0; n <= 3; ++n) {
    const std::string k = std::to_string(n);
    checks.push_back({"SD^" + k + "(e1.e2)", tol, Measure::Relative});
    checks.push_back({"SD^" + k + " swap parity", tol, Measure::Relative});
    checks.push_back({"SD^" + k + "(e1.1)", tol, Measure::Relative});
    checks.push_back({"SD^" + k + "(e1.e1)", tol, Measure::Relative});
  }
  checks.push_back({"P(D)(e1.1)", tol, Measure::Relative});
  checks.push_back({"(Dt+Dx^3)(tau1.tau2)", tol, Measure::Relative});

  const int draws = 20;
  const GridSpec index = GridSpec::line(0, draws - 1, draws);
  auto rel = [](const SuperJet& got, const SuperJet& want) {
    return Residual{got - want, want.max_abs()};
  };
  return {family, sweep(family, index, checks, [&](double, double) {
            const SuperJet th = SuperJet::generator(gens, caps, 0);
            const SuperJet z1 = SuperJet::generator(gens, caps, 1);
            const SuperJet z2 = SuperJet::generator(gens, caps, 2);
            const double k1 = rng.uniform(0.3, 2.0), k2 = -rng.uniform(0.3, 2.0);
            const double w1 = rng.uniform(-2, 2), w2 = rng.uniform(-2, 2);
            const double x = rng.uniform(-1, 1), t = rng.uniform(-1, 1);
            const Jet X = jet_seed(caps, Variable::X, x), T = jet_seed(caps, Variable::T, t);
            const SuperJet psi1 = SuperJet(gens, k1 * X + w1 * T) + th * z1;
            const SuperJet psi2 = SuperJet(gens, k2 * X + w2 * T) + th * z2;
            const SuperJet e1 = sj_exp(psi1), e2 = sj_exp(psi2), e12 = sj_exp(psi1 + psi2);
            const SuperJet one = SuperJet::scalar(gens, caps, 1.0);

            std::vector<Residual> rs;
            for (int n = 0; n <= 3; ++n) {
              const SuperJet sd12 = super_sd(n, e1, e2, 0);
              const SuperJet sd21 = super_sd(n, e2, e1, 0);
              const SuperJet want = (z1 - z2 + th * Complex(k1 - k2)) * e12 * std::pow(k1 - k2, n);
              rs.push_back(rel(sd12, want));
              rs.push_back(n % 2 == 0 ? rel(sd12, -sd21) : rel(sd12, sd21));
              rs.push_back(rel(super_sd(n, e1, one, 0), (z1 + th * Complex(k1)) * e1 * std::pow(k1, n)));
              rs.push_back(Residual{super_sd(n, e1, e1, 0), (e1 * e1).max_abs()});
            }

            // random P with terms up to D_x^3 D_t
            BilinearPolynomial poly;
            Complex symbol = 0.0;
            for (int dx = 0; dx <= 3; ++dx)
              for (int dt = 0; dt <= 1; ++dt) {
                const double c = rng.uniform(-1, 1);
                poly.push_back({c, dx, dt});
                symbol += c * std::pow(k1, dx) * std::pow(w1, dt);
              }
            rs.push_back(rel(classical_p(poly, e1, one), e1 * symbol));

            // tau1 = 1 + d e^Psi, tau2 = 1 - d e^Psi  ->  2 d (w + k^3) e^Psi
            const double d = rng.uniform(0.2, 2.0);
            const SuperJet tau1 = one + e1 * Complex(d), tau2 = one - e1 * Complex(d);
            rs.push_back(rel(classical_p(mkdv_bilinear_operator(), tau1, tau2),
                             e1 * Complex(2.0 * d * (w1 + k1 * k1 * k1))));
            return rs;
          })};
}

}  // namespace

bool SuiteResult::pass() const {
  if (reports.empty()) return false;
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
}

const std::vector<std::string>& suite_families() {
  static const std::vector<std::string> names = {
      "one-soliton",         "nsoliton:N",           "rational:n",
      "similarity-bessel",   "second-solutions",     "bilinear:nsoliton:N",
      "bilinear:rational:n", "identities:appendix2", "reduced:travelling",
      "reduced:similarity"};
  return names;
}

SuiteResult run_suite(const std::string& family, const SuiteOptions& opts) {
  auto starts = [&](const std::string& prefix) { return family.rfind(prefix, 0) == 0; };
  auto tail = [&](const std::string& prefix) { return family.substr(prefix.size()); };
  if (family == "one-soliton") return one_soliton(opts);
  if (family == "similarity-bessel") return similarity_bessel(opts);
  if (family == "second-solutions") return second_solutions(opts);
  if (family == "identities:appendix2") return appendix2(opts);
  if (family == "reduced:travelling") return reduced_travelling(opts);
  if (family == "reduced:similarity") return reduced_similarity(opts);
  if (starts("bilinear:nsoliton:"))
    return nsoliton(parse_index(tail("bilinear:nsoliton:"), 1, kMaxSolitons, family), true, opts);
  if (starts("bilinear:rational:"))
    return rational(parse_index(tail("bilinear:rational:"), 0, 8, family), true, opts);
  if (starts("nsoliton:"))
    return nsoliton(parse_index(tail("nsoliton:"), 1, kMaxSolitons, family), false, opts);
  if (starts("rational:")) return rational(parse_index(tail("rational:"), 0, 8, family), false, opts);
  throw ConfigError("unknown family '" + family + "'");
}

std::vector<Complex> random_kappas(int n, SplitMix64& rng) {
  std::vector<Complex> out;
  while (static_cast<int>(out.size()) < n) {
    const double k = rng.uniform(0.3, 2.0);
    const bool close = std::any_of(out.begin(), out.end(),
                                   [&](Complex c) { return std::abs(c.real() - k) < 0.05; });
    if (!close) out.emplace_back(k);
  }
  return out;
}

SolitonSpec soliton_spec(const std::vector<Complex>& kappas) {
  SolitonSpec spec;
  for (Complex k : kappas) spec.solitons.push_back({k, kI});
  return spec;
}

Complex wronskian(const Jet& f, const Jet& g) {
  return f.value() * g.derivative(1, 0) - f.derivative(1, 0) * g.value();
}

nlohmann::ordered_json to_json(const SuiteResult& r) {
  nlohmann::ordered_json j;
  j["family"] = r.family;
  j["pass"] = r.pass();
  j["reports"] = nlohmann::ordered_json::array();
  for (const auto& rep : r.reports) j["reports"].push_back(to_json(rep));
  return j;
}

}  // namespace skdv
