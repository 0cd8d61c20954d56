// Acceptance run: one PASS/FAIL line per criterion.
//
// Exit status is 0 when the set of failing criteria equals the set given
// with --expect-fail (empty by default), so a known, documented failure
// does not hide a new one.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "skdv/figures.hpp"
#include "skdv/hirota.hpp"
#include "skdv/reduction.hpp"
#include "skdv/suites.hpp"
#include "skdv/yablonskii.hpp"
#include "support.hpp"

using namespace skdv;

namespace {

const Complex kI{0.0, 1.0};

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double time_limit;  // seconds; 0 means none
  std::function<Outcome()> run;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// Worst residual over the reports of a suite, together with its verdict.
Outcome suite_outcome(const std::vector<std::string>& families) {
  Outcome o{true, ""};
  double worst = 0.0;
  int samples = 0;
  for (const auto& fam : families) {
    const SuiteResult r = run_suite(fam);
    o.pass = o.pass && r.pass();
    for (const auto& rep : r.reports) {
      worst = std::max(worst, rep.max_residual());
      samples += rep.samples;
      if (!rep.pass) o.detail += " failing:" + rep.family + "/" + rep.equation;
    }
  }
  o.detail = "max residual " + fmt(worst) + " over " + std::to_string(samples) + " samples" + o.detail;
  return o;
}

Outcome ac1() { return suite_outcome({"one-soliton"}); }

Outcome ac2() {
  return suite_outcome({"bilinear:nsoliton:1", "bilinear:nsoliton:2", "bilinear:nsoliton:3",
                        "bilinear:nsoliton:4"});
}

Outcome ac3() {
  const ComponentField f = fields_from_taus(nsoliton_taus(soliton_spec({1.0, 0.5})));
  const GridSpec g = GridSpec::plane(-5, 5, 21, -5, 5, 21);
  double worst = 0.0;
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.nt; ++j) {
      const Complex u = extract(f.u(JetCaps{}, g.x(i), g.t(j)), Blade{});
      worst = std::max(worst, std::abs(u - closed_soliton_u(2, g.x(i), g.t(j))));
    }
  const Complex u0 = extract(f.u(JetCaps{}, 0.0, 0.0), Blade{});
  const Complex c0 = closed_soliton_u(2, 0.0, 0.0);
  const double target = -135.0 / 194.0;
  const bool origin = std::abs(u0 - target) < 1e-12 && std::abs(c0 - target) < 1e-12;
  std::ostringstream d;
  d << "max |extracted - closed form| " << fmt(worst) << "; origin extracted " << u0.real()
    << ", closed form " << c0.real();
  return {worst < 1e-9 && origin, d.str()};
}

Polynomial poly(std::vector<long long> ascending) {
  std::vector<Rational> c;
  for (long long v : ascending) c.emplace_back(v);
  return Polynomial(c);
}

Outcome ac4() {
  const std::vector<ScaledPoly> seq = yv_sequence(12);
  bool ok = seq[2] == ScaledPoly{0, poly({12, 0, 0, 1})} &&
            seq[3] == ScaledPoly{-1, poly({-720, 0, 0, 60, 0, 0, 1})} &&
            seq[4] == ScaledPoly{-3, poly({0, 302400, 0, 0, 0, 0, 0, 180, 0, 0, 1})};
  for (int n = 0; n <= 12; ++n) ok = ok && seq[static_cast<std::size_t>(n)].p.degree() == n * (n + 1) / 2;
  return {ok, "Q2..Q4 exact, deg Q12 = " + std::to_string(seq[12].p.degree())};
}

Outcome ac5() {
  // the numeric ODE sweep lives in the reduced:similarity family
  const SuiteResult r = run_suite("reduced:similarity");
  bool ode = true;
  double worst = 0.0;
  for (const auto& rep : r.reports)
    if (rep.equation.rfind("hierarchy:w", 0) == 0) {
      ode = ode && rep.pass && rep.samples == 50 && rep.tolerance <= 1e-9;
      worst = std::max(worst, rep.max_residual());
    }
  bool exact = true;
  for (int n = 0; n <= 4; ++n) {
    exact = exact &&
            same_function(w_cal(n + 1, Branch::Minus, WForm::Direct), w_cal(n, Branch::Plus, WForm::Direct));
    for (Branch b : {Branch::Plus, Branch::Minus})
      exact = exact && same_function(w_cal(n, b, WForm::Direct), w_cal(n, b, WForm::Recombined));
  }
  return {ode && exact, "w_n ODE max " + fmt(worst) + "; W identities " + (exact ? "exact" : "broken")};
}

Outcome ac6() { return suite_outcome({"similarity-bessel"}); }

Outcome ac7() {
  Outcome o = suite_outcome({"reduced:travelling", "second-solutions"});
  // phi'' - (36 + z^3) / (3 z^2) phi = 0, written out here
  double worst = 0.0;
  for (int k = 0; k < 40; ++k) {
    const double z = 0.3 + 0.1 * k;
    const Jet phi = bessel_phi(line_seed(z));
    const Complex r = phi.derivative(2, 0) - (36.0 + z * z * z) / (3.0 * z * z) * phi.value();
    worst = std::max(worst, std::abs(r) / (1.0 + std::abs(phi.derivative(2, 0))));
  }
  o.pass = o.pass && worst < 1e-8;
  o.detail += "; Bessel phi relative " + fmt(worst);
  return o;
}

Outcome ac8() { return suite_outcome({"identities:appendix2"}); }

Outcome ac9() {
  auto g = GeneratorSet::make({"theta1", "theta2", "zeta1", "zeta2"});
  const JetCaps caps{4, 1}, low{2, 1};
  SplitMix64 rng(42);
  double worst = 0.0;
  auto see = [&](const SuperJet& a, const SuperJet& b) { worst = std::max(worst, testing::distance(a, b)); };
  const int draws = 200;
  for (int k = 0; k < draws; ++k) {
    using testing::Kind;
    const SuperJet a = testing::random_superjet(rng, g, caps);
    const SuperJet b = testing::random_superjet(rng, g, caps);
    const SuperJet c = testing::random_superjet(rng, g, caps);
    see((a * b) * c, a * (b * c));
    const SuperJet e = testing::random_superjet(rng, g, caps, Kind::Even);
    const SuperJet o1 = testing::random_superjet(rng, g, caps, Kind::Odd);
    const SuperJet o2 = testing::random_superjet(rng, g, caps, Kind::Odd);
    see(e * o1, o1 * e);
    see(o1 * o2, -(o2 * o1));
    for (int gen : {0, 1})
      see(superderivative(superderivative(a, gen), gen).truncated(low), a.dx().truncated(low));
    see((superderivative(superderivative(a, 0), 1) + superderivative(superderivative(a, 1), 0)).truncated(low),
        SuperJet(g, low));
    SuperJet s = testing::random_superjet(rng, g, caps, Kind::Even, 0.4);
    s = s + Complex(1.5);
    see(sj_exp(sj_log(s)), s);
    see(sj_log(sj_exp(s)), s);
  }
  return {worst < 1e-10, std::to_string(draws) + " draws, max deviation " + fmt(worst)};
}

Outcome ac10() {
  double worst = 0.0;
  const auto f1 = figure_tables(1);
  const auto& mid = f1[0].rows[kFigurePoints / 2];
  worst = std::max({worst, std::abs(*mid[0]), std::abs(*mid[1] - 1.0), std::abs(*mid[3] - 0.5)});
  const auto f2 = figure_tables(2);
  for (const auto& tab : f2) {
    if (tab.name != "fig2_t0.csv") continue;
    for (const auto& row : tab.rows) {
      if (!row[1]) continue;
      const double want = 2.0 / *row[0];
      worst = std::max(worst, std::abs(*row[1] - want) / (1.0 + std::abs(want)));
    }
  }
  const auto f3 = figure_tables(3);
  for (const auto& tab : f3)
    if (tab.name == "fig3_t0.csv") {
      const auto& o = tab.rows[kFigurePoints / 2];
      worst = std::max({worst, std::abs(*o[0]), std::abs(*o[1] - 135.0 / 194.0)});
    }
  const bool all = figure_tables(4).size() == 3 && f2.size() == 3 && f3.size() == 3;
  return {all && worst < 1e-12, "max anchor deviation " + fmt(worst)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> expect_fail;
  app.add_option("--expect-fail", expect_fail, "criteria known to fail");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {1, "one-soliton lift, 21x21 on [-3,3]^2, abs < 1e-10", 5.0, ac1},
      {2, "N-soliton bilinear system, N = 1..4, relative < 1e-9", 10.0, ac2},
      {3, "two-soliton extraction vs closed form, 21x21 on [-5,5]^2, < 1e-9", 0.0, ac3},
      {4, "Yablonskii-Vorob'ev exactness through n = 12", 5.0, ac4},
      {5, "rational hierarchy ODEs < 1e-9 and exact W identities", 0.0, ac5},
      {6, "rational similarity lift, relative < 1e-8, v = i u_x", 0.0, ac6},
      {7, "fermionic solutions, second solutions and Wronskians", 0.0, ac7},
      {8, "bilinear identities on exponentials < 1e-12", 0.0, ac8},
      {9, "algebra kernel property suite < 1e-10", 0.0, ac9},
      {10, "figure anchors < 1e-12", 0.0, ac10},
  };

  std::set<int> failed;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit > 0 && secs >= c.time_limit) {
      o.pass = false;
      o.detail += "; over the " + fmt(c.time_limit) + " s budget";
    }
    if (!o.pass) failed.insert(c.id);
    std::printf("AC%-2d %s  %s  (%s; %.3f s)\n", c.id, o.pass ? "PASS" : "FAIL", c.name.c_str(),
                o.detail.c_str(), secs);
  }
  const std::set<int> expected(expect_fail.begin(), expect_fail.end());
  std::printf("%zu/%zu criteria pass\n", criteria.size() - failed.size(), criteria.size());
  if (failed != expected) {
    std::printf("unexpected outcome: failing set differs from --expect-fail\n");
    return 1;
  }
  return 0;
}
