#include <cmath>

#include "doctest.h"
#include "skdv/errors.hpp"
#include "skdv/reduction.hpp"
#include "skdv/specfun.hpp"
#include "skdv/superfield.hpp"
#include "support.hpp"

using namespace skdv;

namespace {

const Complex kI{0.0, 1.0};

// Polynomial in (x, t) with random complex coefficients, degree 4 in x and
// 2 in t, returned as a jet at the sample point.
ScalarSampler random_polynomial(SplitMix64& rng) {
  std::vector<Complex> c;
  for (int k = 0; k < 15; ++k) c.push_back(testing::random_complex(rng, 0.6));
  return [c](JetCaps caps, double x, double t) {
    const Jet X = jet_seed(caps, Variable::X, x), T = jet_seed(caps, Variable::T, t);
    Jet r(caps);
    Jet xp(caps, 1.0);
    for (int i = 0, k = 0; i <= 4; ++i, xp = xp * X) {
      Jet tp(caps, 1.0);
      for (int j = 0; j <= 2; ++j, ++k, tp = tp * T) r += c[static_cast<std::size_t>(k)] * xp * tp;
    }
    return r;
  };
}

// Sum of blade * polynomial over the given blades.
Sampler polynomial_sampler(SplitMix64& rng, GeneratorSetPtr gens, std::vector<Blade> blades) {
  std::vector<std::pair<Blade, ScalarSampler>> parts;
  for (const Blade& b : blades) parts.emplace_back(b, random_polynomial(rng));
  return [gens, parts](JetCaps caps, double x, double t) {
    SuperJet s(gens, caps);
    for (const auto& [b, p] : parts) s += SuperJet::monomial(gens, b, p(caps, x, t));
    return s;
  };
}

// theta1, theta2 plus three parameter generators so that fermion bilinears
// such as xi1 xi2 survive.
ComponentField random_field(SplitMix64& rng) {
  auto g = GeneratorSet::make({"theta1", "theta2", "z1", "z2", "z3"});
  ComponentField f;
  f.generators = g;
  f.theta1 = 0;
  f.theta2 = 1;
  f.u = polynomial_sampler(rng, g, {Blade{}, Blade{2, 3}, Blade{3, 4}});
  f.v = polynomial_sampler(rng, g, {Blade{}, Blade{2, 4}});
  f.xi1 = polynomial_sampler(rng, g, {Blade{2}, Blade{3}, Blade{2, 3, 4}});
  f.xi2 = polynomial_sampler(rng, g, {Blade{3}, Blade{4}});
  return f;
}

double dist(const SuperJet& a, const SuperJet& b) { return testing::distance(a, b); }

// Values at the expansion point only: residual jets are meaningful at (0,0).
double value_dist(const SuperJet& a, const SuperJet& b) {
  double m = 0.0;
  const SuperJet d = a - b;
  for (const auto& [blade, jet] : d.terms()) m = std::max(m, std::abs(jet.value()));
  return m;
}

}  // namespace

TEST_CASE("component residuals are the theta-blade decomposition of the superfield residual") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 12; ++trial) {
    const ComponentField f = random_field(rng);
    for (double a : {-2.0, 1.0, 4.0}) {
      const EquationParams p{a};
      const double x = rng.uniform(-1, 1), t = rng.uniform(-1, 1);
      const Residual main = residual_main(f, p, x, t);
      const ComponentResiduals c = residual_components(f, p, x, t);
      const ThetaComponents s = theta_split(main.value, 0, 1);
      const double tol = 1e-11 * (1.0 + main.scale);
      CHECK(value_dist(s.r0, c.u.value) < tol);
      CHECK(value_dist(s.r1, c.xi1.value) < tol);
      CHECK(value_dist(s.r2, c.xi2.value) < tol);
      CHECK(value_dist(s.r12, c.v.value) < tol);
    }
  }
}

TEST_CASE("theta_split reassembles") {
  SplitMix64 rng(5);
  auto g = GeneratorSet::make({"theta1", "theta2", "z1"});
  const JetCaps caps{2, 1};
  const SuperJet r = testing::random_superjet(rng, g, caps);
  const ThetaComponents c = theta_split(r, 0, 1);
  const SuperJet th1 = SuperJet::generator(g, caps, 0), th2 = SuperJet::generator(g, caps, 1);
  CHECK(dist(c.r0 + th1 * c.r1 + th2 * c.r2 + th1 * th2 * c.r12, r) < 1e-15);
}

TEST_CASE("zero field has zero residuals") {
  auto g = GeneratorSet::make({"theta1", "theta2"});
  ComponentField f{g, 0, 1, zero_sampler(g), zero_sampler(g), zero_sampler(g), zero_sampler(g)};
  CHECK(residual_main(f, {}, 0.2, 0.3).max_abs() == 0.0);
  const ComponentResiduals c = residual_components(f, {}, 0.2, 0.3);
  CHECK(c.u.max_abs() + c.v.max_abs() + c.xi1.max_abs() + c.xi2.max_abs() == 0.0);
  CHECK(residual_rho(f, {}, RhoSign::Minus, 0.2, 0.3).max_abs() == 0.0);
  ScalarSampler zero = [](JetCaps caps, double, double) { return Jet(caps); };
  const auto b = residual_bosonized(zero, zero, {}, 0.0, 0.0);
  CHECK(b[0] == Complex(0.0));
  CHECK(b[1] == Complex(0.0));
}

TEST_CASE("one-soliton lift solves every residual form") {
  const ComponentField f = lift_travelling();
  SplitMix64 rng(1);
  for (int k = 0; k < 25; ++k) {
    const double x = rng.uniform(-3, 3), t = rng.uniform(-3, 3);
    CHECK(residual_main(f, {}, x, t).max_abs() < 1e-10);
    const ComponentResiduals c = residual_components(f, {}, x, t);
    CHECK(c.u.max_abs() < 1e-10);
    CHECK(c.v.max_abs() < 1e-10);
    CHECK(c.xi1.max_abs() < 1e-10);
    CHECK(c.xi2.max_abs() < 1e-10);
    // xi2 = i xi1 makes rho_+ vanish identically
    CHECK(residual_rho(f, {}, RhoSign::Plus, x, t).max_abs() == 0.0);
    CHECK(residual_rho(f, {}, RhoSign::Minus, x, t).max_abs() < 1e-10);
  }
}

TEST_CASE("one-soliton lift point values") {
  const ComponentField f = lift_travelling();
  const ComponentSample s = sample_components(f, JetCaps{}, 0.0, 0.0);
  CHECK(std::abs(s.u.body().value() - 1.0) < 1e-15);
  CHECK(std::abs(s.v.body().value()) < 1e-15);
  const int zeta = f.generators->index_of("zeta");
  CHECK(std::abs(extract(s.xi1, Blade{zeta}) - 0.5 * kI) < 1e-15);
  CHECK(std::abs(extract(s.xi2, Blade{zeta}) - kI * 0.5 * kI) < 1e-15);
}

TEST_CASE("bosonized pair for both signs of v") {
  ScalarSampler u = [](JetCaps caps, double x, double t) {
    return sech(jet_seed(caps, Variable::X, x) - jet_seed(caps, Variable::T, t));
  };
  for (Complex c : {kI, -kI}) {
    ScalarSampler v = dx_scalar(u, c);
    for (auto [x, t] : {std::pair{0.1, 0.4}, {-1.2, 0.3}, {2.0, -1.0}}) {
      const auto r = residual_bosonized(u, v, {}, x, t);
      CHECK(std::abs(r[0]) < 1e-10);
      CHECK(std::abs(r[1]) < 1e-10);
    }
  }
}

TEST_CASE("with one odd parameter the fermion bilinears vanish exactly") {
  // xi1 = zeta f, xi2 = zeta g: xi1 xi2 = 0 in the algebra
  auto g = GeneratorSet::make({"theta1", "theta2", "zeta"});
  SplitMix64 rng(9);
  const JetCaps caps{3, 1};
  const Sampler xi1 = odd_sampler(g, 2, random_polynomial(rng));
  const Sampler xi2 = odd_sampler(g, 2, random_polynomial(rng));
  const SuperJet a = xi1(caps, 0.3, 0.1), b = xi2(caps, 0.3, 0.1);
  CHECK((a * b).is_zero());
  CHECK((a * b.dx()).is_zero());
}

TEST_CASE("wrong parity or generator set is rejected") {
  auto g = GeneratorSet::make({"theta1", "theta2", "zeta"});
  const ComponentField good = lift_travelling();
  ComponentField bad = good;
  bad.u = good.xi1;
  CHECK_THROWS_AS(residual_main(bad, {}, 0.0, 0.0), ParityError);
  ComponentField foreign = good;
  foreign.v = zero_sampler(g);
  CHECK_THROWS_AS(residual_main(foreign, {}, 0.0, 0.0), ConfigError);
  CHECK_THROWS_AS(residual_main(good, {}, 0.0, 0.0, JetCaps{2, 1}), RangeError);
}

TEST_CASE("dx_sampler differentiates with one extra order") {
  SplitMix64 rng(4);
  auto g = GeneratorSet::make({"theta1"});
  const ScalarSampler p = random_polynomial(rng);
  const Sampler s = even_sampler(g, p);
  const Sampler d = dx_sampler(s, 2.0);
  const JetCaps caps{3, 1};
  const SuperJet got = d(caps, 0.4, -0.2);
  const Jet want = p(JetCaps{4, 1}, 0.4, -0.2).dx().truncated(caps) * 2.0;
  CHECK((got.body() - want).max_abs() < 1e-13);
  CHECK(got.caps() == caps);
}
