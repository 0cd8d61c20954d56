#include "skdv/reduction.hpp"

#include <cmath>
#include <numbers>

#include "skdv/errors.hpp"
#include "skdv/specfun.hpp"

namespace skdv {

namespace {

const Complex kI{0.0, 1.0};

void require_second_order(const Jet& j) {
  if (j.caps().px < 2) throw RangeError("reduced ODE residuals need jets of order >= 2");
}

Complex d1(const Jet& j) { return j.derivative(1, 0); }
Complex d2(const Jet& j) { return j.derivative(2, 0); }

void require_positive(const Jet& z, const char* op) {
  if (!(z.value().real() > 0.0) || z.value().imag() != 0.0)
    throw DomainError(std::string(op) + ": argument must be real and positive");
}

// 2 z^(3/2) / (3 sqrt 3)
Jet bessel_argument(const Jet& z) { return pow(z, 1.5) * (2.0 / (3.0 * std::sqrt(3.0))); }

}  // namespace

Complex residual_trav_u(const Jet& u, double a, double c, Complex c1) {
  require_second_order(u);
  const Complex u0 = u.value();
  return d2(u) - a * u0 * u0 * u0 + kI * (a + 2.0) * u0 * d1(u) + c * u0 + c1;
}

Complex residual_trav_rho(const Jet& rho, const Jet& u, double a, double c, Complex k1) {
  require_second_order(rho);
  require_second_order(u);
  const Complex u0 = u.value();
  return d2(rho) - kI * (a + 2.0) * u0 * d1(rho) +
         (c - 3.0 * a * u0 * u0 + kI * (4.0 - a) * d1(u)) * rho.value() + k1;
}

Complex residual_sim_w(const Jet& w, Complex z, double a, Complex c2) {
  require_second_order(w);
  const Complex w0 = w.value();
  return d2(w) - a * w0 * w0 * w0 + kI * (a + 2.0) * w0 * d1(w) - z * w0 / 3.0 + c2;
}

Complex residual_sim_phi(const Jet& phi, const Jet& w, Complex z, double a, Complex k2) {
  require_second_order(phi);
  require_second_order(w);
  const Complex w0 = w.value();
  return d2(phi) - kI * (a + 2.0) * w0 * d1(phi) +
         (-z / 3.0 - 3.0 * a * w0 * w0 + kI * (4.0 - a) * d1(w)) * phi.value() + k2;
}

Complex residual_trav_homogeneous(const Jet& xi, const Jet& u) {
  require_second_order(xi);
  const Complex u0 = u.value();
  return d2(xi) + (6.0 * u0 * u0 - 1.0) * xi.value();
}

Complex residual_sim_homogeneous(const Jet& phi, const Jet& w, Complex z) {
  require_second_order(phi);
  const Complex w0 = w.value();
  return d2(phi) + (6.0 * w0 * w0 - z / 3.0) * phi.value();
}

Jet soliton_u(const Jet& y) { return sech(y); }

Jet soliton_rho0(const Jet& y) {
  const Jet s = sinh(y);
  const Jet sc = sech(y);
  return sc * sc * sc * (s + kI * 0.5 * (1.0 - s * s));
}

Jet similarity_w1(const Jet& z) {
  const Jet z3 = z * z * z;
  return 2.0 * kI * (z3 - 6.0) / (z * (z3 + 12.0));
}

Jet bessel_phi(const Jet& z) {
  require_positive(z, "bessel_phi");
  return sqrt(z) * bessel_I(kBesselPhiOrder, bessel_argument(z));
}

Jet second_fermionic_travelling(const Jet& y) {
  return sech(y) * (-5.0 + cosh(2.0 * y) + 6.0 * y * tanh(y));
}

Jet second_fermionic_similarity(const Jet& z) {
  require_positive(z, "second_fermionic_similarity");
  return sqrt(z) * bessel_I(5.0 / 3.0, bessel_argument(z));
}

bool near_similarity_pole(double x, double t) {
  return std::abs(x) < kPoleExclusionRadius || std::abs(x * x * x + 12.0 * t) < kPoleExclusionRadius;
}

namespace {

void check_similarity_pole(double x, double t) {
  if (near_similarity_pole(x, t))
    throw NearPoleError("similarity field sampled inside the pole exclusion radius")
        .at(x, t);
}

}  // namespace

Jet similarity_u(JetCaps caps, double x, double t) {
  check_similarity_pole(x, t);
  const Jet X = jet_seed(caps, Variable::X, x);
  const Jet T = jet_seed(caps, Variable::T, t);
  const Jet X3 = X * X * X;
  return 2.0 * kI * (X3 - 6.0 * T) / (X * (X3 + 12.0 * T));
}

Jet similarity_v(JetCaps caps, double x, double t) {
  check_similarity_pole(x, t);
  const Jet X = jet_seed(caps, Variable::X, x);
  const Jet T = jet_seed(caps, Variable::T, t);
  const Jet X3 = X * X * X;
  const Jet D = X3 + 12.0 * T;
  return 2.0 * (X3 * X3 - 48.0 * T * X3 - 72.0 * T * T) / (X * X * D * D);
}

ComponentField lift_travelling() {
  auto gens = GeneratorSet::make({"theta1", "theta2", "zeta"});
  const int zeta = gens->index_of("zeta");
  auto y_of = [](JetCaps caps, double x, double t) {
    return jet_seed(caps, Variable::X, x) - jet_seed(caps, Variable::T, t);
  };
  ScalarSampler u = [y_of](JetCaps caps, double x, double t) { return soliton_u(y_of(caps, x, t)); };
  ScalarSampler rho = [y_of](JetCaps caps, double x, double t) {
    return soliton_rho0(y_of(caps, x, t));
  };

  ComponentField f;
  f.generators = gens;
  f.theta1 = gens->index_of("theta1");
  f.theta2 = gens->index_of("theta2");
  f.u = even_sampler(gens, u);
  f.v = even_sampler(gens, dx_scalar(u, kI));
  f.xi1 = odd_sampler(gens, zeta, rho);
  f.xi2 = scaled_sampler(f.xi1, kI);
  return f;
}

ComponentField lift_similarity() {
  auto gens = GeneratorSet::make({"theta1", "theta2", "zeta"});
  const int zeta = gens->index_of("zeta");
  ScalarSampler xi = [](JetCaps caps, double x, double t) {
    if (!(t > 0.0)) throw DomainError("similarity fermions are defined for t > 0 only");
    check_similarity_pole(x, t);
    const Jet scale = pow(jet_seed(caps, Variable::T, t), -1.0 / 3.0);
    const Jet z = scale * jet_seed(caps, Variable::X, x);
    return scale * bessel_phi(z);
  };

  ComponentField f;
  f.generators = gens;
  f.theta1 = gens->index_of("theta1");
  f.theta2 = gens->index_of("theta2");
  f.u = even_sampler(gens, similarity_u);
  f.v = even_sampler(gens, similarity_v);
  f.xi1 = odd_sampler(gens, zeta, xi);
  f.xi2 = scaled_sampler(f.xi1, kI);
  return f;
}

Jet line_seed(double y, int order) { return line_seed(Complex(y, 0.0), order); }

Jet line_seed(Complex y, int order) { return jet_seed(JetCaps{order, 0}, Variable::X, y); }

}  // namespace skdv
