#include "skdv/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "skdv/errors.hpp"

namespace skdv {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

}  // namespace

double gamma(double x) {
  if (!std::isfinite(x)) throw DomainError("gamma: non-finite argument");
  if (is_nonpositive_integer(x)) {
    std::ostringstream msg;
    msg << "gamma: pole at " << x;
    throw DomainError(msg.str());
  }
  if (x < 0.5) {
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma(1.0 - x));
  }
  const double z = x - 1.0;
  double a = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k) a += kLanczos[k] / (z + static_cast<double>(k));
  const double t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

Jet bessel_I(double nu, const Jet& x, SeriesSpec spec) {
  if (spec.max_terms < 10) throw ConfigError("SeriesSpec.max_terms must be >= 10");
  if (!(x.value().real() > 0.0)) throw DomainError("bessel_I: argument body must be positive");
  const Jet half = x * 0.5;
  const Jet half_sq = half * half;
  const Jet base = pow(half, nu);

  Jet sum(x.caps());
  Jet power(x.caps(), 1.0);  // half_sq^m
  double coeff = 0.0;        // 1 / (m! Gamma(m + nu + 1)), 0 while at poles
  bool started = false;
  const double growth = std::abs(half_sq.value());
  for (int m = 0; m < spec.max_terms; ++m) {
    if (m > 0) power = power * half_sq;
    if (is_nonpositive_integer(m + nu + 1.0)) continue;
    if (!started) {
      coeff = 1.0 / (std::tgamma(m + 1.0) * gamma(m + nu + 1.0));
      started = true;
    } else {
      coeff /= (m * (m + nu));
    }
    const Jet term = power * coeff;
    sum += term;
    if (m > growth && term.max_abs() <= spec.tail_tolerance * sum.max_abs()) return sum * base;
  }
  throw AccuracyError("bessel_I: series did not converge within max_terms");
}

double bessel_I(double nu, double x, SeriesSpec spec) {
  return bessel_I(nu, Jet(JetCaps{0, 0}, x), spec).value().real();
}

Jet airy_Ai(const Jet& s, SeriesSpec spec) {
  if (spec.max_terms < 10) throw ConfigError("SeriesSpec.max_terms must be >= 10");
  if (std::abs(s.value()) > kAiryWindow) throw DomainError("airy_Ai: argument outside series window");
  const double c1 = std::pow(3.0, -2.0 / 3.0) / gamma(2.0 / 3.0);
  const double c2 = std::pow(3.0, -1.0 / 3.0) / gamma(1.0 / 3.0);
  const Jet s3 = s * s * s;

  // f = sum a_k s^(3k), g = sum b_k s^(3k+1), both solving y'' = s y.
  Jet f(s.caps(), 1.0);
  Jet g = s;
  Jet power(s.caps(), 1.0);
  double a = 1.0, b = 1.0;
  for (int k = 1; k < spec.max_terms; ++k) {
    power = power * s3;
    a /= (3.0 * k - 1.0) * (3.0 * k);
    b /= (3.0 * k) * (3.0 * k + 1.0);
    const Jet tf = power * a;
    const Jet tg = power * s * b;
    f += tf;
    g += tg;
    const double scale = std::max(f.max_abs(), g.max_abs());
    if (std::max(tf.max_abs(), tg.max_abs()) <= spec.tail_tolerance * scale &&
        3.0 * k > std::abs(s.value()))
      return f * c1 - g * c2;
  }
  throw AccuracyError("airy_Ai: series did not converge within max_terms");
}

namespace {

std::vector<Complex> alternating_derivs(const Jet& g, Complex even, Complex odd) {
  std::vector<Complex> d(static_cast<std::size_t>(g.caps().total_order() + 1));
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = (k % 2 == 0) ? even : odd;
  return d;
}

}  // namespace

Jet sinh(const Jet& g) {
  return compose(g, alternating_derivs(g, std::sinh(g.value()), std::cosh(g.value())));
}

Jet cosh(const Jet& g) {
  return compose(g, alternating_derivs(g, std::cosh(g.value()), std::sinh(g.value())));
}

Jet tanh(const Jet& g) { return sinh(g) * inv(cosh(g)); }

Jet sech(const Jet& g) { return inv(cosh(g)); }

}  // namespace skdv
