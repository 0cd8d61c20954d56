#include "skdv/hirota.hpp"

#include <algorithm>
#include <cmath>

#include "skdv/errors.hpp"
#include "skdv/yablonskii.hpp"

namespace skdv {

namespace {

const Complex kI{0.0, 1.0};

double binomial(int n, int k) {
  double r = 1.0;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

double body_abs(const SuperJet& s) {
  double m = 0.0;
  for (const auto& [blade, jet] : s.terms()) m = std::max(m, std::abs(jet.value()));
  return m;
}

void require_even(const SuperJet& s, const char* op) {
  if (!s.is_even()) throw ParityError(std::string(op) + ": arguments must be even");
}

// dx^k for k = 0..n
std::vector<SuperJet> x_derivatives(const SuperJet& f, int n) {
  std::vector<SuperJet> out{f};
  for (int k = 1; k <= n; ++k) out.push_back(out.back().dx());
  return out;
}

// Bilinear expansion with the largest product magnitude recorded for scaling.
struct ScaledSum {
  SuperJet sum;
  double scale = 0.0;
};

ScaledSum super_sd_scaled(int n, const SuperJet& f, const SuperJet& g, int theta) {
  if (n < 0) throw RangeError("super_sd: negative order");
  require_even(f, "super_sd");
  require_even(g, "super_sd");
  if (f.caps().px < n + 1) throw RangeError("super_sd: jet caps too small for the requested order");
  if (f.generators() != g.generators() || !(f.caps() == g.caps()))
    throw ConfigError("super_sd: arguments differ in generators or caps");
  const std::vector<SuperJet> fd = x_derivatives(f, n);
  const std::vector<SuperJet> gd = x_derivatives(g, n);
  ScaledSum out{SuperJet(f.generators(), f.caps())};
  for (int k = 0; k <= n; ++k) {
    const double c = ((n - k) % 2 == 0 ? 1.0 : -1.0) * binomial(n, k);
    const SuperJet left = superderivative(fd[static_cast<std::size_t>(k)], theta) *
                          gd[static_cast<std::size_t>(n - k)] * c;
    const SuperJet right = fd[static_cast<std::size_t>(k)] *
                           superderivative(gd[static_cast<std::size_t>(n - k)], theta) * c;
    out.scale = std::max({out.scale, body_abs(left), body_abs(right)});
    out.sum += left - right;
  }
  return out;
}

ScaledSum classical_p_scaled(const BilinearPolynomial& poly, const SuperJet& f, const SuperJet& g) {
  if (f.generators() != g.generators() || !(f.caps() == g.caps()))
    throw ConfigError("classical_p: arguments differ in generators or caps");
  const JetCaps caps = f.caps();
  ScaledSum out{SuperJet(f.generators(), caps)};
  for (const BilinearTerm& term : poly) {
    if (term.dx < 0 || term.dt < 0 || term.dx > caps.px || term.dt > caps.pt)
      throw RangeError("classical_p: operator order exceeds jet caps");
    for (int i = 0; i <= term.dx; ++i)
      for (int j = 0; j <= term.dt; ++j) {
        SuperJet fi = f;
        for (int k = 0; k < i; ++k) fi = fi.dx();
        for (int k = 0; k < j; ++k) fi = fi.dt();
        SuperJet gi = g;
        for (int k = 0; k < term.dx - i; ++k) gi = gi.dx();
        for (int k = 0; k < term.dt - j; ++k) gi = gi.dt();
        const double sign = ((term.dx - i) + (term.dt - j)) % 2 == 0 ? 1.0 : -1.0;
        const SuperJet prod = fi * gi * (term.coeff * sign * binomial(term.dx, i) * binomial(term.dt, j));
        out.scale = std::max(out.scale, body_abs(prod));
        out.sum += prod;
      }
  }
  return out;
}

}  // namespace

void SolitonSpec::validate() const {
  const std::size_t n = solitons.size();
  if (n == 0) throw ConstructionError("soliton spec is empty");
  if (n > static_cast<std::size_t>(kMaxSolitons)) throw ConstructionError("too many solitons");
  for (std::size_t i = 0; i < n; ++i) {
    if (solitons[i].kappa == Complex{}) throw ConstructionError("soliton wavenumber must be nonzero");
    if (solitons[i].amplitude == Complex{})
      throw ConstructionError("soliton amplitude must be nonzero");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (solitons[i].kappa == solitons[j].kappa)
        throw ConstructionError("soliton wavenumbers must be distinct");
      if (solitons[i].kappa + solitons[j].kappa == Complex{})
        throw ConstructionError("soliton wavenumbers must not sum to zero");
    }
  }
}

SuperJet super_sd(int n, const SuperJet& f, const SuperJet& g, int theta) {
  return super_sd_scaled(n, f, g, theta).sum;
}

SuperJet super_sd(int n, const Sampler& f, const Sampler& g, int theta, double x, double t,
                  JetCaps caps) {
  return super_sd(n, f(caps, x, t), g(caps, x, t), theta);
}

BilinearPolynomial mkdv_bilinear_operator() {
  return {BilinearTerm{1.0, 0, 1}, BilinearTerm{1.0, 3, 0}};
}

SuperJet classical_p(const BilinearPolynomial& poly, const SuperJet& f, const SuperJet& g) {
  return classical_p_scaled(poly, f, g).sum;
}

SuperJet classical_p(const BilinearPolynomial& poly, const Sampler& f, const Sampler& g, double x,
                     double t, JetCaps caps) {
  return classical_p(poly, f(caps, x, t), g(caps, x, t));
}

Complex interaction_coefficient(Complex kappa_i, Complex kappa_j) {
  const Complex r = (kappa_i - kappa_j) / (kappa_i + kappa_j);
  return r * r;
}

TauPair nsoliton_taus(const SolitonSpec& spec) {
  spec.validate();
  auto gens = GeneratorSet::make({"theta1", "theta2", "zeta_hat"});
  const int theta1 = gens->index_of("theta1");
  const int zeta = gens->index_of("zeta_hat");
  const std::size_t n = spec.solitons.size();

  // Coefficient of each subset mu (bitmask) for tau1; tau2 flips the sign of
  // odd-cardinality subsets.
  std::vector<Complex> subset_coeff(std::size_t{1} << n);
  for (std::size_t mu = 0; mu < subset_coeff.size(); ++mu) {
    Complex c = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!((mu >> i) & 1u)) continue;
      c *= spec.solitons[i].amplitude;
      for (std::size_t j = i + 1; j < n; ++j)
        if ((mu >> j) & 1u)
          c *= interaction_coefficient(spec.solitons[i].kappa, spec.solitons[j].kappa);
    }
    subset_coeff[mu] = c;
  }

  auto make = [=](bool negate_odd) -> Sampler {
    return [=](JetCaps caps, double x, double t) {
      const Jet X = jet_seed(caps, Variable::X, x);
      const Jet T = jet_seed(caps, Variable::T, t);
      const Blade odd_blade = Blade::from_indices(std::vector<int>{std::min(theta1, zeta),
                                                                   std::max(theta1, zeta)});
      // theta1 * zeta_hat in canonical order
      const int order_sign = theta1 < zeta ? 1 : -1;
      SuperJet tau(gens, caps);
      for (std::size_t mu = 0; mu < subset_coeff.size(); ++mu) {
        Complex kappa_sum = 0.0, kappa3_sum = 0.0;
        int count = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (!((mu >> i) & 1u)) continue;
          const Complex k = spec.solitons[i].kappa;
          kappa_sum += k;
          kappa3_sum += k * k * k;
          ++count;
        }
        SuperJet psi(gens, kappa_sum * X - kappa3_sum * T);
        psi += SuperJet::monomial(gens, odd_blade, Jet(caps, double(order_sign) * kappa_sum));
        const double sign = (negate_odd && count % 2 == 1) ? -1.0 : 1.0;
        tau += sj_exp(psi) * (sign * subset_coeff[mu]);
      }
      return tau;
    };
  };

  TauPair tp;
  tp.generators = gens;
  tp.theta1 = theta1;
  tp.theta2 = gens->index_of("theta2");
  tp.tau1 = make(false);
  tp.tau2 = make(true);
  tp.provenance = spec;
  return tp;
}

namespace {

SuperJet eval_poly(const std::vector<double>& coeffs, const SuperJet& z) {
  SuperJet r(z.generators(), z.caps());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * z + Complex(*it);
  return r;
}

std::vector<double> to_doubles(const ScaledPoly& q) {
  const double scale = std::pow(3.0, q.k / 3.0);
  std::vector<double> out;
  for (const Rational& c : q.p.coeffs()) out.push_back(scale * c.convert_to<double>());
  return out;
}

}  // namespace

TauPair rational_taus(int n) {
  if (n < 0) throw ConstructionError("rational_taus: n must be >= 0");
  auto gens = GeneratorSet::make({"theta1", "theta2", "zeta"});
  const int theta1 = gens->index_of("theta1");
  const int zeta = gens->index_of("zeta");
  const std::vector<ScaledPoly> q = yv_sequence(n + 1);
  const std::vector<double> qn = to_doubles(q[static_cast<std::size_t>(n)]);
  const std::vector<double> qn1 = to_doubles(q[static_cast<std::size_t>(n + 1)]);

  auto make = [=](const std::vector<double>& coeffs, double t_power) -> Sampler {
    return [=](JetCaps caps, double x, double t) {
      if (!(t > 0.0)) throw DomainError("rational tau functions are sampled for t > 0 only");
      const Jet T = jet_seed(caps, Variable::T, t);
      const Jet scale = pow(T, -1.0 / 3.0);
      SuperJet shifted(gens, jet_seed(caps, Variable::X, x));
      shifted += SuperJet::generator(gens, caps, theta1) * SuperJet::generator(gens, caps, zeta);
      const SuperJet z = shifted * scale;
      return eval_poly(coeffs, z) * pow(T, t_power);
    };
  };

  TauPair tp;
  tp.generators = gens;
  tp.theta1 = theta1;
  tp.theta2 = gens->index_of("theta2");
  tp.tau1 = make(qn, n * (n + 1) / 6.0);
  tp.tau2 = make(qn1, (n + 1) * (n + 2) / 6.0);
  tp.provenance = RationalProvenance{n};
  return tp;
}

BilinearResidual bilinear_residual(const TauPair& tp, double x, double t, JetCaps caps) {
  if (caps.px < 3 || caps.pt < 1) throw RangeError("bilinear_residual needs jet caps of at least (3,1)");
  const SuperJet f = tp.tau1(caps, x, t);
  const SuperJet g = tp.tau2(caps, x, t);
  ScaledSum m = classical_p_scaled(mkdv_bilinear_operator(), f, g);
  ScaledSum s = super_sd_scaled(1, f, g, tp.theta1);
  return {Residual{std::move(m.sum), m.scale}, Residual{std::move(s.sum), s.scale}};
}

HirotaFields hirota_fields(const TauPair& tp) {
  const int theta1 = tp.theta1;
  const GeneratorSetPtr gens = tp.generators;

  Sampler u_b = [tp](JetCaps caps, double x, double t) {
    const JetCaps wide{caps.px + 1, caps.pt};
    const SuperJet t1 = tp.tau1(wide, x, t);
    const SuperJet t2 = tp.tau2(wide, x, t);
    const SuperJet logdiff = t1.dx() * sj_inv(t1) - t2.dx() * sj_inv(t2);
    return (logdiff * (-kI)).truncated(caps);
  };

  Sampler eta_f = [tp, u_b](JetCaps caps, double x, double t) {
    const SuperJet t1 = tp.tau1(caps, x, t);
    const SuperJet t2 = tp.tau2(caps, x, t);
    // d_theta1 U^b = -i (tau1^-1 d_theta1 tau1 - tau2^-1 d_theta1 tau2)
    const SuperJet dtheta_u =
        (sj_inv(t1) * d_theta(t1, tp.theta1) - sj_inv(t2) * d_theta(t2, tp.theta1)) * (-kI);
    const SuperJet th1 = SuperJet::generator(tp.generators, caps, tp.theta1);
    return (th1 * u_b(caps, x, t) + dtheta_u) * kI;
  };

  ComponentField f;
  f.generators = gens;
  f.theta1 = theta1;
  f.theta2 = tp.theta2;
  f.u = [u_b, theta1](JetCaps caps, double x, double t) { return u_b(caps, x, t).without(theta1); };
  f.xi1 = [u_b, theta1](JetCaps caps, double x, double t) {
    return d_theta(u_b(caps, x, t), theta1);
  };
  f.xi2 = scaled_sampler(f.xi1, kI);
  f.v = dx_sampler(f.u, -kI);
  return HirotaFields{u_b, eta_f, f};
}

ComponentField fields_from_taus(const TauPair& tp) { return hirota_fields(tp).field; }

Complex closed_soliton_u(int which, double x, double t) {
  if (which != 2)
    throw UnsupportedError("closed_soliton_u: only the two-soliton closed form is available");
  const double a = (t - 4.0 * x) / 8.0;
  const double b = t - x;
  const double c = 3.0 * (3.0 * t - 4.0 * x) / 8.0;
  const double d = (7.0 * t - 4.0 * x) / 8.0;
  const double num = 9.0 * (10.0 * std::cosh(a) + 5.0 * std::cosh(b) + 8.0 * std::sinh(a) + 4.0 * std::sinh(b));
  const double den = 72.0 + 41.0 * std::cosh(c) + 81.0 * std::cosh(d) + 40.0 * std::sinh(c);
  return -num / den;
}

}  // namespace skdv
