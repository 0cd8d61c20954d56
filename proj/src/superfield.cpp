#include "skdv/superfield.hpp"

#include <algorithm>
#include <cmath>

#include "skdv/errors.hpp"

namespace skdv {

namespace {

const Complex kI{0.0, 1.0};

void require_caps(JetCaps caps) {
  if (caps.px < kResidualMinCaps.px || caps.pt < kResidualMinCaps.pt)
    throw RangeError("residual evaluation needs jet caps of at least (3,1)");
}

double body_abs(const SuperJet& s) {
  double m = 0.0;
  for (const auto& [blade, jet] : s.terms()) m = std::max(m, std::abs(jet.value()));
  return m;
}

// Running sum that remembers its largest summand.
class TermSum {
 public:
  TermSum(GeneratorSetPtr gens, JetCaps caps) : sum_(std::move(gens), caps) {}

  void add(const SuperJet& term, Complex coeff = 1.0) {
    SuperJet scaled = term * coeff;
    scale_ = std::max(scale_, body_abs(scaled));
    sum_ += scaled;
  }

  Residual finish() && { return Residual{std::move(sum_), scale_}; }

 private:
  SuperJet sum_;
  double scale_ = 0.0;
};

void check_parity(const SuperJet& s, bool want_even, const char* name) {
  if (want_even ? !s.is_even() : !s.is_odd())
    throw ParityError(std::string("component ") + name + " has the wrong parity");
}

}  // namespace

double Residual::max_abs() const { return body_abs(value); }

ComponentSample sample_components(const ComponentField& f, JetCaps caps, double x, double t) {
  ComponentSample s{f.u(caps, x, t), f.xi1(caps, x, t), f.xi2(caps, x, t), f.v(caps, x, t)};
  check_parity(s.u, true, "u");
  check_parity(s.v, true, "v");
  check_parity(s.xi1, false, "xi1");
  check_parity(s.xi2, false, "xi2");
  for (const SuperJet* c : {&s.u, &s.xi1, &s.xi2, &s.v}) {
    if (c->generators() != f.generators) throw ConfigError("component uses a foreign generator set");
    if (!(c->caps() == caps)) throw ConfigError("component sampled with wrong caps");
  }
  return s;
}

SuperJet assemble_A(const ComponentField& f, double x, double t, JetCaps caps) {
  const ComponentSample s = sample_components(f, caps, x, t);
  const SuperJet th1 = SuperJet::generator(f.generators, caps, f.theta1);
  const SuperJet th2 = SuperJet::generator(f.generators, caps, f.theta2);
  return s.u + th1 * s.xi1 + th2 * s.xi2 + th1 * th2 * s.v;
}

Residual residual_main(const ComponentField& f, EquationParams p, double x, double t,
                       JetCaps caps) {
  require_caps(caps);
  const double a = p.a;
  const SuperJet A = assemble_A(f, x, t, caps);
  const SuperJet D1A = superderivative(A, f.theta1);
  const SuperJet D2A = superderivative(A, f.theta2);
  const SuperJet D1D2A = superderivative(D2A, f.theta1);

  TermSum r(f.generators, caps);
  r.add(A.dt());
  r.add(A.dx().dx().dx());  // -(-A_xx)_x
  r.add((A * D1D2A).dx(), -(a + 2.0));
  r.add((D1A * D2A).dx(), -(a - 1.0));
  r.add((A * A * A).dx(), -a);
  return std::move(r).finish();
}

ComponentResiduals residual_components(const ComponentField& f, EquationParams p, double x,
                                       double t, JetCaps caps) {
  require_caps(caps);
  const double a = p.a;
  const ComponentSample s = sample_components(f, caps, x, t);
  const SuperJet& u = s.u;
  const SuperJet& v = s.v;
  const SuperJet& xi1 = s.xi1;
  const SuperJet& xi2 = s.xi2;
  const SuperJet ux = u.dx();
  const SuperJet uxx = ux.dx();
  const SuperJet xi1x = xi1.dx();
  const SuperJet xi2x = xi2.dx();
  const SuperJet u2 = u * u;
  const SuperJet xi1xi2 = xi1 * xi2;

  ComponentResiduals out{Residual{SuperJet(f.generators, caps)}, Residual{SuperJet(f.generators, caps)},
                         Residual{SuperJet(f.generators, caps)}, Residual{SuperJet(f.generators, caps)}};

  {
    TermSum r(f.generators, caps);
    r.add(u.dt());
    r.add(uxx.dx());
    r.add((u2 * u).dx(), -a);
    r.add((u * v).dx(), a + 2.0);
    r.add(xi1xi2.dx(), -(a - 1.0));
    out.u = std::move(r).finish();
  }
  {
    TermSum r(f.generators, caps);
    r.add(v.dt());
    r.add(v.dx().dx().dx());
    r.add((v * v).dx(), 3.0);
    r.add((u2 * v).dx(), -3.0 * a);
    r.add((u * uxx).dx(), -(a + 2.0));
    r.add((ux * ux).dx(), -(a - 1.0));
    // both fermion kinetic bilinears carry 3, independent of a; this is
    // what the theta1 theta2 blade of the superfield equation produces
    r.add((xi2 * xi2x).dx(), -3.0);
    r.add((xi1 * xi1x).dx(), -3.0);
    r.add((u * xi1xi2).dx(), 6.0 * a);
    out.v = std::move(r).finish();
  }
  const SuperJet potential = v - u2 * a;  // v - a u^2
  {
    TermSum r(f.generators, caps);
    r.add(xi1.dt());
    r.add(xi1x.dx().dx());
    r.add((potential * xi1).dx(), 3.0);
    r.add((u * xi2x).dx(), -(a + 2.0));
    r.add((ux * xi2).dx(), -(a - 1.0));
    out.xi1 = std::move(r).finish();
  }
  {
    TermSum r(f.generators, caps);
    r.add(xi2.dt());
    r.add(xi2x.dx().dx());
    r.add((potential * xi2).dx(), 3.0);
    r.add((u * xi1x).dx(), a + 2.0);
    r.add((ux * xi1).dx(), a - 1.0);
    out.xi2 = std::move(r).finish();
  }
  return out;
}

Residual residual_rho(const ComponentField& f, EquationParams p, RhoSign sign, double x, double t,
                      JetCaps caps) {
  require_caps(caps);
  const double a = p.a;
  const double sg = sign == RhoSign::Plus ? 1.0 : -1.0;
  const ComponentSample s = sample_components(f, caps, x, t);
  const SuperJet rho = s.xi1 + s.xi2 * (sg * kI);
  const SuperJet ux = s.u.dx();

  TermSum r(f.generators, caps);
  r.add(rho.dt());
  r.add(rho.dx().dx().dx());
  r.add(((s.v - s.u * s.u * a) * rho).dx(), 3.0);
  r.add((s.u * rho.dx()).dx(), sg * kI * (a + 2.0));
  r.add((ux * rho).dx(), sg * kI * (a - 1.0));
  return std::move(r).finish();
}

std::array<Complex, 2> residual_bosonized(const ScalarSampler& u_s, const ScalarSampler& v_s,
                                          EquationParams p, double x, double t, JetCaps caps) {
  require_caps(caps);
  const double a = p.a;
  const Jet u = u_s(caps, x, t);
  const Jet v = v_s(caps, x, t);
  if (!(u.caps() == caps) || !(v.caps() == caps)) throw ConfigError("sampler returned wrong caps");
  const Jet ux = u.dx();
  const Jet uxx = ux.dx();

  const Jet r_u = u.dt() + (uxx - a * u * u * u + (a + 2.0) * u * v).dx();
  const Jet r_v = v.dt() + (v.dx().dx() + 3.0 * v * v - (a + 2.0) * u * uxx - (a - 1.0) * ux * ux -
                            3.0 * a * u * u * v)
                               .dx();
  return {r_u.value(), r_v.value()};
}

ThetaComponents theta_split(const SuperJet& r, int theta1, int theta2) {
  ThetaComponents c{r.without(theta1).without(theta2), d_theta(r, theta1).without(theta2),
                    d_theta(r, theta2).without(theta1), d_theta(d_theta(r, theta1), theta2)};
  return c;
}

Sampler even_sampler(GeneratorSetPtr gens, ScalarSampler f) {
  return [gens = std::move(gens), f = std::move(f)](JetCaps caps, double x, double t) {
    return SuperJet(gens, f(caps, x, t));
  };
}

Sampler odd_sampler(GeneratorSetPtr gens, int zeta, ScalarSampler f) {
  if (!gens->contains(zeta)) throw ConfigError("odd_sampler: unknown generator");
  return [gens = std::move(gens), zeta, f = std::move(f)](JetCaps caps, double x, double t) {
    return SuperJet::monomial(gens, Blade{zeta}, f(caps, x, t));
  };
}

Sampler zero_sampler(GeneratorSetPtr gens) {
  return [gens = std::move(gens)](JetCaps caps, double, double) { return SuperJet(gens, caps); };
}

Sampler dx_sampler(Sampler f, Complex c) {
  return [f = std::move(f), c](JetCaps caps, double x, double t) {
    const JetCaps wide{caps.px + 1, caps.pt};
    return (f(wide, x, t).dx() * c).truncated(caps);
  };
}

Sampler scaled_sampler(Sampler f, Complex c) {
  return [f = std::move(f), c](JetCaps caps, double x, double t) { return f(caps, x, t) * c; };
}

ScalarSampler dx_scalar(ScalarSampler f, Complex c) {
  return [f = std::move(f), c](JetCaps caps, double x, double t) {
    const JetCaps wide{caps.px + 1, caps.pt};
    return (f(wide, x, t).dx() * c).truncated(caps);
  };
}

}  // namespace skdv
