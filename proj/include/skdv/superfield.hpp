#pragma once

// N=2 superfields A = u + theta1 xi1 + theta2 xi2 + theta1 theta2 v and the
// residuals of the general-a equation
//
//   A_t = (-A_xx + (a+2) A D1 D2 A + (a-1) (D1 A)(D2 A) + a A^3)_x
//
// together with its component, rho-decoupled and bosonized forms.

#include <array>
#include <functional>

#include "skdv/superalgebra.hpp"

namespace skdv {

// Samples a field at (x, t) as a SuperJet with the requested caps, expanded
// around that point (jet part carries the x and t derivatives).
using Sampler = std::function<SuperJet(JetCaps caps, double x, double t)>;
// Purely even, generator-free field.
using ScalarSampler = std::function<Jet(JetCaps caps, double x, double t)>;

struct ComponentField {
  GeneratorSetPtr generators;
  int theta1 = 0;
  int theta2 = 1;
  Sampler u;
  Sampler xi1;
  Sampler xi2;
  Sampler v;
};

struct EquationParams {
  double a = -2.0;
};

struct ComponentSample {
  SuperJet u, xi1, xi2, v;
};

// Samples all four components and checks their declared parities.
ComponentSample sample_components(const ComponentField& f, JetCaps caps, double x, double t);

SuperJet assemble_A(const ComponentField& f, double x, double t, JetCaps caps = {});

// A residual value plus the largest magnitude among the summands it was built
// from; relative residual = |value| / (1 + scale).
struct Residual {
  SuperJet value;
  double scale = 0.0;

  // Largest |(0,0) coefficient| over blades.
  double max_abs() const;
  double relative() const { return max_abs() / (1.0 + scale); }
};

Residual residual_main(const ComponentField& f, EquationParams p, double x, double t,
                       JetCaps caps = {});

struct ComponentResiduals {
  Residual u;    // bosonic, body equation
  Residual v;    // bosonic, theta1 theta2 equation
  Residual xi1;  // fermionic
  Residual xi2;  // fermionic
};

ComponentResiduals residual_components(const ComponentField& f, EquationParams p, double x,
                                       double t, JetCaps caps = {});

enum class RhoSign { Plus, Minus };

// Decoupled fermionic equation for rho_pm = xi1 pm i xi2.
Residual residual_rho(const ComponentField& f, EquationParams p, RhoSign sign, double x, double t,
                      JetCaps caps = {});

// One-fermionic-parameter bosonized pair; both residuals are scalars.
std::array<Complex, 2> residual_bosonized(const ScalarSampler& u, const ScalarSampler& v,
                                          EquationParams p, double x, double t,
                                          JetCaps caps = {});

// r = r0 + theta1 r1 + theta2 r2 + theta1 theta2 r12 with r0..r12 free of
// theta1, theta2.
struct ThetaComponents {
  SuperJet r0, r1, r2, r12;
};

ThetaComponents theta_split(const SuperJet& r, int theta1, int theta2);

// Minimum caps the residual evaluators accept.
inline constexpr JetCaps kResidualMinCaps{3, 1};

// Sampler helpers ---------------------------------------------------------

// Wrap a scalar jet-valued function of (x, t) as an even Sampler.
Sampler even_sampler(GeneratorSetPtr gens, ScalarSampler f);
// zeta * f(x, t) for an odd generator zeta.
Sampler odd_sampler(GeneratorSetPtr gens, int zeta, ScalarSampler f);
Sampler zero_sampler(GeneratorSetPtr gens);
// c * d/dx of the sampled field, computed from one extra order of caps.
Sampler dx_sampler(Sampler f, Complex c = 1.0);
Sampler scaled_sampler(Sampler f, Complex c);
ScalarSampler dx_scalar(ScalarSampler f, Complex c = 1.0);

}  // namespace skdv
