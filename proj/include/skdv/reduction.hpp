#pragma once

// Reduced ODEs from the travelling-wave (y = x + c t) and similarity
// (z = t^(-1/3) x) reductions, their closed-form solutions, and lifts of
// those solutions back to (x, t) component fields.
//
// Single-variable jets reuse the x slot of Jet for y or z.

#include "skdv/superfield.hpp"

namespace skdv {

struct TravellingParams {
  double c = -1.0;
  Complex c1 = 0.0;
  Complex k1 = 0.0;
};

struct SimilarityParams {
  Complex c2 = 0.0;
  Complex k2 = 0.0;
};

// u_yy - a u^3 + i(a+2) u u_y + c u + c1
Complex residual_trav_u(const Jet& u, double a, double c, Complex c1);
// rho_yy - i(a+2) u rho_y + (c - 3a u^2 + i(4-a) u_y) rho + k1
Complex residual_trav_rho(const Jet& rho, const Jet& u, double a, double c, Complex k1);
// Same pair with c replaced by -z/3; z is the expansion point of the jets.
Complex residual_sim_w(const Jet& w, Complex z, double a, Complex c2);
Complex residual_sim_phi(const Jet& phi, const Jet& w, Complex z, double a, Complex k2);

// Homogeneous fermionic operators used for the second independent solutions:
//   xi'' + (6 u^2 - 1) xi           (travelling, c = -1)
//   phi'' + (6 w^2 - z/3) phi       (similarity)
Complex residual_trav_homogeneous(const Jet& xi, const Jet& u);
Complex residual_sim_homogeneous(const Jet& phi, const Jet& w, Complex z);

Jet soliton_u(const Jet& y);
// sech^3 y (sinh y + (i/2)(1 - sinh^2 y))
Jet soliton_rho0(const Jet& y);

// 2i (z^3 - 6) / (z (z^3 + 12)), the particular similarity solution with c2 = 2i/3.
Jet similarity_w1(const Jet& z);
// sqrt(z) I_{-7/3}(2 z^(3/2) / (3 sqrt 3)); z > 0.
Jet bessel_phi(const Jet& z);
inline constexpr double kBesselPhiOrder = -7.0 / 3.0;

// sech y (-5 + cosh 2y + 6 y tanh y)
Jet second_fermionic_travelling(const Jet& y);
// sqrt(z) I_{5/3}(2 z^(3/2) / (3 sqrt 3)); z > 0.
Jet second_fermionic_similarity(const Jet& z);

// (x, t) lifts. Generator names: "theta1", "theta2", "zeta".
ComponentField lift_travelling();
ComponentField lift_similarity();

// Root-free bosonic similarity fields, valid for any t away from the poles.
Jet similarity_u(JetCaps caps, double x, double t);
Jet similarity_v(JetCaps caps, double x, double t);
// |x| < 0.1 or |x^3 + 12 t| < 0.1.
bool near_similarity_pole(double x, double t);
inline constexpr double kPoleExclusionRadius = 0.1;

// Jet of y in a single variable with caps (order, 0).
Jet line_seed(double y, int order = 4);
Jet line_seed(Complex y, int order = 4);

}  // namespace skdv
