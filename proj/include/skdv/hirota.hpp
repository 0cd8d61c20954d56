#pragma once

// Super Hirota bilinear form of the a = -2 equation,
//
//   (D_t + D_x^3)(tau1 . tau2) = 0,    SD_x(tau1 . tau2) = 0,
//
// tau-function constructors (N-soliton and Yablonskii-Vorob'ev rational),
// and the extraction of component fields from a tau pair through
// U^b = -i log(tau1 / tau2).

#include <variant>
#include <vector>

#include "skdv/superfield.hpp"

namespace skdv {

struct Soliton {
  Complex kappa;
  Complex amplitude;
};

// Wavenumbers kappa_i, amplitudes a_i. Odd parameters are zeta_i =
// kappa_i * zeta_hat for one master generator zeta_hat, which realizes the
// constraint kappa_i zeta_j = kappa_j zeta_i.
struct SolitonSpec {
  std::vector<Soliton> solitons;

  // Throws ConstructionError unless 1 <= N <= kMaxSolitons, all kappa_i and
  // a_i nonzero, kappa_i pairwise distinct and kappa_i + kappa_j != 0.
  void validate() const;
};

inline constexpr int kMaxSolitons = 6;

struct RationalProvenance {
  int n = 0;
};

struct TauPair {
  GeneratorSetPtr generators;
  int theta1 = 0;
  int theta2 = 1;
  Sampler tau1;
  Sampler tau2;
  std::variant<SolitonSpec, RationalProvenance> provenance;
};

// SD_x^n(f . g) for even f, g sampled at the same point:
//   sum_k (-1)^(n-k) C(n,k) [ (D dx^k f)(dx^(n-k) g) - (dx^k f)(D dx^(n-k) g) ]
// where D is the superderivative in `theta`. Needs caps.px >= n + 1.
SuperJet super_sd(int n, const SuperJet& f, const SuperJet& g, int theta);
SuperJet super_sd(int n, const Sampler& f, const Sampler& g, int theta, double x, double t,
                  JetCaps caps = {});

// c * D_x^dx D_t^dt
struct BilinearTerm {
  Complex coeff;
  int dx = 0;
  int dt = 0;
};
using BilinearPolynomial = std::vector<BilinearTerm>;

// D_t + D_x^3
BilinearPolynomial mkdv_bilinear_operator();

// P(D_x, D_t)(f . g) by the signed Leibniz expansion.
SuperJet classical_p(const BilinearPolynomial& poly, const SuperJet& f, const SuperJet& g);
SuperJet classical_p(const BilinearPolynomial& poly, const Sampler& f, const Sampler& g, double x,
                     double t, JetCaps caps = {});

// ((k_i - k_j) / (k_i + k_j))^2
Complex interaction_coefficient(Complex kappa_i, Complex kappa_j);

// Generators "theta1", "theta2", "zeta_hat";
// tau1 = sum_mu prod a_i^mu_i prod_{i<j} A_ij^(mu_i mu_j) exp(sum mu_i Psi_i),
// tau2 the same with a_i -> -a_i, Psi_i = k_i x - k_i^3 t + theta1 k_i zeta_hat.
TauPair nsoliton_taus(const SolitonSpec& spec);

// Generators "theta1", "theta2", "zeta";
// tau1 = t^(n(n+1)/6) Q_n(z~), tau2 = t^((n+1)(n+2)/6) Q_{n+1}(z~),
// z~ = t^(-1/3) (x + theta1 zeta). Samplers throw DomainError for t <= 0.
TauPair rational_taus(int n);

struct BilinearResidual {
  Residual mkdv;  // (D_t + D_x^3)(tau1 . tau2)
  Residual susy;  // SD_x(tau1 . tau2)
};

BilinearResidual bilinear_residual(const TauPair& tp, double x, double t, JetCaps caps = {});

struct HirotaFields {
  Sampler u_b;    // u + theta1 xi1 = d/dx U^b
  Sampler eta_f;  // i D1 U^b
  ComponentField field;
};

// u^b = -i (tau1_x / tau1 - tau2_x / tau2); xi2 = i xi1, v = -i u_x.
HirotaFields hirota_fields(const TauPair& tp);
ComponentField fields_from_taus(const TauPair& tp);

// Closed-form two-soliton profile for k1 = 2 k2 = 1, a1 = a2 = i. Its overall
// sign is opposite to fields_from_taus for the same parameters.
// Only which == 2 exists; anything else throws UnsupportedError.
Complex closed_soliton_u(int which, double x, double t);

}  // namespace skdv
