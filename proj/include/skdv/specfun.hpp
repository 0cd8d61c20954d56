#pragma once

// Special functions on jets. All evaluators are deterministic series or
// compositions; no asymptotic branches.

#include "skdv/jet.hpp"

namespace skdv {

struct SeriesSpec {
  int max_terms = 60;
  double tail_tolerance = 1e-16;  // relative
};

// Lanczos (g = 7, 9 coefficients) with reflection below 1/2.
// Throws DomainError at nonpositive integers.
double gamma(double x);

// Modified Bessel function of the first kind, I_nu(x), summed term-wise on
// the jet. Terms whose Gamma argument is a nonpositive integer are exact
// zeros and skipped. Requires Re(x.value()) > 0.
Jet bessel_I(double nu, const Jet& x, SeriesSpec spec = {});
double bessel_I(double nu, double x, SeriesSpec spec = {});

// Airy Ai by its Maclaurin series; |s.value()| <= 8.
Jet airy_Ai(const Jet& s, SeriesSpec spec = {});
inline constexpr double kAiryWindow = 8.0;

Jet sinh(const Jet& g);
Jet cosh(const Jet& g);
Jet tanh(const Jet& g);
Jet sech(const Jet& g);

}  // namespace skdv
