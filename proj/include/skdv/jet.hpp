#pragma once

// Truncated bivariate Taylor jets in (x, t) with complex coefficients.
//
// A Jet with caps (PX, PT) stores c(i, j) = d^i/dx^i d^j/dt^j f / (i! j!) for
// 0 <= i <= PX, 0 <= j <= PT. Arithmetic is exact truncated-series
// arithmetic; derivatives shift coefficients and zero-fill the top row, so
// a quantity differentiated k times is only trustworthy up to order PX - k.

#include <complex>
#include <span>
#include <vector>

namespace skdv {

using Complex = std::complex<double>;

enum class Variable { X, T };

struct JetCaps {
  int px = 4;
  int pt = 1;

  friend bool operator==(const JetCaps&, const JetCaps&) = default;
  int total_order() const { return px + pt; }
};

class Jet {
 public:
  Jet() : Jet(JetCaps{}) {}
  explicit Jet(JetCaps caps, Complex constant = 0.0);

  static Jet constant(JetCaps caps, Complex value) { return Jet(caps, value); }

  JetCaps caps() const { return caps_; }

  // Normalized Taylor coefficient; throws RangeError outside the caps.
  Complex coeff(int i, int j = 0) const;
  Complex& at(int i, int j = 0);
  // True partial derivative d^i/dx^i d^j/dt^j at the expansion point.
  Complex derivative(int i, int j = 0) const;
  Complex value() const { return data_[0]; }

  bool is_zero() const;
  double max_abs() const;

  Jet dx() const;
  Jet dt() const;
  Jet truncated(JetCaps caps) const;
  // Same coefficients embedded in larger caps (new slots zero).
  Jet widened(JetCaps caps) const;

  Jet operator-() const;
  Jet& operator+=(const Jet& rhs);
  Jet& operator-=(const Jet& rhs);
  Jet& operator*=(const Jet& rhs);
  Jet& operator+=(Complex rhs);
  Jet& operator-=(Complex rhs);
  Jet& operator*=(Complex rhs);
  Jet& operator/=(Complex rhs);

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);
  friend Jet operator+(Jet a, Complex b) { return a += b; }
  friend Jet operator+(Complex a, Jet b) { return b += a; }
  friend Jet operator-(Jet a, Complex b) { return a -= b; }
  friend Jet operator-(Complex a, const Jet& b) { return (-b) += a; }
  friend Jet operator*(Jet a, Complex b) { return a *= b; }
  friend Jet operator*(Complex a, Jet b) { return b *= a; }
  friend Jet operator/(Jet a, Complex b) { return a /= b; }
  friend Jet operator/(Complex a, const Jet& b);

  friend bool operator==(const Jet&, const Jet&) = default;

 private:
  int index(int i, int j) const { return i * (caps_.pt + 1) + j; }
  void check_caps(const Jet& other) const;

  JetCaps caps_;
  std::vector<Complex> data_;
};

// Jet of the independent variable: constant `value`, unit slope in `var`.
Jet jet_seed(JetCaps caps, Variable var, Complex value);

// f(g) given derivs[k] = f^(k)(g.value()) for k = 0 .. caps.total_order().
Jet compose(const Jet& g, std::span<const Complex> derivs);

Jet exp(const Jet& g);
// Principal branch on the constant term.
Jet log(const Jet& g);
Jet inv(const Jet& g);
// Principal branch g^nu.
Jet pow(const Jet& g, double nu);
Jet pow(const Jet& g, int n);
Jet sqrt(const Jet& g);

// Singular-body guard shared by every inversion and logarithm.
inline constexpr double kSingularEpsilon = 1e-12;

}  // namespace skdv
