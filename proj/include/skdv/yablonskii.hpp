#pragma once

// Exact Yablonskii-Vorob'ev polynomials for the similarity hierarchy,
//
//   3^(1/3) Q_{n+1} Q_{n-1} = z Q_n^2 - 12 (Q_n Q_n'' - Q_n'^2),
//   Q_0 = 3^(-1/3),  Q_1 = z,
//
// and the rational solutions w_n^pm and potentials W_n^pm built from them.
// Everything here is exact; the 3^(1/3) factors are tracked as integer
// exponents and never evaluated.

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "skdv/jet.hpp"

namespace skdv {

using Rational = boost::multiprecision::cpp_rational;

class Polynomial {
 public:
  Polynomial() = default;
  // Ascending coefficients; trailing zeros are trimmed.
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial monomial(Rational c, int degree);
  static Polynomial constant(Rational c) { return monomial(std::move(c), 0); }
  static Polynomial z() { return monomial(1, 1); }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;
  const Rational& leading() const;

  Polynomial derivative() const;
  Rational eval(const Rational& z) const;
  Complex eval(Complex z) const;
  Jet eval(const Jet& z) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& b) { return a *= b; }
  friend Polynomial operator*(const Rational& a, Polynomial b) { return b *= a; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // Descending terms, e.g. "z^6 + 60 z^3 - 720".
  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

DivMod divmod(const Polynomial& num, const Polynomial& den);

// The object 3^(k/3) * p(z).
struct ScaledPoly {
  int k = 0;
  Polynomial p;

  friend bool operator==(const ScaledPoly&, const ScaledPoly&) = default;
};

// Q_{n+1} from (Q_n, Q_{n-1}); throws IntegrityError on a nonzero remainder.
ScaledPoly yv_next(const ScaledPoly& qn, const ScaledPoly& qn_minus_1);
// Q_0 .. Q_{n_max}.
std::vector<ScaledPoly> yv_sequence(int n_max);
ScaledPoly yv(int n);

// "Q<n> = 3^(<k>/3) * (<p>)"
std::string yv_text(int n, const ScaledPoly& q);

enum class Branch { Plus, Minus };

// numerator / denominator, optionally times i.
struct RationalFn {
  Polynomial num;
  Polynomial den;
  bool imaginary = false;

  Complex eval(Complex z) const;
  Jet eval(const Jet& z) const;
  // Exact value at a rational point as (real part, imaginary part).
  std::pair<Rational, Rational> eval_exact(const Rational& z) const;

  RationalFn derivative() const;
};

RationalFn operator+(const RationalFn& a, const RationalFn& b);
RationalFn operator-(const RationalFn& a, const RationalFn& b);
RationalFn operator*(const RationalFn& a, const RationalFn& b);
RationalFn operator/(const RationalFn& a, const RationalFn& b);
RationalFn operator*(const Rational& c, const RationalFn& f);
RationalFn rational_fn(Polynomial p);
RationalFn imaginary_unit();

// Exact identity test by cross-multiplication of polynomials.
bool same_function(const RationalFn& a, const RationalFn& b);

// w_n^pm(z) = pm i d/dz log(Q_n / Q_{n+1}).
RationalFn w_n(int n, Branch branch);
// Integration constant paired with w_n^pm: c2 = -+ i (n+1)/3.
Complex c2_n(int n, Branch branch);

enum class WForm { Direct, Recombined };
// W_n^pm = -z/3 + 6 (w_n^pm)^2 + 6 i (w_n^pm)'    (direct), or the
// recombined expressions in terms of w_n^pm + w_{n+1}^pm.
RationalFn w_cal(int n, Branch branch, WForm form);

// u_n(x, t) = t^(-1/3) w_n(t^(-1/3) x) with w_n = w_n^- (the orientation
// log(Q_{n+1}/Q_n)); t > 0, throws NearPoleError near a pole.
Complex u_n_lift(int n, double x, double t);

}  // namespace skdv
