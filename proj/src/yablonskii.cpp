#include "skdv/yablonskii.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "skdv/errors.hpp"

namespace skdv {

namespace {

const Complex kI{0.0, 1.0};

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(Rational c, int degree) {
  if (degree < 0) throw RangeError("negative monomial degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree + 1));
  v.back() = std::move(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& Polynomial::leading() const {
  if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Polynomial Polynomial::derivative() const {
  if (degree() < 1) return Polynomial{};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Polynomial(std::move(d));
}

Rational Polynomial::eval(const Rational& z) const {
  Rational r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * z + *it;
  return r;
}

Complex Polynomial::eval(Complex z) const {
  Complex r = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * z + to_double(*it);
  return r;
}

Jet Polynomial::eval(const Jet& z) const {
  Jet r(z.caps());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * z + Complex(to_double(*it));
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (Rational& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial& Polynomial::operator*=(const Rational& rhs) {
  for (Rational& c : coeffs_) c *= rhs;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial{};
  std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(r));
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    if (k == 0) {
      out << mag.str();
    } else {
      if (!unit) out << mag.str() << " ";
      out << var;
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

DivMod divmod(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = num.coeffs();
  const int dd = den.degree();
  const int nd = num.degree();
  if (nd < dd) return {Polynomial{}, num};
  std::vector<Rational> quot(static_cast<std::size_t>(nd - dd + 1));
  const Rational& lead = den.leading();
  for (int k = nd - dd; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + dd)] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= q * den.coeff(j);
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

ScaledPoly yv_next(const ScaledPoly& qn, const ScaledPoly& qn_minus_1) {
  const Polynomial& p = qn.p;
  const Polynomial dp = p.derivative();
  const Polynomial rhs = Polynomial::z() * p * p - Rational(12) * (p * dp.derivative() - dp * dp);
  DivMod d = divmod(rhs, qn_minus_1.p);
  if (!d.remainder.is_zero())
    throw IntegrityError("Yablonskii-Vorob'ev recurrence: division left a nonzero remainder");
  return ScaledPoly{2 * qn.k - qn_minus_1.k - 1, std::move(d.quotient)};
}

std::vector<ScaledPoly> yv_sequence(int n_max) {
  if (n_max < 0) throw RangeError("yv_sequence: negative index");
  std::vector<ScaledPoly> q;
  q.push_back(ScaledPoly{-1, Polynomial::constant(1)});
  if (n_max >= 1) q.push_back(ScaledPoly{0, Polynomial::z()});
  for (int n = 1; n < n_max; ++n)
    q.push_back(yv_next(q[static_cast<std::size_t>(n)], q[static_cast<std::size_t>(n - 1)]));
  return q;
}

ScaledPoly yv(int n) { return yv_sequence(n).back(); }

std::string yv_text(int n, const ScaledPoly& q) {
  std::ostringstream out;
  out << "Q" << n << " = 3^(" << q.k << "/3) * (" << q.p.to_string() << ")";
  return out.str();
}

// RationalFn -----------------------------------------------------------------

namespace {

// Divide through by the leading denominator coefficient.
RationalFn normalized(RationalFn f) {
  if (f.den.is_zero()) throw DomainError("rational function with zero denominator");
  const Rational lead = f.den.leading();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    f.num *= inv;
    f.den *= inv;
  }
  return f;
}

}  // namespace

Complex RationalFn::eval(Complex z) const {
  const Complex d = den.eval(z);
  if (std::abs(d) < kSingularEpsilon) throw NearPoleError("rational function evaluated at a pole", d);
  const Complex v = num.eval(z) / d;
  return imaginary ? kI * v : v;
}

Jet RationalFn::eval(const Jet& z) const {
  const Jet v = num.eval(z) / den.eval(z);
  return imaginary ? v * kI : v;
}

std::pair<Rational, Rational> RationalFn::eval_exact(const Rational& z) const {
  const Rational d = den.eval(z);
  if (d == 0) throw DomainError("rational function evaluated at a pole");
  const Rational v = num.eval(z) / d;
  return imaginary ? std::make_pair(Rational(0), v) : std::make_pair(v, Rational(0));
}

RationalFn RationalFn::derivative() const {
  return normalized(
      RationalFn{num.derivative() * den - num * den.derivative(), den * den, imaginary});
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  if (a.num.is_zero()) return b;
  if (b.num.is_zero()) return a;
  if (a.imaginary != b.imaginary)
    throw UnsupportedError("sum of real and imaginary rational functions is not representable");
  if (a.den == b.den) return normalized(RationalFn{a.num + b.num, a.den, a.imaginary});
  return normalized(RationalFn{a.num * b.den + b.num * a.den, a.den * b.den, a.imaginary});
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) {
  return a + RationalFn{-b.num, b.den, b.imaginary};
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  Polynomial num = a.num * b.num;
  if (a.imaginary && b.imaginary) num = -num;  // i * i
  return normalized(RationalFn{std::move(num), a.den * b.den, a.imaginary != b.imaginary});
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
  if (b.num.is_zero()) throw DomainError("division by the zero rational function");
  Polynomial num = a.num * b.den;
  if (!a.imaginary && b.imaginary) num = -num;  // 1 / i = -i
  return normalized(RationalFn{std::move(num), a.den * b.num, a.imaginary != b.imaginary});
}

RationalFn operator*(const Rational& c, const RationalFn& f) {
  return RationalFn{c * f.num, f.den, f.imaginary};
}

RationalFn rational_fn(Polynomial p) { return RationalFn{std::move(p), Polynomial::constant(1), false}; }

RationalFn imaginary_unit() {
  return RationalFn{Polynomial::constant(1), Polynomial::constant(1), true};
}

bool same_function(const RationalFn& a, const RationalFn& b) {
  if (a.num.is_zero() || b.num.is_zero()) return a.num.is_zero() && b.num.is_zero();
  if (a.imaginary != b.imaginary) return false;
  return a.num * b.den == b.num * a.den;
}

RationalFn w_n(int n, Branch branch) {
  if (n < 0) throw RangeError("w_n: negative index");
  const std::vector<ScaledPoly> q = yv_sequence(n + 1);
  const Polynomial& pn = q[static_cast<std::size_t>(n)].p;
  const Polynomial& pn1 = q[static_cast<std::size_t>(n + 1)].p;
  // d/dz log(Q_n / Q_{n+1}); the 3^(k/3) scales cancel.
  Polynomial num = pn.derivative() * pn1 - pn * pn1.derivative();
  if (branch == Branch::Minus) num = -num;
  return normalized(RationalFn{std::move(num), pn * pn1, true});
}

Complex c2_n(int n, Branch branch) {
  const double mag = (n + 1) / 3.0;
  return branch == Branch::Plus ? Complex(0.0, -mag) : Complex(0.0, mag);
}

RationalFn w_cal(int n, Branch branch, WForm form) {
  const RationalFn z = rational_fn(Polynomial::z());
  const RationalFn w = w_n(n, branch);
  if (form == WForm::Direct) {
    return Rational(-1, 3) * z + Rational(6) * (w * w) +
           Rational(6) * (imaginary_unit() * w.derivative());
  }
  const RationalFn pair = w + w_n(n + 1, branch);
  const RationalFn tail = Rational(2 * n + 3) * (imaginary_unit() / pair);
  if (branch == Branch::Plus) return Rational(2, 3) * z + tail;
  return Rational(-4, 3) * z + Rational(12) * (w * w) + tail;
}

Complex u_n_lift(int n, double x, double t) {
  constexpr int kCached = 12;
  if (n < 0) throw RangeError("u_n_lift: negative index");
  if (!(t > 0.0)) throw DomainError("u_n_lift: t must be positive");
  static const std::array<RationalFn, kCached + 1> cache = [] {
    std::array<RationalFn, kCached + 1> fns;
    for (int k = 0; k <= kCached; ++k) fns[static_cast<std::size_t>(k)] = w_n(k, Branch::Minus);
    return fns;
  }();
  const RationalFn w = n <= kCached ? cache[static_cast<std::size_t>(n)] : w_n(n, Branch::Minus);
  const double s = std::cbrt(1.0 / t);
  const Complex z = s * x;
  const Complex d = w.den.eval(z);
  if (std::abs(d) < 1e-10 * std::max(1.0, std::pow(std::abs(z), w.den.degree())))
    throw NearPoleError("u_n_lift: sample too close to a pole", d).at(x, t);
  return s * w.eval(z);
}

}  // namespace skdv
