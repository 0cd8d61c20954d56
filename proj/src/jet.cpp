#include "skdv/jet.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "skdv/errors.hpp"

namespace skdv {

namespace {

double factorial(int n) {
  double r = 1.0;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

void require_nonsingular(Complex g0, const char* op) {
  if (std::abs(g0) < kSingularEpsilon) {
    std::ostringstream msg;
    msg << op << ": body constant " << g0 << " below singularity guard";
    throw NearPoleError(msg.str(), g0);
  }
}

}  // namespace

Jet::Jet(JetCaps caps, Complex constant) : caps_(caps) {
  if (caps.px < 0 || caps.pt < 0) throw RangeError("jet caps must be non-negative");
  data_.assign(static_cast<std::size_t>((caps.px + 1) * (caps.pt + 1)), Complex{});
  data_[0] = constant;
}

Complex Jet::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i > caps_.px || j > caps_.pt) {
    std::ostringstream msg;
    msg << "jet order (" << i << "," << j << ") outside caps (" << caps_.px << "," << caps_.pt
        << ")";
    throw RangeError(msg.str());
  }
  return data_[index(i, j)];
}

Complex& Jet::at(int i, int j) {
  if (i < 0 || j < 0 || i > caps_.px || j > caps_.pt) throw RangeError("jet order outside caps");
  return data_[index(i, j)];
}

Complex Jet::derivative(int i, int j) const { return coeff(i, j) * factorial(i) * factorial(j); }

bool Jet::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Complex c) { return c == Complex{}; });
}

double Jet::max_abs() const {
  double m = 0.0;
  for (Complex c : data_) m = std::max(m, std::abs(c));
  return m;
}

Jet Jet::dx() const {
  Jet r(caps_);
  for (int i = 0; i < caps_.px; ++i)
    for (int j = 0; j <= caps_.pt; ++j) r.data_[index(i, j)] = double(i + 1) * data_[index(i + 1, j)];
  return r;
}

Jet Jet::dt() const {
  Jet r(caps_);
  for (int i = 0; i <= caps_.px; ++i)
    for (int j = 0; j < caps_.pt; ++j) r.data_[index(i, j)] = double(j + 1) * data_[index(i, j + 1)];
  return r;
}

Jet Jet::truncated(JetCaps caps) const {
  if (caps.px > caps_.px || caps.pt > caps_.pt) throw RangeError("cannot truncate to larger caps");
  Jet r(caps);
  for (int i = 0; i <= caps.px; ++i)
    for (int j = 0; j <= caps.pt; ++j) r.data_[r.index(i, j)] = data_[index(i, j)];
  return r;
}

Jet Jet::widened(JetCaps caps) const {
  if (caps.px < caps_.px || caps.pt < caps_.pt) throw RangeError("cannot widen to smaller caps");
  Jet r(caps);
  for (int i = 0; i <= caps_.px; ++i)
    for (int j = 0; j <= caps_.pt; ++j) r.data_[r.index(i, j)] = data_[index(i, j)];
  return r;
}

void Jet::check_caps(const Jet& other) const {
  if (!(caps_ == other.caps_)) throw ConfigError("jet caps mismatch");
}

Jet Jet::operator-() const {
  Jet r = *this;
  for (Complex& c : r.data_) c = -c;
  return r;
}

Jet& Jet::operator+=(const Jet& rhs) {
  check_caps(rhs);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

Jet& Jet::operator-=(const Jet& rhs) {
  check_caps(rhs);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

Jet& Jet::operator*=(const Jet& rhs) { return *this = *this * rhs; }

Jet& Jet::operator+=(Complex rhs) {
  data_[0] += rhs;
  return *this;
}

Jet& Jet::operator-=(Complex rhs) {
  data_[0] -= rhs;
  return *this;
}

Jet& Jet::operator*=(Complex rhs) {
  for (Complex& c : data_) c *= rhs;
  return *this;
}

Jet& Jet::operator/=(Complex rhs) {
  for (Complex& c : data_) c /= rhs;
  return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
  a.check_caps(b);
  const JetCaps caps = a.caps_;
  Jet r(caps);
  for (int i1 = 0; i1 <= caps.px; ++i1)
    for (int j1 = 0; j1 <= caps.pt; ++j1) {
      const Complex av = a.data_[a.index(i1, j1)];
      if (av == Complex{}) continue;
      for (int i2 = 0; i1 + i2 <= caps.px; ++i2)
        for (int j2 = 0; j1 + j2 <= caps.pt; ++j2)
          r.data_[r.index(i1 + i2, j1 + j2)] += av * b.data_[b.index(i2, j2)];
    }
  return r;
}

Jet operator/(const Jet& a, const Jet& b) { return a * inv(b); }

Jet operator/(Complex a, const Jet& b) { return inv(b) *= a; }

Jet jet_seed(JetCaps caps, Variable var, Complex value) {
  Jet r(caps, value);
  if (var == Variable::X) {
    if (caps.px >= 1) r.at(1, 0) = 1.0;
  } else {
    if (caps.pt >= 1) r.at(0, 1) = 1.0;
  }
  return r;
}

Jet compose(const Jet& g, std::span<const Complex> derivs) {
  const int order = g.caps().total_order();
  if (static_cast<int>(derivs.size()) < order + 1)
    throw RangeError("compose: not enough derivatives for jet order");
  Jet h = g;
  h.at(0, 0) = 0.0;
  Jet result(g.caps(), derivs[0]);
  Jet power(g.caps(), 1.0);
  for (int k = 1; k <= order; ++k) {
    power = power * h;
    if (power.is_zero()) break;
    result += power * (derivs[static_cast<std::size_t>(k)] / factorial(k));
  }
  return result;
}

Jet exp(const Jet& g) {
  const Complex e = std::exp(g.value());
  std::vector<Complex> d(static_cast<std::size_t>(g.caps().total_order() + 1), e);
  return compose(g, d);
}

Jet log(const Jet& g) {
  const Complex g0 = g.value();
  require_nonsingular(g0, "log");
  const int order = g.caps().total_order();
  std::vector<Complex> d(static_cast<std::size_t>(order + 1));
  d[0] = std::log(g0);
  Complex inv_pow = 1.0 / g0;
  for (int k = 1; k <= order; ++k) {
    // d^k/dg^k log g = (-1)^(k-1) (k-1)! / g^k
    d[static_cast<std::size_t>(k)] = ((k - 1) % 2 == 0 ? 1.0 : -1.0) * factorial(k - 1) * inv_pow;
    inv_pow /= g0;
  }
  return compose(g, d);
}

Jet inv(const Jet& g) {
  const Complex g0 = g.value();
  require_nonsingular(g0, "inverse");
  const int order = g.caps().total_order();
  std::vector<Complex> d(static_cast<std::size_t>(order + 1));
  Complex inv_pow = 1.0 / g0;
  for (int k = 0; k <= order; ++k) {
    d[static_cast<std::size_t>(k)] = (k % 2 == 0 ? 1.0 : -1.0) * factorial(k) * inv_pow;
    inv_pow /= g0;
  }
  return compose(g, d);
}

Jet pow(const Jet& g, double nu) {
  const Complex g0 = g.value();
  const int order = g.caps().total_order();
  std::vector<Complex> d(static_cast<std::size_t>(order + 1));
  if (nu == std::floor(nu) && nu >= 0.0) return pow(g, static_cast<int>(nu));
  require_nonsingular(g0, "pow");
  double falling = 1.0;
  for (int k = 0; k <= order; ++k) {
    d[static_cast<std::size_t>(k)] = falling * std::pow(g0, nu - k);
    falling *= (nu - k);
  }
  return compose(g, d);
}

Jet pow(const Jet& g, int n) {
  if (n < 0) return inv(pow(g, -n));
  Jet result(g.caps(), 1.0);
  Jet base = g;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Jet sqrt(const Jet& g) { return pow(g, 0.5); }

}  // namespace skdv
