#include "skdv/superalgebra.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "skdv/errors.hpp"

namespace skdv {

GeneratorSet::GeneratorSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (size() > kMaxGenerators) throw ConfigError("too many odd generators");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw ConfigError("duplicate generator name: " + names_[i]);
}

const std::string& GeneratorSet::name(int index) const {
  if (!contains(index)) throw ConfigError("generator index out of range");
  return names_[static_cast<std::size_t>(index)];
}

int GeneratorSet::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw ConfigError("unknown generator: " + name);
  return static_cast<int>(it - names_.begin());
}

Blade::Blade(std::initializer_list<int> gens) {
  *this = from_indices(std::span<const int>(gens.begin(), gens.size()));
}

Blade Blade::from_indices(std::span<const int> gens) {
  std::uint32_t mask = 0;
  int prev = -1;
  for (int g : gens) {
    if (g <= prev) throw ConfigError("blade indices must be strictly increasing");
    if (g >= GeneratorSet::kMaxGenerators) throw ConfigError("blade index out of range");
    mask |= (1u << g);
    prev = g;
  }
  return Blade(mask, 0);
}

std::vector<int> Blade::gens() const {
  std::vector<int> out;
  for (int g = 0; g < 32; ++g)
    if (contains(g)) out.push_back(g);
  return out;
}

int Blade::grade() const { return std::popcount(mask_); }

std::strong_ordering operator<=>(const Blade& a, const Blade& b) {
  if (auto c = a.grade() <=> b.grade(); c != 0) return c;
  // Lexicographic on the sorted index list == reversed bit order.
  for (int g = 0; g < 32; ++g) {
    const bool ia = a.contains(g), ib = b.contains(g);
    if (ia != ib) return ia ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

int blade_product_sign(const Blade& a, const Blade& b) {
  if (a.mask() & b.mask()) return 0;
  // Each generator of b must move left past every generator of a with a
  // larger index.
  int swaps = 0;
  for (int g : b.gens()) swaps += std::popcount(a.mask() >> (g + 1));
  return swaps % 2 == 0 ? 1 : -1;
}

std::string blade_name(const GeneratorSet& gens, const Blade& blade) {
  if (blade.empty()) return "1";
  std::string out;
  for (int g : blade.gens()) {
    if (!out.empty()) out += "*";
    out += gens.name(g);
  }
  return out;
}

SuperJet::SuperJet(GeneratorSetPtr gens, JetCaps caps) : gens_(std::move(gens)), caps_(caps) {
  if (!gens_) throw ConfigError("SuperJet requires a generator set");
}

SuperJet::SuperJet(GeneratorSetPtr gens, const Jet& body) : SuperJet(std::move(gens), body.caps()) {
  if (!body.is_zero()) terms_.emplace(Blade{}, body);
}

SuperJet SuperJet::scalar(GeneratorSetPtr gens, JetCaps caps, Complex value) {
  return SuperJet(std::move(gens), Jet(caps, value));
}

SuperJet SuperJet::generator(GeneratorSetPtr gens, JetCaps caps, int index) {
  if (!gens->contains(index)) throw ConfigError("unknown generator index");
  return monomial(std::move(gens), Blade{index}, Jet(caps, 1.0));
}

SuperJet SuperJet::monomial(GeneratorSetPtr gens, const Blade& blade, const Jet& coeff) {
  SuperJet r(std::move(gens), coeff.caps());
  for (int g : blade.gens())
    if (!r.gens_->contains(g)) throw ConfigError("blade uses generator outside the set");
  if (!coeff.is_zero()) r.terms_.emplace(blade, coeff);
  return r;
}

Jet SuperJet::term(const Blade& blade) const {
  auto it = terms_.find(blade);
  return it == terms_.end() ? Jet(caps_) : it->second;
}

SuperJet SuperJet::soul() const {
  SuperJet r = *this;
  r.terms_.erase(Blade{});
  return r;
}

Parity SuperJet::parity() const {
  bool even = false, odd = false;
  for (const auto& [blade, jet] : terms_) (blade.parity() == 0 ? even : odd) = true;
  if (even && odd) return Parity::Mixed;
  if (even) return Parity::Even;
  if (odd) return Parity::Odd;
  return Parity::Zero;
}

bool SuperJet::is_even() const {
  const Parity p = parity();
  return p == Parity::Even || p == Parity::Zero;
}

bool SuperJet::is_odd() const {
  const Parity p = parity();
  return p == Parity::Odd || p == Parity::Zero;
}

double SuperJet::max_abs() const {
  double m = 0.0;
  for (const auto& [blade, jet] : terms_) m = std::max(m, jet.max_abs());
  return m;
}

namespace {

template <class F>
SuperJet map_terms(const SuperJet& a, JetCaps caps, F&& f) {
  SuperJet r(a.generators(), caps);
  for (const auto& [blade, jet] : a.terms()) r += SuperJet::monomial(a.generators(), blade, f(jet));
  return r;
}

}  // namespace

SuperJet SuperJet::dx() const {
  return map_terms(*this, caps_, [](const Jet& j) { return j.dx(); });
}

SuperJet SuperJet::dt() const {
  return map_terms(*this, caps_, [](const Jet& j) { return j.dt(); });
}

SuperJet SuperJet::truncated(JetCaps caps) const {
  return map_terms(*this, caps, [caps](const Jet& j) { return j.truncated(caps); });
}

SuperJet SuperJet::widened(JetCaps caps) const {
  return map_terms(*this, caps, [caps](const Jet& j) { return j.widened(caps); });
}

SuperJet SuperJet::without(int gen) const {
  SuperJet r = *this;
  std::erase_if(r.terms_, [gen](const auto& kv) { return kv.first.contains(gen); });
  return r;
}

void SuperJet::check_compatible(const SuperJet& other) const {
  if (gens_ != other.gens_) throw ConfigError("SuperJet generator sets differ");
  if (!(caps_ == other.caps_)) throw ConfigError("SuperJet jet caps differ");
}

void SuperJet::prune() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

SuperJet SuperJet::operator-() const {
  SuperJet r = *this;
  for (auto& [blade, jet] : r.terms_) jet = -jet;
  return r;
}

SuperJet& SuperJet::operator+=(const SuperJet& rhs) {
  check_compatible(rhs);
  for (const auto& [blade, jet] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(blade, jet);
    if (!inserted) it->second += jet;
  }
  prune();
  return *this;
}

SuperJet& SuperJet::operator-=(const SuperJet& rhs) { return *this += -rhs; }

SuperJet& SuperJet::operator*=(Complex rhs) {
  for (auto& [blade, jet] : terms_) jet *= rhs;
  prune();
  return *this;
}

SuperJet& SuperJet::operator*=(const Jet& rhs) {
  if (!(rhs.caps() == caps_)) throw ConfigError("SuperJet jet caps differ");
  for (auto& [blade, jet] : terms_) jet = jet * rhs;
  prune();
  return *this;
}

SuperJet operator+(SuperJet a, Complex b) {
  return a += SuperJet::scalar(a.gens_, a.caps_, b);
}

SuperJet operator*(const SuperJet& a, const SuperJet& b) { return gmul(a, b); }

bool operator==(const SuperJet& a, const SuperJet& b) {
  return a.gens_ == b.gens_ && a.caps_ == b.caps_ && a.terms_ == b.terms_;
}

SuperJet gmul(const SuperJet& a, const SuperJet& b) {
  a.check_compatible(b);
  SuperJet r(a.gens_, a.caps_);
  for (const auto& [ba, ja] : a.terms_)
    for (const auto& [bb, jb] : b.terms_) {
      const int sign = blade_product_sign(ba, bb);
      if (sign == 0) continue;
      const Blade merged = Blade::from_mask(ba.mask() | bb.mask());
      Jet prod = ja * jb;
      if (sign < 0) prod = -prod;
      auto [it, inserted] = r.terms_.try_emplace(merged, prod);
      if (!inserted) it->second += prod;
    }
  r.prune();
  return r;
}

namespace {

// Sum_k coeffs[k] * s^k for nilpotent s; stops when the power vanishes.
SuperJet nilpotent_series(const SuperJet& s, const std::vector<Complex>& coeffs) {
  SuperJet result = SuperJet::scalar(s.generators(), s.caps(), coeffs.at(0));
  SuperJet power = SuperJet::scalar(s.generators(), s.caps(), 1.0);
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    power = gmul(power, s);
    if (power.is_zero()) break;
    result += power * coeffs[k];
  }
  return result;
}

std::size_t series_length(const SuperJet& a) {
  // s^k = 0 once k exceeds the number of generators.
  return static_cast<std::size_t>(a.generators()->size() + 1);
}

}  // namespace

SuperJet sj_exp(const SuperJet& a) {
  if (!a.is_even()) throw ParityError("sj_exp: argument must be even");
  const Jet body = a.body();
  std::vector<Complex> coeffs(series_length(a));
  double fact = 1.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k > 0) fact *= static_cast<double>(k);
    coeffs[k] = 1.0 / fact;
  }
  return nilpotent_series(a.soul(), coeffs) * exp(body);
}

SuperJet sj_inv(const SuperJet& a) {
  const Jet body = a.body();
  const Jet body_inv = inv(body);  // throws NearPoleError
  // (b + s)^-1 = b^-1 sum_k (-s b^-1)^k
  const SuperJet ratio = a.soul() * body_inv;
  std::vector<Complex> coeffs(series_length(a));
  for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] = (k % 2 == 0) ? 1.0 : -1.0;
  return nilpotent_series(ratio, coeffs) * body_inv;
}

SuperJet sj_log(const SuperJet& a) {
  if (!a.is_even()) throw ParityError("sj_log: argument must be even");
  const Jet body = a.body();
  const Jet log_body = log(body);  // throws NearPoleError
  const SuperJet ratio = a.soul() * inv(body);
  std::vector<Complex> coeffs(series_length(a));
  coeffs[0] = 0.0;
  for (std::size_t k = 1; k < coeffs.size(); ++k)
    coeffs[k] = (k % 2 == 1 ? 1.0 : -1.0) / static_cast<double>(k);
  return nilpotent_series(ratio, coeffs) + SuperJet(a.generators(), log_body);
}

SuperJet d_theta(const SuperJet& a, int gen) {
  if (!a.generators()->contains(gen)) throw ConfigError("d_theta: unknown generator");
  SuperJet r(a.generators(), a.caps());
  const std::uint32_t below = (1u << gen) - 1u;
  for (const auto& [blade, jet] : a.terms()) {
    if (!blade.contains(gen)) continue;
    const int passed = std::popcount(blade.mask() & below);
    const Blade rest = Blade::from_mask(blade.mask() & ~(1u << gen));
    r += SuperJet::monomial(a.generators(), rest, passed % 2 == 0 ? jet : -jet);
  }
  return r;
}

SuperJet superderivative(const SuperJet& a, int gen) {
  const SuperJet theta = SuperJet::generator(a.generators(), a.caps(), gen);
  return gmul(theta, a.dx()) + d_theta(a, gen);
}

Complex extract(const SuperJet& a, const Blade& blade, int i, int j) {
  const JetCaps caps = a.caps();
  if (i < 0 || j < 0 || i > caps.px || j > caps.pt) throw RangeError("extract: order outside caps");
  return a.term(blade).derivative(i, j);
}

}  // namespace skdv
