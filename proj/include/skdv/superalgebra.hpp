#pragma once

// Finite Grassmann algebra over a declared set of odd generators whose blade
// coefficients are truncated (x, t) jets.
//
// Conventions:
//  * blades are stored in canonical (increasing generator index) order;
//  * the product of two blades is the sorted concatenation with sign
//    (-1)^(transpositions), and vanishes when they share a generator;
//  * d_theta is the LEFT derivative: d_theta(g * w) = w when w omits g, and
//    moving d_theta past k lower-indexed generators costs (-1)^k.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "skdv/jet.hpp"

namespace skdv {

class GeneratorSet {
 public:
  static constexpr int kMaxGenerators = 16;

  explicit GeneratorSet(std::vector<std::string> names);
  static std::shared_ptr<const GeneratorSet> make(std::vector<std::string> names) {
    return std::make_shared<const GeneratorSet>(std::move(names));
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int index) const;
  // Throws ConfigError for an unknown name.
  int index_of(const std::string& name) const;
  bool contains(int index) const { return index >= 0 && index < size(); }

 private:
  std::vector<std::string> names_;
};

using GeneratorSetPtr = std::shared_ptr<const GeneratorSet>;

class Blade {
 public:
  Blade() = default;
  // Indices must be strictly increasing.
  Blade(std::initializer_list<int> gens);
  static Blade from_indices(std::span<const int> gens);
  static Blade from_mask(std::uint32_t mask) { return Blade(mask, 0); }

  std::vector<int> gens() const;
  std::uint32_t mask() const { return mask_; }
  int grade() const;
  int parity() const { return grade() % 2; }
  bool contains(int gen) const { return (mask_ >> gen) & 1u; }
  bool empty() const { return mask_ == 0; }

  // Canonical order: by grade, then by generator set.
  friend std::strong_ordering operator<=>(const Blade& a, const Blade& b);
  friend bool operator==(const Blade& a, const Blade& b) { return a.mask_ == b.mask_; }

 private:
  Blade(std::uint32_t mask, int) : mask_(mask) {}
  std::uint32_t mask_ = 0;
};

// Sign of blade(a) * blade(b) relative to the canonical merged blade,
// or 0 when they share a generator.
int blade_product_sign(const Blade& a, const Blade& b);

std::string blade_name(const GeneratorSet& gens, const Blade& blade);

enum class Parity { Zero, Even, Odd, Mixed };

class SuperJet {
 public:
  using Terms = std::map<Blade, Jet>;

  SuperJet(GeneratorSetPtr gens, JetCaps caps);
  SuperJet(GeneratorSetPtr gens, const Jet& body);

  static SuperJet scalar(GeneratorSetPtr gens, JetCaps caps, Complex value);
  static SuperJet generator(GeneratorSetPtr gens, JetCaps caps, int index);
  static SuperJet monomial(GeneratorSetPtr gens, const Blade& blade, const Jet& coeff);

  const GeneratorSetPtr& generators() const { return gens_; }
  JetCaps caps() const { return caps_; }
  const Terms& terms() const { return terms_; }

  // Zero jet when the blade is absent.
  Jet term(const Blade& blade) const;
  Jet body() const { return term(Blade{}); }
  SuperJet soul() const;

  Parity parity() const;
  bool is_even() const;
  bool is_odd() const;
  bool is_zero() const { return terms_.empty(); }
  double max_abs() const;

  // Blade-wise jet operations.
  SuperJet dx() const;
  SuperJet dt() const;
  SuperJet truncated(JetCaps caps) const;
  SuperJet widened(JetCaps caps) const;
  // Drop every blade containing `gen` (evaluation at gen = 0).
  SuperJet without(int gen) const;

  SuperJet operator-() const;
  SuperJet& operator+=(const SuperJet& rhs);
  SuperJet& operator-=(const SuperJet& rhs);
  SuperJet& operator*=(Complex rhs);
  SuperJet& operator*=(const Jet& rhs);

  friend SuperJet operator+(SuperJet a, const SuperJet& b) { return a += b; }
  friend SuperJet operator-(SuperJet a, const SuperJet& b) { return a -= b; }
  friend SuperJet operator*(const SuperJet& a, const SuperJet& b);
  friend SuperJet operator*(SuperJet a, Complex b) { return a *= b; }
  friend SuperJet operator*(Complex a, SuperJet b) { return b *= a; }
  friend SuperJet operator*(SuperJet a, const Jet& b) { return a *= b; }
  friend SuperJet operator*(const Jet& a, SuperJet b) { return b *= a; }
  friend SuperJet operator+(SuperJet a, Complex b);
  friend SuperJet operator+(Complex a, SuperJet b) { return std::move(b) + a; }
  friend SuperJet operator-(SuperJet a, Complex b) { return std::move(a) + (-b); }

  friend bool operator==(const SuperJet& a, const SuperJet& b);

 private:
  friend SuperJet gmul(const SuperJet& a, const SuperJet& b);
  void check_compatible(const SuperJet& other) const;
  void prune();

  GeneratorSetPtr gens_;
  JetCaps caps_;
  Terms terms_;
};

SuperJet gmul(const SuperJet& a, const SuperJet& b);

SuperJet sj_exp(const SuperJet& a);
SuperJet sj_inv(const SuperJet& a);
SuperJet sj_log(const SuperJet& a);

// Left derivative with respect to the odd generator `gen`.
SuperJet d_theta(const SuperJet& a, int gen);
// Covariant superderivative theta_gen * d/dx + d/dtheta_gen.
SuperJet superderivative(const SuperJet& a, int gen);

// Partial derivative d^i/dx^i d^j/dt^j of the blade coefficient.
Complex extract(const SuperJet& a, const Blade& blade, int i = 0, int j = 0);

}  // namespace skdv
