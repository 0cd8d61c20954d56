#pragma once

#include <cmath>

#include "skdv/rng.hpp"
#include "skdv/superalgebra.hpp"

namespace testing {

using skdv::Complex;
using skdv::Jet;
using skdv::JetCaps;
using skdv::SuperJet;

inline Complex random_complex(skdv::SplitMix64& rng, double scale = 1.0) {
  return {rng.uniform(-scale, scale), rng.uniform(-scale, scale)};
}

inline Jet random_jet(skdv::SplitMix64& rng, JetCaps caps, double scale = 1.0) {
  Jet j(caps);
  for (int i = 0; i <= caps.px; ++i)
    for (int k = 0; k <= caps.pt; ++k) j.at(i, k) = random_complex(rng, scale);
  return j;
}

enum class Kind { Any, Even, Odd };

// Random element with every admissible blade populated.
inline SuperJet random_superjet(skdv::SplitMix64& rng, const skdv::GeneratorSetPtr& gens,
                                JetCaps caps, Kind kind = Kind::Any, double scale = 1.0) {
  SuperJet s(gens, caps);
  const std::uint32_t n = 1u << gens->size();
  for (std::uint32_t m = 0; m < n; ++m) {
    const skdv::Blade b = skdv::Blade::from_mask(m);
    if (kind == Kind::Even && b.parity() != 0) continue;
    if (kind == Kind::Odd && b.parity() != 1) continue;
    s += SuperJet::monomial(gens, b, random_jet(rng, caps, scale));
  }
  return s;
}

// Largest coefficient difference over all blades and jet slots.
inline double distance(const SuperJet& a, const SuperJet& b) { return (a - b).max_abs(); }

inline double distance(Complex a, Complex b) { return std::abs(a - b); }

}  // namespace testing
