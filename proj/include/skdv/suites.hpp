#pragma once

// Named verification families run by the CLI and the acceptance binary.
//
//   one-soliton            travelling-wave lift, all residual forms
//   nsoliton:N             random-kappa N-soliton taus, bilinear + fields
//   rational:n             Yablonskii-Vorob'ev taus, bilinear + fields
//   similarity-bessel      rational u with Bessel fermions
//   second-solutions       second homogeneous fermionic solutions
//   bilinear:nsoliton:N    bilinear system only
//   bilinear:rational:n    bilinear system only
//   identities:appendix2   bilinear identities on exponentials
//   reduced:travelling     travelling-wave ODEs
//   reduced:similarity     similarity ODEs and the w_n hierarchy

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skdv/hirota.hpp"
#include "skdv/report.hpp"
#include "skdv/rng.hpp"

namespace skdv {

struct SuiteOptions {
  std::optional<GridSpec> grid;
  std::optional<double> tolerance;
  std::uint64_t seed = 42;
};

struct SuiteResult {
  std::string family;
  std::vector<VerificationReport> reports;

  bool pass() const;
};

// Throws ConfigError for an unknown family or out-of-range index.
SuiteResult run_suite(const std::string& family, const SuiteOptions& opts = {});
const std::vector<std::string>& suite_families();

// N distinct wavenumbers, uniform in [0.3, 2], pairwise at least 0.05 apart.
std::vector<Complex> random_kappas(int n, SplitMix64& rng);
// Amplitudes a_i = i.
SolitonSpec soliton_spec(const std::vector<Complex>& kappas);

// Wronskian f g' - f' g of two single-variable jets.
Complex wronskian(const Jet& f, const Jet& g);

nlohmann::ordered_json to_json(const SuiteResult& r);

}  // namespace skdv
