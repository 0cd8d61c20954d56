#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace skdv {

// Mismatched generator sets, jet caps, unknown generators.
class ConfigError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An operation received an element of the wrong Grassmann parity.
class ParityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Derivative order or truncation request outside the jet caps.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Series evaluation did not converge within its term budget.
class AccuracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact arithmetic produced something that must be impossible (e.g. a
// nonzero remainder in a division known to be exact).
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Invalid construction parameters (soliton wavenumbers, indices, ...).
class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Division by (or logarithm of) a body constant below the singularity guard.
// Grid drivers catch this and report the sample as excluded.
class NearPoleError : public std::runtime_error {
 public:
  explicit NearPoleError(const std::string& what, std::complex<double> body = {})
      : std::runtime_error(what), body_(body) {}

  std::complex<double> body() const { return body_; }
  const std::optional<std::pair<double, double>>& point() const { return point_; }

  NearPoleError at(double x, double t) const {
    NearPoleError copy = *this;
    copy.point_ = std::make_pair(x, t);
    return copy;
  }

 private:
  std::complex<double> body_;
  std::optional<std::pair<double, double>> point_;
};

}  // namespace skdv
