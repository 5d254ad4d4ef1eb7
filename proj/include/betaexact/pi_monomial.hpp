#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#include "betaexact/rational.hpp"

namespace betaexact {

/// Exact value of the form (p/q) * pi^k with k >= 0.  The zero value is
/// canonically 0/1 * pi^0, so field-wise equality is value equality.
class PiMonomial {
 public:
  PiMonomial() : coeff_(0), pi_power_(0) {}
  PiMonomial(Rational coeff, int pi_power)
      : coeff_(std::move(coeff)), pi_power_(pi_power) {
    if (pi_power_ < 0) throw std::invalid_argument("negative pi power");
    if (coeff_.is_zero()) pi_power_ = 0;
  }

  static PiMonomial zero() { return PiMonomial(); }

  const Rational& coeff() const { return coeff_; }
  int pi_power() const { return pi_power_; }
  bool is_zero() const { return coeff_.is_zero(); }

  friend bool operator==(const PiMonomial& a, const PiMonomial& b) {
    return a.coeff_ == b.coeff_ && a.pi_power_ == b.pi_power_;
  }
  friend bool operator!=(const PiMonomial& a, const PiMonomial& b) {
    return !(a == b);
  }

  /// Rendering contract: "<num>/<den> * pi^<k>"; power one drops the
  /// exponent ("... * pi"), power zero drops the pi factor entirely.
  std::string to_string() const {
    std::string s = coeff_.to_string();
    if (pi_power_ == 0) return s;
    if (pi_power_ == 1) return s + " * pi";
    return s + " * pi^" + std::to_string(pi_power_);
  }

 private:
  Rational coeff_;
  int pi_power_;
};

/// Sum of monomials sharing one pi power.  Zero terms are ignored; mixing
/// distinct powers among nonzero terms is rejected.
inline PiMonomial pi_monomial_combine(std::span<const PiMonomial> terms) {
  Rational sum(0);
  int power = -1;
  for (const PiMonomial& t : terms) {
    if (t.is_zero()) continue;
    if (power < 0) {
      power = t.pi_power();
    } else if (t.pi_power() != power) {
      throw std::invalid_argument("combining distinct pi powers");
    }
    sum += t.coeff();
  }
  if (power < 0 || sum.is_zero()) return PiMonomial::zero();
  return PiMonomial(sum, power);
}

}  // namespace betaexact
