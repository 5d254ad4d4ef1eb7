#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "betaexact/rational.hpp"

namespace betaexact {

inline constexpr std::size_t kDefaultTableCapacity = 200;

/// Raised when a table index beyond the configured capacity is requested.
class TableCapacityError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Bernoulli numbers B_0 .. B_n computed once by the defining recurrence
///   sum_{k=0}^{m} C(m+1, k) B_k = 0   (m >= 1),  B_0 = 1.
/// The recurrence runs for every index, so the zero odd entries come out
/// of the arithmetic instead of being special-cased.  Immutable once built.
class BernoulliTable {
 public:
  explicit BernoulliTable(std::size_t n_max = kDefaultTableCapacity) {
    values_.reserve(n_max + 1);
    values_.emplace_back(1);
    for (std::size_t m = 1; m <= n_max; ++m) {
      Rational sum(0);
      for (std::size_t k = 0; k < m; ++k) {
        sum += binomial(m + 1, k) * values_[k];
      }
      values_.push_back(-sum / Rational(BigInt(m) + 1));
    }
  }

  const Rational& at(std::size_t n) const {
    if (n >= values_.size()) {
      throw TableCapacityError("Bernoulli index " + std::to_string(n) +
                               " exceeds table capacity " +
                               std::to_string(values_.size() - 1));
    }
    return values_[n];
  }

  std::size_t max_index() const { return values_.size() - 1; }

 private:
  std::vector<Rational> values_;
};

/// Euler (secant) numbers E_0, E_2, E_4, ... via
///   sum_{j=0}^{n} C(2n, 2j) E_{2j} = 0   (n >= 1),  E_0 = 1.
/// Stored densely; odd indices are zero.  Immutable once built.
class EulerTable {
 public:
  explicit EulerTable(std::size_t n_max = kDefaultTableCapacity) {
    values_.assign(n_max + 1, Rational(0));
    values_[0] = Rational(1);
    for (std::size_t n = 1; 2 * n <= n_max; ++n) {
      Rational sum(0);
      for (std::size_t j = 0; j < n; ++j) {
        sum += binomial(2 * n, 2 * j) * values_[2 * j];
      }
      values_[2 * n] = -sum;
    }
  }

  const Rational& at(std::size_t n) const {
    if (n >= values_.size()) {
      throw TableCapacityError("Euler index " + std::to_string(n) +
                               " exceeds table capacity " +
                               std::to_string(values_.size() - 1));
    }
    return values_[n];
  }

  std::size_t max_index() const { return values_.size() - 1; }

 private:
  std::vector<Rational> values_;
};

inline const Rational& bernoulli(std::size_t n, const BernoulliTable& table) {
  return table.at(n);
}

inline const Rational& euler_number(std::size_t n, const EulerTable& table) {
  return table.at(n);
}

/// Bernoulli polynomial B_n(x) = sum_{k=0}^{n} C(n, k) B_k x^{n-k}.
inline Rational bernoulli_poly(std::size_t n, const Rational& x,
                               const BernoulliTable& table) {
  Rational sum(0);
  for (std::size_t k = 0; k <= n; ++k) {
    sum += binomial(n, k) * table.at(k) * x.pow(static_cast<long long>(n - k));
  }
  return sum;
}

/// E_{2l} reconstructed from Bernoulli numbers alone:
///   E_{2l} = 1 - (1/(2l+1)) sum_{j=1}^{l} C(2l+1, 2j) 2^{2j} (2^{2j}-1) B_{2j}.
inline Rational euler_from_bernoulli(std::size_t l,
                                     const BernoulliTable& table) {
  Rational sum(0);
  for (std::size_t j = 1; j <= l; ++j) {
    sum += binomial(2 * l + 1, 2 * j) * Rational(pow2(2 * j)) *
           Rational(pow2(2 * j) - 1) * table.at(2 * j);
  }
  return Rational(1) - sum / Rational(BigInt(2 * l) + 1);
}

}  // namespace betaexact
