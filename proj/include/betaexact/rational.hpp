#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace betaexact {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational number, kept fully reduced at all times:
/// the denominator is positive, gcd(|num|, den) == 1, and zero is stored
/// as 0/1.  With that invariant, field-wise equality is value equality.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    normalize();
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Rational abs() const {
    return num_ < 0 ? Rational(-num_, den_) : *this;
  }

  Rational reciprocal() const {
    if (num_ == 0) throw std::domain_error("reciprocal of zero");
    return Rational(den_, num_);
  }

  /// Integer power; negative exponents go through the reciprocal.
  Rational pow(long long e) const {
    if (e < 0) return reciprocal().pow(-e);
    Rational base = *this;
    Rational result(1);
    while (e > 0) {
      if (e & 1) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const { return Rational(-num_, den_); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }

  /// "num/den", e.g. "-1/30".  Integers still carry the "/1".
  std::string to_string() const {
    return num_.str() + "/" + den_.str();
  }

 private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

enum class RationalOp { add, sub, mul, div };

/// Checked arithmetic entry point: division by zero yields nullopt instead
/// of throwing.
inline std::optional<Rational> rational_arith(const Rational& a,
                                              const Rational& b,
                                              RationalOp op) {
  switch (op) {
    case RationalOp::add: return a + b;
    case RationalOp::sub: return a - b;
    case RationalOp::mul: return a * b;
    case RationalOp::div:
      if (b.is_zero()) return std::nullopt;
      return a / b;
  }
  return std::nullopt;
}

inline std::optional<Rational> checked_div(const Rational& a,
                                           const Rational& b) {
  return rational_arith(a, b, RationalOp::div);
}

inline BigInt factorial(unsigned long n) {
  BigInt r = 1;
  for (unsigned long i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt pow2(unsigned long e) { return BigInt(1) << e; }

/// Binomial coefficient as an exact integer-valued rational; k > n gives 0.
/// Computed by the descending product n(n-1).../k!, dividing at every step
/// so each intermediate stays an exact integer.
inline Rational binomial(unsigned long n, unsigned long k) {
  if (k > n) return Rational(0);
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned long i = 1; i <= k; ++i) {
    r *= BigInt(n - k + i);
    r /= i;
  }
  return Rational(std::move(r));
}

}  // namespace betaexact
