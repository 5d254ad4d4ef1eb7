#pragma once

#include <cctype>
#include <cstddef>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "betaexact/rational.hpp"

namespace betaexact {

/// Guard digits carried by every computation beyond the precision a caller
/// asks for; only the requested digits are ever rendered.
inline constexpr int kGuardDigits = 10;

inline const BigInt& pow10(int e) {
  if (e < 0) throw std::invalid_argument("negative power of ten");
  static std::vector<BigInt> cache{BigInt(1)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= e) {
    cache.push_back(cache.back() * 10);
  }
  return cache[static_cast<std::size_t>(e)];
}

namespace detail {

/// Nearest integer to n/d with ties to even; d must be positive.
inline BigInt div_round_half_even(const BigInt& n, const BigInt& d) {
  BigInt q = n / d;  // truncates toward zero
  BigInt r = n - q * d;
  if (r == 0) return q;
  BigInt twice = 2 * boost::multiprecision::abs(r);
  if (twice > d || (twice == d && q % 2 != 0)) {
    q += (n < 0) ? -1 : 1;
  }
  return q;
}

}  // namespace detail

/// Fixed-point decimal: value = mantissa * 10^{-scale}, scale >= 0.
/// Addition, subtraction and multiplication are exact; every narrowing
/// operation states its rounding (half-even for internal arithmetic,
/// truncation for anything rendered to the outside).
class BigDecimal {
 public:
  BigDecimal() : mant_(0), scale_(0) {}
  BigDecimal(BigInt mantissa, int scale)
      : mant_(std::move(mantissa)), scale_(scale) {
    if (scale_ < 0) throw std::invalid_argument("negative decimal scale");
  }

  static BigDecimal of(long long v) { return BigDecimal(BigInt(v), 0); }

  /// Rational -> decimal at the given scale, rounding half-even.
  static BigDecimal from_rational(const Rational& r, int scale) {
    return BigDecimal(
        detail::div_round_half_even(r.num() * pow10(scale), r.den()), scale);
  }

  const BigInt& mantissa() const { return mant_; }
  int scale() const { return scale_; }

  bool is_zero() const { return mant_ == 0; }
  int sign() const { return mant_ == 0 ? 0 : (mant_ < 0 ? -1 : 1); }

  BigDecimal abs() const {
    return mant_ < 0 ? BigDecimal(-mant_, scale_) : *this;
  }

  /// Change scale; widening is exact, narrowing rounds half-even.
  BigDecimal rescale(int new_scale) const {
    if (new_scale == scale_) return *this;
    if (new_scale > scale_) {
      return BigDecimal(mant_ * pow10(new_scale - scale_), new_scale);
    }
    return BigDecimal(detail::div_round_half_even(
                          mant_, pow10(scale_ - new_scale)),
                      new_scale);
  }

  /// Change scale rounding toward zero.
  BigDecimal truncate(int new_scale) const {
    if (new_scale >= scale_) return rescale(new_scale);
    return BigDecimal(mant_ / pow10(scale_ - new_scale), new_scale);
  }

  friend BigDecimal operator+(const BigDecimal& a, const BigDecimal& b) {
    int s = std::max(a.scale_, b.scale_);
    return BigDecimal(a.aligned(s) + b.aligned(s), s);
  }
  friend BigDecimal operator-(const BigDecimal& a, const BigDecimal& b) {
    int s = std::max(a.scale_, b.scale_);
    return BigDecimal(a.aligned(s) - b.aligned(s), s);
  }
  friend BigDecimal operator*(const BigDecimal& a, const BigDecimal& b) {
    return BigDecimal(a.mant_ * b.mant_, a.scale_ + b.scale_);
  }
  BigDecimal operator-() const { return BigDecimal(-mant_, scale_); }

  friend bool operator==(const BigDecimal& a, const BigDecimal& b) {
    return a.compare(b) == 0;
  }
  friend bool operator!=(const BigDecimal& a, const BigDecimal& b) {
    return a.compare(b) != 0;
  }
  friend bool operator<(const BigDecimal& a, const BigDecimal& b) {
    return a.compare(b) < 0;
  }
  friend bool operator>(const BigDecimal& a, const BigDecimal& b) {
    return a.compare(b) > 0;
  }
  friend bool operator<=(const BigDecimal& a, const BigDecimal& b) {
    return a.compare(b) <= 0;
  }
  friend bool operator>=(const BigDecimal& a, const BigDecimal& b) {
    return a.compare(b) >= 0;
  }

  /// Plain decimal string with exactly scale() fractional digits.
  std::string to_string() const {
    BigInt a = boost::multiprecision::abs(mant_);
    std::string digits = a.str();
    std::string out = (mant_ < 0) ? "-" : "";
    if (scale_ == 0) return out + digits;
    if (static_cast<int>(digits.size()) <= scale_) {
      digits.insert(0, static_cast<std::size_t>(scale_) + 1 - digits.size(),
                    '0');
    }
    std::size_t point = digits.size() - static_cast<std::size_t>(scale_);
    return out + digits.substr(0, point) + "." + digits.substr(point);
  }

  /// Parses "[+-]digits[.digits][eE[+-]digits]"; exact, never rounds.
  static BigDecimal parse(std::string_view s) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      neg = s[i] == '-';
      ++i;
    }
    std::string digits;
    int frac = 0;
    bool seen_digit = false, seen_point = false;
    for (; i < s.size(); ++i) {
      char c = s[i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits += c;
        seen_digit = true;
        if (seen_point) ++frac;
      } else if (c == '.' && !seen_point) {
        seen_point = true;
      } else {
        break;
      }
    }
    if (!seen_digit) throw std::invalid_argument("malformed decimal");
    long long exp = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
      ++i;
      bool eneg = false;
      if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        eneg = s[i] == '-';
        ++i;
      }
      if (i == s.size()) throw std::invalid_argument("malformed exponent");
      for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) break;
        exp = exp * 10 + (s[i] - '0');
        if (exp > 1000000) throw std::invalid_argument("exponent too large");
      }
      if (eneg) exp = -exp;
    }
    if (i != s.size()) throw std::invalid_argument("malformed decimal");
    // leading zeros would read as an octal prefix
    std::size_t nz = digits.find_first_not_of('0');
    BigInt m = (nz == std::string::npos) ? BigInt(0)
                                         : BigInt(digits.substr(nz));
    if (neg) m = -m;
    long long scale = frac - exp;
    if (scale < 0) {
      m *= pow10(static_cast<int>(-scale));
      scale = 0;
    }
    return BigDecimal(std::move(m), static_cast<int>(scale));
  }

 private:
  BigInt aligned(int s) const { return mant_ * pow10(s - scale_); }

  int compare(const BigDecimal& o) const {
    int s = std::max(scale_, o.scale_);
    BigInt a = aligned(s), b = o.aligned(s);
    if (a < b) return -1;
    if (a > b) return 1;
    return 0;
  }

  BigInt mant_;
  int scale_;
};

/// One unit in the last place at the given scale: 10^{-scale}.
inline BigDecimal ulp_at(int scale) { return BigDecimal(BigInt(1), scale); }

/// Product rounded half-even to the target scale.
inline BigDecimal mul_to(const BigDecimal& a, const BigDecimal& b,
                         int scale) {
  return (a * b).rescale(scale);
}

/// Quotient rounded half-even to the target scale.
inline BigDecimal div_to(const BigDecimal& a, const BigDecimal& b,
                         int scale) {
  if (b.is_zero()) throw std::domain_error("decimal division by zero");
  int e = scale + b.scale() - a.scale();
  BigInt num = a.mantissa();
  BigInt den = b.mantissa();
  if (e >= 0) {
    num *= pow10(e);
  } else {
    den *= pow10(-e);
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return BigDecimal(detail::div_round_half_even(num, den), scale);
}

/// Integer power by repeated squaring, rounding half-even to the target
/// scale after every multiply.
inline BigDecimal pow_to(const BigDecimal& a, unsigned long e, int scale) {
  BigDecimal base = a.rescale(scale);
  BigDecimal result = BigDecimal(BigInt(1), 0).rescale(scale);
  while (e > 0) {
    if (e & 1) result = mul_to(result, base, scale);
    base = mul_to(base, base, scale);
    e >>= 1;
  }
  return result;
}

}  // namespace betaexact
