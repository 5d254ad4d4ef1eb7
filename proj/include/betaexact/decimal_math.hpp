#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "betaexact/big_decimal.hpp"

namespace betaexact {

namespace detail {

/// floor(10^w * arctan(1/m)) up to a few ulp, by the alternating series
/// in pure integer arithmetic.
inline BigInt atan_inv_scaled(long m, int w) {
  BigInt term = pow10(w) / m;
  BigInt m2 = BigInt(m) * m;
  BigInt sum = term;
  for (long n = 1; term != 0; ++n) {
    term /= m2;
    BigInt t = term / (2 * n + 1);
    if (n % 2 == 1) {
      sum -= t;
    } else {
      sum += t;
    }
  }
  return sum;
}

/// floor(a / b) as an integer, for b > 0.
inline BigInt floor_div_decimal(const BigDecimal& a, const BigDecimal& b) {
  int s = std::max(a.scale(), b.scale());
  BigInt na = a.rescale(s).mantissa();
  BigInt nb = b.rescale(s).mantissa();
  BigInt q = na / nb;
  if (q * nb != na && na < 0) q -= 1;
  return q;
}

}  // namespace detail

/// pi truncated to the given number of fractional digits.  Computed once
/// per scale with the 16 arctan(1/5) - 4 arctan(1/239) identity at extra
/// internal precision; truncations at different scales agree digit for
/// digit.
inline BigDecimal pi_decimal(int scale) {
  static std::map<int, BigInt> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(scale);
  if (it == cache.end()) {
    int w = scale + 15;
    BigInt p = 16 * detail::atan_inv_scaled(5, w) -
               4 * detail::atan_inv_scaled(239, w);
    it = cache.emplace(scale, p / pow10(w - scale)).first;
  }
  return BigDecimal(it->second, scale);
}

struct SinCos {
  BigDecimal sin;
  BigDecimal cos;
};

namespace detail {

/// Maclaurin sine for |r| a little beyond pi/2 at working scale ws.
inline BigDecimal taylor_sin(const BigDecimal& r, int ws) {
  BigDecimal term = r.rescale(ws);
  BigDecimal sum = term;
  BigDecimal r2 = mul_to(r, r, ws);
  for (long long n = 1; !term.is_zero(); ++n) {
    term = mul_to(term, r2, ws);
    term = div_to(term, BigDecimal::of(2 * n * (2 * n + 1)), ws);
    if (n % 2 == 1) {
      sum = sum - term;
    } else {
      sum = sum + term;
    }
  }
  return sum;
}

inline BigDecimal taylor_cos(const BigDecimal& r, int ws) {
  BigDecimal term = BigDecimal(BigInt(1), 0).rescale(ws);
  BigDecimal sum = term;
  BigDecimal r2 = mul_to(r, r, ws);
  for (long long n = 1; !term.is_zero(); ++n) {
    term = mul_to(term, r2, ws);
    term = div_to(term, BigDecimal::of((2 * n - 1) * 2 * n), ws);
    if (n % 2 == 1) {
      sum = sum - term;
    } else {
      sum = sum + term;
    }
  }
  return sum;
}

}  // namespace detail

/// Sine and cosine together: one quadrant reduction modulo pi/2 (carried
/// at a scale widened by the argument's magnitude), then Maclaurin series
/// on the reduced argument.
inline SinCos sin_cos_decimal(const BigDecimal& x, int scale) {
  if (x.is_zero()) {
    return {BigDecimal(BigInt(0), scale), BigDecimal(pow10(scale), scale)};
  }
  int ws = scale + 8;
  int mag =
      static_cast<int>(x.abs().truncate(0).mantissa().str().size());
  int rs = ws + mag + 4;
  BigDecimal half_pi = div_to(pi_decimal(rs), BigDecimal::of(2), rs);
  BigInt q = detail::floor_div_decimal(x, half_pi);
  BigDecimal r = x - half_pi * BigDecimal(q, 0);
  BigDecimal s = detail::taylor_sin(r, ws);
  BigDecimal c = detail::taylor_cos(r, ws);
  long quad = static_cast<long>(q % 4);
  if (quad < 0) quad += 4;
  SinCos out;
  switch (quad) {
    case 0: out = {s, c}; break;
    case 1: out = {c, -s}; break;
    case 2: out = {-s, -c}; break;
    default: out = {-c, s}; break;
  }
  return {out.sin.rescale(scale), out.cos.rescale(scale)};
}

inline BigDecimal sin_decimal(const BigDecimal& x, int scale) {
  return sin_cos_decimal(x, scale).sin;
}

inline BigDecimal cos_decimal(const BigDecimal& x, int scale) {
  return sin_cos_decimal(x, scale).cos;
}

}  // namespace betaexact
