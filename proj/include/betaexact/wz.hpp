#pragma once

#include <algorithm>
#include <stdexcept>

#include "betaexact/big_decimal.hpp"
#include "betaexact/decimal_math.hpp"
#include "betaexact/kernel_sums.hpp"
#include "betaexact/quadrature.hpp"

namespace betaexact {

/// Continuous-discrete pair families (F(x,k), G(x,k)) tied by
///   dF/dx = G(x, k+1) - G(x, k).
/// The three fixed families are the low exponents 1..3; the two
/// parameterized ones generalize to exponent 2l and 2l+1.
enum class WzFamily { F1G1, F2G2, F3G3, even_order, odd_order };

struct WzPairSpec {
  WzFamily family;
  int order = 1;  // the l in the parameterized families
};

namespace detail {

/// Exponent p of (2k-1) under F; odd p pairs with sin, even with cos.
inline int wz_exponent(const WzPairSpec& spec) {
  switch (spec.family) {
    case WzFamily::F1G1: return 1;
    case WzFamily::F2G2: return 2;
    case WzFamily::F3G3: return 3;
    case WzFamily::even_order:
      if (spec.order < 1) throw std::invalid_argument("order must be >= 1");
      return 2 * spec.order;
    case WzFamily::odd_order:
      if (spec.order < 1) throw std::invalid_argument("order must be >= 1");
      return 2 * spec.order + 1;
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace detail

/// F(x,k) = sin((2k-1)x)/(2k-1)^p for odd p, cos((2k-1)x)/(2k-1)^p for
/// even p.
inline BigDecimal wz_pair_f(const WzPairSpec& spec, const BigDecimal& x,
                            long k, int digits) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  int p = detail::wz_exponent(spec);
  int ws = digits + kGuardDigits;
  BigDecimal angle = x * BigDecimal::of(2 * k - 1);
  BigDecimal numer = (p % 2 == 1) ? sin_decimal(angle, ws)
                                  : cos_decimal(angle, ws);
  BigInt den = boost::multiprecision::pow(BigInt(2 * k - 1),
                                          static_cast<unsigned>(p));
  return div_to(numer, BigDecimal(std::move(den), 0), ws);
}

/// G(x,k) = sum_{j=1}^{k-1} cos((2j-1)x)/(2j-1)^{p-1} for odd p, and
/// -sum_{j=1}^{k-1} sin((2j-1)x)/(2j-1)^{p-1} for even p.  G(x,1) = 0.
inline BigDecimal wz_pair_g(const WzPairSpec& spec, const BigDecimal& x,
                            long k, int digits) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  int p = detail::wz_exponent(spec);
  int ws = digits + kGuardDigits + detail::extra_digits_for(k);
  BigDecimal sum(BigInt(0), ws);
  detail::for_each_odd_angle(x, k - 1, ws, [&](long j, const SinCos& a) {
    BigInt den = boost::multiprecision::pow(BigInt(2 * j - 1),
                                            static_cast<unsigned>(p - 1));
    const BigDecimal& numer = (p % 2 == 1) ? a.cos : a.sin;
    sum = sum + div_to(numer, BigDecimal(std::move(den), 0), ws);
  });
  return (p % 2 == 1) ? sum : -sum;
}

/// Closed-form dF/dx; equals the j = k term pattern of G.
inline BigDecimal wz_pair_df(const WzPairSpec& spec, const BigDecimal& x,
                             long k, int digits) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  int p = detail::wz_exponent(spec);
  int ws = digits + kGuardDigits;
  BigDecimal angle = x * BigDecimal::of(2 * k - 1);
  BigDecimal numer = (p % 2 == 1) ? cos_decimal(angle, ws)
                                  : -sin_decimal(angle, ws);
  BigInt den = boost::multiprecision::pow(BigInt(2 * k - 1),
                                          static_cast<unsigned>(p - 1));
  return div_to(numer, BigDecimal(std::move(den), 0), ws);
}

/// Residual | dF/dx - (G(x,k+1) - G(x,k)) |.
inline BigDecimal wz_equation_check(const WzPairSpec& spec,
                                    const BigDecimal& x, long k,
                                    int digits) {
  BigDecimal lhs = wz_pair_df(spec, x, k, digits);
  BigDecimal rhs = wz_pair_g(spec, x, k + 1, digits) -
                   wz_pair_g(spec, x, k, digits);
  return (lhs - rhs).abs();
}

struct TelescopeCheckResult {
  BigDecimal lhs;         // sum_k F(x,k) - sum_k F(h,k)
  BigDecimal rhs;         // int_h^x G(t,n+1) - int_h^x G(t,m)
  BigDecimal residual;
  BigDecimal quad_error;  // combined quadrature error estimate
};

/// Telescoped integral identity over k = m..n:
///   sum_{k=m}^{n} F(x,k) - sum_{k=m}^{n} F(h,k)
///     = int_h^x G(t,n+1) dt - int_h^x G(t,m) dt.
/// n = m-1 is the empty range; both sides are exactly zero.
inline TelescopeCheckResult wz_telescoped_integral_check(
    const WzPairSpec& spec, const BigDecimal& h, const BigDecimal& x,
    long m, long n, int digits) {
  if (m < 1 || n < m - 1) throw std::invalid_argument("need 1 <= m <= n+1");
  int ws = digits + kGuardDigits;
  if (n == m - 1) {
    BigDecimal zero(BigInt(0), ws);
    return {zero, zero, zero, zero};
  }
  BigDecimal lhs(BigInt(0), ws);
  for (long k = m; k <= n; ++k) {
    lhs = lhs + wz_pair_f(spec, x, k, digits) -
          wz_pair_f(spec, h, k, digits);
  }
  long omega = std::max<long>(2 * n - 1, 2);
  QuadratureResult top = integrate_oscillatory(
      [&](const BigDecimal& t) { return wz_pair_g(spec, t, n + 1, digits); },
      h, x, omega, ws);
  QuadratureResult bottom = integrate_oscillatory(
      [&](const BigDecimal& t) { return wz_pair_g(spec, t, m, digits); },
      h, x, omega, ws);
  BigDecimal rhs = top.value - bottom.value;
  return {lhs, rhs, (lhs - rhs).abs(), top.est_error + bottom.est_error};
}

}  // namespace betaexact
