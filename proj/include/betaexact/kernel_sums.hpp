#pragma once

#include <stdexcept>
#include <utility>

#include "betaexact/big_decimal.hpp"
#include "betaexact/decimal_math.hpp"

namespace betaexact {

enum class KernelKind { sine, cosine };

/// Finite odd-frequency sums
///   sine:    sum_{j=1}^{k} sin((2j-1) x) / (2j-1)^order
///   cosine:  sum_{j=1}^{k} cos((2j-1) x) / (2j-1)^order
struct KernelSumSpec {
  KernelKind kind;
  int order;
  BigDecimal x;
  long terms;
};

namespace detail {

inline int extra_digits_for(long terms) {
  int extra = 4;
  for (long t = terms; t > 0; t /= 10) ++extra;
  return extra;
}

/// Walks the angles x, 3x, 5x, ... by one rotation of 2x per step and
/// hands (sin, cos) of each to the visitor.
template <typename Visit>
void for_each_odd_angle(const BigDecimal& x, long terms, int ws,
                        Visit&& visit) {
  SinCos a = sin_cos_decimal(x, ws);
  SinCos step = sin_cos_decimal(x + x, ws);
  for (long j = 1; j <= terms; ++j) {
    visit(j, a);
    BigDecimal s = mul_to(a.sin, step.cos, ws) + mul_to(a.cos, step.sin, ws);
    BigDecimal c = mul_to(a.cos, step.cos, ws) - mul_to(a.sin, step.sin, ws);
    a = {std::move(s), std::move(c)};
  }
}

}  // namespace detail

inline BigDecimal kernel_sum(const KernelSumSpec& spec, int digits) {
  if (spec.order < 1) throw std::invalid_argument("kernel order must be >= 1");
  if (spec.terms < 1) throw std::invalid_argument("kernel needs >= 1 term");
  if (digits < 1) throw std::invalid_argument("digits must be positive");
  int ws = digits + kGuardDigits + detail::extra_digits_for(spec.terms);
  BigDecimal sum(BigInt(0), ws);
  detail::for_each_odd_angle(
      spec.x, spec.terms, ws, [&](long j, const SinCos& a) {
        BigInt den = boost::multiprecision::pow(
            BigInt(2 * j - 1), static_cast<unsigned>(spec.order));
        const BigDecimal& numer =
            (spec.kind == KernelKind::sine) ? a.sin : a.cos;
        sum = sum + div_to(numer, BigDecimal(std::move(den), 0), ws);
      });
  return sum;
}

/// sin(2kt) / (2 sin t) with the removable value k at t = 0.
inline BigDecimal dirichlet_kernel(const BigDecimal& t, long k, int digits) {
  if (k < 1) throw std::invalid_argument("kernel needs k >= 1");
  int ws = digits + kGuardDigits;
  if (t.is_zero()) return BigDecimal(BigInt(k) * pow10(ws), ws);
  BigDecimal st = sin_decimal(t, ws + 6);
  if (st.is_zero()) throw std::domain_error("kernel pole");
  BigDecimal top = sin_decimal(t * BigDecimal::of(2 * k), ws + 6);
  return div_to(top, st + st, ws);
}

/// Residual of the closed Dirichlet-kernel form:
///   | sum_{j=1}^{n} cos((2j-1) x)  -  sin(2nx) / (2 sin x) |.
/// Arguments too close to a multiple of pi are rejected.
inline BigDecimal dirichlet_kernel_identity_check(const BigDecimal& x,
                                                  long n, int digits) {
  if (n < 1) throw std::invalid_argument("identity needs n >= 1");
  if (digits < 2) throw std::invalid_argument("digits must be >= 2");
  int ws = digits + kGuardDigits + detail::extra_digits_for(n);
  BigDecimal pi = pi_decimal(ws);
  BigDecimal r = x - pi * BigDecimal(detail::floor_div_decimal(x, pi), 0);
  BigDecimal dist = r < pi - r ? r : pi - r;
  if (dist < ulp_at(digits / 2)) {
    throw std::domain_error("argument too close to a kernel pole");
  }
  BigDecimal lhs(BigInt(0), ws);
  detail::for_each_odd_angle(x, n, ws, [&](long, const SinCos& a) {
    lhs = lhs + a.cos;
  });
  BigDecimal sx = sin_decimal(x, ws);
  BigDecimal rhs =
      div_to(sin_decimal(x * BigDecimal::of(2 * n), ws), sx + sx, ws);
  return (lhs - rhs).abs();
}

}  // namespace betaexact
