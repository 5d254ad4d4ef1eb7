#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "betaexact/bernoulli_euler.hpp"
#include "betaexact/big_decimal.hpp"
#include "betaexact/decimal_math.hpp"
#include "betaexact/kernel_sums.hpp"
#include "betaexact/quadrature.hpp"
#include "betaexact/series.hpp"
#include "betaexact/special_values.hpp"

namespace betaexact {

namespace detail {

inline BigDecimal half_pi_decimal(int scale) {
  return div_to(pi_decimal(scale + 4), BigDecimal::of(2), scale);
}

}  // namespace detail

struct RepresentationCheckResult {
  BigDecimal kernel_sum_value;    // sum_{j<=k} sin((2j-1)x)/(2j-1)^{2l-1}
  BigDecimal representation;      // weighted integral plus corrections
  BigDecimal residual;
  BigDecimal quad_error;
  long panels;
};

/// Finite-k integral representation of the odd sine kernel sum:
///   I_{2l-1}(x,k) = ((-1)^{l+1} / (2l-2)!) *
///                       int_0^x (x-t)^{2l-2} sin(2kt)/(2 sin t) dt
///                 + sum_{j=1}^{l-1} (-1)^{l+j+1} J_{2j}(0,k)
///                       x^{2l-2j-1} / (2l-2j-1)!
/// where J is the matching cosine sum.  Both sides are evaluated
/// numerically and the residual reported.
inline RepresentationCheckResult kernel_integral_representation_check(
    int l, long k, const BigDecimal& x, int digits) {
  if (l < 1) throw std::invalid_argument("l must be >= 1");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  int ws = digits + kGuardDigits;
  BigDecimal lhs = kernel_sum({KernelKind::sine, 2 * l - 1, x, k}, digits);

  int e = 2 * l - 2;
  QuadratureResult quad = integrate_oscillatory(
      [&](const BigDecimal& t) {
        BigDecimal w = pow_to(x - t, static_cast<unsigned long>(e), ws);
        return mul_to(w, dirichlet_kernel(t, k, digits), ws);
      },
      BigDecimal(BigInt(0), 0), x, 2 * k, ws);
  BigDecimal rhs =
      div_to(quad.value, BigDecimal(factorial(2 * l - 2), 0), ws);
  if (l % 2 == 0) rhs = -rhs;
  for (int j = 1; j < l; ++j) {
    BigDecimal cosine_sum =
        kernel_sum({KernelKind::cosine, 2 * j, BigDecimal(BigInt(0), 0), k},
                   digits);
    BigDecimal term = mul_to(
        cosine_sum,
        pow_to(x, static_cast<unsigned long>(2 * l - 2 * j - 1), ws), ws);
    term = div_to(term, BigDecimal(factorial(2 * l - 2 * j - 1), 0), ws);
    rhs = ((l + j) % 2 == 1) ? rhs + term : rhs - term;
  }
  BigDecimal scaled_err =
      div_to(quad.est_error, BigDecimal(factorial(2 * l - 2), 0), ws);
  return {lhs, rhs, (lhs - rhs).abs(), scaled_err, quad.panels};
}

struct CollapseCheckResult {
  BigDecimal nested;    // depth 2l-1 repeated prefix integration
  BigDecimal single;    // (1/(2l-2)!) int_0^x (x-t)^{2l-2} f(t) dt
  BigDecimal residual;
};

/// Cross-checks the collapse of a (2l-1)-fold repeated integral of
/// f(t) = sin(2kt)/(2 sin t) into one weighted integral.  The nested side
/// runs entirely on a uniform grid with a fourth-order prefix rule, so it
/// shares nothing with the Gauss-Legendre evaluation of the single side.
inline CollapseCheckResult iterated_integral_collapse_check(
    int l, const BigDecimal& x, long k, int digits = 10,
    long grid_points = 1024) {
  if (l < 2 || l > 4) throw std::invalid_argument("l must be in 2..4");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (grid_points < 8) throw std::invalid_argument("grid too small");
  if (x.sign() < 0) throw std::invalid_argument("x must be non-negative");
  int ws = digits + kGuardDigits;
  if (x.is_zero()) {
    BigDecimal zero(BigInt(0), ws);
    return {zero, zero, zero};
  }
  BigDecimal h = div_to(x, BigDecimal::of(grid_points), ws + 6);
  std::vector<BigDecimal> values;
  values.reserve(static_cast<std::size_t>(grid_points) + 1);
  for (long i = 0; i <= grid_points; ++i) {
    BigDecimal t = mul_to(h, BigDecimal::of(i), ws + 6);
    values.push_back(dirichlet_kernel(t, k, digits));
  }
  for (int depth = 0; depth < 2 * l - 1; ++depth) {
    values = cumulative_integral_grid(values, h, ws);
  }
  BigDecimal nested = values.back();

  int e = 2 * l - 2;
  QuadratureResult quad = integrate_oscillatory(
      [&](const BigDecimal& t) {
        BigDecimal w = pow_to(x - t, static_cast<unsigned long>(e), ws);
        return mul_to(w, dirichlet_kernel(t, k, digits), ws);
      },
      BigDecimal(BigInt(0), 0), x, 2 * k, ws);
  BigDecimal single =
      div_to(quad.value, BigDecimal(factorial(2 * l - 2), 0), ws);
  return {nested, single, (nested - single).abs()};
}

/// Values of int_0^{pi/2} t^s sin(2kt)/sin(t) dt along a strictly
/// increasing list of k.  For s = 0 the limit is pi/2; for s >= 1 it is 0
/// with the envelope (pi/2)^s / k.
inline std::vector<BigDecimal> oscillatory_integral_trend(
    int s, std::span<const long> k_list, int digits) {
  if (s < 0) throw std::invalid_argument("s must be >= 0");
  for (std::size_t i = 1; i < k_list.size(); ++i) {
    if (k_list[i] <= k_list[i - 1]) {
      throw std::invalid_argument("k values must be strictly increasing");
    }
  }
  int ws = digits + kGuardDigits;
  BigDecimal upper = detail::half_pi_decimal(ws);
  std::vector<BigDecimal> out;
  out.reserve(k_list.size());
  for (long k : k_list) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    QuadratureResult quad = integrate_oscillatory(
        [&](const BigDecimal& t) {
          BigDecimal w = pow_to(t, static_cast<unsigned long>(s), ws);
          BigDecimal kernel = dirichlet_kernel(t, k, digits);
          return mul_to(w, kernel + kernel, ws);
        },
        BigDecimal(BigInt(0), 0), upper, 2 * k, ws);
    out.push_back(quad.value);
  }
  return out;
}

/// beta(2l-1) along the integral route: the weighted Dirichlet-kernel
/// integral at x = pi/2 plus the closed-form lambda corrections.  As k
/// grows this walks into the exact closed-form value at rate ~ 1/k.
inline BigDecimal beta_via_kernel_integral(int l, long k, int digits) {
  if (l < 1) throw std::invalid_argument("l must be >= 1");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  int ws = digits + kGuardDigits;
  BigDecimal x = detail::half_pi_decimal(ws);
  int e = 2 * l - 2;
  QuadratureResult quad = integrate_oscillatory(
      [&](const BigDecimal& t) {
        BigDecimal w = pow_to(x - t, static_cast<unsigned long>(e), ws);
        return mul_to(w, dirichlet_kernel(t, k, digits), ws);
      },
      BigDecimal(BigInt(0), 0), x, 2 * k, ws, 12, /*refine=*/false);
  BigDecimal value =
      div_to(quad.value, BigDecimal(factorial(2 * l - 2), 0), ws);
  if (l % 2 == 0) value = -value;
  if (l > 1) {
    BernoulliTable table(static_cast<std::size_t>(2 * l - 2));
    for (int j = 1; j < l; ++j) {
      BigDecimal lam = render_decimal(lambda_even(j, table).value, ws);
      BigDecimal term = mul_to(
          lam, pow_to(x, static_cast<unsigned long>(2 * l - 2 * j - 1), ws),
          ws);
      term = div_to(term, BigDecimal(factorial(2 * l - 2 * j - 1), 0), ws);
      value = ((l + j) % 2 == 1) ? value + term : value - term;
    }
  }
  return value;
}

}  // namespace betaexact
