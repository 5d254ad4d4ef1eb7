#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "betaexact/big_decimal.hpp"
#include "betaexact/decimal_math.hpp"

namespace betaexact {

struct GaussRule {
  int order;
  std::vector<BigDecimal> nodes;    // ascending on [-1, 1]
  std::vector<BigDecimal> weights;
};

namespace detail {

/// P_m(x) and P'_m(x) by the three-term recurrence.
inline std::pair<BigDecimal, BigDecimal> legendre_pair(int m,
                                                       const BigDecimal& x,
                                                       int ws) {
  BigDecimal pprev = BigDecimal(BigInt(1), 0).rescale(ws);
  BigDecimal p = x.rescale(ws);
  for (int j = 2; j <= m; ++j) {
    BigDecimal t = mul_to(x, p, ws) * BigDecimal::of(2 * j - 1) -
                   pprev * BigDecimal::of(j - 1);
    BigDecimal pj = div_to(t, BigDecimal::of(j), ws);
    pprev = p;
    p = pj;
  }
  BigDecimal num = (mul_to(x, p, ws) - pprev) * BigDecimal::of(m);
  BigDecimal den = mul_to(x, x, ws) - BigDecimal(BigInt(1), 0);
  return {p, div_to(num, den, ws)};
}

inline GaussRule build_gauss_rule(int order, int scale) {
  if (order < 2) throw std::invalid_argument("quadrature order too small");
  int ws = scale + 10;
  BigDecimal threshold(BigInt(100), ws);
  std::vector<BigDecimal> pos, wpos;
  for (int i = 1; i <= order / 2; ++i) {
    // classic cosine initial guess, then Newton
    BigDecimal angle = div_to(pi_decimal(30) * BigDecimal::of(4 * i - 1),
                              BigDecimal::of(4 * order + 2), 30);
    BigDecimal x = cos_decimal(angle, 25).rescale(ws);
    for (int iter = 0; iter < 80; ++iter) {
      auto [p, dp] = legendre_pair(order, x, ws);
      BigDecimal dx = div_to(p, dp, ws);
      x = x - dx;
      if (dx.abs() <= threshold) break;
    }
    auto [p, dp] = legendre_pair(order, x, ws);
    (void)p;
    BigDecimal den = mul_to(BigDecimal(BigInt(1), 0) - mul_to(x, x, ws),
                            mul_to(dp, dp, ws), ws);
    pos.push_back(x.rescale(scale));
    wpos.push_back(div_to(BigDecimal::of(2), den, scale));
  }
  GaussRule rule;
  rule.order = order;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    rule.nodes.push_back(-pos[i]);
    rule.weights.push_back(wpos[i]);
  }
  if (order % 2 == 1) {
    BigDecimal zero(BigInt(0), scale);
    auto [p, dp] = legendre_pair(order, zero, ws);
    (void)p;
    rule.nodes.push_back(zero);
    rule.weights.push_back(
        div_to(BigDecimal::of(2), mul_to(dp, dp, ws), scale));
  }
  for (std::size_t i = pos.size(); i-- > 0;) {
    rule.nodes.push_back(pos[i]);
    rule.weights.push_back(wpos[i]);
  }
  return rule;
}

}  // namespace detail

/// Cached Gauss-Legendre rule for (order, scale).
inline const GaussRule& gauss_rule(int order, int scale) {
  static std::map<std::pair<int, int>, GaussRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(order, scale);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, detail::build_gauss_rule(order, scale)).first;
  }
  return it->second;
}

struct QuadratureResult {
  BigDecimal value;
  BigDecimal est_error;
  long panels;
};

/// Composite Gauss-Legendre sweep with a fixed panel count; purely
/// sequential, so the result is deterministic.
template <typename F>
BigDecimal integrate_panels(F&& f, const BigDecimal& a, const BigDecimal& b,
                            long panels, int order, int scale) {
  const GaussRule& rule = gauss_rule(order, scale);
  int cs = scale + 6;
  BigDecimal width = div_to(b - a, BigDecimal::of(panels), cs);
  BigDecimal half = div_to(width, BigDecimal::of(2), cs);
  BigDecimal sum(BigInt(0), scale);
  for (long p = 0; p < panels; ++p) {
    BigDecimal center = a + mul_to(width, BigDecimal::of(p), cs) + half;
    BigDecimal panel_sum(BigInt(0), scale);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      BigDecimal t = center + mul_to(half, rule.nodes[i], cs);
      panel_sum = panel_sum + mul_to(rule.weights[i], f(t), scale);
    }
    sum = sum + mul_to(panel_sum, half, scale);
  }
  return sum;
}

/// Integrates f over [a, b] where f oscillates with angular frequency up
/// to omega: one panel per half-period keeps the per-panel polynomial fit
/// honest.  With refine set, the sweep is repeated at doubled panel count
/// and the difference (plus a roundoff floor) is reported as est_error;
/// the doubled sweep is the returned value.
template <typename F>
QuadratureResult integrate_oscillatory(F&& f, const BigDecimal& a,
                                       const BigDecimal& b, long omega,
                                       int scale, int order = 12,
                                       bool refine = true) {
  if (omega < 1) omega = 1;
  if (a == b) {
    return {BigDecimal(BigInt(0), scale), BigDecimal(BigInt(0), scale), 0};
  }
  bool flip = b < a;
  const BigDecimal& lo = flip ? b : a;
  const BigDecimal& hi = flip ? a : b;
  BigDecimal ratio =
      div_to((hi - lo) * BigDecimal::of(omega), pi_decimal(20), 10);
  BigInt p = detail::floor_div_decimal(ratio, BigDecimal(BigInt(1), 0)) + 1;
  if (p > 4000000) throw std::invalid_argument("panel count out of range");
  long panels = static_cast<long>(p);
  BigDecimal q1 = integrate_panels(f, lo, hi, panels, order, scale);
  if (!refine) {
    if (flip) q1 = -q1;
    return {q1, BigDecimal(BigInt(order) * panels + 16, scale), panels};
  }
  BigDecimal q2 = integrate_panels(f, lo, hi, 2 * panels, order, scale);
  BigDecimal est =
      (q2 - q1).abs() + BigDecimal(BigInt(order) * 3 * panels + 16, scale);
  if (flip) q2 = -q2;
  return {q2, est, 2 * panels};
}

/// Prefix integrals F[j] ~ int_{x0}^{x0 + j h} f on a uniform grid by a
/// third-degree local fit (fourth-order accurate): interior interval
/// weights (-1, 13, 13, -1)/24, one-sided (9, 19, -5, 1)/24 at the ends.
inline std::vector<BigDecimal> cumulative_integral_grid(
    const std::vector<BigDecimal>& f, const BigDecimal& h, int scale) {
  std::size_t n = f.size();
  if (n < 4) throw std::invalid_argument("grid too small");
  const BigDecimal twenty_four = BigDecimal::of(24);
  std::vector<BigDecimal> out;
  out.reserve(n);
  out.emplace_back(BigInt(0), scale);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    BigDecimal slice(BigInt(0), 0);
    if (j == 0) {
      slice = BigDecimal::of(9) * f[0] + BigDecimal::of(19) * f[1] -
              BigDecimal::of(5) * f[2] + f[3];
    } else if (j + 2 < n) {
      slice = BigDecimal::of(13) * (f[j] + f[j + 1]) - f[j - 1] - f[j + 2];
    } else {
      slice = BigDecimal::of(9) * f[n - 1] + BigDecimal::of(19) * f[n - 2] -
              BigDecimal::of(5) * f[n - 3] + f[n - 4];
    }
    slice = div_to(mul_to(slice, h, scale), twenty_four, scale);
    out.push_back(out.back() + slice);
  }
  return out;
}

}  // namespace betaexact
