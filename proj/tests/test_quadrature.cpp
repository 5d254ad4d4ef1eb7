#include "betaexact/quadrature.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "betaexact/kernel_sums.hpp"
#include "betaexact/rational.hpp"

namespace betaexact {
namespace {

TEST(GaussRule, StructuralInvariants) {
  for (int order : {2, 3, 8, 12}) {
    const GaussRule& rule = gauss_rule(order, 30);
    ASSERT_EQ(rule.nodes.size(), static_cast<std::size_t>(order));
    ASSERT_EQ(rule.weights.size(), static_cast<std::size_t>(order));
    BigDecimal wsum(BigInt(0), 30);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      EXPECT_GT(rule.weights[i].sign(), 0);
      EXPECT_LT(rule.nodes[i].abs(), BigDecimal::of(1));
      if (i > 0) EXPECT_LT(rule.nodes[i - 1], rule.nodes[i]);
      // symmetry about zero
      EXPECT_EQ(rule.nodes[i], -rule.nodes[rule.nodes.size() - 1 - i]);
      EXPECT_EQ(rule.weights[i], rule.weights[rule.weights.size() - 1 - i]);
      wsum = wsum + rule.weights[i];
    }
    EXPECT_LE((wsum - BigDecimal::of(2)).abs(), BigDecimal(BigInt(100), 30))
        << "order=" << order;
  }
}

TEST(GaussRule, IntegratesPolynomialsToPrecision) {
  // An order-m rule is exact through degree 2m-1; check moments of t^k on
  // [0, 1] against 1/(k+1).
  int scale = 30;
  for (int k = 0; k <= 23; ++k) {
    auto f = [&](const BigDecimal& t) {
      return pow_to(t, static_cast<unsigned long>(k), scale);
    };
    BigDecimal q = integrate_panels(f, BigDecimal::of(0), BigDecimal::of(1),
                                    1, 12, scale);
    BigDecimal exact = div_to(BigDecimal::of(1), BigDecimal::of(k + 1), scale);
    EXPECT_LE((q - exact).abs(), BigDecimal(BigInt(1000), scale))
        << "k=" << k;
  }
}

TEST(Oscillatory, KnownIntegrals) {
  int scale = 30;
  BigDecimal pi = pi_decimal(scale + 10);

  // int_0^pi sin = 2
  QuadratureResult a = integrate_oscillatory(
      [&](const BigDecimal& t) { return sin_decimal(t, scale); },
      BigDecimal::of(0), pi.rescale(scale), 1, scale);
  EXPECT_LE((a.value - BigDecimal::of(2)).abs(), a.est_error);
  EXPECT_LE((a.value - BigDecimal::of(2)).abs(),
            BigDecimal(BigInt(1000), scale));

  // int_0^{2pi} sin(10 t) = 0
  QuadratureResult b = integrate_oscillatory(
      [&](const BigDecimal& t) {
        return sin_decimal(t * BigDecimal::of(10), scale);
      },
      BigDecimal::of(0), (pi + pi).rescale(scale), 10, scale);
  EXPECT_LE(b.value.abs(), b.est_error);

  // reversed bounds flip the sign
  QuadratureResult c = integrate_oscillatory(
      [&](const BigDecimal& t) { return sin_decimal(t, scale); },
      pi.rescale(scale), BigDecimal::of(0), 1, scale);
  EXPECT_LE((c.value + BigDecimal::of(2)).abs(),
            BigDecimal(BigInt(1000), scale));
}

TEST(Oscillatory, DirichletKernelMomentMatchesPartialSum) {
  // int_0^{pi/2} sin(2kt)/sin(t) dt == 2 sum_{i<=k} (-1)^{i+1}/(2i-1),
  // exactly, for every k; a sharp cross-check of kernel and quadrature.
  int scale = 30;
  long k = 5;
  BigDecimal half_pi =
      div_to(pi_decimal(scale + 10), BigDecimal::of(2), scale + 8);
  QuadratureResult q = integrate_oscillatory(
      [&](const BigDecimal& t) {
        BigDecimal kernel = dirichlet_kernel(t, k, scale);
        return kernel + kernel;
      },
      BigDecimal::of(0), half_pi, 2 * k, scale);
  Rational partial(0);
  for (long i = 1; i <= k; ++i) {
    Rational term(2, 2 * i - 1);
    partial += (i % 2 == 1) ? term : -term;
  }
  BigDecimal exact = BigDecimal::from_rational(partial, scale);
  EXPECT_LE((q.value - exact).abs(), q.est_error);
  EXPECT_LE((q.value - exact).abs(), BigDecimal(BigInt(10000), scale));
}

TEST(Oscillatory, EmptyRange) {
  QuadratureResult q = integrate_oscillatory(
      [](const BigDecimal& t) { return t; }, BigDecimal::of(1),
      BigDecimal::of(1), 4, 20);
  EXPECT_TRUE(q.value.is_zero());
  EXPECT_EQ(q.panels, 0);
}

TEST(CumulativeGrid, ExactOnCubics) {
  // the 4-point rule integrates degree-3 data exactly up to rounding
  int scale = 25;
  long n = 16;
  BigDecimal h = div_to(BigDecimal::of(1), BigDecimal::of(n), scale);
  std::vector<BigDecimal> f;
  for (long i = 0; i <= n; ++i) {
    BigDecimal t = mul_to(h, BigDecimal::of(i), scale);
    f.push_back(pow_to(t, 3, scale));
  }
  std::vector<BigDecimal> prefix = cumulative_integral_grid(f, h, scale);
  ASSERT_EQ(prefix.size(), f.size());
  for (long i = 0; i <= n; ++i) {
    BigDecimal t = mul_to(h, BigDecimal::of(i), scale);
    BigDecimal exact = div_to(pow_to(t, 4, scale), BigDecimal::of(4), scale);
    EXPECT_LE((prefix[static_cast<std::size_t>(i)] - exact).abs(),
              BigDecimal(BigInt(2000), scale))
        << "i=" << i;
  }
}

TEST(CumulativeGrid, FourthOrderOnSine) {
  // prefix integral of sin is 1 - cos; error should fall like h^4
  int scale = 25;
  BigDecimal err_prev;
  for (long n : {32, 64}) {
    BigDecimal h = div_to(BigDecimal::of(2), BigDecimal::of(n), scale);
    std::vector<BigDecimal> f;
    for (long i = 0; i <= n; ++i) {
      f.push_back(sin_decimal(mul_to(h, BigDecimal::of(i), scale), scale));
    }
    std::vector<BigDecimal> prefix = cumulative_integral_grid(f, h, scale);
    BigDecimal exact =
        BigDecimal::of(1) - cos_decimal(BigDecimal::of(2), scale);
    BigDecimal err = (prefix.back() - exact).abs();
    if (n == 64) {
      // roughly 16x improvement; allow a lax factor of 8
      EXPECT_LE(err * BigDecimal::of(8), err_prev);
    }
    err_prev = err;
  }
  EXPECT_LE(err_prev, BigDecimal::parse("1e-6"));
}

TEST(CumulativeGrid, RejectsTinyGrids) {
  std::vector<BigDecimal> f(3, BigDecimal::of(1));
  EXPECT_THROW(cumulative_integral_grid(f, BigDecimal::of(1), 10),
               std::invalid_argument);
}

}  // namespace
}  // namespace betaexact
