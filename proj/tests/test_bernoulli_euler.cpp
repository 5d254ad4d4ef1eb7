#include "betaexact/bernoulli_euler.hpp"

#include <gtest/gtest.h>

#include <random>

namespace betaexact {
namespace {

const BernoulliTable& shared_bernoulli() {
  static BernoulliTable table(200);
  return table;
}

const EulerTable& shared_euler() {
  static EulerTable table(200);
  return table;
}

TEST(BernoulliTable, KnownValues) {
  const BernoulliTable& t = shared_bernoulli();
  EXPECT_EQ(t.at(0), Rational(1));
  EXPECT_EQ(t.at(1), Rational(-1, 2));
  EXPECT_EQ(t.at(2), Rational(1, 6));
  EXPECT_EQ(t.at(3), Rational(0));
  EXPECT_EQ(t.at(4), Rational(-1, 30));
  EXPECT_EQ(t.at(6), Rational(1, 42));
  EXPECT_EQ(t.at(8), Rational(-1, 30));
  EXPECT_EQ(t.at(10), Rational(5, 66));
  EXPECT_EQ(t.at(12), Rational(-691, 2730));
  EXPECT_EQ(t.at(20), Rational(BigInt(-174611), BigInt(330)));
}

TEST(BernoulliTable, OddEntriesVanish) {
  const BernoulliTable& t = shared_bernoulli();
  for (std::size_t n = 3; n <= t.max_index(); n += 2) {
    EXPECT_TRUE(t.at(n).is_zero()) << "n=" << n;
  }
}

TEST(BernoulliTable, EvenEntriesAlternateInSign) {
  const BernoulliTable& t = shared_bernoulli();
  for (std::size_t n = 1; 2 * n <= 60; ++n) {
    int expected = (n % 2 == 1) ? 1 : -1;  // sign of B_{2n} is (-1)^{n+1}
    EXPECT_EQ(t.at(2 * n).sign(), expected) << "2n=" << 2 * n;
  }
}

TEST(BernoulliTable, CapacityIsEnforced) {
  EXPECT_THROW(shared_bernoulli().at(201), TableCapacityError);
  BernoulliTable small(10);
  EXPECT_EQ(small.at(10), Rational(5, 66));
  EXPECT_THROW(small.at(11), TableCapacityError);
}

TEST(EulerTable, KnownValues) {
  const EulerTable& t = shared_euler();
  EXPECT_EQ(t.at(0), Rational(1));
  EXPECT_EQ(t.at(2), Rational(-1));
  EXPECT_EQ(t.at(4), Rational(5));
  EXPECT_EQ(t.at(6), Rational(-61));
  EXPECT_EQ(t.at(8), Rational(1385));
  EXPECT_EQ(t.at(10), Rational(-50521));
  EXPECT_EQ(t.at(12), Rational(2702765));
}

TEST(EulerTable, OddEntriesVanish) {
  const EulerTable& t = shared_euler();
  for (std::size_t n = 1; n <= t.max_index(); n += 2) {
    EXPECT_TRUE(t.at(n).is_zero()) << "n=" << n;
  }
}

TEST(EulerTable, EvenEntriesAreAlternatingIntegers) {
  const EulerTable& t = shared_euler();
  for (std::size_t n = 0; 2 * n <= 100; ++n) {
    const Rational& e = t.at(2 * n);
    EXPECT_TRUE(e.is_integer()) << "2n=" << 2 * n;
    int expected = (n % 2 == 0) ? 1 : -1;  // sign of E_{2n} is (-1)^n
    EXPECT_EQ(e.sign(), expected) << "2n=" << 2 * n;
  }
}

TEST(EulerTable, CapacityIsEnforced) {
  EXPECT_THROW(shared_euler().at(201), TableCapacityError);
  EulerTable small(8);
  EXPECT_EQ(small.at(8), Rational(1385));
  EXPECT_THROW(small.at(9), TableCapacityError);
}

TEST(EulerFromBernoulli, MatchesSecantRecurrence) {
  // The binomial-weighted Bernoulli sum must reproduce the secant-number
  // recurrence values index for index.
  for (std::size_t l = 0; l <= 40; ++l) {
    EXPECT_EQ(euler_from_bernoulli(l, shared_bernoulli()),
              shared_euler().at(2 * l))
        << "l=" << l;
  }
}

TEST(BernoulliPoly, EndpointValues) {
  const BernoulliTable& t = shared_bernoulli();
  EXPECT_EQ(bernoulli_poly(0, Rational(1, 3), t), Rational(1));
  EXPECT_EQ(bernoulli_poly(1, Rational(0), t), Rational(-1, 2));
  EXPECT_EQ(bernoulli_poly(1, Rational(1), t), Rational(1, 2));
  for (std::size_t n = 2; n <= 20; ++n) {
    EXPECT_EQ(bernoulli_poly(n, Rational(0), t), t.at(n)) << "n=" << n;
    EXPECT_EQ(bernoulli_poly(n, Rational(1), t), t.at(n)) << "n=" << n;
  }
}

TEST(BernoulliPoly, PropertyForwardDifference) {
  // Property: B_n(x+1) - B_n(x) == n x^{n-1}
  const BernoulliTable& t = shared_bernoulli();
  std::mt19937 rng(9001);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = 1 + rng() % 12;
    Rational x(static_cast<long>(rng() % 21) - 10,
               static_cast<long>(rng() % 9) + 1);
    Rational lhs = bernoulli_poly(n, x + Rational(1), t) -
                   bernoulli_poly(n, x, t);
    Rational rhs = Rational(BigInt(n)) * x.pow(static_cast<long long>(n) - 1);
    EXPECT_EQ(lhs, rhs) << "n=" << n << " x=" << x.to_string();
  }
}

TEST(BernoulliPoly, HalfArgumentIdentity) {
  // B_{2n}(1/2) == (2^{1-2n} - 1) B_{2n}
  const BernoulliTable& t = shared_bernoulli();
  for (std::size_t n = 1; n <= 40; ++n) {
    Rational lhs = bernoulli_poly(2 * n, Rational(1, 2), t);
    Rational rhs =
        (Rational(1, pow2(2 * n - 1)) - Rational(1)) * t.at(2 * n);
    EXPECT_EQ(lhs, rhs) << "n=" << n;
  }
}

}  // namespace
}  // namespace betaexact
