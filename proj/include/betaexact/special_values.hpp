#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "betaexact/bernoulli_euler.hpp"
#include "betaexact/pi_monomial.hpp"
#include "betaexact/rational.hpp"

namespace betaexact {

enum class ZetaRoute { bernoulli_formula, recurrence };
enum class BetaRoute { euler_formula, lambda_sum, zeta_sum, bernoulli_sum };

struct ZetaEvenValue {
  int argument;       // the even s in zeta(s)
  PiMonomial value;   // pi_power == argument
  ZetaRoute route;
};

struct LambdaEvenValue {
  int argument;
  PiMonomial value;
};

struct BetaOddValue {
  int argument;       // the odd s in beta(s)
  PiMonomial value;   // pi_power == argument
  BetaRoute route;
};

namespace detail {
inline Rational alt_sign(long long e) {
  // (-1)^e
  return Rational(e % 2 == 0 ? 1 : -1);
}
}  // namespace detail

/// zeta(2n) = 2^{2n-1} (-1)^{n-1} B_{2n} pi^{2n} / (2n)!
inline ZetaEvenValue zeta_even_bernoulli(int n, const BernoulliTable& table) {
  if (n < 1) throw std::invalid_argument("zeta closed form needs n >= 1");
  Rational coeff = detail::alt_sign(n - 1) * Rational(pow2(2 * n - 1)) *
                   table.at(2 * n) / Rational(factorial(2 * n));
  return {2 * n, PiMonomial(coeff, 2 * n), ZetaRoute::bernoulli_formula};
}

/// zeta(2l) from the self-contained recurrence
///   zeta(2l) = (2^{2l-1} / (1 - 2^{2l})) * {
///       [(-1)^{l+1}/(4l) + (-1)^l/2] pi^{2l} / Gamma(2l)
///       + sum_{j=1}^{l-1} (-1)^{l-j} pi^{2(l-j)} zeta(2j) / Gamma(2(l-j)+1) }
/// consuming no Bernoulli numbers; lower orders are built up iteratively.
inline ZetaEvenValue zeta_even_recurrence(int l) {
  if (l < 1) throw std::invalid_argument("zeta recurrence needs l >= 1");
  std::vector<Rational> c(static_cast<std::size_t>(l) + 1);
  for (int m = 1; m <= l; ++m) {
    Rational bracket =
        (detail::alt_sign(m + 1) / Rational(BigInt(4) * m) +
         detail::alt_sign(m) / Rational(2)) /
        Rational(factorial(2 * m - 1));
    Rational sum = bracket;
    for (int j = 1; j < m; ++j) {
      sum += detail::alt_sign(m - j) * c[j] /
             Rational(factorial(2 * (m - j)));
    }
    c[m] = Rational(pow2(2 * m - 1), BigInt(1) - pow2(2 * m)) * sum;
  }
  return {2 * l, PiMonomial(c[l], 2 * l), ZetaRoute::recurrence};
}

/// lambda(2n) = ((2^{2n} - 1) / 2^{2n}) zeta(2n)
inline LambdaEvenValue lambda_even(int n, const BernoulliTable& table) {
  if (n < 1) throw std::invalid_argument("lambda closed form needs n >= 1");
  ZetaEvenValue z = zeta_even_bernoulli(n, table);
  Rational coeff =
      Rational(pow2(2 * n) - 1, pow2(2 * n)) * z.value.coeff();
  return {2 * n, PiMonomial(coeff, 2 * n)};
}

/// beta(2n+1) = (-1)^n E_{2n} / (2 (2n)!) * (pi/2)^{2n+1}
inline BetaOddValue beta_odd_euler(int n, const EulerTable& table) {
  if (n < 0) throw std::invalid_argument("beta closed form needs n >= 0");
  Rational coeff = detail::alt_sign(n) * table.at(2 * n) /
                   Rational(BigInt(2) * factorial(2 * n) * pow2(2 * n + 1));
  return {2 * n + 1, PiMonomial(coeff, 2 * n + 1), BetaRoute::euler_formula};
}

/// beta(2l-1) = ((-1)^{l+1} pi^{2l-1} / 2^{2l}) *
///   [ 1/Gamma(2l-1) + 2 sum_{j=1}^{l-1} (-1)^j 2^{2j} lambda(2j)
///                                        / (Gamma(2l-2j) pi^{2j}) ]
inline BetaOddValue beta_odd_lambda(int l, const BernoulliTable& table) {
  if (l < 1) throw std::invalid_argument("beta closed form needs l >= 1");
  Rational bracket(1, factorial(2 * l - 2));
  for (int j = 1; j < l; ++j) {
    Rational lam = lambda_even(j, table).value.coeff();
    bracket += Rational(2) * detail::alt_sign(j) * Rational(pow2(2 * j)) *
               lam / Rational(factorial(2 * l - 2 * j - 1));
  }
  Rational coeff = detail::alt_sign(l + 1) / Rational(pow2(2 * l)) * bracket;
  return {2 * l - 1, PiMonomial(coeff, 2 * l - 1), BetaRoute::lambda_sum};
}

/// beta(2l-1) = ((-1)^{l+1} pi^{2l-1} / 2^{2l}) *
///   [ 1/Gamma(2l-1) + 2 sum_{j=1}^{l-1} (-1)^j (2^{2j} - 1) zeta(2j)
///                                        / (Gamma(2l-2j) pi^{2j}) ]
inline BetaOddValue beta_odd_zeta(int l, const BernoulliTable& table) {
  if (l < 1) throw std::invalid_argument("beta closed form needs l >= 1");
  Rational bracket(1, factorial(2 * l - 2));
  for (int j = 1; j < l; ++j) {
    Rational zet = zeta_even_bernoulli(j, table).value.coeff();
    bracket += Rational(2) * detail::alt_sign(j) *
               Rational(pow2(2 * j) - 1) * zet /
               Rational(factorial(2 * l - 2 * j - 1));
  }
  Rational coeff = detail::alt_sign(l + 1) / Rational(pow2(2 * l)) * bracket;
  return {2 * l - 1, PiMonomial(coeff, 2 * l - 1), BetaRoute::zeta_sum};
}

/// beta(2l-1) = ((-1)^{l+1} pi^{2l-1} / 2^{2l}) *
///   [ 1/Gamma(2l-1) - sum_{j=1}^{l-1} 2^{2j} (2^{2j} - 1) B_{2j}
///                                      / (Gamma(2l-2j) Gamma(2j+1)) ]
inline BetaOddValue beta_odd_bernoulli(int l, const BernoulliTable& table) {
  if (l < 1) throw std::invalid_argument("beta closed form needs l >= 1");
  Rational bracket(1, factorial(2 * l - 2));
  for (int j = 1; j < l; ++j) {
    bracket -= Rational(pow2(2 * j)) * Rational(pow2(2 * j) - 1) *
               table.at(2 * j) /
               Rational(factorial(2 * l - 2 * j - 1) * factorial(2 * j));
  }
  Rational coeff = detail::alt_sign(l + 1) / Rational(pow2(2 * l)) * bracket;
  return {2 * l - 1, PiMonomial(coeff, 2 * l - 1), BetaRoute::bernoulli_sum};
}

}  // namespace betaexact
