#pragma once

#include <stdexcept>
#include <utility>

#include "betaexact/big_decimal.hpp"
#include "betaexact/decimal_math.hpp"
#include "betaexact/pi_monomial.hpp"
#include "betaexact/rational.hpp"

namespace betaexact {

/// A numeric series evaluation together with a rigorous bound on its
/// distance from the true limit.  The value carries kGuardDigits beyond
/// the precision that was requested.
struct SeriesEstimate {
  BigDecimal value;
  BigDecimal error_bound;
  long terms_used;
};

/// Exact closed-form value rendered as a plain decimal, truncated toward
/// zero to exactly `digits` fractional digits.  Internally carried with
/// guard digits, so rendering the same value at growing precision only
/// extends the digit string.
inline BigDecimal render_decimal(const PiMonomial& v, int digits) {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  if (v.is_zero()) return BigDecimal(BigInt(0), digits);
  int ws = digits + kGuardDigits;
  BigDecimal pi_pow = pow_to(pi_decimal(ws + 8), v.pi_power(), ws + 8);
  BigDecimal num = BigDecimal(v.coeff().num(), 0) * pi_pow;
  return div_to(num, BigDecimal(v.coeff().den(), 0), ws).truncate(digits);
}

namespace detail {

/// Accelerated evaluation of sum_{k>=0} (-1)^k a_k for a totally monotone
/// positive sequence a_k <= 1, using the Chebyshev-weight scheme: with
///   t_0 = 1, t_1 = 3, t_{j+1} = 6 t_j - t_{j-1}   (t_n ~ (3+sqrt(8))^n / 2)
/// the weighted partial sum s/d with d = t_n differs from the limit by at
/// most a small multiple of 1/d.  The integer weights are produced by the
///   c <- b - c,  b <- 2(k+n)(k-n) b / ((2k+1)(k+1))
/// recurrence and applied exactly.
template <typename TermFn>
SeriesEstimate accelerated_alternating_sum(TermFn&& term, int digits) {
  int ws = digits + kGuardDigits;
  BigInt target = 4 * pow10(digits + 2);
  BigInt tprev = 1, t = 3;
  long n = 1;
  while (t < target) {
    BigInt next = 6 * t - tprev;
    tprev = t;
    t = next;
    ++n;
  }
  const BigInt d = t;
  Rational b(-1);
  Rational c(-d);
  BigDecimal s(BigInt(0), ws);
  for (long k = 0; k < n; ++k) {
    c = b - c;
    if (!c.is_integer()) throw std::logic_error("weight recurrence broke");
    s = s + mul_to(BigDecimal(c.num(), 0), term(k, ws), ws);
    b *= Rational(BigInt(2) * (k + n) * (k - n),
                  BigInt(2 * k + 1) * (k + 1));
  }
  BigDecimal value = div_to(s, BigDecimal(d, 0), ws);
  BigDecimal bound = div_to(BigDecimal::of(8), BigDecimal(d, 0), ws) +
                     BigDecimal(BigInt(2 * n + 6), ws);
  return {value, bound, n};
}

}  // namespace detail

/// beta(s) = sum_{k>=0} (-1)^k / (2k+1)^s by accelerated summation.
/// The reported bound is well below 10^{-digits}.
inline SeriesEstimate beta_series(int s, int digits) {
  if (s < 1) throw std::invalid_argument("beta series needs s >= 1");
  if (digits < 1) throw std::invalid_argument("digits must be positive");
  return detail::accelerated_alternating_sum(
      [s](long k, int ws) {
        BigInt den = boost::multiprecision::pow(BigInt(2 * k + 1),
                                                static_cast<unsigned>(s));
        return div_to(BigDecimal::of(1), BigDecimal(std::move(den), 0), ws);
      },
      digits);
}

/// zeta(s) for s >= 2 through the alternating form
///   eta(s) = sum_{k>=0} (-1)^k / (k+1)^s,  zeta = eta * 2^{s-1}/(2^{s-1}-1)
/// so the accelerated engine applies; the bound is scaled along.
inline SeriesEstimate zeta_series(int s, int digits) {
  if (s < 2) throw std::invalid_argument("zeta series needs s >= 2");
  if (digits < 1) throw std::invalid_argument("digits must be positive");
  SeriesEstimate eta = detail::accelerated_alternating_sum(
      [s](long k, int ws) {
        BigInt den = boost::multiprecision::pow(BigInt(k + 1),
                                                static_cast<unsigned>(s));
        return div_to(BigDecimal::of(1), BigDecimal(std::move(den), 0), ws);
      },
      digits);
  int ws = digits + kGuardDigits;
  BigDecimal num = eta.value * BigDecimal(pow2(s - 1), 0);
  BigDecimal value = div_to(num, BigDecimal(pow2(s - 1) - 1, 0), ws);
  BigDecimal bound = eta.error_bound + eta.error_bound + ulp_at(ws);
  return {value, bound, eta.terms_used};
}

/// lambda(s) = (2^s - 1)/2^s * zeta(s); the factor is below one, so the
/// zeta bound carries over.
inline SeriesEstimate lambda_series(int s, int digits) {
  SeriesEstimate z = zeta_series(s, digits);
  int ws = digits + kGuardDigits;
  BigDecimal num = z.value * BigDecimal(pow2(s) - 1, 0);
  BigDecimal value = div_to(num, BigDecimal(pow2(s), 0), ws);
  return {value, z.error_bound + ulp_at(ws), z.terms_used};
}

namespace detail {

inline long long direct_term_count(int s, int digits, int density) {
  // smallest N with density * N^{s-1} (s-1) >= 10^digits, by bisection
  BigInt goal = pow10(digits);
  long long lo = 1, hi = 2;
  auto enough = [&](long long n) {
    return density * boost::multiprecision::pow(BigInt(n),
                                               static_cast<unsigned>(s - 1)) *
               (s - 1) >=
           goal;
  };
  while (!enough(hi)) {
    hi *= 2;
    if (hi > (1LL << 40)) {
      throw std::domain_error("direct summation out of reach here");
    }
  }
  while (lo < hi) {
    long long mid = lo + (hi - lo) / 2;
    if (enough(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

}  // namespace detail

inline constexpr long long kDirectTermCap = 2'000'000;

/// zeta(s) by plain term-by-term summation to N terms, where N makes the
/// integral-test tail bound N^{1-s}/(s-1) fall to 10^{-digits}; that tail
/// integral is then added as a correction, pinning the residual under
/// N^{-s}.  Intended for modest precision; refuses runs needing more than
/// kDirectTermCap terms.
inline SeriesEstimate zeta_series_direct(int s, int digits) {
  if (s < 2) throw std::invalid_argument("zeta series needs s >= 2");
  if (digits < 1) throw std::invalid_argument("digits must be positive");
  long long n_terms = detail::direct_term_count(s, digits, 1);
  if (n_terms > kDirectTermCap) {
    throw std::domain_error("direct zeta summation would need " +
                            std::to_string(n_terms) + " terms");
  }
  int ws = digits + kGuardDigits;
  BigDecimal sum(BigInt(0), ws);
  for (long long n = 1; n <= n_terms; ++n) {
    BigInt den = boost::multiprecision::pow(BigInt(n),
                                            static_cast<unsigned>(s));
    sum = sum + div_to(BigDecimal::of(1), BigDecimal(std::move(den), 0), ws);
  }
  BigInt tail_den = boost::multiprecision::pow(
                        BigInt(n_terms), static_cast<unsigned>(s - 1)) *
                    (s - 1);
  BigDecimal value =
      sum + div_to(BigDecimal::of(1), BigDecimal(tail_den, 0), ws);
  BigInt res_den = boost::multiprecision::pow(BigInt(n_terms),
                                              static_cast<unsigned>(s));
  BigDecimal bound =
      div_to(BigDecimal::of(1), BigDecimal(res_den, 0), ws) +
      BigDecimal(BigInt(n_terms + 4), ws);
  return {value, bound, static_cast<long>(n_terms)};
}

/// lambda(s) the same way over odd terms only; the tail integral carries
/// the 1/2 density of the odd integers.
inline SeriesEstimate lambda_series_direct(int s, int digits) {
  if (s < 2) throw std::invalid_argument("lambda series needs s >= 2");
  if (digits < 1) throw std::invalid_argument("digits must be positive");
  long long m_max = detail::direct_term_count(s, digits, 2);
  if (m_max % 2 == 0) ++m_max;
  if (m_max > kDirectTermCap) {
    throw std::domain_error("direct lambda summation would need " +
                            std::to_string(m_max / 2) + " terms");
  }
  int ws = digits + kGuardDigits;
  BigDecimal sum(BigInt(0), ws);
  long terms = 0;
  for (long long m = 1; m <= m_max; m += 2) {
    BigInt den = boost::multiprecision::pow(BigInt(m),
                                            static_cast<unsigned>(s));
    sum = sum + div_to(BigDecimal::of(1), BigDecimal(std::move(den), 0), ws);
    ++terms;
  }
  BigInt tail_den = 2 * (s - 1) *
                    boost::multiprecision::pow(BigInt(m_max),
                                               static_cast<unsigned>(s - 1));
  BigDecimal value =
      sum + div_to(BigDecimal::of(1), BigDecimal(tail_den, 0), ws);
  BigInt res_den = boost::multiprecision::pow(BigInt(m_max),
                                              static_cast<unsigned>(s));
  BigDecimal bound =
      div_to(BigDecimal::of(1), BigDecimal(res_den, 0), ws) +
      BigDecimal(BigInt(terms + 4), ws);
  return {value, bound, terms};
}

}  // namespace betaexact
