#pragma once

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "betaexact/analysis.hpp"
#include "betaexact/bernoulli_euler.hpp"
#include "betaexact/big_decimal.hpp"
#include "betaexact/series.hpp"
#include "betaexact/special_values.hpp"
#include "betaexact/wz.hpp"

namespace betaexact {

enum class Suite { routes, identities, oracle, wz, all };

inline Suite parse_suite(const std::string& s) {
  if (s == "routes") return Suite::routes;
  if (s == "identities") return Suite::identities;
  if (s == "oracle") return Suite::oracle;
  if (s == "wz") return Suite::wz;
  if (s == "all") return Suite::all;
  throw std::invalid_argument("unknown suite: " + s);
}

struct VerifyOptions {
  int max_order = 20;
  int digits = 30;
  BigDecimal tolerance = BigDecimal::parse("1e-25");
  std::size_t table_capacity = kDefaultTableCapacity;
  int wz_samples = 25;
  unsigned seed = 20240825;
};

struct CheckResult {
  std::string name;
  long l = 0;
  long k = 0;
  BigDecimal residual;
  BigDecimal tol;
  bool pass = false;

  std::string line() const {
    return "CHECK " + name + " l=" + std::to_string(l) +
           " k=" + std::to_string(k) + " residual=" + residual.to_string() +
           " tol=" + tol.to_string() + (pass ? " PASS" : " FAIL");
  }
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const CheckResult& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
};

namespace detail {

inline void push_exact_check(std::vector<CheckResult>& out,
                             const std::string& name, long l,
                             const PiMonomial& a, const PiMonomial& b,
                             int digits) {
  BigDecimal residual =
      (render_decimal(a, digits) - render_decimal(b, digits)).abs();
  out.push_back({name, l, 0, residual, BigDecimal(BigInt(0), 0), a == b});
}

inline void run_routes(std::vector<CheckResult>& out,
                       const VerifyOptions& opt) {
  std::size_t need = 2 * static_cast<std::size_t>(opt.max_order);
  if (need > opt.table_capacity) {
    throw TableCapacityError("max order " + std::to_string(opt.max_order) +
                             " needs table index " + std::to_string(need) +
                             " beyond capacity " +
                             std::to_string(opt.table_capacity));
  }
  BernoulliTable btable(need);
  EulerTable etable(need);
  for (int l = 1; l <= opt.max_order; ++l) {
    push_exact_check(out, "zeta_closed_vs_recurrence", l,
                     zeta_even_bernoulli(l, btable).value,
                     zeta_even_recurrence(l).value, opt.digits);
  }
  for (int l = 1; l <= opt.max_order; ++l) {
    PiMonomial a = beta_odd_euler(l - 1, etable).value;
    PiMonomial b = beta_odd_lambda(l, btable).value;
    PiMonomial c = beta_odd_zeta(l, btable).value;
    PiMonomial d = beta_odd_bernoulli(l, btable).value;
    bool equal = a == b && b == c && c == d;
    BigDecimal ra = render_decimal(a, opt.digits);
    BigDecimal worst(BigInt(0), 0);
    for (const PiMonomial* other : {&b, &c, &d}) {
      BigDecimal diff = (ra - render_decimal(*other, opt.digits)).abs();
      if (worst < diff) worst = diff;
    }
    out.push_back({"beta_routes_agree", l, 0, worst, BigDecimal(BigInt(0), 0),
                   equal});
  }
  for (int l = 1; l <= opt.max_order; ++l) {
    PiMonomial lam = lambda_even(l, btable).value;
    ZetaEvenValue z = zeta_even_recurrence(l);
    PiMonomial scaled(
        Rational(pow2(2 * l) - 1, pow2(2 * l)) * z.value.coeff(),
        z.value.pi_power());
    push_exact_check(out, "lambda_scaling_consistent", l, lam, scaled,
                     opt.digits);
  }
  for (int l = 1; l <= opt.max_order; ++l) {
    Rational a = euler_from_bernoulli(static_cast<std::size_t>(l), btable);
    Rational b = etable.at(2 * static_cast<std::size_t>(l));
    push_exact_check(out, "euler_secant_vs_bernoulli", l, PiMonomial(a, 0),
                     PiMonomial(b, 0), opt.digits);
  }
}

inline void run_identities(std::vector<CheckResult>& out,
                           const VerifyOptions& opt) {
  int digits = opt.digits;
  struct KernelCase {
    const char* x;
    long n;
  };
  for (const KernelCase& c :
       {KernelCase{"0.35", 8}, KernelCase{"0.9", 33}, KernelCase{"1.2", 57}}) {
    BigDecimal residual =
        dirichlet_kernel_identity_check(BigDecimal::parse(c.x), c.n, digits);
    out.push_back({"kernel_closed_form", 0, c.n, residual, opt.tolerance,
                   residual <= opt.tolerance});
  }

  BigDecimal half_pi = detail::half_pi_decimal(digits + kGuardDigits);
  int rep_max = std::min(opt.max_order, 4);
  for (int l = 1; l <= rep_max; ++l) {
    RepresentationCheckResult r =
        kernel_integral_representation_check(l, 100, half_pi, digits);
    BigDecimal tol = opt.tolerance + r.quad_error * BigDecimal::of(10);
    out.push_back({"integral_representation", l, 100, r.residual, tol,
                   r.residual <= tol});
  }

  for (int l = 2; l <= 4; ++l) {
    CollapseCheckResult r =
        iterated_integral_collapse_check(l, BigDecimal::of(1), 3);
    BigDecimal tol = opt.tolerance + BigDecimal::parse("1e-6");
    out.push_back(
        {"iterated_collapse", l, 3, r.residual, tol, r.residual <= tol});
  }

  {
    std::vector<long> ks{50};
    std::vector<BigDecimal> vals = oscillatory_integral_trend(1, ks, digits);
    BigDecimal residual = vals[0].abs();
    BigDecimal tol =
        opt.tolerance + div_to(half_pi, BigDecimal::of(50), digits);
    out.push_back(
        {"oscillatory_decay", 1, 50, residual, tol, residual <= tol});
  }

  EulerTable etable(6);
  int route_max = std::min(opt.max_order, 3);
  for (int l = 1; l <= route_max; ++l) {
    BigDecimal exact =
        render_decimal(beta_odd_euler(l - 1, etable).value, digits + 5);
    BigDecimal residual =
        (beta_via_kernel_integral(l, 400, digits) - exact).abs();
    BigDecimal tol =
        opt.tolerance + div_to(BigDecimal::of(1), BigDecimal::of(400), digits);
    out.push_back(
        {"beta_integral_route", l, 400, residual, tol, residual <= tol});
  }
}

inline void run_oracle(std::vector<CheckResult>& out,
                       const VerifyOptions& opt) {
  int digits = opt.digits;
  BernoulliTable btable(14);
  EulerTable etable(14);
  int beta_max = std::min(15, 2 * opt.max_order - 1);
  for (int s = 1; s <= beta_max; s += 2) {
    PiMonomial exact = beta_odd_euler((s - 1) / 2, etable).value;
    SeriesEstimate est = beta_series(s, digits);
    BigDecimal residual = (render_decimal(exact, digits) - est.value).abs();
    out.push_back({"beta_series_oracle", s, est.terms_used, residual,
                   opt.tolerance, residual <= opt.tolerance});
  }
  int even_max = std::min(14, 2 * opt.max_order);
  for (int s = 2; s <= even_max; s += 2) {
    PiMonomial exact = zeta_even_bernoulli(s / 2, btable).value;
    SeriesEstimate est = zeta_series(s, digits);
    BigDecimal residual = (render_decimal(exact, digits) - est.value).abs();
    out.push_back({"zeta_series_oracle", s, est.terms_used, residual,
                   opt.tolerance, residual <= opt.tolerance});
  }
  for (int s = 2; s <= even_max; s += 2) {
    PiMonomial exact = lambda_even(s / 2, btable).value;
    SeriesEstimate est = lambda_series(s, digits);
    BigDecimal residual = (render_decimal(exact, digits) - est.value).abs();
    out.push_back({"lambda_series_oracle", s, est.terms_used, residual,
                   opt.tolerance, residual <= opt.tolerance});
  }
}

inline void run_wz(std::vector<CheckResult>& out, const VerifyOptions& opt) {
  int digits = opt.digits;
  std::vector<WzPairSpec> families = {{WzFamily::F1G1, 1},
                                      {WzFamily::F2G2, 1},
                                      {WzFamily::F3G3, 1},
                                      {WzFamily::even_order, 2},
                                      {WzFamily::odd_order, 2}};
  for (std::size_t f = 0; f < families.size(); ++f) {
    std::mt19937 rng(opt.seed + static_cast<unsigned>(f));
    BigDecimal worst(BigInt(0), 0);
    for (int rep = 0; rep < opt.wz_samples; ++rep) {
      BigDecimal x(BigInt(static_cast<long>(rng() % 3000) + 1), 3);
      long k = 1 + static_cast<long>(rng() % 40);
      BigDecimal residual = wz_equation_check(families[f], x, k, digits);
      if (worst < residual) worst = residual;
    }
    out.push_back({"wz_pair_equation", static_cast<long>(f + 1),
                   opt.wz_samples, worst, opt.tolerance,
                   worst <= opt.tolerance});
  }
  for (std::size_t f = 0; f < families.size(); ++f) {
    TelescopeCheckResult r = wz_telescoped_integral_check(
        families[f], BigDecimal::parse("0.25"), BigDecimal::parse("1.25"), 2,
        6, digits);
    BigDecimal tol = opt.tolerance + r.quad_error * BigDecimal::of(10);
    out.push_back({"wz_telescoped_integral", static_cast<long>(f + 1), 6,
                   r.residual, tol, r.residual <= tol});
  }
}

}  // namespace detail

inline VerifyReport run_suite(Suite suite, const VerifyOptions& opt) {
  if (opt.max_order < 1) throw std::invalid_argument("max order must be >= 1");
  if (opt.digits < 1) throw std::invalid_argument("digits must be >= 1");
  VerifyReport report;
  if (suite == Suite::routes || suite == Suite::all) {
    detail::run_routes(report.checks, opt);
  }
  if (suite == Suite::identities || suite == Suite::all) {
    detail::run_identities(report.checks, opt);
  }
  if (suite == Suite::oracle || suite == Suite::all) {
    detail::run_oracle(report.checks, opt);
  }
  if (suite == Suite::wz || suite == Suite::all) {
    detail::run_wz(report.checks, opt);
  }
  return report;
}

}  // namespace betaexact
