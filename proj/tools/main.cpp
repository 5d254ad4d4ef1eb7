#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "betaexact/series.hpp"
#include "betaexact/special_values.hpp"
#include "betaexact/verify.hpp"

namespace {

using namespace betaexact;

std::size_t table_capacity() {
  const char* env = std::getenv("BETA_EXACT_TABLE_MAX");
  if (env == nullptr) return kDefaultTableCapacity;
  std::string raw(env);
  if (raw.empty() || raw.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument(
        "BETA_EXACT_TABLE_MAX must be a non-negative integer");
  }
  return static_cast<std::size_t>(std::stoull(raw));
}

void require_parity(const std::string& function, long long argument) {
  if (function == "beta") {
    if (argument < 1 || argument % 2 == 0) {
      throw std::invalid_argument(
          "beta closed forms exist at odd arguments only");
    }
  } else {
    if (argument < 2 || argument % 2 != 0) {
      throw std::invalid_argument(
          function + " closed forms exist at even arguments only");
    }
  }
}

void require_capacity(std::size_t need, std::size_t cap) {
  if (need > cap) {
    throw TableCapacityError("needs table index " + std::to_string(need) +
                             " beyond capacity " + std::to_string(cap) +
                             " (override with BETA_EXACT_TABLE_MAX)");
  }
}

PiMonomial exact_value(const std::string& function, long long argument) {
  std::size_t cap = table_capacity();
  if (function == "beta") {
    std::size_t need =
        argument > 1 ? static_cast<std::size_t>(argument - 1) : 0;
    require_capacity(need, cap);
    BernoulliTable table(need);
    return beta_odd_lambda(static_cast<int>((argument + 1) / 2), table).value;
  }
  std::size_t need = static_cast<std::size_t>(argument);
  require_capacity(need, cap);
  BernoulliTable table(need);
  if (function == "zeta") {
    return zeta_even_bernoulli(static_cast<int>(argument / 2), table).value;
  }
  return lambda_even(static_cast<int>(argument / 2), table).value;
}

int run_eval(const std::string& function, long long argument,
             const std::string& format, int digits) {
  require_parity(function, argument);
  PiMonomial v = exact_value(function, argument);
  if (format == "exact") {
    std::cout << v.to_string() << "\n";
  } else if (format == "decimal") {
    std::cout << render_decimal(v, digits).to_string() << "\n";
  } else {
    nlohmann::ordered_json j;
    j["function"] = function;
    j["argument"] = argument;
    j["coeff_num"] = v.coeff().num().str();
    j["coeff_den"] = v.coeff().den().str();
    j["pi_power"] = v.pi_power();
    j["decimal"] = render_decimal(v, digits).to_string();
    std::cout << j.dump() << "\n";
  }
  return 0;
}

int run_table(const std::string& function, int max_order, int digits) {
  if (max_order == 0) return 0;
  std::size_t cap = table_capacity();
  bool is_beta = function == "beta";
  std::size_t need = is_beta ? static_cast<std::size_t>(2 * max_order - 2)
                             : static_cast<std::size_t>(2 * max_order);
  require_capacity(need, cap);
  BernoulliTable table(need);
  for (int i = 1; i <= max_order; ++i) {
    long long argument = is_beta ? 2 * i - 1 : 2 * i;
    PiMonomial v;
    if (is_beta) {
      v = beta_odd_lambda(i, table).value;
    } else if (function == "zeta") {
      v = zeta_even_bernoulli(i, table).value;
    } else {
      v = lambda_even(i, table).value;
    }
    std::cout << argument << "\t" << v.to_string() << "\t"
              << render_decimal(v, digits).to_string() << "\n";
  }
  return 0;
}

int run_verify(const std::string& suite, int max_order, int digits,
               const std::string& tolerance) {
  VerifyOptions opt;
  opt.max_order = max_order;
  opt.digits = digits;
  opt.tolerance = BigDecimal::parse(tolerance);
  opt.table_capacity = table_capacity();
  VerifyReport report = run_suite(parse_suite(suite), opt);
  for (const CheckResult& c : report.checks) {
    std::cout << c.line() << "\n";
  }
  return report.all_passed() ? 0 : 1;
}

int run_oracle(const std::string& function, long long argument, int digits) {
  require_parity(function, argument);
  int s = static_cast<int>(argument);
  SeriesEstimate est;
  if (function == "beta") {
    est = beta_series(s, digits);
  } else if (function == "zeta") {
    try {
      est = zeta_series_direct(s, digits);
    } catch (const std::domain_error&) {
      est = zeta_series(s, digits);
    }
  } else {
    try {
      est = lambda_series_direct(s, digits);
    } catch (const std::domain_error&) {
      est = lambda_series(s, digits);
    }
  }
  std::cout << est.value.truncate(digits).to_string() << "\n";
  std::cout << "error_bound " << est.error_bound.to_string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact special values of zeta, lambda, and beta as rational multiples "
      "of pi powers, with independent numerical cross-checks"};
  app.require_subcommand(1);

  std::string function;
  long long argument = 0;
  int digits = 30;
  int max_order = 20;
  std::string tolerance = "1e-25";
  std::string format = "exact";
  std::string suite = "all";

  auto add_function = [&](CLI::App* cmd) {
    cmd->add_option("function", function, "beta, zeta, or lambda")
        ->required()
        ->check(CLI::IsMember({"beta", "zeta", "lambda"}));
    cmd->add_option("argument", argument,
                    "integer argument (odd for beta, even for zeta/lambda)")
        ->required();
  };
  auto add_digits = [&](CLI::App* cmd) {
    cmd->add_option("--digits", digits, "fractional digits of decimal output")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* eval = app.add_subcommand(
      "eval", "Print one exact closed-form value");
  add_function(eval);
  add_digits(eval);
  eval->add_option("--format", format, "exact, decimal, or json")
      ->check(CLI::IsMember({"exact", "decimal", "json"}));

  CLI::App* table = app.add_subcommand(
      "table", "Print closed-form values up to an order");
  table->add_option("function", function, "beta, zeta, or lambda")
      ->required()
      ->check(CLI::IsMember({"beta", "zeta", "lambda"}));
  table->add_option("--max-order", max_order, "number of rows")
      ->check(CLI::NonNegativeNumber);
  add_digits(table);

  CLI::App* verify = app.add_subcommand(
      "verify", "Run the verification suites and report CHECK lines");
  verify->add_option("--suite", suite,
                     "routes, identities, oracle, wz, or all")
      ->check(CLI::IsMember({"routes", "identities", "oracle", "wz", "all"}));
  verify->add_option("--max-order", max_order,
                     "closed-form routes are compared up to this order");
  add_digits(verify);
  verify->add_option("--tolerance", tolerance,
                     "numerical comparison tolerance (decimal string)");

  CLI::App* oracle = app.add_subcommand(
      "oracle", "Evaluate a defining series numerically with an error bound");
  add_function(oracle);
  add_digits(oracle);

  try {
    app.parse(argc, argv);
    if (eval->parsed()) return run_eval(function, argument, format, digits);
    if (table->parsed()) return run_table(function, max_order, digits);
    if (verify->parsed()) {
      return run_verify(suite, max_order, digits, tolerance);
    }
    return run_oracle(function, argument, digits);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const TableCapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
