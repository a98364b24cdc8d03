#include <chrono>
#include <complex>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cyclosum/arith.hpp"
#include "cyclosum/closed_forms.hpp"
#include "cyclosum/cyclotomic.hpp"
#include "cyclosum/errors.hpp"
#include "cyclosum/expsums.hpp"
#include "cyclosum/json_io.hpp"
#include "cyclosum/matrix_groups.hpp"
#include "cyclosum/residue_chars.hpp"
#include "cyclosum/verify.hpp"

namespace {

using namespace cyclosum;
using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

// --chi accepts the index in the canonical enumeration, or an explicit
// exponent vector "e1,e2,..." (comma required, so single-generator vectors
// use a trailing comma or the index form).
MultChar parse_chi(std::int64_t n, const std::string& spec) {
  if (spec.find(',') == std::string::npos)
    return char_from_index(n, std::stoll(spec));
  std::vector<std::int64_t> exps;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ','))
    if (!part.empty()) exps.push_back(std::stoll(part));
  return MultChar(n, std::move(exps));
}

std::string format_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

void emit_csv(const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  for (std::size_t i = 0; i < header.size(); ++i)
    os << (i ? "," : "") << csv_field(header[i]);
  os << "\r\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
    os << "\r\n";
  }
  std::cout << os.str();
}

struct SumArgs {
  std::string kind;
  std::int64_t n = 0;
  std::int64_t r = 2;
  std::int64_t a = 1;
  std::int64_t k = 1;
  std::string chi = "0";
  std::string method = "closed-form";
  std::string format = "json";
  std::int64_t budget = kDefaultBudget;
};

int do_sum(const SumArgs& args) {
  const auto start = Clock::now();
  const bool direct = args.method == "direct";
  const std::int64_t n = args.n;
  Cyclotomic value;
  ordered_json params{{"kind", args.kind}, {"n", n}};
  if (args.kind == "gauss") {
    const MultChar chi = parse_chi(n, args.chi);
    const auto p = make_gauss_params(n, chi, args.a);
    value = direct ? gauss_sum_direct(p) : gauss_sum_reduced(p);
    params["chi"] = char_to_json(chi);
    params["a"] = args.a;
  } else if (args.kind == "ramanujan") {
    value = direct ? ramanujan_direct(n, args.k) : Cyclotomic(ramanujan_divisor(n, args.k));
    params["k"] = args.k;
  } else if (args.kind == "kloosterman") {
    const AddChar lambda{n, ((args.a % n) + n) % n};
    value = direct ? kloosterman_direct(args.r, n, lambda, args.budget)
                   : kloosterman_crt(args.r, n, lambda, args.budget);
    params["r"] = args.r;
    params["a"] = args.a;
  } else if (args.kind == "gl") {
    const MultChar chi = parse_chi(n, args.chi);
    const AddChar lambda{n, ((args.a % n) + n) % n};
    value = direct ? gl_gauss_bruteforce(args.r, n, chi, lambda, args.budget)
                   : gl_gauss_closed(args.r, n, chi, lambda).value;
    params["r"] = args.r;
    params["chi"] = char_to_json(chi);
    params["a"] = args.a;
  } else {  // sl
    const AddChar lambda{n, ((args.a % n) + n) % n};
    value = direct ? sl_gauss_bruteforce(args.r, n, lambda, args.budget)
                   : sl_gauss_closed(args.r, n, lambda, args.budget);
    params["r"] = args.r;
    params["a"] = args.a;
  }
  if (args.format == "csv") {
    const std::complex<double> z = to_complex(value);
    emit_csv({"kind", "n", "r", "a", "k", "chi", "method", "approx_re", "approx_im", "exact"},
             {{args.kind, std::to_string(n),
               params.contains("r") ? std::to_string(args.r) : "",
               params.contains("a") ? std::to_string(args.a) : "",
               params.contains("k") ? std::to_string(args.k) : "",
               params.contains("chi") ? args.chi : "", args.method, format_double(z.real()),
               format_double(z.imag()), to_exact_string(value)}});
    return 0;
  }
  ordered_json doc = make_envelope("sum", std::move(params));
  doc["value"] = cyclotomic_to_json(value);
  doc["method"] = args.method;
  doc["elapsed_ms"] = elapsed_ms_since(start);
  emit(doc);
  return 0;
}

struct CountArgs {
  std::int64_t r = 2;
  std::int64_t n = 0;
  std::int64_t beta = 0;
  bool all = false;
  bool beta_given = false;
  std::string method = "closed-form";
  std::string format = "json";
  std::int64_t budget = kDefaultBudget;
};

int do_count(const CountArgs& args) {
  const auto start = Clock::now();
  if (args.all == args.beta_given)
    throw std::invalid_argument("count needs exactly one of --beta or --all");
  const bool direct = args.method == "direct";
  auto count_at = [&](std::int64_t beta) {
    return direct ? trace_count_bruteforce(args.r, args.n, beta, args.budget)
                  : trace_count_divisor_sum(args.r, args.n, beta);
  };
  if (!args.all) {
    const BigInt c = count_at(args.beta);
    if (args.format == "csv") {
      emit_csv({"r", "n", "beta", "count", "approx"},
               {{std::to_string(args.r), std::to_string(args.n), std::to_string(args.beta),
                 c.str(), format_double(to_double(BigRat(c)))}});
      return 0;
    }
    ordered_json doc = make_envelope(
        "count",
        ordered_json{{"r", args.r}, {"n", args.n}, {"beta", args.beta}});
    doc["count"] = c.str();
    doc["approx"] = to_double(BigRat(c));
    doc["method"] = args.method;
    doc["elapsed_ms"] = elapsed_ms_since(start);
    emit(doc);
    return 0;
  }
  // One row per divisor class: every beta with gcd(beta, n) = l has the same
  // count, so the table lists l, a representative, the class size, the count.
  ordered_json rows = ordered_json::array();
  std::vector<std::vector<std::string>> csv_rows;
  BigInt total = 0;
  for (std::int64_t l : divisors(args.n)) {
    const std::int64_t rep = l % args.n;
    const BigInt c = count_at(rep);
    const std::int64_t members = euler_phi(args.n / l);
    total += c * members;
    rows.push_back(ordered_json{{"divisor", l},
                                {"beta", rep},
                                {"members", members},
                                {"count", c.str()},
                                {"approx", to_double(BigRat(c))}});
    csv_rows.push_back({std::to_string(l), std::to_string(rep), std::to_string(members),
                        c.str(), format_double(to_double(BigRat(c)))});
  }
  if (args.format == "csv") {
    csv_rows.push_back({"total", "", "", total.str(), format_double(to_double(BigRat(total)))});
    emit_csv({"divisor", "beta", "members", "count", "approx"}, csv_rows);
    return 0;
  }
  ordered_json doc = make_envelope(
      "count", ordered_json{{"r", args.r}, {"n", args.n}, {"all", true}});
  doc["rows"] = std::move(rows);
  doc["total"] = total.str();
  doc["method"] = args.method;
  doc["elapsed_ms"] = elapsed_ms_since(start);
  emit(doc);
  return 0;
}

int do_chars(std::int64_t n, const std::string& format) {
  const auto chars = enumerate_mult_chars(n);
  if (format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& chi : chars) {
      std::string exps;
      for (std::size_t i = 0; i < chi.exponents().size(); ++i)
        exps += (i ? ";" : "") + std::to_string(chi.exponents()[i]);
      rows.push_back({std::to_string(n), std::to_string(char_index(chi)), exps,
                      std::to_string(conductor(chi)), std::to_string(chi.order())});
    }
    emit_csv({"modulus", "index", "exponents", "conductor", "order"}, rows);
    return 0;
  }
  ordered_json doc = make_envelope("chars", ordered_json{{"n", n}});
  ordered_json gens = ordered_json::array();
  for (const auto& g : unit_group_structure(n).gens)
    gens.push_back(ordered_json::array({g.gen, g.order}));
  doc["generators"] = std::move(gens);
  ordered_json list = ordered_json::array();
  for (const auto& chi : chars)
    list.push_back(ordered_json{{"index", char_index(chi)},
                                {"exponents", chi.exponents()},
                                {"conductor", conductor(chi)},
                                {"order", chi.order()}});
  doc["characters"] = std::move(list);
  emit(doc);
  return 0;
}

int do_order(const std::string& kind, std::int64_t r, std::int64_t n,
             const std::string& format) {
  const BigInt value = kind == "gl" ? gl_order(r, n) : sl_order(r, n);
  if (format == "csv") {
    emit_csv({"group", "r", "n", "order", "approx"},
             {{kind, std::to_string(r), std::to_string(n), value.str(),
               format_double(to_double(BigRat(value)))}});
    return 0;
  }
  ordered_json doc = make_envelope(
      "order", ordered_json{{"group", kind}, {"r", r}, {"n", n}});
  doc["order"] = value.str();
  doc["approx"] = to_double(BigRat(value));
  emit(doc);
  return 0;
}

int do_verify(const std::string& suite, const VerifyOptions& options) {
  const VerificationReport report = run_suite(suite, options);
  ordered_json doc = make_envelope(
      "verify", ordered_json{{"suite", suite},
                             {"max_n", options.max_n},
                             {"max_r", options.max_r},
                             {"budget", options.budget},
                             {"jobs", options.jobs}});
  doc["suite"] = report.suite;
  doc["grid"] = ordered_json{{"max_n", report.grid.max_n},
                             {"max_r", report.grid.max_r},
                             {"budget", report.grid.budget},
                             {"jobs", report.grid.jobs}};
  doc["cases_run"] = report.cases_run;
  ordered_json mm = ordered_json::array();
  for (const auto& m : report.mismatches)
    mm.push_back(ordered_json{{"params", m.params}, {"expected", m.expected}, {"got", m.got}});
  doc["mismatches"] = std::move(mm);
  doc["elapsed_ms"] = report.elapsed_ms;
  emit(doc);
  return report.mismatches.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Gauss, Ramanujan, Kloosterman, and matrix-group "
               "exponential sums over Z_n"};
  app.require_subcommand(1);
  app.fallthrough();
  std::int64_t level_ceiling = 0;
  app.add_option("--level-ceiling", level_ceiling,
                 "Cap on cyclotomic levels (default 10000)")
      ->check(CLI::PositiveNumber);

  SumArgs sum_args;
  auto* cmd_sum = app.add_subcommand("sum", "Evaluate one exponential sum");
  cmd_sum->add_option("kind", sum_args.kind, "gauss|ramanujan|kloosterman|gl|sl")
      ->required()
      ->check(CLI::IsMember({"gauss", "ramanujan", "kloosterman", "gl", "sl"}));
  cmd_sum->add_option("--n", sum_args.n, "Modulus")->required()->check(CLI::PositiveNumber);
  cmd_sum->add_option("--r", sum_args.r, "Rank (kloosterman/gl/sl; default 2)")
      ->check(CLI::PositiveNumber);
  cmd_sum->add_option("--a", sum_args.a, "Additive character multiplier (default 1)");
  cmd_sum->add_option("--k", sum_args.k, "Ramanujan sum argument (default 1)");
  cmd_sum->add_option("--chi", sum_args.chi,
                      "Multiplicative character: index or exponent vector e1,e2,... "
                      "(default 0, the trivial character)");
  cmd_sum->add_option("--method", sum_args.method, "closed-form|direct (default closed-form)")
      ->check(CLI::IsMember({"closed-form", "direct"}));
  cmd_sum->add_option("--format", sum_args.format, "json|csv (default json)")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd_sum->add_option("--budget", sum_args.budget, "Enumeration candidate cap")
      ->envname("CYCLOSUM_BUDGET")
      ->check(CLI::NonNegativeNumber);

  CountArgs count_args;
  auto* cmd_count = app.add_subcommand("count", "Count invertible matrices by trace");
  cmd_count->add_option("--r", count_args.r, "Rank (default 2)")->check(CLI::PositiveNumber);
  cmd_count->add_option("--n", count_args.n, "Modulus")->required()->check(CLI::PositiveNumber);
  auto* beta_opt = cmd_count->add_option("--beta", count_args.beta, "Trace value");
  cmd_count->add_flag("--all", count_args.all, "One row per divisor class of n plus the total");
  cmd_count->add_option("--method", count_args.method, "closed-form|direct (default closed-form)")
      ->check(CLI::IsMember({"closed-form", "direct"}));
  cmd_count->add_option("--format", count_args.format, "json|csv (default json)")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd_count->add_option("--budget", count_args.budget, "Enumeration candidate cap")
      ->envname("CYCLOSUM_BUDGET")
      ->check(CLI::NonNegativeNumber);

  std::int64_t chars_n = 0;
  std::string chars_format = "json";
  auto* cmd_chars = app.add_subcommand("chars", "List the characters of Z_n^*");
  cmd_chars->add_option("--n", chars_n, "Modulus")->required()->check(CLI::PositiveNumber);
  cmd_chars->add_option("--format", chars_format, "json|csv (default json)")
      ->check(CLI::IsMember({"json", "csv"}));

  std::string order_kind;
  std::int64_t order_r = 2, order_n = 0;
  std::string order_format = "json";
  auto* cmd_order = app.add_subcommand("order", "Group cardinality |GL_r(Z_n)| or |SL_r(Z_n)|");
  cmd_order->add_option("group", order_kind, "gl|sl")
      ->required()
      ->check(CLI::IsMember({"gl", "sl"}));
  cmd_order->add_option("--r", order_r, "Rank (default 2)")->check(CLI::PositiveNumber);
  cmd_order->add_option("--n", order_n, "Modulus")->required()->check(CLI::PositiveNumber);
  cmd_order->add_option("--format", order_format, "json|csv (default json)")
      ->check(CLI::IsMember({"json", "csv"}));

  std::string verify_suite;
  VerifyOptions verify_options;
  auto* cmd_verify = app.add_subcommand("verify", "Re-check closed forms against oracles");
  cmd_verify->add_option("suite", verify_suite,
                         "gauss|ramanujan|kloosterman|gl|sl|counts|all")
      ->required()
      ->check(CLI::IsMember({"gauss", "ramanujan", "kloosterman", "gl", "sl", "counts", "all"}));
  cmd_verify->add_option("--max-n", verify_options.max_n, "Largest modulus (default 8)")
      ->check(CLI::PositiveNumber);
  cmd_verify->add_option("--max-r", verify_options.max_r, "Largest rank (default 2)")
      ->check(CLI::PositiveNumber);
  cmd_verify->add_option("--budget", verify_options.budget, "Enumeration candidate cap")
      ->envname("CYCLOSUM_BUDGET")
      ->check(CLI::NonNegativeNumber);
  cmd_verify->add_option("--jobs", verify_options.jobs, "Concurrent grid cells (default 1)")
      ->check(CLI::PositiveNumber);
  cmd_verify->add_flag("--inject-mismatch", verify_options.inject_mismatch,
                       "Plant one failing cell (self-test of the mismatch path)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (level_ceiling > 0) set_level_ceiling(level_ceiling);
    if (cmd_sum->parsed()) return do_sum(sum_args);
    if (cmd_count->parsed()) {
      count_args.beta_given = beta_opt->count() > 0;
      return do_count(count_args);
    }
    if (cmd_chars->parsed()) return do_chars(chars_n, chars_format);
    if (cmd_order->parsed()) return do_order(order_kind, order_r, order_n, order_format);
    if (cmd_verify->parsed()) return do_verify(verify_suite, verify_options);
    return 2;
  } catch (const BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
