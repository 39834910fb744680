#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>
#include <variant>

#include "json.hpp"

#include "fpdir/arith.hpp"
#include "fpdir/bilinear.hpp"
#include "fpdir/charsums.hpp"
#include "fpdir/directions.hpp"
#include "fpdir/equidist.hpp"
#include "fpdir/errors.hpp"
#include "fpdir/special.hpp"

namespace fpdir::cli {

namespace {

using Cell = std::variant<std::uint64_t, double, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// bad flags or flag combinations: exit 2 like domain errors
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const Cell& c) {
  if (const auto* u = std::get_if<std::uint64_t>(&c)) return std::to_string(*u);
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  if (const auto* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
  const auto& s = std::get<std::string>(c);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

void write_table(const Table& t, Format f, std::ostream& os) {
  if (f == Format::csv) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
      os << '\n';
    }
    return;
  }
  auto doc = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i)
      std::visit([&](const auto& v) { obj[t.columns[i]] = v; }, row[i]);
    doc.push_back(std::move(obj));
  }
  os << doc.dump(2) << '\n';
}

std::uint64_t require_prime(const std::optional<std::uint64_t>& p) {
  if (!p) throw UsageError("--p is required");
  if (!arith::is_prime(*p)) throw DomainError(std::to_string(*p) + " is not prime");
  if (*p == 2) throw DomainError("p must be an odd prime");
  return *p;
}

void check_lambdas(const std::vector<double>& lambdas) {
  for (double l : lambdas)
    if (!(l > 0.0 && l <= 1.0)) throw UsageError("lambda values must lie in (0, 1]");
}

std::uint64_t n_for(std::uint64_t p, double lambda) {
  return static_cast<std::uint64_t>(std::floor(lambda * std::sqrt(static_cast<double>(p))));
}

// n values from --n, else one per --lambdas entry
std::vector<std::uint64_t> n_values(const RunConfig& c, std::uint64_t p) {
  if (c.n) {
    if (*c.n == 0) throw DomainError("n must be positive");
    return {*c.n};
  }
  if (c.lambdas.empty()) throw UsageError("give --n or --lambdas");
  check_lambdas(c.lambdas);
  std::vector<std::uint64_t> out;
  for (double l : c.lambdas) out.push_back(std::max<std::uint64_t>(1, n_for(p, l)));
  return out;
}

std::vector<bilinear::Method> methods(MethodChoice m) {
  switch (m) {
    case MethodChoice::fast: return {bilinear::Method::fast};
    case MethodChoice::brute: return {bilinear::Method::brute};
    case MethodChoice::both: return {bilinear::Method::brute, bilinear::Method::fast};
  }
  return {};
}

void add_count_row(Table& t, std::uint64_t p, std::uint64_t n, bilinear::Method m, std::uint64_t count,
                   double predicted) {
  const double err = std::abs(static_cast<double>(count) - predicted);
  t.rows.push_back({p, n, special::Lambda::of(p, n).value(), std::string(bilinear::to_string(m)), count,
                    predicted, err, err / static_cast<double>(p)});
}

int cmd_dircount(const RunConfig& c, Table& t) {
  const std::uint64_t p = require_prime(c.p);
  t.columns = {"p", "n", "lambda", "method", "count_fp", "predicted", "abs_error", "rel_error"};
  int status = 0;
  for (std::uint64_t n : n_values(c, p)) {
    const double predicted = special::predict(p, n).directions_main;
    std::optional<std::uint64_t> first;
    for (auto m : methods(c.method)) {
      std::uint64_t count;
      if (m == bilinear::Method::brute)
        count = directions::directions_fp_bruteforce(p, n, c.threads);
      else if (c.method == MethodChoice::both && n * n > p)
        count = p + 1;  // n^2 > p points: every direction occurs
      else
        count = directions::directions_fp_fast(p, n, c.threads).count_fp;
      if (first && *first != count) status = 1;
      first = count;
      add_count_row(t, p, n, m, count, predicted);
    }
  }
  return status;
}

int cmd_nsolve(const RunConfig& c, Table& t) {
  const std::uint64_t p = require_prime(c.p);
  t.columns = {"p", "n", "lambda", "method", "value", "predicted", "abs_error", "rel_error"};
  int status = 0;
  for (std::uint64_t n : n_values(c, p)) {
    const double predicted = special::predict(p, n).nsolutions_main;
    std::optional<std::uint64_t> first;
    for (auto m : methods(c.method)) {
      const std::uint64_t count = m == bilinear::Method::fast ? bilinear::count_fast(p, n, c.threads).value
                                                              : bilinear::count_bruteforce(p, n).value;
      if (first && *first != count) status = 1;
      first = count;
      add_count_row(t, p, n, m, count, predicted);
    }
  }
  return status;
}

int cmd_curve(const RunConfig& c, Table& t) {
  if (!(c.grid > 0.0 && c.grid <= 0.1)) throw UsageError("--grid must lie in (0, 0.1]");
  t.columns = {"lambda", "D_lambda", "lambda_squared"};
  for (const auto& pt : special::density_curve(c.grid)) t.rows.push_back({pt.lambda, pt.density, pt.lambda_squared});
  return 0;
}

// next_prime_at_least(pmin) and of each power of ten in (pmin, pmax]
std::vector<std::uint64_t> sweep_primes(const RunConfig& c) {
  if (c.p) return {require_prime(c.p)};
  if (!c.pmin || !c.pmax) throw UsageError("sweep needs --p or --pmin and --pmax");
  if (*c.pmin > *c.pmax) throw UsageError("--pmin exceeds --pmax");
  std::set<std::uint64_t> starts{*c.pmin};
  for (std::uint64_t d = 10; d <= *c.pmax; d *= 10) {
    if (d > *c.pmin) starts.insert(d);
    if (d > UINT64_MAX / 10) break;
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t s : starts) {
    const std::uint64_t q = arith::next_prime_at_least(std::max<std::uint64_t>(s, 3));
    if (q <= *c.pmax && (out.empty() || out.back() != q)) out.push_back(q);
  }
  if (out.empty()) throw DomainError("no prime in [pmin, pmax]");
  return out;
}

int cmd_sweep(const RunConfig& c, Table& t) {
  if (c.lambdas.empty()) throw UsageError("sweep needs a nonempty --lambdas list");
  check_lambdas(c.lambdas);
  t.columns = {"p", "lambda", "n", "exact", "main_term", "error", "error_p34", "error_sqrtp"};
  for (std::uint64_t p : sweep_primes(c)) {
    const double pd = static_cast<double>(p);
    for (double l : c.lambdas) {
      std::uint64_t n = std::max<std::uint64_t>(n_for(p, l), 2);
      while (n * n >= p) --n;
      const auto pred = special::predict(p, n);
      std::uint64_t exact;
      double main;
      if (c.quantity == SweepQuantity::nsolve) {
        exact = bilinear::count_fast(p, n, c.threads).value;
        main = pred.nsolutions_main;
      } else {
        exact = directions::directions_fp_fast(p, n, c.threads).count_fp;
        main = pred.directions_main;
      }
      const double err = static_cast<double>(exact) - main;
      t.rows.push_back({p, l, n, exact, main, err, err / std::pow(pd, 0.75), err / std::sqrt(pd)});
    }
  }
  return 0;
}

int cmd_moments(const RunConfig& c, Table& t) {
  const std::uint64_t p = require_prime(c.p);
  if (!c.n) throw UsageError("--n is required");
  const auto m = charsums::parity_moments(p, *c.n, c.threads);
  t.columns = {"p", "n", "n1", "n_minus1", "even_moment", "odd_moment", "odd_even_ratio", "moment_main"};
  const std::uint64_t n = *c.n;
  const Cell main = n * n < p ? Cell{charsums::acz_reference(p, n).moment_main} : Cell{std::string()};
  t.rows.push_back({p, n, m.n1, m.n_minus1, m.even_moment, m.odd_moment, m.odd_moment / m.even_moment, main});
  return 0;
}

std::vector<std::uint64_t> equidist_moduli(const RunConfig& c, std::uint64_t p) {
  if (!c.b.empty()) return c.b;
  const std::uint64_t top = arith::isqrt(p);
  if (top < 3) throw DomainError("p too small to sample moduli below sqrt(p)");
  std::mt19937_64 rng(c.seed);
  std::set<std::uint64_t> picked;
  for (std::uint64_t i = 0; i < c.samples; ++i) picked.insert(2 + rng() % (top - 1));
  return {picked.begin(), picked.end()};
}

int cmd_equidist(const RunConfig& c, Table& t) {
  const std::uint64_t p = require_prime(c.p);
  const auto bs = equidist_moduli(c, p);
  t.columns = {"p", "b", "tau_b", "d_quarter", "d_half", "d_full", "max_ratio", "et_min_bound",
               "et_best_k", "kloosterman_t1", "kloosterman_t2", "kloosterman_t3"};
  for (const auto& r : equidist::estfrac_survey(p, bs, c.threads)) {
    const auto best = std::min_element(r.et_bounds.begin(), r.et_bounds.end(),
                                       [](const auto& x, const auto& y) { return x.second < y.second; });
    t.rows.push_back({p, r.b, r.tau_b, r.windows[0].discrepancy, r.windows[1].discrepancy,
                      r.windows[2].discrepancy, r.max_ratio, best->second, best->first,
                      r.kloosterman[0].second, r.kloosterman[1].second, r.kloosterman[2].second});
  }
  return 0;
}

int cmd_verify(const RunConfig& c, Table& t, std::ostream& err) {
  t.columns = {"id", "name", "passed", "detail"};
  int status = 0;
  for (int id = 1; id <= verify::kCriterionCount; ++id) {
    const auto r = verify::run_criterion(id, c.suite, c.threads);
    t.rows.push_back({static_cast<std::uint64_t>(r.id), r.name, r.passed, r.detail});
    char buf[128];
    std::snprintf(buf, sizeof buf, "criterion %d %s in %.2fs", r.id, r.passed ? "passed" : "FAILED", r.seconds);
    err << buf << '\n';
    if (!r.passed) {
      err << "  failed: " << r.name << ": " << r.detail << '\n';
      status = 1;
    }
  }
  return status;
}

int dispatch(const RunConfig& c, Table& t, std::ostream& err) {
  switch (c.command) {
    case Command::dircount: return cmd_dircount(c, t);
    case Command::nsolve: return cmd_nsolve(c, t);
    case Command::curve: return cmd_curve(c, t);
    case Command::sweep: return cmd_sweep(c, t);
    case Command::moments: return cmd_moments(c, t);
    case Command::equidist: return cmd_equidist(c, t);
    case Command::verify: return cmd_verify(c, t, err);
  }
  return 2;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.threads == 0) {
    err << "error: --threads must be positive\n";
    return 2;
  }
  Table table;
  int status;
  try {
    status = dispatch(config, table, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {  // ConsistencyError
    err << "internal check failed: " << e.what() << '\n';
    return 1;
  }
  if (config.out_path.empty()) {
    write_table(table, config.format, out);
  } else {
    std::ofstream file(config.out_path);
    if (!file) {
      err << "error: cannot open " << config.out_path << '\n';
      return 2;
    }
    write_table(table, config.format, file);
  }
  if (status == 1 && config.command != Command::verify) err << "error: methods disagree\n";
  return status;
}

}  // namespace fpdir::cli
