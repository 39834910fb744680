#include "fpdir/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <random>

#include "fpdir/arith.hpp"
#include "fpdir/bilinear.hpp"
#include "fpdir/charsums.hpp"
#include "fpdir/directions.hpp"
#include "fpdir/equidist.hpp"
#include "fpdir/errors.hpp"
#include "fpdir/parallel.hpp"
#include "fpdir/special.hpp"

namespace fpdir::verify {

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;
constexpr double kLambdas[] = {0.75, 0.80, 0.85, 0.90, 0.95};
constexpr std::uint64_t kSeed = 0x5eed'f00d'2024ull;

struct Outcome {
  bool passed;
  std::string detail;
};

template <class... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = lo; q <= hi; ++q)
    if (arith::is_prime(q)) out.push_back(q);
  return out;
}

std::uint64_t n_for(std::uint64_t p, double lambda) {
  auto n = static_cast<std::uint64_t>(std::floor(lambda * std::sqrt(static_cast<double>(p))));
  while (n * n >= p) --n;
  return n;
}

// ---------------------------------------------------------------- 1
Outcome oracle_equivalence(Suite s, unsigned) {
  const std::uint64_t count_limit = s == Suite::all ? 2000 : 300;
  const std::uint64_t dir_limit = s == Suite::all ? 500 : 150;
  std::uint64_t cases = 0;
  for (std::uint64_t p : primes_in(2, count_limit - 1))
    for (std::uint64_t n = 1; n * n < p; ++n, ++cases) {
      const auto fast = bilinear::count_fast(p, n).value;
      const auto brute = bilinear::count_bruteforce(p, n).value;
      if (fast != brute)
        return {false, fmt("N(%llu, %llu): fast %llu, brute %llu", (unsigned long long)p,
                           (unsigned long long)n, (unsigned long long)fast, (unsigned long long)brute)};
    }
  std::uint64_t dir_cases = 0;
  for (std::uint64_t p : primes_in(2, dir_limit - 1))
    for (std::uint64_t n = 2; n <= arith::isqrt(p); ++n, ++dir_cases) {
      const auto fast = directions::directions_fp_fast(p, n).count_fp;
      const auto brute = directions::directions_fp_bruteforce(p, n);
      if (fast != brute)
        return {false, fmt("directions(%llu, %llu): fast %llu, brute %llu", (unsigned long long)p,
                           (unsigned long long)n, (unsigned long long)fast, (unsigned long long)brute)};
    }
  return {true, fmt("%llu counting cases (p < %llu), %llu direction cases (p < %llu)",
                    (unsigned long long)cases, (unsigned long long)count_limit,
                    (unsigned long long)dir_cases, (unsigned long long)dir_limit)};
}

// ---------------------------------------------------------------- 2
Outcome small_n_directions(Suite s, unsigned threads) {
  const std::uint64_t limit = s == Suite::all ? 2000 : 300;
  std::uint64_t cases = 0;
  for (std::uint64_t p : primes_in(2, limit - 1))
    for (std::uint64_t n = 1; 2 * n * n < p; ++n, ++cases) {
      const auto fp = directions::directions_fp_bruteforce(p, n, threads);
      const auto q = directions::directions_q(n);
      if (fp != q)
        return {false, fmt("p = %llu, n = %llu: F_p %llu, Q %llu", (unsigned long long)p,
                           (unsigned long long)n, (unsigned long long)fp, (unsigned long long)q)};
    }
  return {true, fmt("%llu cases with p < %llu", (unsigned long long)cases, (unsigned long long)limit)};
}

// ---------------------------------------------------------------- 3
// Walks the whole residue class of x mod b, not just the first candidate.
std::uint64_t solutions_in_class(std::uint64_t a, std::uint64_t b, std::uint64_t p, std::uint64_t n) {
  const std::uint64_t x0 = b == 1 ? 0 : arith::mulmod(p % b, arith::inverse_mod(a % b, b), b);
  std::uint64_t hits = 0;
  for (std::uint64_t x = x0 == 0 ? b : x0; x <= n; x += b) {
    if (a * x >= p) break;
    const std::uint64_t y = (p - a * x) / b;
    if (y >= 1 && y <= n) ++hits;
  }
  return hits;
}

bool at_most_one(std::uint64_t p, std::uint64_t n, unsigned threads, std::string& why) {
  const bilinear::TriangleRegion t(p, n);
  if (t.empty()) return true;
  const std::uint64_t lo = t.first_row();
  std::vector<std::string> errors(std::max(threads, 1u));
  parallel_blocks(lo, n + 1, threads, [&](unsigned w, std::uint64_t b0, std::uint64_t b1) {
    for (std::uint64_t b = b0; b < b1 && errors[w].empty(); ++b)
      for (std::uint64_t a : t.row(b).a) {
        const auto hits = solutions_in_class(a, b, p, n);
        const auto got = bilinear::per_pair_solution(a, b, p, n).solution.has_value();
        if (hits > 1 || got != (hits == 1)) {
          errors[w] = fmt("p = %llu, n = %llu, (a, b) = (%llu, %llu): %llu solutions",
                          (unsigned long long)p, (unsigned long long)n, (unsigned long long)a,
                          (unsigned long long)b, (unsigned long long)hits);
          break;
        }
      }
  });
  for (auto& e : errors)
    if (!e.empty()) {
      why = e;
      return false;
    }
  return true;
}

Outcome at_most_one_solution(Suite s, unsigned threads) {
  const std::uint64_t limit = s == Suite::all ? 2000 : 300;
  std::string why;
  std::uint64_t cases = 0;
  for (std::uint64_t p : primes_in(3, limit - 1))
    for (std::uint64_t n = 1; n * n < p; ++n, ++cases)
      if (!at_most_one(p, n, threads, why)) return {false, why};
  const std::uint64_t big = arith::next_prime_at_least(s == Suite::all ? 1'000'000 : 100'000);
  const std::uint64_t n = n_for(big, 0.9);
  if (!at_most_one(big, n, threads, why)) return {false, why};
  return {true, fmt("%llu cases with p < %llu, plus p = %llu, n = %llu", (unsigned long long)cases,
                    (unsigned long long)limit, (unsigned long long)big, (unsigned long long)n)};
}

// ---------------------------------------------------------------- 4, 5
std::uint64_t large_prime(Suite) { return arith::next_prime_at_least(1'000'000); }

Outcome solution_count_main_term(Suite s, unsigned threads) {
  const std::uint64_t p = large_prime(s);
  double worst = 0.0;
  std::string rows;
  for (double lambda : kLambdas) {
    const std::uint64_t n = n_for(p, lambda);
    const special::Lambda hat = special::Lambda::of(p, n);
    const double main = 12.0 / kPi2 * hat.value() * hat.value() - special::density(hat);
    const double ratio = static_cast<double>(bilinear::count_fast(p, n, threads).value) /
                         static_cast<double>(p);
    const double dev = std::abs(ratio - main);
    worst = std::max(worst, dev);
    rows += fmt(" %.2f:%.2e", lambda, dev);
  }
  return {worst <= 0.02, fmt("p = %llu, |N/p - main| by lambda:", (unsigned long long)p) + rows +
                             fmt(" (max %.3e, tolerance 0.02)", worst)};
}

double direction_error(std::uint64_t p, double lambda, unsigned threads) {
  const std::uint64_t n = n_for(p, lambda);
  const double d = special::density(special::Lambda::of(p, n));
  const double count = static_cast<double>(directions::directions_fp_fast(p, n, threads).count_fp);
  return count / static_cast<double>(p) - d;
}

Outcome direction_count_main_term(Suite s, unsigned threads) {
  const std::uint64_t p_hi = large_prime(s);
  const std::uint64_t p_lo = arith::next_prime_at_least(10'000);
  const double decades = std::log(static_cast<double>(p_hi) / static_cast<double>(p_lo));
  bool ok = true;
  double worst = 0.0;
  std::string rows;
  for (double lambda : kLambdas) {
    const double e_hi = direction_error(p_hi, lambda, threads);
    const double e_lo = direction_error(p_lo, lambda, threads);
    const double d_hi = special::density(special::Lambda::of(p_hi, n_for(p_hi, lambda)));
    const double d_lo = special::density(special::Lambda::of(p_lo, n_for(p_lo, lambda)));
    const double rel_hi = std::abs(e_hi) / d_hi, rel_lo = std::abs(e_lo) / d_lo;
    worst = std::max(worst, std::abs(e_hi));
    if (std::abs(e_hi) > 0.02 || !(rel_hi < rel_lo)) ok = false;
    // relative error ~ p^-theta between the two primes
    const double theta = -std::log(rel_hi / rel_lo) / decades;
    rows += fmt(" %.2f:%.2e->%.2e(theta %.2f)", lambda, rel_lo, rel_hi, theta);
  }
  return {ok, fmt("p %llu -> %llu, relative error:", (unsigned long long)p_lo,
                  (unsigned long long)p_hi) +
                  rows + fmt("; max |count/p - D| = %.3e at p = %llu", worst, (unsigned long long)p_hi)};
}

// ---------------------------------------------------------------- 6
Outcome curve_checks(Suite, unsigned) {
  const auto curve = special::density_curve(0.001);
  for (const auto& pt : curve)
    if (pt.lambda <= 1.0 && pt.density < pt.lambda_squared)
      return {false, fmt("D(%.6f) = %.17g below lambda^2", pt.lambda, pt.density)};
  const double knee = std::numbers::sqrt2 / 2;
  const double at_knee = special::density(special::Lambda(knee));
  const double at_one = special::density(special::Lambda(1.0));
  const double eps = 1e-7;
  auto jump = [&](double x) {
    return std::abs(special::density(special::Lambda(x - eps)) - special::density(special::Lambda(x + eps)));
  };
  const double r_knee = jump(knee), r_one = jump(1.0);
  const bool ok = std::abs(at_knee - 6.0 / kPi2) <= 1e-9 && std::abs(at_one - 1.0) <= 1e-4 &&
                  r_knee <= 1e-6 && r_one <= 1e-6;
  return {ok, fmt("%zu grid rows; D(1/sqrt2) - 6/pi^2 = %.2e, D(1) - 1 = %.2e, jumps %.2e / %.2e",
                  curve.size(), at_knee - 6.0 / kPi2, at_one - 1.0, r_knee, r_one)};
}

// ---------------------------------------------------------------- 7
Outcome character_moments(Suite s, unsigned threads) {
  const std::uint64_t limit = s == Suite::all ? 101 : 31;
  std::uint64_t cases = 0;
  for (std::uint64_t p : primes_in(3, limit)) {
    charsums::CharacterOracle oracle(p);
    for (std::uint64_t n = 1; n < p; ++n, ++cases) {
      oracle.advance();
      const auto got = charsums::parity_moments(p, n, threads);
      const auto ref = oracle.moments();
      const double scale = std::max(1.0, got.even_moment);
      if (std::abs(got.even_moment - ref.even_moment) > 1e-6 * scale ||
          std::abs(got.odd_moment - ref.odd_moment) > 1e-6 * scale)
        return {false, fmt("p = %llu, n = %llu: even %.6f vs %.6f, odd %.6f vs %.6f",
                           (unsigned long long)p, (unsigned long long)n, got.even_moment,
                           ref.even_moment, got.odd_moment, ref.odd_moment)};
    }
  }
  const auto fx = charsums::parity_moments(11, 3, threads);
  if (fx.n1 != 15 || fx.n_minus1 != 4 || fx.even_moment != 9.5 || fx.odd_moment != 5.5)
    return {false, "fixture (11, 3) mismatch"};

  auto ratio = [&](std::uint64_t p) {
    const auto m = charsums::parity_moments(p, arith::isqrt(p) - 1, threads);
    return m.odd_moment / m.even_moment;
  };
  const double r_small = ratio(1009), r_large = ratio(100003);
  const bool trend = r_large >= 0.8 && r_large <= 1.25 && std::abs(r_large - 1) < std::abs(r_small - 1);
  return {trend, fmt("%llu oracle cases (p <= %llu); odd/even %.4f at p = 1009, %.4f at p = 100003",
                     (unsigned long long)cases, (unsigned long long)limit, r_small, r_large)};
}

// ---------------------------------------------------------------- 8
struct SurveyMax {
  double ratio = 0.0;
  std::uint64_t b = 0;
  bool et_ok = true;
  std::string et_fail;
};

SurveyMax survey_all_b(std::uint64_t p, unsigned threads) {
  std::vector<std::uint64_t> bs;
  for (std::uint64_t b = 2; b * b < p; ++b) bs.push_back(b);
  SurveyMax out;
  for (const auto& rep : equidist::estfrac_survey(p, bs, threads)) {
    if (rep.max_ratio > out.ratio) {
      out.ratio = rep.max_ratio;
      out.b = rep.b;
    }
    const double d = rep.windows.back().discrepancy;
    for (const auto& [k, bound] : rep.et_bounds)
      if (bound < d && out.et_ok) {
        out.et_ok = false;
        out.et_fail = fmt("Erdos-Turan fails at p = %llu, b = %llu, K = %llu", (unsigned long long)p,
                          (unsigned long long)rep.b, (unsigned long long)k);
      }
  }
  return out;
}

Outcome equidistribution(Suite s, unsigned threads) {
  std::mt19937_64 rng(kSeed);
  const int bern_trials = s == Suite::all ? 10000 : 1000;
  for (int i = 0; i < bern_trials; ++i) {
    const auto v = static_cast<std::int64_t>(1 + rng() % 1000);
    const auto u = static_cast<std::int64_t>(rng() % 20001) - 10000;
    const std::uint64_t q = 1 + rng() % 100;
    if (!equidist::bernoulli_identity_check(equidist::Rational(u, v), q))
      return {false, fmt("Bernoulli identity fails at alpha = %lld/%lld, q = %llu", (long long)u,
                         (long long)v, (unsigned long long)q)};
  }
  const std::uint64_t b_max = s == Suite::all ? 1000 : 200;
  for (std::uint64_t b = 1; b <= b_max; ++b) {
    const auto v = static_cast<std::int64_t>(1 + rng() % 1000);
    const auto u = static_cast<std::int64_t>(rng() % 100000);
    equidist::reduced_residue_fracsum(equidist::Rational(u, v), b);  // throws on mismatch
  }
  const std::uint64_t p_lo = arith::next_prime_at_least(10'000);
  const std::uint64_t p_hi = arith::next_prime_at_least(s == Suite::all ? 1'000'000 : 100'000);
  const auto lo = survey_all_b(p_lo, threads);
  const auto hi = survey_all_b(p_hi, threads);
  if (!lo.et_ok) return {false, lo.et_fail};
  if (!hi.et_ok) return {false, hi.et_fail};
  const double spread = std::max(lo.ratio, hi.ratio) / std::min(lo.ratio, hi.ratio);
  return {spread < 10.0,
          fmt("%d Bernoulli checks, Mobius form for b <= %llu; max D_b(X)/(tau^1.5 p^0.25 log^2 p) "
              "%.4f (p = %llu, b = %llu) vs %.4f (p = %llu, b = %llu), spread %.2fx",
              bern_trials, (unsigned long long)b_max, lo.ratio, (unsigned long long)p_lo,
              (unsigned long long)lo.b, hi.ratio, (unsigned long long)p_hi, (unsigned long long)hi.b,
              spread)};
}

// ---------------------------------------------------------------- 9
Outcome breakdown_identity(Suite, unsigned threads) {
  std::uint64_t cases = 0, pairs = 0;
  for (std::uint64_t p : {1009ull, 10007ull})
    for (std::uint64_t n = 1; n * n < p; ++n, ++cases) {
      const auto terms = bilinear::breakdown_terms(p, n, threads);  // throws on a bad pair
      const auto exact = bilinear::count_bruteforce(p, n).value;
      pairs += terms.pairs;
      if (terms.total != exact)
        return {false, fmt("p = %llu, n = %llu: identity total %llu, N = %llu", (unsigned long long)p,
                           (unsigned long long)n, (unsigned long long)terms.total,
                           (unsigned long long)exact)};
    }
  return {true, fmt("%llu (p, n) cases, %llu pairs of T checked", (unsigned long long)cases,
                    (unsigned long long)pairs)};
}

// ---------------------------------------------------------------- 10
Outcome small_coefficient_congruences(Suite s, unsigned threads) {
  const std::uint64_t limit = s == Suite::all ? 10'000 : 1'000;
  std::uint64_t checked = 0;
  for (std::uint64_t p : primes_in(3, limit)) {
    const auto pairs = bilinear::solution_pairs(p, arith::isqrt(p), threads);
    if (pairs.size() != bilinear::small_solution_pairs(p, threads))
      return {false, fmt("pair count mismatch at p = %llu", (unsigned long long)p)};
    std::vector<std::int64_t> bad(std::max(threads, 1u), -1);
    parallel_blocks(0, pairs.size(), threads, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
      for (std::uint64_t i = lo; i < hi; ++i)
        if (!bilinear::verify_ac_conclusion(static_cast<std::int64_t>(pairs[i].a),
                                            static_cast<std::int64_t>(pairs[i].b), p)) {
          bad[w] = static_cast<std::int64_t>(i);
          return;
        }
    });
    for (auto i : bad)
      if (i >= 0)
        return {false, fmt("p = %llu, (a, b) = (%llu, %llu) misses a residue", (unsigned long long)p,
                           (unsigned long long)pairs[i].a, (unsigned long long)pairs[i].b)};
    checked += pairs.size();
  }
  const std::uint64_t p = arith::next_prime_at_least(10'000);
  const double ratio = static_cast<double>(bilinear::small_solution_pairs(p, threads)) / static_cast<double>(p);
  const double target = 12.0 / kPi2 - 1.0;
  return {std::abs(ratio - target) <= 0.05,
          fmt("%llu pairs verified for p <= %llu; count/p at %llu = %.5f (12/pi^2 - 1 = %.5f)",
              (unsigned long long)checked, (unsigned long long)limit, (unsigned long long)p, ratio,
              target)};
}

struct Entry {
  const char* name;
  Outcome (*run)(Suite, unsigned);
};

constexpr Entry kCriteria[kCriterionCount] = {
    {"fast counters match brute force", oracle_equivalence},
    {"small n: F_p and Q directions agree", small_n_directions},
    {"at most one solution per pair", at_most_one_solution},
    {"N(p, n) near its main term", solution_count_main_term},
    {"direction count near D(lambda) p, error decays", direction_count_main_term},
    {"density curve checks", curve_checks},
    {"character moment parity split", character_moments},
    {"equidistribution suite", equidistribution},
    {"breakdown identity", breakdown_identity},
    {"small-coefficient congruences", small_coefficient_congruences},
};

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "small") return Suite::small;
  if (name == "all") return Suite::all;
  return std::nullopt;
}

CriterionResult run_criterion(int id, Suite suite, unsigned threads) {
  if (id < 1 || id > kCriterionCount) throw DomainError("no criterion " + std::to_string(id));
  const Entry& e = kCriteria[id - 1];
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r{id, e.name, false, {}, 0.0};
  try {
    const Outcome o = e.run(suite, std::max(threads, 1u));
    r.passed = o.passed;
    r.detail = o.detail;
  } catch (const std::exception& ex) {
    r.detail = std::string("exception: ") + ex.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_suite(Suite suite, unsigned threads) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, suite, threads));
  return out;
}

}  // namespace fpdir::verify
