#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "fpdir/arith.hpp"
#include "fpdir/equidist.hpp"
#include "fpdir/errors.hpp"

using namespace fpdir;
using namespace fpdir::equidist;

namespace {

// O(N^3): every candidate pair of endpoints, counted point by point
double discrepancy_by_scan(const std::vector<double>& pts) {
  std::vector<double> ends{0.0, 1.0};
  ends.insert(ends.end(), pts.begin(), pts.end());
  const double n = static_cast<double>(pts.size());
  double best = 0.0;
  for (double a : ends)
    for (double b : ends) {
      if (a > b) continue;
      double closed = 0, open = 0;
      for (double u : pts) {
        if ((a <= u && u <= b) || (u == 0.0 && b == 1.0 && a > 0.0)) ++closed;
        if (a < u && u < b) ++open;
      }
      best = std::max(best, closed - n * (b - a));
      best = std::max(best, n * (b - a) - open);
    }
  return best;
}

}  // namespace

TEST_CASE("inverse sequence fixture b = 5, p = 7") {
  const auto s = inverse_sequence(5, 7, 5.0);
  const std::vector<double> expected{0.4, 0.2, 0.8, 0.6};
  REQUIRE(s.points.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(s.points[i] - expected[i]) < 1e-15);
  CHECK(s.origin->b == 5);
  CHECK(std::abs(discrepancy_exact(s) - 1.6) < 1e-12);
  CHECK(inverse_sequence(5, 7, 2.5).points.size() == 2);
  CHECK_THROWS_AS(inverse_sequence(5, 10, 5.0), DomainError);
  CHECK_THROWS_AS(inverse_sequence(5, 7, 6.0), DomainError);
}

TEST_CASE("small inverse sequences") {
  const auto two = inverse_sequence(2, 3, 2.0);
  REQUIRE(two.points.size() == 1);
  CHECK(two.points[0] == 0.5);
  // b prime, X = b: a permutation of {1/b, ..., (b-1)/b}
  auto s = inverse_sequence(31, 1009, 31.0).points;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i) REQUIRE(std::abs(s[i] - (i + 1) / 31.0) < 1e-15);
}

TEST_CASE("inversion is an involution on reduced residues") {
  for (std::uint64_t b = 2; b <= 200; ++b)
    for (std::uint64_t a = 1; a < b; ++a) {
      if (arith::gcd(a, b) != 1) continue;
      REQUIRE(arith::inverse_mod(arith::inverse_mod(a, b), b) == a);
    }
}

TEST_CASE("discrepancy conventions") {
  const std::vector<double> one{0.3};
  CHECK(discrepancy_exact(one) == doctest::Approx(1.0));
  const std::vector<double> zero{0.0};
  CHECK(discrepancy_exact(zero) == doctest::Approx(1.0));
  const std::vector<double> spaced{0.125, 0.375, 0.625, 0.875};
  std::vector<double> shuffled{0.875, 0.125, 0.625, 0.375};
  CHECK(discrepancy_exact(spaced) == discrepancy_exact(shuffled));
  CHECK(discrepancy_exact(spaced) == doctest::Approx(discrepancy_by_scan(shuffled)));
  const std::vector<double> twin{0.0, 0.5};
  CHECK(discrepancy_exact(twin) == doctest::Approx(discrepancy_by_scan(twin)));
  const std::vector<double> empty;
  CHECK_THROWS_AS(discrepancy_exact(empty), DomainError);
  const std::vector<double> bad{1.0};
  CHECK_THROWS_AS(discrepancy_exact(bad), DomainError);
}

TEST_CASE("sweep matches the cubic scan") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 40;
    const std::uint64_t grid = 2 + rng() % 30;  // coarse grid forces ties and zeros
    std::vector<double> pts(n);
    for (auto& u : pts) u = static_cast<double>(rng() % grid) / static_cast<double>(grid);
    REQUIRE(std::abs(discrepancy_exact(pts) - discrepancy_by_scan(pts)) < 1e-9);
  }
  for (std::uint64_t b : {7ull, 30ull, 97ull, 210ull})
    for (double frac : {0.25, 0.5, 1.0}) {
      const auto s = inverse_sequence(b, 1000003, frac * static_cast<double>(b));
      REQUIRE(std::abs(discrepancy_exact(s) - discrepancy_by_scan(s.points)) < 1e-9);
    }
}

TEST_CASE("sampled discrepancy is a lower bound") {
  const auto s = inverse_sequence(97, 10007, 97.0);
  const double exact = discrepancy_exact(s);
  for (std::uint64_t g : {10ull, 97ull, 500ull}) CHECK(discrepancy_sampled(s.points, g) <= exact + 1e-12);
  CHECK(std::abs(discrepancy_sampled(s.points, 97) - exact) < 1e-9);  // points lie on the grid
}

TEST_CASE("Erdos-Turan bound dominates the exact discrepancy") {
  for (std::uint64_t b : {5ull, 12ull, 97ull, 300ull}) {
    const auto s = inverse_sequence(b, 1000003, static_cast<double>(b));
    const double d = discrepancy_exact(s);
    for (std::uint64_t k : {1ull, 2ull, 5ull, 10ull, 50ull, 100ull}) REQUIRE(erdos_turan_bound(s, k) >= d);
  }
  const auto small = inverse_sequence(5, 7, 5.0);
  for (std::uint64_t k = 1; k <= 20; ++k) CHECK(erdos_turan_bound(small, k) >= 1.6);
  const std::vector<double> origin{0.0};
  CHECK(erdos_turan_bound(origin, 1) == doctest::Approx(3.5));
  CHECK_THROWS_AS(erdos_turan_bound(small, 0), DomainError);
}

TEST_CASE("Kloosterman sums") {
  // complete sum mod 5 runs over all nonzero residues
  const auto k = kloosterman_incomplete(5, 1, 0.0, 5.0);
  CHECK(std::abs(k.magnitude - 1.0) < 1e-12);
  CHECK(k.terms == 4);
  CHECK(k.ratio == doctest::Approx(k.magnitude / k.scale));
  // t = 0 counts the reduced residues in the window
  CHECK(std::abs(kloosterman_incomplete(12, 0, 0.0, 12.0).magnitude - 4.0) < 1e-12);
  // a shifted window of a full period gives the same sum
  CHECK(std::abs(kloosterman_incomplete(97, 3, 40.0, 137.0).magnitude -
                 kloosterman_incomplete(97, 3, 0.0, 97.0).magnitude) < 1e-9);
  // Weil-type bound on complete sums for prime moduli
  for (std::uint64_t m : {101ull, 1009ull})
    for (std::int64_t t = 1; t < 20; ++t)
      REQUIRE(kloosterman_incomplete(m, t, 0.0, static_cast<double>(m)).magnitude <=
              2.0 * std::sqrt(static_cast<double>(m)) + 1e-9);
  for (std::int64_t t = -5; t < 30; ++t) {
    const auto s = kloosterman_incomplete(60, t, 7.5, 50.0);
    REQUIRE(s.magnitude <= static_cast<double>(s.terms) + 1e-9);
  }
  CHECK_THROWS_AS(kloosterman_incomplete(5, 1, 0.0, 6.0), DomainError);
}

TEST_CASE("Bernoulli identity on random rationals") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10000; ++i) {
    const auto v = static_cast<std::int64_t>(1 + rng() % 1000);
    const auto u = static_cast<std::int64_t>(rng() % 20001) - 10000;
    const std::uint64_t q = 1 + rng() % 100;
    REQUIRE(bernoulli_identity_check(Rational(u, v), q));
  }
  CHECK(bernoulli_identity_check(Rational(1, 3), 3));
  for (std::uint64_t q = 1; q <= 50; ++q) CHECK(bernoulli_identity_check(Rational(0, 1), q));
  CHECK_THROWS_AS(bernoulli_identity_check(Rational(1, 2), 0), DomainError);
}

TEST_CASE("reduced-residue fractional sums") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
  // b = 6, alpha = 1/2: a in {1, 5} gives (1/3 - 1/2) + (2/3 - 1/2) = 0
  CHECK(reduced_residue_fracsum(Rational(1, 2), 6) == Rational(0, 1));
  CHECK(reduced_residue_fracsum(Rational(7, 3), 1) == Rational(-1, 6));
  std::mt19937_64 rng(11);
  double worst = 0.0;
  for (std::uint64_t b = 1; b <= 1000; ++b) {
    const auto v = static_cast<std::int64_t>(1 + rng() % 500);
    const auto u = static_cast<std::int64_t>(rng() % 5000);
    const Rational alpha(u, v);
    const double got = reduced_residue_fracsum(alpha, b).to_double();
    double direct = 0.0;
    const std::int64_t den = v * static_cast<std::int64_t>(b);
    for (std::uint64_t a = 1; a <= b; ++a) {
      if (arith::gcd(a, b) != 1) continue;
      const std::int64_t num = u * static_cast<std::int64_t>(b) - static_cast<std::int64_t>(a) * v;
      direct += static_cast<double>(((num % den) + den) % den) / static_cast<double>(den) - 0.5;
    }
    REQUIRE(std::abs(got - direct) < 1e-6);
    worst = std::max(worst, std::abs(got) / static_cast<double>(arith::divisor_count(b)));
  }
  MESSAGE("max |sum| / tau(b) over b <= 1000: " << worst);
  CHECK(worst <= 1.0);
}

TEST_CASE("survey report") {
  const auto rep = estfrac_survey(10007, 60);
  CHECK(rep.tau_b == 12);
  REQUIRE(rep.windows.size() == 3);
  CHECK(rep.windows[2].length == 16);
  CHECK(rep.et_bounds.size() == 7);
  CHECK(rep.kloosterman.size() == 3);
  for (const auto& w : rep.windows) CHECK(w.ratio <= rep.max_ratio);
  CHECK(estfrac_survey(10007, 210).windows[2].length == 48);
  CHECK_THROWS_AS(estfrac_survey(10007, 10007), DomainError);
  CHECK_THROWS_AS(estfrac_survey(10007, 1), DomainError);
  const std::vector<std::uint64_t> bs{2, 3, 50, 99};
  const auto par = estfrac_survey(10007, bs, 3);
  CHECK(par[2].max_ratio == estfrac_survey(10007, 50).max_ratio);
}
