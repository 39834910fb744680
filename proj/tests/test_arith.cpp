#include <cmath>
#include <numbers>
#include <numeric>

#include "doctest.h"
#include "fpdir/arith.hpp"
#include "fpdir/errors.hpp"

using namespace fpdir;
using namespace fpdir::arith;

namespace {

// independent oracles: trial division and direct enumeration
bool prime_by_trial(std::uint64_t k) {
  if (k < 2) return false;
  for (std::uint64_t d = 2; d * d <= k; ++d)
    if (k % d == 0) return false;
  return true;
}

std::uint64_t least_factor_by_trial(std::uint64_t k) {
  for (std::uint64_t d = 2; d * d <= k; ++d)
    if (k % d == 0) return d;
  return k;
}

int mobius_by_trial(std::uint64_t k) {
  int sign = 1;
  for (std::uint64_t d = 2; d * d <= k; ++d) {
    if (k % d) continue;
    k /= d;
    if (k % d == 0) return 0;
    sign = -sign;
  }
  return k > 1 ? -sign : sign;
}

}  // namespace

TEST_CASE("sieve smallest prime factors") {
  const auto s10 = build_sieve(10);
  const std::uint32_t expected[] = {2, 3, 2, 5, 2, 7, 2, 3, 2};
  for (std::uint64_t k = 2; k <= 10; ++k) CHECK(s10.smallest_factor(k) == expected[k - 2]);
  CHECK(build_sieve(2).smallest_factor(2) == 2);

  const auto s = build_sieve(100000);
  CHECK(s.smallest_factor(91) == 7);
  for (std::uint64_t k = 2; k <= 100000; ++k) REQUIRE(s.smallest_factor(k) == least_factor_by_trial(k));
}

TEST_CASE("sieve limits") {
  CHECK_THROWS_AS(build_sieve(1), CapacityError);
  CHECK_THROWS_AS(build_sieve(kMaxSieveLimit + 1), CapacityError);
  const auto s = build_sieve(50);
  CHECK_THROWS_AS(s.mobius(51), CapacityError);
  CHECK_THROWS_AS(s.divisor_count(51), CapacityError);
}

TEST_CASE("mobius values") {
  const auto s = build_sieve(1000);
  CHECK(s.mobius(1) == 1);
  CHECK(s.mobius(12) == 0);
  CHECK(s.mobius(30) == -1);
  CHECK(mobius(30) == -1);
  const auto mu = s.mobius_table();
  for (std::uint64_t k = 1; k <= 1000; ++k) {
    REQUIRE(mu[k] == mobius_by_trial(k));
    REQUIRE(s.mobius(k) == mu[k]);
  }
}

TEST_CASE("mobius divisor-sum identity up to 10^4") {
  const auto mu = build_sieve(10000).mobius_table();
  for (std::uint64_t k = 1; k <= 10000; ++k) {
    int sum = 0;
    for (std::uint64_t d = 1; d <= k; ++d)
      if (k % d == 0) sum += mu[d];
    REQUIRE(sum == (k == 1 ? 1 : 0));
  }
}

TEST_CASE("tau and phi agree with enumeration up to 10^4") {
  const auto s = build_sieve(10000);
  CHECK(s.divisor_count(1) == 1);
  CHECK(s.euler_phi(1) == 1);
  CHECK(s.divisor_count(12) == 6);
  CHECK(s.euler_phi(10) == 4);
  for (std::uint64_t k = 1; k <= 10000; ++k) {
    std::uint64_t tau = 0, phi = 0;
    for (std::uint64_t d = 1; d <= k; ++d) {
      if (k % d == 0) ++tau;
      if (std::gcd(d, k) == 1) ++phi;
    }
    REQUIRE(s.divisor_count(k) == tau);
    REQUIRE(s.euler_phi(k) == phi);
    REQUIRE(divisor_count(k) == tau);
    REQUIRE(euler_phi(k) == phi);
  }
}

TEST_CASE("partial sums of mu(d)/d^2 approach 6/pi^2") {
  const auto mu = build_sieve(10000).mobius_table();
  const double target = 6.0 / (std::numbers::pi * std::numbers::pi);
  double sum = 0.0;
  std::uint64_t next = 100;
  for (std::uint64_t d = 1; d <= 10000; ++d) {
    sum += mu[d] / (static_cast<double>(d) * d);
    if (d == next) {
      CHECK(std::abs(sum - target) <= 2.0 / static_cast<double>(d));
      next *= 10;
    }
  }
}

TEST_CASE("sieve-free factorization of large inputs") {
  const std::uint64_t a = 1000000007ull, b = 998244353ull;
  const auto f = factorize(a * b);
  REQUIRE(f.size() == 2);
  CHECK(f[0] == PrimePower{b, 1});
  CHECK(f[1] == PrimePower{a, 1});
  CHECK(divisor_count(a * b) == 4);
  CHECK(euler_phi(a * b) == (a - 1) * (b - 1));
  CHECK(mobius(4ull * a) == 0);
  CHECK(factorize(1).empty());
  CHECK_THROWS_AS(factorize(0), DomainError);
  const std::uint64_t m = (1ull << 40) * 3 * 3 * 17;
  CHECK(divisor_count(m) == 41 * 3 * 2);
}

TEST_CASE("modular inverse") {
  CHECK(mod_inverse(1, 7).value() == 1);
  CHECK(mod_inverse(3, 7).value() == 5);
  CHECK(mod_inverse(-4, 7).value() == 5);  // -4 = 3 mod 7
  CHECK(mod_inverse(3, 7).modulus() == 7);
  CHECK_THROWS_AS(mod_inverse(2, 4), NonInvertibleError);
  CHECK_THROWS_AS(mod_inverse(1, 1), DomainError);
  CHECK_THROWS_AS(ResidueClass(7, 7), DomainError);

  // exhaustive: x * inv(x) = 1 mod m, and the value is the canonical one
  for (std::int64_t x = 2; x <= 1000; ++x) {
    for (std::uint64_t m = 2; m <= 1000; ++m) {
      if (std::gcd(static_cast<std::uint64_t>(x), m) != 1) continue;
      const auto inv = mod_inverse(x, m).value();
      REQUIRE(inv >= 1);
      REQUIRE(inv < m);
      REQUIRE(static_cast<std::uint64_t>(x) * inv % m == 1 % m);
    }
  }
}

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK(is_prime(1000003));
  CHECK(prime_by_trial(1000003));
  CHECK(next_prime_at_least(1000000) == 1000003);
  CHECK(next_prime_at_least(2) == 2);
  CHECK(next_prime_at_least(10000) == 10007);
  for (std::uint64_t k = 0; k < 200000; ++k) REQUIRE(is_prime(k) == prime_by_trial(k));
  // strong pseudoprimes to several small bases
  CHECK_FALSE(is_prime(3215031751ull));
  CHECK_FALSE(is_prime(3825123056546413051ull));
  CHECK(is_prime(18446744073709551557ull));
  CHECK_THROWS_AS(next_prime_at_least(18446744073709551558ull), CapacityError);
}

TEST_CASE("isqrt") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(99) == 9);
  CHECK(isqrt(100) == 10);
  CHECK(isqrt(18446744073709551615ull) == 4294967295ull);
}
