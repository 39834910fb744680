#include <cmath>

#include "doctest.h"
#include "fpdir/arith.hpp"
#include "fpdir/charsums.hpp"
#include "fpdir/errors.hpp"

using namespace fpdir;
using namespace fpdir::charsums;

namespace {

std::uint64_t congruence_by_loop(std::uint64_t u, std::uint64_t p, std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t a = 1; a <= n; ++a)
    for (std::uint64_t b = 1; b <= n; ++b)
      for (std::uint64_t cc = 1; cc <= n; ++cc)
        for (std::uint64_t d = 1; d <= n; ++d)
          if ((u * a * b) % p == (cc * d) % p) ++c;
  return c;
}

}  // namespace

TEST_CASE("p = 11, n = 3") {
  CHECK(count_congruence(1, 11, 3) == 15);
  CHECK(count_congruence(10, 11, 3) == 4);
  const auto m = parity_moments(11, 3);
  CHECK(m.even_moment == 9.5);
  CHECK(m.odd_moment == 5.5);
  CHECK(congruence_by_loop(1, 11, 3) == 15);
  CHECK(congruence_by_loop(10, 11, 3) == 4);
}

TEST_CASE("histogram count matches the quadruple loop") {
  for (std::uint64_t p : {3ull, 5ull, 7ull, 13ull, 31ull})
    for (std::uint64_t n = 1; n < std::min<std::uint64_t>(p, 9); ++n)
      for (std::uint64_t u = 1; u < p; ++u)
        REQUIRE(count_congruence(u, p, n) == congruence_by_loop(u, p, n));
}

TEST_CASE("character oracle") {
  CharacterOracle o(11);
  CHECK(o.primitive_root() == 2);
  CHECK(o.index(1) == 0);
  CHECK(o.index(10) == 5);  // -1 = g^((p-1)/2)
  CHECK_THROWS_AS(o.index(22), DomainError);
  CHECK_THROWS_AS(CharacterOracle(2003), CapacityError);
  CHECK_THROWS_AS(CharacterOracle(15), DomainError);
  // S_0 counts m <= n coprime to p
  for (int i = 0; i < 4; ++i) o.advance();
  CHECK(std::abs(o.sums()[0].real() - 4.0) < 1e-12);
}

TEST_CASE("character side equals the combinatorial count for p <= 101") {
  for (std::uint64_t p = 3; p <= 101; p += 2) {
    if (!arith::is_prime(p)) continue;
    CharacterOracle o(p);
    for (std::uint64_t n = 1; n < p; ++n) {
      o.advance();
      for (std::uint64_t u = 1; u < p; ++u) {
        const double exact = static_cast<double>(count_congruence(u, p, n));
        REQUIRE(std::abs(o.congruence_count(u) - exact) <= 1e-6 * std::max(1.0, exact));
      }
      const auto got = parity_moments(p, n);
      const auto ref = o.moments();
      REQUIRE(std::abs(got.even_moment - ref.even_moment) <= 1e-6 * std::max(1.0, got.even_moment));
      REQUIRE(std::abs(got.odd_moment - ref.odd_moment) <= 1e-6 * std::max(1.0, got.even_moment));
    }
  }
}

TEST_CASE("oracle_moments helper") {
  const auto m = oracle_moments(11, 3);
  CHECK(m.n1 == 15);
  CHECK(m.n_minus1 == 4);
  CHECK(std::abs(m.even_moment - 9.5) < 1e-9);
  CHECK(std::abs(m.odd_moment - 5.5) < 1e-9);
}

TEST_CASE("threaded histogram matches serial") {
  CHECK(count_congruence(1, 100003, 315, 4) == count_congruence(1, 100003, 315, 1));
}

TEST_CASE("odd and even moments balance as p grows") {
  const auto small = parity_moments(1009, 30);
  const auto large = parity_moments(100003, 315);
  const double rs = small.odd_moment / small.even_moment;
  const double rl = large.odd_moment / large.even_moment;
  CHECK(rl >= 0.8);
  CHECK(rl <= 1.25);
  CHECK(std::abs(rl - 1) < std::abs(rs - 1));
  const auto ref = acz_reference(100003, 315);
  CHECK(ref.n1_main == doctest::Approx(2 * ref.moment_main));
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(count_congruence(0, 11, 3), DomainError);
  CHECK_THROWS_AS(count_congruence(11, 11, 3), DomainError);
  CHECK_THROWS_AS(count_congruence(1, 11, 11), DomainError);
  CHECK_THROWS_AS(count_congruence(1, 12, 3), DomainError);
  CHECK_THROWS_AS(acz_reference(101, 11), DomainError);
}
