#include "fpdir/charsums.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fpdir/arith.hpp"
#include "fpdir/errors.hpp"
#include "fpdir/parallel.hpp"

namespace fpdir::charsums {

namespace {

void require_odd_prime(std::uint64_t p) {
  if (p < 3 || !arith::is_prime(p)) throw DomainError(std::to_string(p) + " is not an odd prime");
}

std::vector<std::uint32_t> product_histogram(std::uint64_t p, std::uint64_t n, unsigned threads) {
  const unsigned workers = std::max(threads, 1u);
  std::vector<std::vector<std::uint32_t>> parts(workers);
  parallel_blocks(1, n + 1, workers, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
    auto& h = parts[w];
    h.assign(p, 0);
    for (std::uint64_t a = lo; a < hi; ++a) {
      std::uint64_t r = a % p;  // a * b for b = 1, 2, ...
      for (std::uint64_t b = 1; b <= n; ++b) {
        ++h[r];
        r += a;
        if (r >= p) r -= p;
      }
    }
  });
  auto& out = parts[0];
  for (unsigned w = 1; w < workers; ++w)
    if (!parts[w].empty())
      for (std::uint64_t r = 0; r < p; ++r) out[r] += parts[w][r];
  return std::move(out);
}

}  // namespace

std::uint64_t count_congruence(std::uint64_t u, std::uint64_t p, std::uint64_t n, unsigned threads) {
  require_odd_prime(p);
  if (p > kMaxHistogramModulus) throw CapacityError("modulus too large for a dense histogram");
  if (u % p == 0) throw DomainError("u must be nonzero mod p");
  if (n == 0 || n >= p) throw DomainError("needs 1 <= n <= p-1");
  if (n > 65535) throw CapacityError("n^4 would overflow 64 bits");
  const auto h = product_histogram(p, n, threads);
  const std::uint64_t um = u % p;
  std::uint64_t total = 0;
  for (std::uint64_t r = 1; r < p; ++r) {
    if (h[r] == 0) continue;
    total += static_cast<std::uint64_t>(h[r]) * h[arith::mulmod(um, r, p)];
  }
  return total;
}

MomentReport parity_moments(std::uint64_t p, std::uint64_t n, unsigned threads) {
  const std::uint64_t n1 = count_congruence(1, p, n, threads);
  const std::uint64_t nm1 = count_congruence(p - 1, p, n, threads);
  return {p, n, n1, nm1, (static_cast<double>(n1) + static_cast<double>(nm1)) / 2,
          (static_cast<double>(n1) - static_cast<double>(nm1)) / 2};
}

// ------------------------------------------------------------- oracle

CharacterOracle::CharacterOracle(std::uint64_t p) : p_(p) {
  if (p > kOracleMaxPrime) throw CapacityError("character-table oracle is limited to p <= 2000");
  require_odd_prime(p);
  const std::uint64_t order = p - 1;
  const auto factors = arith::factorize(order);
  for (std::uint64_t g = 2; g < p && root_ == 0; ++g) {
    bool generator = true;
    for (const auto& f : factors)
      if (arith::powmod(g, order / f.prime, p) == 1) generator = false;
    if (generator) root_ = g;
  }
  log_.assign(p, 0);
  std::uint64_t x = 1;
  for (std::uint64_t k = 0; k < order; ++k) {
    log_[x] = k;
    x = x * root_ % p;
  }
  unit_roots_.resize(order);
  for (std::uint64_t k = 0; k < order; ++k)
    unit_roots_[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) /
                                         static_cast<double>(order));
  sums_.assign(order, {0.0, 0.0});
}

std::uint64_t CharacterOracle::index(std::uint64_t m) const {
  if (m % p_ == 0) throw DomainError("0 has no discrete logarithm");
  return log_[m % p_];
}

void CharacterOracle::advance() {
  ++length_;
  if (length_ % p_ == 0) return;  // every character vanishes at multiples of p
  const std::uint64_t order = p_ - 1;
  const std::uint64_t k = log_[length_ % p_];
  for (std::uint64_t j = 0; j < order; ++j) sums_[j] += unit_roots_[j * k % order];
}

double CharacterOracle::congruence_count(std::uint64_t u) const {
  const std::uint64_t order = p_ - 1;
  const std::uint64_t k = index(u);
  double total = 0.0;
  for (std::uint64_t j = 0; j < order; ++j) {
    const double m2 = std::norm(sums_[j]);
    total += unit_roots_[j * k % order].real() * m2 * m2;
  }
  return total / static_cast<double>(order);
}

MomentReport CharacterOracle::moments() const {
  const std::uint64_t order = p_ - 1;
  double even = 0.0, odd = 0.0;
  for (std::uint64_t j = 0; j < order; ++j) {
    const double m2 = std::norm(sums_[j]);
    (j % 2 == 0 ? even : odd) += m2 * m2;
  }
  even /= static_cast<double>(order);
  odd /= static_cast<double>(order);
  return {p_, length_, static_cast<std::uint64_t>(std::llround(even + odd)),
          static_cast<std::uint64_t>(std::llround(std::max(0.0, even - odd))), even, odd};
}

MomentReport oracle_moments(std::uint64_t p, std::uint64_t n) {
  CharacterOracle oracle(p);
  if (n == 0 || n >= p) throw DomainError("needs 1 <= n <= p-1");
  for (std::uint64_t m = 0; m < n; ++m) oracle.advance();
  return oracle.moments();
}

AczReference acz_reference(std::uint64_t p, std::uint64_t n) {
  if (n == 0 || static_cast<unsigned __int128>(n) * n >= p) throw DomainError("needs 1 <= n < sqrt(p)");
  constexpr double kPi2 = std::numbers::pi * std::numbers::pi;
  const double nd = static_cast<double>(n);
  const double base = nd * nd * std::log(nd);
  return {12.0 / kPi2 * base, 6.0 / kPi2 * base};
}

}  // namespace fpdir::charsums
