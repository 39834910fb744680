#include "fpdir/arith.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "fpdir/errors.hpp"

namespace fpdir::arith {

namespace {

using u128 = unsigned __int128;

std::vector<PrimePower> merge_factors(std::vector<std::uint64_t> primes) {
  std::sort(primes.begin(), primes.end());
  std::vector<PrimePower> out;
  for (auto q : primes) {
    if (!out.empty() && out.back().prime == q)
      ++out.back().exponent;
    else
      out.push_back({q, 1});
  }
  return out;
}

int mobius_of(const std::vector<PrimePower>& f) {
  for (const auto& pp : f)
    if (pp.exponent > 1) return 0;
  return f.size() % 2 == 0 ? 1 : -1;
}

std::uint64_t tau_of(const std::vector<PrimePower>& f) {
  std::uint64_t t = 1;
  for (const auto& pp : f) t *= pp.exponent + 1;
  return t;
}

std::uint64_t phi_of(std::uint64_t k, const std::vector<PrimePower>& f) {
  std::uint64_t r = k;
  for (const auto& pp : f) r = r / pp.prime * (pp.prime - 1);
  return r;
}

// Brent's variant of Pollard rho; n is odd, composite and > 1.
std::uint64_t rho_factor(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    constexpr std::uint64_t m = 128;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const std::uint64_t d = rho_factor(n);
  split(d, out);
  split(n / d, out);
}

}  // namespace

// ---------------------------------------------------------------- sieve

FactorSieve::FactorSieve(std::uint64_t limit) : limit_(limit) {
  if (limit < 2 || limit > kMaxSieveLimit)
    throw CapacityError("sieve limit " + std::to_string(limit) + " outside [2, " +
                        std::to_string(kMaxSieveLimit) + "]");
  spf_.assign(limit + 1, 0);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    // linear sieve: each composite is written once, by its smallest prime
    for (auto q : primes) {
      if (q > spf_[i] || i * q > limit) break;
      spf_[i * q] = q;
    }
  }
}

void FactorSieve::check(std::uint64_t k) const {
  if (k == 0) throw DomainError("argument must be positive");
  if (k > limit_)
    throw CapacityError(std::to_string(k) + " exceeds sieve limit " + std::to_string(limit_));
}

std::uint32_t FactorSieve::smallest_factor(std::uint64_t k) const {
  if (k > limit_)
    throw CapacityError(std::to_string(k) + " exceeds sieve limit " + std::to_string(limit_));
  return spf_[k];
}

std::vector<PrimePower> FactorSieve::factorize(std::uint64_t k) const {
  check(k);
  std::vector<PrimePower> out;
  while (k > 1) {
    const std::uint32_t q = spf_[k];
    unsigned e = 0;
    while (k % q == 0) {
      k /= q;
      ++e;
    }
    out.push_back({q, e});
  }
  return out;
}

int FactorSieve::mobius(std::uint64_t k) const { return mobius_of(factorize(k)); }

std::uint64_t FactorSieve::divisor_count(std::uint64_t k) const { return tau_of(factorize(k)); }

std::uint64_t FactorSieve::euler_phi(std::uint64_t k) const { return phi_of(k, factorize(k)); }

std::vector<std::int8_t> FactorSieve::mobius_table() const {
  std::vector<std::int8_t> mu(limit_ + 1, 0);
  mu[1] = 1;
  for (std::uint64_t k = 2; k <= limit_; ++k) {
    const std::uint64_t q = spf_[k];
    const std::uint64_t rest = k / q;
    mu[k] = (rest % q == 0) ? 0 : static_cast<std::int8_t>(-mu[rest]);
  }
  return mu;
}

FactorSieve build_sieve(std::uint64_t limit) { return FactorSieve(limit); }

// ------------------------------------------------------- sieve-free path

std::vector<PrimePower> factorize(std::uint64_t k) {
  if (k == 0) throw DomainError("cannot factor 0");
  std::vector<std::uint64_t> primes;
  for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    while (k % q == 0) {
      primes.push_back(q);
      k /= q;
    }
  }
  split(k, primes);
  return merge_factors(std::move(primes));
}

int mobius(std::uint64_t k) { return mobius_of(factorize(k)); }
std::uint64_t divisor_count(std::uint64_t k) { return tau_of(factorize(k)); }
std::uint64_t euler_phi(std::uint64_t k) { return phi_of(k, factorize(k)); }

// ------------------------------------------------------------- residues

ResidueClass::ResidueClass(std::uint64_t value, std::uint64_t modulus)
    : value_(value), modulus_(modulus) {
  if (modulus < 2) throw DomainError("modulus must be at least 2");
  if (value >= modulus) throw DomainError("residue value must lie in [0, modulus)");
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t inverse_mod(std::uint64_t x, std::uint64_t m) {
  // extended Euclid on (x, m) tracking only the coefficient of x
  __int128 old_r = x % m, r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1)
    throw NonInvertibleError(std::to_string(x) + " is not invertible modulo " + std::to_string(m));
  __int128 v = old_s % static_cast<__int128>(m);
  if (v < 0) v += m;
  return static_cast<std::uint64_t>(v);
}

ResidueClass mod_inverse(std::int64_t x, std::uint64_t m) {
  if (m < 2) throw DomainError("modulus must be at least 2");
  __int128 r = static_cast<__int128>(x) % static_cast<__int128>(m);
  if (r < 0) r += m;
  return ResidueClass(inverse_mod(static_cast<std::uint64_t>(r), m), m);
}

std::uint64_t isqrt(std::uint64_t k) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(k)));
  while (static_cast<u128>(r) * r > k) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= k) ++r;
  return r;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// ------------------------------------------------------------ primality

bool is_prime(std::uint64_t k) {
  if (k < 2) return false;
  static constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto q : kBases) {
    if (k == q) return true;
    if (k % q == 0) return false;
  }
  const int s = std::countr_zero(k - 1);
  const std::uint64_t d = (k - 1) >> s;
  // the first twelve primes as witnesses are exact below 3.3e24
  for (auto a : kBases) {
    std::uint64_t x = powmod(a, d, k);
    if (x == 1 || x == k - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, k);
      if (x == k - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t next_prime_at_least(std::uint64_t k) {
  constexpr std::uint64_t kLargest64BitPrime = 18446744073709551557ull;
  if (k > kLargest64BitPrime) throw CapacityError("no 64-bit prime at or above the input");
  if (k <= 2) return 2;
  for (std::uint64_t c = k | 1;; c += 2)
    if (is_prime(c)) return c;
}

}  // namespace fpdir::arith
