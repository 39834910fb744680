#pragma once

// Integer primitives shared by every other module: a smallest-prime-factor
// sieve for bulk multiplicative functions, sieve-free factorization for
// scattered 64-bit inputs, modular inverses and deterministic primality.

#include <cstdint>
#include <span>
#include <vector>

namespace fpdir::arith {

// Largest sieve we agree to build: 4 bytes per entry, so 800 MB at the cap.
inline constexpr std::uint64_t kMaxSieveLimit = 200'000'000;

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

class FactorSieve {
 public:
  // Throws CapacityError unless 2 <= limit <= kMaxSieveLimit.
  explicit FactorSieve(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }

  // spf(k) for 2 <= k <= limit; entries 0 and 1 hold 0.
  std::uint32_t smallest_factor(std::uint64_t k) const;
  std::span<const std::uint32_t> table() const { return spf_; }

  std::vector<PrimePower> factorize(std::uint64_t k) const;
  int mobius(std::uint64_t k) const;
  std::uint64_t divisor_count(std::uint64_t k) const;
  std::uint64_t euler_phi(std::uint64_t k) const;

  // mu(0..limit) in one pass; index 0 is unused and holds 0.
  std::vector<std::int8_t> mobius_table() const;

 private:
  void check(std::uint64_t k) const;

  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
};

FactorSieve build_sieve(std::uint64_t limit);

// Sieve-free versions for isolated inputs (trial division + Pollard rho).
std::vector<PrimePower> factorize(std::uint64_t k);
int mobius(std::uint64_t k);
std::uint64_t divisor_count(std::uint64_t k);
std::uint64_t euler_phi(std::uint64_t k);

// Canonical residue: 0 <= value < modulus, modulus >= 2.
class ResidueClass {
 public:
  ResidueClass(std::uint64_t value, std::uint64_t modulus);

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return modulus_; }

  friend bool operator==(const ResidueClass&, const ResidueClass&) = default;

 private:
  std::uint64_t value_;
  std::uint64_t modulus_;
};

// The inverse of x modulo m as a value in [1, m-1], by extended gcd.
// Throws DomainError for m < 2, NonInvertibleError when gcd(x, m) != 1.
ResidueClass mod_inverse(std::int64_t x, std::uint64_t m);

// Same as mod_inverse(x, m).value() for x already reduced mod m; no
// validation beyond the coprimality check. Used on hot paths.
std::uint64_t inverse_mod(std::uint64_t x, std::uint64_t m);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t isqrt(std::uint64_t k);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t k);
// Smallest prime >= k. Throws CapacityError if it does not fit in 64 bits.
std::uint64_t next_prime_at_least(std::uint64_t k);

}  // namespace fpdir::arith
