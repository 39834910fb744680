#pragma once

// N_u(p, n) = #{(a, b, c, d) in [n]^4 : u ab = cd (mod p)} and the split of
// the fourth moment of short character sums by parity:
//   (1/(p-1)) sum_{chi even} |S_chi|^4 = (N_1 + N_-1) / 2
//   (1/(p-1)) sum_{chi odd}  |S_chi|^4 = (N_1 - N_-1) / 2
// with S_chi = sum_{m <= n} chi(m). The combinatorial route is exact; the
// character-table oracle evaluates the right-hand sides directly.

#include <complex>
#include <cstdint>
#include <vector>

namespace fpdir::charsums {

inline constexpr std::uint64_t kMaxHistogramModulus = 200'000'000;
inline constexpr std::uint64_t kOracleMaxPrime = 2000;

struct MomentReport {
  std::uint64_t p;
  std::uint64_t n;
  std::uint64_t n1;
  std::uint64_t n_minus1;
  double even_moment;
  double odd_moment;
};

// Residue histogram h[r] = #{(a, b) in [n]^2 : ab = r mod p}, summed as
// sum_r h[r] h[u r mod p]. DomainError for u = 0 mod p, n = 0 or n >= p.
std::uint64_t count_congruence(std::uint64_t u, std::uint64_t p, std::uint64_t n,
                               unsigned threads = 1);

MomentReport parity_moments(std::uint64_t p, std::uint64_t n, unsigned threads = 1);

// Dirichlet characters mod p indexed by j in [0, p-2] against a primitive
// root g: chi_j(g^k) = e(jk / (p-1)). Since -1 = g^((p-1)/2), chi_j is even
// exactly when j is even. The running sums S_j cover m = 1..length().
class CharacterOracle {
 public:
  // CapacityError for p > kOracleMaxPrime, DomainError unless p is an odd prime.
  explicit CharacterOracle(std::uint64_t p);

  std::uint64_t p() const { return p_; }
  std::uint64_t primitive_root() const { return root_; }
  std::uint64_t index(std::uint64_t m) const;  // discrete log of m mod p
  std::uint64_t length() const { return length_; }

  // Adds m = length() + 1 to every character sum.
  void advance();

  const std::vector<std::complex<double>>& sums() const { return sums_; }
  // (1/(p-1)) sum_j chi_j(u) |S_j|^4, the character side of N_u.
  double congruence_count(std::uint64_t u) const;
  // Moments split by parity; n1 and n_minus1 are the rounded character sides.
  MomentReport moments() const;

 private:
  std::uint64_t p_;
  std::uint64_t root_ = 0;
  std::uint64_t length_ = 0;
  std::vector<std::uint64_t> log_;
  std::vector<std::complex<double>> unit_roots_;  // e(k / (p-1))
  std::vector<std::complex<double>> sums_;
};

// Character-table oracle for (p, n), O(p n). Same limits as CharacterOracle.
MomentReport oracle_moments(std::uint64_t p, std::uint64_t n);

struct AczReference {
  double n1_main;      // 12/pi^2 n^2 log n
  double moment_main;  // 6/pi^2 n^2 log n, for each parity
};

// Reference main terms. DomainError unless n^2 < p.
AczReference acz_reference(std::uint64_t p, std::uint64_t n);

}  // namespace fpdir::charsums
