#pragma once

// Directions determined by [n]^2, over F_p and over Q.
//
// Over a field F the direction set is {u / v : -(n-1) <= u, v <= n-1,
// (u, v) != (0, 0)} with v = 0 read as the vertical direction. It splits into
// 0, vertical, the positive slopes a/b and the negative slopes -a/b with
// a, b in [n-1]. For n < sqrt(p) the positive and negative parts keep their
// rational sizes and meet in exactly N(p, n-1) residues.

#include <cstdint>

namespace fpdir::directions {

// Index used for the vertical direction in an F_p direction bitmap.
inline constexpr std::uint64_t vertical_slot(std::uint64_t p) { return p; }

struct DirectionCensus {
  std::uint64_t p;
  std::uint64_t n;
  std::uint64_t count_fp;    // |D_n(F_p)|, vertical included
  std::uint64_t count_q;     // |D_n(Q)|
  std::uint64_t positive_q;  // |D+_n(Q)|
  std::uint64_t negative_q;  // |D-_n(Q)|
  std::uint64_t overlap_fp;  // |D+_n(F_p) and D-_n(F_p)| = N(p, n-1)
};

// Enumerates every slope into a (p+1)-slot bitmap. 0 for n = 1.
// DomainError unless p is prime and 1 <= n <= p.
std::uint64_t directions_fp_bruteforce(std::uint64_t p, std::uint64_t n, unsigned threads = 1);

// #{(a, b) in [m]^2 : gcd(a, b) = 1} = sum_d mu(d) floor(m/d)^2.
std::uint64_t coprime_pairs(std::uint64_t m);

// 0 for n <= 1, otherwise 2 coprime_pairs(n-1) + 2.
std::uint64_t directions_q(std::uint64_t n);

// Census from the positive/negative split and the bilinear counter.
// DomainError unless p is prime and 2 <= n < sqrt(p).
DirectionCensus directions_fp_fast(std::uint64_t p, std::uint64_t n, unsigned threads = 1);

// Number of distinct residues a * inv(b) mod p with a, b in [n-1].
std::uint64_t positive_directions_fp(std::uint64_t p, std::uint64_t n);

}  // namespace fpdir::directions
