#pragma once

// Solutions (a, b, c, d) in [n]^4 of ad + bc = p.
//
// The fast counter walks the triangle T of visible lattice points
//   1 <= a, b <= n,  a + b >= p / n,  gcd(a, b) = 1
// row by row (fixed b). For each (a, b) in T the solutions of ax + by = p
// form the line (x0 + bt, y0 - at); when n < sqrt(p) at most one of them has
// both coordinates in [1, n], and it is found with one modular inverse.

#include <cstdint>
#include <optional>
#include <ranges>
#include <string_view>
#include <vector>

namespace fpdir::bilinear {

// Largest n^2 accepted by the brute-force oracle.
inline constexpr std::uint64_t kBruteForceMaxSquare = 10'000'000;
// The O(n^3) loop runs next to the product histogram up to this n.
inline constexpr std::uint64_t kTripleLoopMaxN = 256;
// verify_ac_conclusion marks O(p) residues per pair.
inline constexpr std::uint64_t kAcCheckMaxPrime = 100'000;

enum class Method { brute, fast };
std::string_view to_string(Method m);

struct SolutionCount {
  std::uint64_t p;
  std::uint64_t n;
  std::uint64_t value;
  Method method;
};

struct LatticePoint {
  std::uint64_t x;
  std::uint64_t y;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

struct PairOutcome {
  std::uint64_t a;
  std::uint64_t b;
  std::optional<LatticePoint> solution;
};

// One row of T: all a with (a, b) in T, increasing.
struct RegionRow {
  std::uint64_t b;
  std::vector<std::uint64_t> a;
};

class TriangleRegion {
 public:
  // Requires p >= 2 and n >= 1.
  TriangleRegion(std::uint64_t p, std::uint64_t n);

  std::uint64_t p() const { return p_; }
  std::uint64_t n() const { return n_; }
  // ceil(p / n): a + b >= p / n  <=>  a + b >= sum_min for integers.
  std::uint64_t sum_min() const { return sum_min_; }

  bool contains(std::uint64_t a, std::uint64_t b) const;
  bool empty() const { return 2 * n_ < sum_min_; }

  // Rows with possibly nonempty content are b in [first_row(), n].
  std::uint64_t first_row() const;
  RegionRow row(std::uint64_t b) const;

  // Lazily yields every RegionRow, increasing b; empty view for empty T.
  auto rows() const {
    const std::uint64_t lo = empty() ? n_ + 1 : first_row();
    return std::views::iota(lo, n_ + 1) |
           std::views::transform([this](std::uint64_t b) { return row(b); });
  }

  std::uint64_t size() const;

 private:
  std::uint64_t p_;
  std::uint64_t n_;
  std::uint64_t sum_min_;
};

inline TriangleRegion enumerate_region(std::uint64_t p, std::uint64_t n) { return {p, n}; }

// Exact count via a histogram of products ad; when n <= kTripleLoopMaxN a
// triple loop over (a, d, b) runs too and must agree (ConsistencyError).
// CapacityError when n^2 > kBruteForceMaxSquare.
SolutionCount count_bruteforce(std::uint64_t p, std::uint64_t n);
std::uint64_t count_by_product_histogram(std::uint64_t p, std::uint64_t n);
std::uint64_t count_by_triple_loop(std::uint64_t p, std::uint64_t n);

// The unique (x, y) in [1, n]^2 with ax + by = p, if any.
// DomainError when (a, b) is not in T or when n^2 >= p.
PairOutcome per_pair_solution(std::uint64_t a, std::uint64_t b, std::uint64_t p, std::uint64_t n);

// Sum over T of per-pair indicators. DomainError when n^2 >= p.
SolutionCount count_fast(std::uint64_t p, std::uint64_t n, unsigned threads = 1);

// Every (a, b) in T that has a solution, in row order.
std::vector<PairOutcome> solution_pairs(std::uint64_t p, std::uint64_t n, unsigned threads = 1);

struct BreakdownTerms {
  double main1;     // n * sum (1/a + 1/b)
  double main2;     // p * sum 1/(ab)
  double frac_sum;  // sum ({(n - p inv(a) mod b)/b} + {(n - p inv(b) mod a)/a} - 1)
  std::uint64_t total;
  std::uint64_t pairs;
};

// Checks, for every (a, b) in T and in integers scaled by ab,
//   count(a,b) ab = n (a + b) - p - a r_b - b r_a + ab
// where r_b = (n - p inv(a) mod b) mod b; throws ConsistencyError on any
// violation. DomainError when n^2 >= p.
BreakdownTerms breakdown_terms(std::uint64_t p, std::uint64_t n, unsigned threads = 1);

// sum over T of ({(n - p inv(a) mod b) / b} - 1/2), accumulated row by row
// from exact integer numerators. DomainError when n^2 >= p.
double fractional_sum_diagnostic(std::uint64_t p, std::uint64_t n, unsigned threads = 1);

// Pairs of T(floor(sqrt p)) admitting a solution; equals count_fast there.
std::uint64_t small_solution_pairs(std::uint64_t p, unsigned threads = 1);

// True iff every residue c mod p is ax + by for some (x, y) != (0, 0) with
// |x|, |y| <= floor(sqrt p). CapacityError for p > kAcCheckMaxPrime,
// DomainError when p | gcd(a, b).
bool verify_ac_conclusion(std::int64_t a, std::int64_t b, std::uint64_t p);

}  // namespace fpdir::bilinear
