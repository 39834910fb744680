#include "fpdir/bilinear.hpp"

#include <algorithm>
#include <string>

#include "fpdir/arith.hpp"
#include "fpdir/errors.hpp"
#include "fpdir/parallel.hpp"

namespace fpdir::bilinear {

namespace {

// p * inv(a) mod b, the residue class of x0 in ax0 + by0 = p. 0 when b = 1.
std::uint64_t base_residue(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  if (b == 1) return 0;
  return arith::mulmod(p % b, arith::inverse_mod(a % b, b), b);
}

// Unchecked core of per_pair_solution; (a, b) in T and n^2 < p assumed.
std::optional<LatticePoint> solve_pair(std::uint64_t a, std::uint64_t b, std::uint64_t p,
                                       std::uint64_t n, std::uint64_t sum_min) {
  const std::uint64_t x0 = base_residue(a, b, p);
  // y <= n  <=>  ax >= p - bn, and p > bn because b <= n < sqrt(p)
  const std::uint64_t need = p - b * n;
  const std::uint64_t lo = std::max<std::uint64_t>(1, (need + a - 1) / a);
  const std::uint64_t x = lo + (x0 + b - lo % b) % b;
  // y >= 1  <=>  ax <= p - b
  if (x > n || a * x > p - b) return std::nullopt;
  const std::uint64_t y = (p - a * x) / b;
  if (x + b <= n && a * (x + b) <= p - b)
    throw ConsistencyError("two solutions for one pair: (" + std::to_string(a) + ", " +
                           std::to_string(b) + ")");
  if (arith::gcd(x, y) != 1 || x + y < sum_min)
    throw ConsistencyError("solution outside the visible triangle");
  return LatticePoint{x, y};
}

void require_below_sqrt(std::uint64_t p, std::uint64_t n) {
  if (n == 0) throw DomainError("n must be positive");
  if (static_cast<unsigned __int128>(n) * n >= p)
    throw DomainError("needs n < sqrt(p); n = " + std::to_string(n) + ", p = " + std::to_string(p) +
                      " (use the brute-force counter)");
}

}  // namespace

std::string_view to_string(Method m) { return m == Method::brute ? "brute" : "fast"; }

// ------------------------------------------------------------ region

TriangleRegion::TriangleRegion(std::uint64_t p, std::uint64_t n)
    : p_(p), n_(n), sum_min_(0) {
  if (p < 2) throw DomainError("p must be at least 2");
  if (n == 0) throw DomainError("n must be positive");
  sum_min_ = (p + n - 1) / n;
}

bool TriangleRegion::contains(std::uint64_t a, std::uint64_t b) const {
  return a >= 1 && b >= 1 && a <= n_ && b <= n_ && a + b >= sum_min_ && arith::gcd(a, b) == 1;
}

std::uint64_t TriangleRegion::first_row() const {
  return sum_min_ > n_ ? std::max<std::uint64_t>(1, sum_min_ - n_) : 1;
}

RegionRow TriangleRegion::row(std::uint64_t b) const {
  RegionRow r{b, {}};
  if (b < 1 || b > n_) return r;
  const std::uint64_t lo = sum_min_ > b ? std::max<std::uint64_t>(1, sum_min_ - b) : 1;
  for (std::uint64_t a = lo; a <= n_; ++a)
    if (arith::gcd(a, b) == 1) r.a.push_back(a);
  return r;
}

std::uint64_t TriangleRegion::size() const {
  std::uint64_t total = 0;
  for (const auto& r : rows()) total += r.a.size();
  return total;
}

// ------------------------------------------------------- brute force

std::uint64_t count_by_product_histogram(std::uint64_t p, std::uint64_t n) {
  const std::uint64_t sq = n * n;
  if (p < 2 || sq < (p + 1) / 2) return 0;  // ad + bc <= 2 n^2 < p
  const std::uint64_t top = std::min(sq, p - 1);
  std::vector<std::uint32_t> hist(top + 1, 0);
  for (std::uint64_t a = 1; a <= n; ++a)
    for (std::uint64_t d = 1; d <= n && a * d <= top; ++d) ++hist[a * d];
  std::uint64_t total = 0;
  for (std::uint64_t k = p - top; k <= top; ++k)
    total += static_cast<std::uint64_t>(hist[k]) * hist[p - k];
  return total;
}

std::uint64_t count_by_triple_loop(std::uint64_t p, std::uint64_t n) {
  std::uint64_t total = 0;
  for (std::uint64_t a = 1; a <= n; ++a) {
    for (std::uint64_t d = 1; d <= n && a * d < p; ++d) {
      const std::uint64_t rest = p - a * d;
      for (std::uint64_t b = 1; b <= n; ++b)
        if (rest % b == 0 && rest / b <= n) ++total;
    }
  }
  return total;
}

SolutionCount count_bruteforce(std::uint64_t p, std::uint64_t n) {
  if (n == 0) throw DomainError("n must be positive");
  if (n > 1'000'000 || n * n > kBruteForceMaxSquare)
    throw CapacityError("brute-force counting is limited to n^2 <= " +
                        std::to_string(kBruteForceMaxSquare));
  const std::uint64_t value = count_by_product_histogram(p, n);
  if (n <= kTripleLoopMaxN && count_by_triple_loop(p, n) != value)
    throw ConsistencyError("product histogram and triple loop disagree");
  return {p, n, value, Method::brute};
}

// -------------------------------------------------------- fast counter

PairOutcome per_pair_solution(std::uint64_t a, std::uint64_t b, std::uint64_t p, std::uint64_t n) {
  require_below_sqrt(p, n);
  const TriangleRegion region(p, n);
  if (!region.contains(a, b))
    throw DomainError("(" + std::to_string(a) + ", " + std::to_string(b) + ") is not in T");
  return {a, b, solve_pair(a, b, p, n, region.sum_min())};
}

SolutionCount count_fast(std::uint64_t p, std::uint64_t n, unsigned threads) {
  require_below_sqrt(p, n);
  const TriangleRegion region(p, n);
  if (region.empty()) return {p, n, 0, Method::fast};
  std::vector<std::uint64_t> partial(std::max(threads, 1u), 0);
  parallel_blocks(region.first_row(), n + 1, threads,
                  [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
                    std::uint64_t local = 0;
                    for (std::uint64_t b = lo; b < hi; ++b)
                      for (auto a : region.row(b).a)
                        if (solve_pair(a, b, p, n, region.sum_min())) ++local;
                    partial[w] = local;
                  });
  std::uint64_t total = 0;
  for (auto v : partial) total += v;
  return {p, n, total, Method::fast};
}

std::vector<PairOutcome> solution_pairs(std::uint64_t p, std::uint64_t n, unsigned threads) {
  require_below_sqrt(p, n);
  const TriangleRegion region(p, n);
  if (region.empty()) return {};
  std::vector<std::vector<PairOutcome>> partial(std::max(threads, 1u));
  parallel_blocks(region.first_row(), n + 1, threads,
                  [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
                    for (std::uint64_t b = lo; b < hi; ++b)
                      for (auto a : region.row(b).a)
                        if (auto s = solve_pair(a, b, p, n, region.sum_min()))
                          partial[w].push_back({a, b, s});
                  });
  std::vector<PairOutcome> out;
  for (auto& part : partial) out.insert(out.end(), part.begin(), part.end());
  return out;
}

BreakdownTerms breakdown_terms(std::uint64_t p, std::uint64_t n, unsigned threads) {
  require_below_sqrt(p, n);
  const TriangleRegion region(p, n);
  if (region.empty()) return {0.0, 0.0, 0.0, 0, 0};
  std::vector<BreakdownTerms> partial(std::max(threads, 1u), BreakdownTerms{0.0, 0.0, 0.0, 0, 0});
  const auto ni = static_cast<std::int64_t>(n);
  const auto pi = static_cast<std::int64_t>(p);
  parallel_blocks(
      region.first_row(), n + 1, threads, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
        BreakdownTerms acc{0.0, 0.0, 0.0, 0, 0};
        for (std::uint64_t b = lo; b < hi; ++b) {
          for (auto a : region.row(b).a) {
            const auto count = solve_pair(a, b, p, n, region.sum_min()) ? 1 : 0;
            const std::uint64_t r_b = (n % b + b - base_residue(a, b, p)) % b;
            const std::uint64_t r_a = (n % a + a - base_residue(b, a, p)) % a;
            const auto ai = static_cast<std::int64_t>(a);
            const auto bi = static_cast<std::int64_t>(b);
            const std::int64_t lhs = count * ai * bi;
            const std::int64_t rhs = ni * (ai + bi) - pi - ai * static_cast<std::int64_t>(r_b) -
                                     bi * static_cast<std::int64_t>(r_a) + ai * bi;
            if (lhs != rhs)
              throw ConsistencyError("breakdown identity fails at (" + std::to_string(a) + ", " +
                                     std::to_string(b) + ")");
            const double ad = static_cast<double>(a), bd = static_cast<double>(b);
            acc.main1 += static_cast<double>(n) * (1.0 / ad + 1.0 / bd);
            acc.main2 += static_cast<double>(p) / (ad * bd);
            acc.frac_sum += static_cast<double>(r_b) / bd + static_cast<double>(r_a) / ad - 1.0;
            acc.total += count;
            ++acc.pairs;
          }
        }
        partial[w] = acc;
      });
  BreakdownTerms out{0.0, 0.0, 0.0, 0, 0};
  for (const auto& t : partial) {
    out.main1 += t.main1;
    out.main2 += t.main2;
    out.frac_sum += t.frac_sum;
    out.total += t.total;
    out.pairs += t.pairs;
  }
  return out;
}

double fractional_sum_diagnostic(std::uint64_t p, std::uint64_t n, unsigned threads) {
  require_below_sqrt(p, n);
  const TriangleRegion region(p, n);
  if (region.empty()) return 0.0;
  std::vector<long double> partial(std::max(threads, 1u), 0.0L);
  parallel_blocks(region.first_row(), n + 1, threads,
                  [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
                    long double acc = 0.0L;
                    for (std::uint64_t b = lo; b < hi; ++b) {
                      const auto row = region.row(b);
                      // row total is (sum of r_b) / b - |row| / 2, exact numerators
                      std::uint64_t numer = 0;
                      for (auto a : row.a) numer += (n % b + b - base_residue(a, b, p)) % b;
                      acc += static_cast<long double>(numer) / b -
                             static_cast<long double>(row.a.size()) / 2;
                    }
                    partial[w] = acc;
                  });
  long double total = 0.0L;
  for (auto v : partial) total += v;
  return static_cast<double>(total);
}

std::uint64_t small_solution_pairs(std::uint64_t p, unsigned threads) {
  if (p < 3 || !arith::is_prime(p)) throw DomainError("p must be an odd prime");
  return count_fast(p, arith::isqrt(p), threads).value;
}

bool verify_ac_conclusion(std::int64_t a, std::int64_t b, std::uint64_t p) {
  if (p > kAcCheckMaxPrime)
    throw CapacityError("exhaustive residue marking is limited to p <= " +
                        std::to_string(kAcCheckMaxPrime));
  if (p < 2) throw DomainError("p must be at least 2");
  const auto pi = static_cast<std::int64_t>(p);
  const auto am = static_cast<std::uint64_t>(((a % pi) + pi) % pi);
  const auto bm = static_cast<std::uint64_t>(((b % pi) + pi) % pi);
  if (am == 0 && bm == 0) throw DomainError("gcd(a, b, p) must be 1");
  const auto s = static_cast<std::int64_t>(arith::isqrt(p));
  std::vector<std::uint8_t> hit(p, 0);
  std::uint64_t covered = 0;
  for (std::int64_t y = -s; y <= s; ++y) {
    // r runs through a x + b y for x = -s, ..., s
    const std::int64_t start = (static_cast<std::int64_t>(bm) * y - static_cast<std::int64_t>(am) * s) % pi;
    std::uint64_t r = static_cast<std::uint64_t>(start < 0 ? start + pi : start);
    for (std::int64_t x = -s; x <= s; ++x) {
      if ((x != 0 || y != 0) && !hit[r]) {
        hit[r] = 1;
        if (++covered == p) return true;
      }
      r += am;
      if (r >= p) r -= p;
    }
  }
  return false;
}

}  // namespace fpdir::bilinear
