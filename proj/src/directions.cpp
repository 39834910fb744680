#include "fpdir/directions.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "fpdir/arith.hpp"
#include "fpdir/bilinear.hpp"
#include "fpdir/errors.hpp"
#include "fpdir/parallel.hpp"

namespace fpdir::directions {

namespace {

void require_prime(std::uint64_t p) {
  if (!arith::is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

class Bitmap {
 public:
  explicit Bitmap(std::uint64_t bits) : words_((bits + 63) / 64, 0) {}
  void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void merge(const Bitmap& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  }
  std::uint64_t count() const {
    std::uint64_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace

std::uint64_t directions_fp_bruteforce(std::uint64_t p, std::uint64_t n, unsigned threads) {
  require_prime(p);
  if (n == 0 || n > p) throw DomainError("needs 1 <= n <= p");
  if (n == 1) return 0;
  const auto span = static_cast<std::int64_t>(n - 1);
  const auto pi = static_cast<std::int64_t>(p);
  // rows are the denominators v in [-(n-1), n-1]; one bitmap per worker
  const unsigned workers = std::max(threads, 1u);
  std::vector<Bitmap> maps(workers, Bitmap(p + 1));
  parallel_blocks(0, 2 * (n - 1) + 1, workers, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
    auto& map = maps[w];
    for (std::uint64_t row = lo; row < hi; ++row) {
      const std::int64_t v = static_cast<std::int64_t>(row) - span;
      if (v == 0) {
        map.set(vertical_slot(p));
        continue;
      }
      const std::uint64_t vinv = arith::mod_inverse(v, p).value();
      // slope(u) = u * vinv; start at u = -(n-1) and step by vinv
      std::int64_t start = (-span % pi + pi) % pi;
      std::uint64_t slope = arith::mulmod(static_cast<std::uint64_t>(start), vinv, p);
      for (std::int64_t u = -span; u <= span; ++u) {
        map.set(slope);
        slope += vinv;
        if (slope >= p) slope -= p;
      }
    }
  });
  for (unsigned w = 1; w < workers; ++w) maps[0].merge(maps[w]);
  return maps[0].count();
}

std::uint64_t coprime_pairs(std::uint64_t m) {
  if (m == 0) return 0;
  if (m == 1) return 1;
  const auto mu = arith::build_sieve(m).mobius_table();
  std::int64_t total = 0;
  for (std::uint64_t d = 1; d <= m; ++d) {
    if (mu[d] == 0) continue;
    const auto q = static_cast<std::int64_t>(m / d);
    total += mu[d] * q * q;
  }
  return static_cast<std::uint64_t>(total);
}

std::uint64_t directions_q(std::uint64_t n) {
  if (n <= 1) return 0;
  return 2 * coprime_pairs(n - 1) + 2;
}

DirectionCensus directions_fp_fast(std::uint64_t p, std::uint64_t n, unsigned threads) {
  require_prime(p);
  if (n < 2) throw DomainError("the fast census needs n >= 2");
  if (static_cast<unsigned __int128>(n) * n >= p)
    throw DomainError("the fast census needs n < sqrt(p); use the brute-force census");
  const std::uint64_t half = coprime_pairs(n - 1);
  const std::uint64_t overlap = bilinear::count_fast(p, n - 1, threads).value;
  DirectionCensus c{};
  c.p = p;
  c.n = n;
  c.positive_q = half;
  c.negative_q = half;
  c.count_q = 2 * half + 2;
  c.overlap_fp = overlap;
  c.count_fp = c.count_q - overlap;
  return c;
}

std::uint64_t positive_directions_fp(std::uint64_t p, std::uint64_t n) {
  require_prime(p);
  if (n == 0 || n > p) throw DomainError("needs 1 <= n <= p");
  Bitmap seen(p);
  for (std::uint64_t b = 1; b < n; ++b) {
    const std::uint64_t binv = arith::inverse_mod(b % p, p);
    for (std::uint64_t a = 1; a < n; ++a) seen.set(arith::mulmod(a, binv, p));
  }
  return seen.count();
}

}  // namespace fpdir::directions
