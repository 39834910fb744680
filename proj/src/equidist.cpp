#include "fpdir/equidist.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "fpdir/arith.hpp"
#include "fpdir/errors.hpp"
#include "fpdir/parallel.hpp"

namespace fpdir::equidist {

namespace {

using i128 = __int128;

i128 floor_mod(i128 a, i128 m) {
  const i128 r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw CapacityError("rational value does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

double e_phase_sum_abs(std::span<const double> points, std::uint64_t t) {
  std::complex<double> acc{0.0, 0.0};
  const double td = static_cast<double>(t);
  for (double u : points) {
    const double frac = td * u - std::floor(td * u);
    acc += std::polar(1.0, 2.0 * std::numbers::pi * frac);
  }
  return std::abs(acc);
}

// Squarefree divisors d of b paired with mu(d).
std::vector<std::pair<std::uint64_t, int>> mobius_divisors(std::uint64_t b) {
  std::vector<std::pair<std::uint64_t, int>> out{{1, 1}};
  for (const auto& pp : arith::factorize(b)) {
    const std::size_t count = out.size();
    for (std::size_t i = 0; i < count; ++i) out.push_back({out[i].first * pp.prime, -out[i].second});
  }
  return out;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const auto g = static_cast<std::int64_t>(std::gcd(num < 0 ? -num : num, den));
  num_ = num / (g == 0 ? 1 : g);
  den_ = den / (g == 0 ? 1 : g);
}

FracSequence inverse_sequence(std::uint64_t b, std::uint64_t p, double x) {
  if (b < 2) throw DomainError("modulus b must be at least 2");
  if (arith::gcd(p, b) != 1) throw DomainError("p and b must be coprime");
  if (!(x > 0.0) || x > static_cast<double>(b)) throw DomainError("needs 0 < X <= b");
  FracSequence seq;
  seq.origin = SequenceOrigin{b, p, x};
  const auto top = static_cast<std::uint64_t>(std::floor(x));
  const std::uint64_t pm = p % b;
  for (std::uint64_t a = 1; a <= top; ++a) {
    if (arith::gcd(a, b) != 1) continue;
    const std::uint64_t r = arith::mulmod(pm, arith::inverse_mod(a, b), b);
    seq.points.push_back(static_cast<double>(r) / static_cast<double>(b));
  }
  return seq;
}

double discrepancy_exact(std::span<const double> points) {
  if (points.empty()) throw DomainError("discrepancy of an empty sequence");
  std::vector<double> sorted(points.begin(), points.end());
  for (double u : sorted)
    if (!(u >= 0.0 && u < 1.0)) throw DomainError("points must lie in [0, 1)");
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());

  // distinct candidate endpoints: 0, every point value, 1
  struct Node {
    double v;
    double below;     // points < v
    double at_most;   // points <= v
  };
  std::vector<Node> nodes;
  nodes.push_back({0.0, 0.0, 0.0});
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    if (sorted[i] == 0.0)
      nodes[0].at_most = static_cast<double>(j);
    else
      nodes.push_back({sorted[i], static_cast<double>(i), static_cast<double>(j)});
    i = j;
  }
  nodes.push_back({1.0, n, n});
  const double zeros = nodes[0].at_most;

  double best = 0.0;
  // overcount on closed [v_i, v_j]: (at_most_j - n v_j) - (below_i - n v_i)
  double min_open = std::numeric_limits<double>::infinity();       // over all i <= j
  double min_open_pos = std::numeric_limits<double>::infinity();   // over i >= 1
  // undercount on open (v_i, v_j): (n v_j - below_j) - (n v_i - at_most_i)
  double min_closed = std::numeric_limits<double>::infinity();     // over i < j
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const Node& nd = nodes[k];
    const double left = nd.below - n * nd.v;
    min_open = std::min(min_open, left);
    if (k > 0) min_open_pos = std::min(min_open_pos, left);
    const bool last = k + 1 == nodes.size();
    const double right = nd.at_most - n * nd.v;
    if (last && zeros > 0) {
      // [alpha, 1] with alpha > 0 also holds the points at 0, read mod 1
      best = std::max(best, right - std::min(nodes[0].below, min_open_pos - zeros));
    } else {
      best = std::max(best, right - min_open);
    }
    if (k > 0) best = std::max(best, (n * nd.v - nd.below) - min_closed);
    min_closed = std::min(min_closed, n * nd.v - nd.at_most);
  }
  return best;
}

double discrepancy_sampled(std::span<const double> points, std::uint64_t grid) {
  if (points.empty()) throw DomainError("discrepancy of an empty sequence");
  if (grid == 0) throw DomainError("grid must be positive");
  std::vector<double> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  std::vector<std::size_t> below(grid + 1), at_most(grid + 1);
  for (std::uint64_t k = 0; k <= grid; ++k) {
    const double v = static_cast<double>(k) / static_cast<double>(grid);
    below[k] = std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin();
    at_most[k] = std::upper_bound(sorted.begin(), sorted.end(), v) - sorted.begin();
  }
  double best = 0.0;
  for (std::uint64_t i = 0; i <= grid; ++i)
    for (std::uint64_t j = i; j <= grid; ++j) {
      const double count = static_cast<double>(at_most[j] - below[i]);
      const double len = static_cast<double>(j - i) / static_cast<double>(grid);
      best = std::max(best, std::abs(count - n * len));
    }
  return best;
}

double erdos_turan_bound(std::span<const double> points, std::uint64_t k) {
  if (k == 0) throw DomainError("K must be positive");
  const double n = static_cast<double>(points.size());
  double sum = 0.0;
  for (std::uint64_t t = 1; t <= k; ++t)
    sum += e_phase_sum_abs(points, t) / static_cast<double>(t);
  return n / static_cast<double>(k + 1) + 3.0 * sum;
}

KloostermanSample kloosterman_incomplete(std::uint64_t m, std::int64_t t, double y, double z) {
  if (m < 2) throw DomainError("modulus must be at least 2");
  if (!(z > y) || z - y > static_cast<double>(m)) throw DomainError("needs 0 < z - y <= m");
  const auto mi = static_cast<i128>(m);
  const auto tm = static_cast<std::uint64_t>(floor_mod(t, mi));
  const auto first = static_cast<std::int64_t>(std::floor(y)) + 1;
  const auto last = static_cast<std::int64_t>(std::floor(z));
  std::complex<double> acc{0.0, 0.0};
  std::uint64_t terms = 0;
  for (std::int64_t n = first; n <= last; ++n) {
    const auto r = static_cast<std::uint64_t>(floor_mod(n, mi));
    if (arith::gcd(r, m) != 1) continue;
    const std::uint64_t phase = arith::mulmod(tm, arith::inverse_mod(r, m), m);
    acc += std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(phase) / static_cast<double>(m));
    ++terms;
  }
  const std::uint64_t g = tm == 0 ? m : arith::gcd(tm, m);
  const double md = static_cast<double>(m);
  const double scale = std::sqrt(md * static_cast<double>(g)) *
                       static_cast<double>(arith::divisor_count(m)) * std::log(md);
  const double magnitude = std::abs(acc);
  return {m, t, magnitude, terms, scale, magnitude / scale};
}

bool bernoulli_identity_check(Rational alpha, std::uint64_t q) {
  if (q == 0) throw DomainError("q must be positive");
  const i128 u = alpha.num(), v = alpha.den(), qq = static_cast<i128>(q);
  const i128 vq = v * qq;
  // both sides scaled by 2 v q:
  //   lhs = 2 sum_k ((u q - k v) mod v q) - q v q,  rhs = 2 q ((u q) mod v) - v q
  i128 s = 0;
  for (i128 k = 1; k <= qq; ++k) s += floor_mod(u * qq - k * v, vq);
  const i128 lhs = 2 * s - qq * vq;
  const i128 rhs = 2 * qq * floor_mod(u * qq, v) - vq;
  return lhs == rhs;
}

Rational reduced_residue_fracsum(Rational alpha, std::uint64_t b) {
  if (b == 0) throw DomainError("b must be positive");
  const i128 u = alpha.num(), v = alpha.den(), bb = static_cast<i128>(b);
  const i128 vb = v * bb;
  // direct, scaled by 2 v b
  i128 s = 0, phi = 0;
  for (std::uint64_t a = 1; a <= b; ++a) {
    if (arith::gcd(a, b) != 1) continue;
    s += floor_mod(u * bb - static_cast<i128>(a) * v, vb);
    ++phi;
  }
  const i128 direct = 2 * s - phi * vb;
  // Mobius form sum_{d|b} mu(d) ({alpha b/d} - 1/2), same scaling
  i128 mob = 0;
  for (const auto& [d, mu] : mobius_divisors(b))
    mob += mu * (2 * floor_mod(u * static_cast<i128>(b / d), v) - v);
  mob *= bb;
  if (direct != mob)
    throw ConsistencyError("reduced-residue sum: direct and Mobius forms differ for b = " +
                           std::to_string(b));
  return Rational(narrow(direct), narrow(2 * vb));
}

EquidistReport estfrac_survey(std::uint64_t p, std::uint64_t b) {
  if (b < 2 || b >= p) throw DomainError("needs 2 <= b < p");
  if (arith::gcd(p, b) != 1) throw DomainError("p and b must be coprime");
  EquidistReport rep{b, p, arith::divisor_count(b), {}, {}, {}, 0.0};
  const double logp = std::log(static_cast<double>(p));
  const double scale = std::pow(static_cast<double>(rep.tau_b), 1.5) *
                       std::pow(static_cast<double>(p), 0.25) * logp * logp;
  const double bd = static_cast<double>(b);
  FracSequence full;
  for (double x : {bd / 4, bd / 2, bd}) {
    auto seq = inverse_sequence(b, p, x);
    const double d = seq.points.empty() ? 0.0 : discrepancy_exact(seq);
    rep.windows.push_back({x, seq.points.size(), d, d / scale});
    rep.max_ratio = std::max(rep.max_ratio, d / scale);
    if (x == bd) full = std::move(seq);
  }
  for (std::uint64_t k : {1u, 2u, 5u, 10u, 20u, 50u, 100u})
    rep.et_bounds.push_back({k, erdos_turan_bound(full, k)});
  for (std::int64_t t : {1, 2, 3}) {
    const auto pt = static_cast<std::int64_t>(arith::mulmod(p % b, static_cast<std::uint64_t>(t), b));
    rep.kloosterman.push_back({t, kloosterman_incomplete(b, pt, 0.0, bd).magnitude});
  }
  return rep;
}

std::vector<EquidistReport> estfrac_survey(std::uint64_t p, std::span<const std::uint64_t> bs,
                                           unsigned threads) {
  std::vector<EquidistReport> out(bs.size());
  parallel_blocks(0, bs.size(), threads, [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t i = lo; i < hi; ++i) out[i] = estfrac_survey(p, bs[i]);
  });
  return out;
}

}  // namespace fpdir::equidist
