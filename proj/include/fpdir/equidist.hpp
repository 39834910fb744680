#pragma once

// Equidistribution of p inv(a) / b mod 1 over reduced residues a.
//
// Discrepancy follows the closed-interval convention
//   D(N) = sup_{0 <= alpha <= beta <= 1} |#{u_i in [alpha, beta] mod 1} - N (beta - alpha)|
// so a single point already has discrepancy 1 (the interval [u, u]).

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace fpdir::equidist {

// Exact rational num/den with den > 0, always in lowest terms.
class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

struct SequenceOrigin {
  std::uint64_t b;
  std::uint64_t p;
  double x;
};

struct FracSequence {
  std::vector<double> points;  // each in [0, 1)
  std::optional<SequenceOrigin> origin;
};

// Points (p inv(a) mod b) / b for a = 1..floor(X) with gcd(a, b) = 1, in
// order of a. DomainError unless b >= 2, gcd(p, b) = 1 and 0 < X <= b.
FracSequence inverse_sequence(std::uint64_t b, std::uint64_t p, double x);

// Exact supremum by a sorted sweep over the point set and {0, 1}.
// DomainError for an empty sequence or a point outside [0, 1).
double discrepancy_exact(std::span<const double> points);
inline double discrepancy_exact(const FracSequence& s) { return discrepancy_exact(s.points); }

// Lower bound from intervals with endpoints on the grid {k / grid}.
double discrepancy_sampled(std::span<const double> points, std::uint64_t grid);

// N/(K+1) + 3 sum_{t<=K} |sum_i e(t u_i)| / t. DomainError for K = 0.
double erdos_turan_bound(std::span<const double> points, std::uint64_t k);
inline double erdos_turan_bound(const FracSequence& s, std::uint64_t k) {
  return erdos_turan_bound(s.points, k);
}

struct KloostermanSample {
  std::uint64_t m;
  std::int64_t t;
  double magnitude;   // |sum_{y < n <= z, gcd(n,m)=1} e(t inv(n) / m)|
  std::uint64_t terms;
  double scale;       // sqrt(m gcd(t, m)) tau(m) log m
  double ratio;       // magnitude / scale
};

// Direct summation. DomainError unless m >= 2 and 0 < z - y <= m.
KloostermanSample kloosterman_incomplete(std::uint64_t m, std::int64_t t, double y, double z);

// sum_{k=1}^q ({alpha - k/q} - 1/2) == {alpha q} - 1/2, compared exactly.
bool bernoulli_identity_check(Rational alpha, std::uint64_t q);

// sum_{1 <= a <= b, gcd(a,b)=1} ({alpha - a/b} - 1/2), evaluated directly and
// through sum_{d | b} mu(d) ({alpha b/d} - 1/2); ConsistencyError if the two
// differ.
Rational reduced_residue_fracsum(Rational alpha, std::uint64_t b);

struct WindowSample {
  double x;
  std::uint64_t length;  // |R_b(X)|
  double discrepancy;
  double ratio;          // discrepancy / (tau(b)^{3/2} p^{1/4} log^2 p)
};

struct EquidistReport {
  std::uint64_t b;
  std::uint64_t p;
  std::uint64_t tau_b;
  std::vector<WindowSample> windows;  // X = b/4, b/2, b
  std::vector<std::pair<std::uint64_t, double>> et_bounds;   // (K, bound) on X = b
  std::vector<std::pair<std::int64_t, double>> kloosterman;  // (t, |sum|) over a full period
  double max_ratio;
};

// Survey for one modulus; the bound is meant for b < sqrt(p) but any
// 2 <= b < p coprime to p is accepted (DomainError otherwise).
EquidistReport estfrac_survey(std::uint64_t p, std::uint64_t b);
std::vector<EquidistReport> estfrac_survey(std::uint64_t p, std::span<const std::uint64_t> bs,
                                           unsigned threads = 1);

}  // namespace fpdir::equidist
