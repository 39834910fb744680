#include "fpdir/special.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fpdir/arith.hpp"
#include "fpdir/errors.hpp"

namespace fpdir::special {

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;
constexpr double kSqrtHalf = std::numbers::sqrt2 / 2;

// sum x^k / k^2; for x <= 1/2 the tail after k terms is below 2^-k.
double dilog_series(double x) {
  double term = x, sum = 0.0;
  for (int k = 1; k < 200 && term > 1e-18 * k * k; ++k) {
    sum += term / (static_cast<double>(k) * k);
    term *= x;
  }
  return sum;
}

}  // namespace

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::low: return "low";
    case Regime::mid: return "mid";
    case Regime::high: return "high";
  }
  return "?";
}

Lambda::Lambda(double value) : value_(value) {
  if (!(value > 0.0) || !std::isfinite(value)) throw DomainError("lambda must be positive and finite");
}

Lambda Lambda::of(std::uint64_t p, std::uint64_t n) {
  return Lambda(static_cast<double>(n) / std::sqrt(static_cast<double>(p)));
}

Regime Lambda::regime() const {
  if (value_ <= kSqrtHalf) return Regime::low;
  if (value_ < 1.0) return Regime::mid;
  return Regime::high;
}

double dilog(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("dilog is evaluated on [0, 1] only");
  if (x == 1.0) return kPi2 / 6;
  if (x <= 0.5) return dilog_series(x);
  // reflection Li2(x) = pi^2/6 - log x log(1-x) - Li2(1-x)
  return kPi2 / 6 - std::log(x) * std::log1p(-x) - dilog_series(1.0 - x);
}

double density(Lambda lambda) {
  const double l = lambda.value();
  switch (lambda.regime()) {
    case Regime::low:
      return 12.0 / kPi2 * l * l;
    case Regime::high:
      return 1.0;
    case Regime::mid:
      break;
  }
  const double sq = l * l;
  const double eps = 1.0 - sq;
  if (eps < 1e-8) {
    // expansion at lambda^2 = 1 - eps: D = 1 + 6/pi^2 (eps^2 log eps - 3/2 eps^2) + O(eps^3 log eps)
    return 1.0 + 6.0 / kPi2 * (eps * eps * std::log(eps) - 1.5 * eps * eps);
  }
  const double log_sq = std::log(sq);
  const double bracket =
      2.0 * dilog(sq) + log_sq * log_sq - 2.0 * eps * std::log(eps / sq) + 2.0 * eps;
  return 6.0 / kPi2 * bracket - 1.0;
}

std::vector<CurvePoint> density_curve(double step) {
  if (!(step > 0.0 && step <= 0.1)) throw DomainError("grid step must lie in (0, 0.1]");
  std::vector<double> grid{kSqrtHalf, 1.0};
  const auto count = static_cast<std::uint64_t>(std::floor(1.2 / step + 1e-9));
  for (std::uint64_t k = 1; k <= count; ++k) {
    const double l = static_cast<double>(k) * step;
    if (std::abs(l - kSqrtHalf) > 1e-12 && std::abs(l - 1.0) > 1e-12) grid.push_back(l);
  }
  std::sort(grid.begin(), grid.end());
  std::vector<CurvePoint> out;
  out.reserve(grid.size());
  for (double l : grid) out.push_back({l, density(Lambda(l)), l * l});
  return out;
}

Prediction predict(std::uint64_t p, std::uint64_t n) {
  if (p < 3 || !arith::is_prime(p)) throw DomainError("p must be an odd prime");
  if (n == 0) throw DomainError("n must be positive");
  const Lambda lambda = Lambda::of(p, n);
  const double pd = static_cast<double>(p);
  const double d = density(lambda);
  const double ratio = static_cast<double>(n) * static_cast<double>(n) / pd;
  // the low branch is exactly 12/pi^2 lambda^2, so nothing survives there
  const double solutions =
      lambda.regime() == Regime::low ? 0.0 : std::max(0.0, (12.0 / kPi2 * ratio - d) * pd);
  return {d * pd, solutions, lambda.regime()};
}

}  // namespace fpdir::special
