#pragma once

// The dilogarithm on [0, 1], the limiting direction density D(lambda) and
// the main terms it predicts for direction counts and for N(p, n).

#include <cstdint>
#include <string_view>
#include <vector>

namespace fpdir::special {

enum class Regime { low, mid, high };

std::string_view to_string(Regime r);

// Shape parameter lambda = n / sqrt(p). Always positive.
class Lambda {
 public:
  explicit Lambda(double value);
  static Lambda of(std::uint64_t p, std::uint64_t n);

  double value() const { return value_; }
  // low: lambda <= 1/sqrt(2); mid: 1/sqrt(2) < lambda < 1; high: lambda >= 1.
  Regime regime() const;

 private:
  double value_;
};

// Li2(x) for 0 <= x <= 1, absolute error below 1e-12. DomainError outside.
double dilog(double x);

// D(lambda): 12/pi^2 lambda^2 on the low branch, the dilogarithm expression
// on the mid branch and 1 from lambda = 1 on.
double density(Lambda lambda);

struct CurvePoint {
  double lambda;
  double density;
  double lambda_squared;
};

// Grid k * step over (0, 1.2] with the branch points 1/sqrt(2) and 1 merged
// in, increasing. DomainError unless 0 < step <= 0.1.
std::vector<CurvePoint> density_curve(double step);

struct Prediction {
  double directions_main;  // D(n/sqrt p) p
  double nsolutions_main;  // max(0, (12/pi^2 lambda^2 - D(lambda)) p)
  Regime regime;
};

// Requires p odd prime and n >= 1 (DomainError otherwise).
Prediction predict(std::uint64_t p, std::uint64_t n);

}  // namespace fpdir::special
