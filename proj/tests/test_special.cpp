#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "fpdir/errors.hpp"
#include "fpdir/special.hpp"

using namespace fpdir;
using namespace fpdir::special;

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

// Li2 straight from its integral definition, as an independent oracle.
double dilog_by_quadrature(double x) {
  if (x == 0.0) return 0.0;
  boost::math::quadrature::tanh_sinh<double> integrator;
  auto f = [](double t) { return t == 0.0 ? 1.0 : -std::log1p(-t) / t; };
  return integrator.integrate(f, 0.0, x);
}

double mid_branch_by_quadrature(double l) {
  const double sq = l * l;
  return 6.0 / kPi2 *
             (2.0 * dilog_by_quadrature(sq) + std::log(sq) * std::log(sq) -
              2.0 * (1.0 - sq) * std::log(1.0 / sq - 1.0) + 2.0 * (1.0 - sq)) -
         1.0;
}

}  // namespace

TEST_CASE("dilog fixed values") {
  CHECK(dilog(0.0) == 0.0);
  CHECK(dilog(1.0) == doctest::Approx(kPi2 / 6).epsilon(1e-15));
  const double half = kPi2 / 12 - std::log(2.0) * std::log(2.0) / 2;
  CHECK(std::abs(dilog(0.5) - half) < 1e-14);
  CHECK(std::abs(dilog(0.5) - 0.58224052646501250590) < 1e-14);
  CHECK_THROWS_AS(dilog(-0.1), DomainError);
  CHECK_THROWS_AS(dilog(1.0000001), DomainError);
  CHECK_THROWS_AS(dilog(std::nan("")), DomainError);
}

TEST_CASE("dilog matches quadrature of its integral definition") {
  for (int i = 1; i < 200; ++i) {
    const double x = i / 200.0;
    REQUIRE(std::abs(dilog(x) - dilog_by_quadrature(x)) <= 1e-12);
  }
  // quadrature loses digits next to the log singularity; 30-digit references there
  CHECK(std::abs(dilog(0.999) - 1.63702260527611773655) <= 1e-13);
  CHECK(std::abs(dilog(0.99999) - 1.64480893699292703612) <= 1e-13);
  CHECK(std::abs(dilog(0.9999999) - 1.64493235503857909854) <= 1e-13);
}

TEST_CASE("dilog reflection residual") {
  for (int i = 1; i < 1000; ++i) {
    const double z = i / 1000.0;
    const double r = dilog(z) + dilog(1 - z) - kPi2 / 6 + std::log(z) * std::log(1 - z);
    REQUIRE(std::abs(r) <= 1e-12);
  }
}

TEST_CASE("lambda regimes") {
  CHECK(Lambda(0.5).regime() == Regime::low);
  CHECK(Lambda(std::sqrt(0.5)).regime() == Regime::low);
  CHECK(Lambda(0.8).regime() == Regime::mid);
  CHECK(Lambda(1.0).regime() == Regime::high);
  CHECK(Lambda(3.0).regime() == Regime::high);
  CHECK_THROWS_AS(Lambda(0.0), DomainError);
  CHECK_THROWS_AS(Lambda(-1.0), DomainError);
}

TEST_CASE("density at branch points and fixtures") {
  CHECK(std::abs(density(Lambda(1.0 / std::sqrt(2.0))) - 6.0 / kPi2) < 1e-12);
  CHECK(density(Lambda(1.0)) == 1.0);
  CHECK(density(Lambda(1.1)) == 1.0);
  // mid branch at 0.85: quadrature oracle and a 30-digit reference value
  const double d = density(Lambda(0.85));
  CHECK(std::abs(d - mid_branch_by_quadrature(0.85)) < 1e-12);
  CHECK(std::abs(d - 0.85362093173455998350) < 1e-13);
  for (double l : {0.71, 0.75, 0.9, 0.99, 0.9999})
    CHECK(std::abs(density(Lambda(l)) - mid_branch_by_quadrature(l)) < 1e-11);
}

TEST_CASE("density continuity, dominance and monotonicity") {
  const double eps = 1e-7;
  const double knee = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(density(Lambda(knee - eps)) - density(Lambda(knee + eps))) <= 1e-6);
  CHECK(std::abs(density(Lambda(1.0 - eps)) - 1.0) <= 1e-4);
  // the near-1 expansion hands over smoothly to the direct formula
  const double l_switch = std::sqrt(1.0 - 1e-8);
  CHECK(std::abs(density(Lambda(l_switch * (1 - 1e-12))) - density(Lambda(l_switch * (1 + 1e-12)))) <
        1e-12);

  double prev = 0.0;
  for (int i = 1; i <= 1000; ++i) {
    const double l = i / 1000.0;
    const double d = density(Lambda(l));
    REQUIRE(d >= l * l);
    REQUIRE(d >= prev);
    prev = d;
  }
}

TEST_CASE("predictions") {
  // n <= sqrt(p/2): no solutions predicted
  auto low = predict(1000003, 700);
  CHECK(low.regime == Regime::low);
  CHECK(low.nsolutions_main == 0.0);
  CHECK(low.directions_main == doctest::Approx(12.0 / kPi2 * 700 * 700));

  auto mid = predict(1000003, 850);
  CHECK(mid.regime == Regime::mid);
  CHECK(mid.directions_main == density(Lambda::of(1000003, 850)) * 1000003.0);
  // main term of N(p, n) for this point, against the brute-force count 25048
  CHECK(std::abs(mid.nsolutions_main - 25048) / 1000003.0 < 0.001);

  auto high = predict(10007, 101);
  CHECK(high.regime == Regime::high);
  CHECK(high.directions_main == 10007.0);
  CHECK(high.directions_main <= 10008.0);

  CHECK_THROWS_AS(predict(9, 2), DomainError);
  CHECK_THROWS_AS(predict(2, 1), DomainError);
  CHECK_THROWS_AS(predict(11, 0), DomainError);
}

TEST_CASE("density curve grid") {
  const auto c = density_curve(0.01);
  CHECK(c.size() == 121);
  CHECK(c.front().lambda == doctest::Approx(0.01));
  CHECK(c.back().lambda == doctest::Approx(1.2));
  bool knee = false, one = false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) REQUIRE(c[i].lambda > c[i - 1].lambda);
    if (c[i].lambda == 1.0) one = c[i].density == 1.0;
    if (c[i].lambda == std::numbers::sqrt2 / 2) knee = true;
    if (c[i].lambda <= 1.0) REQUIRE(c[i].density >= c[i].lambda_squared);
  }
  CHECK(knee);
  CHECK(one);
  CHECK(density_curve(0.1).size() == 13);
  CHECK_THROWS_AS(density_curve(0.0), DomainError);
  CHECK_THROWS_AS(density_curve(0.2), DomainError);
}
