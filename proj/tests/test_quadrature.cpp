#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "nleig/quadrature.hpp"

using namespace nleig;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(TanhSinh, InverseSqrtOfOneMinusYSquared) {
  // 1/sqrt(1 - y^2) = 1/sqrt((1 - y)(1 + y)), using the accurate 1 - y.
  const QuadResult r = integrate_endpoint_singular(
      SplitIntegrand([](double y, double e) { return 1.0 / std::sqrt(e * (1.0 + y)); }), 1e-13);
  EXPECT_NEAR(r.value, kPi / 2, 1e-12);
  EXPECT_LE(r.error_estimate, 1e-13 * r.value);
}

TEST(TanhSinh, InverseSqrtOfOneMinusY) {
  const QuadResult r = integrate_endpoint_singular(
      SplitIntegrand([](double, double e) { return 1.0 / std::sqrt(e); }), 1e-12);
  EXPECT_NEAR(r.value, 2.0, 1e-11);
}

TEST(TanhSinh, ConstantIsExact) {
  const QuadResult r = integrate_endpoint_singular([](double) { return 1.0; }, 1e-12);
  EXPECT_NEAR(r.value, 1.0, 1e-14);
}

TEST(TanhSinh, LogSingularityAtZero) {
  const QuadResult r = integrate_endpoint_singular([](double x) { return std::log(x); }, 1e-12);
  EXPECT_NEAR(r.value, -1.0, 1e-11);
}

TEST(TanhSinh, Linearity) {
  const double tol = 1e-12;
  auto f = [](double x, double) { return std::exp(x) / std::sqrt(x); };
  auto g = [](double x, double e) { return std::cos(x) / std::sqrt(e); };
  const double a = 2.5, b = -0.75;
  const double lf = integrate_endpoint_singular(SplitIntegrand(f), tol).value;
  const double lg = integrate_endpoint_singular(SplitIntegrand(g), tol).value;
  const double lc = integrate_endpoint_singular(
                        SplitIntegrand([&](double x, double e) { return a * f(x, e) + b * g(x, e); }), tol)
                        .value;
  EXPECT_NEAR(lc, a * lf + b * lg, 10 * tol * std::abs(a * lf + b * lg));
}

TEST(TanhSinh, ErrorHistoryDecreasesToRoundoffFloor) {
  const QuadResult r = integrate_endpoint_singular(
      SplitIntegrand([](double y, double e) { return 1.0 / std::sqrt(e * (1.0 + y)); }), 1e-14);
  ASSERT_GE(r.error_history.size(), 2u);
  EXPECT_EQ(r.levels, static_cast<int>(r.error_history.size()) + 1);
  for (std::size_t i = 1; i < r.error_history.size(); ++i)
    EXPECT_LE(r.error_history[i], std::max(r.error_history[i - 1], 1e-14));
  EXPECT_EQ(r.error_estimate, r.error_history.back());
}

TEST(TanhSinh, RejectsToleranceOutOfRange) {
  auto f = [](double) { return 1.0; };
  EXPECT_THROW(integrate_endpoint_singular(f, 1e-15), std::invalid_argument);
  EXPECT_THROW(integrate_endpoint_singular(f, 1e-3), std::invalid_argument);
}

TEST(TanhSinh, NonFiniteIntegrandIsDomainError) {
  EXPECT_THROW(
      integrate_endpoint_singular(SplitIntegrand([](double, double) { return NAN; }), 1e-10),
      std::domain_error);
}

TEST(TanhSinh, DivergentIntegralDoesNotConverge) {
  try {
    integrate_endpoint_singular(SplitIntegrand([](double, double e) { return 1.0 / e; }), 1e-10);
    FAIL() << "expected QuadratureNonconvergence";
  } catch (const QuadratureNonconvergence& e) {
    EXPECT_EQ(e.best().levels, kMaxQuadratureLevel + 1);
    EXPECT_GT(e.best().error_estimate, 1e-10 * std::abs(e.best().value));
  }
}
