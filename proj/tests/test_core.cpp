#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "nleig/core.hpp"

using namespace nleig;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kN = 4000;

GridFunction sine(std::size_t n = kN, int k = 1) {
  return GridFunction::sample([k](double x) { return std::sin(k * kPi * x); }, n);
}
GridFunction cosine(std::size_t n = kN) {
  return GridFunction::sample([](double x) { return std::cos(0.5 * kPi * x); }, n);
}

// Root of (A/2)(1 + cos pi x) - sqrt(1 - A) sin pi x on ]0,1[ by bisection.
double yA_root(double A) {
  auto f = [A](double x) { return 0.5 * A * (1 + std::cos(kPi * x)) - std::sqrt(1 - A) * std::sin(kPi * x); };
  double lo = 0.0, hi = 1.0 - 1e-12;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST(ProblemParams, RejectsExponentOutsideRange) {
  EXPECT_THROW(ProblemParams(1.0, 0.99), InvalidInput);
  EXPECT_THROW(ProblemParams(1.0, 2.01), InvalidInput);
  EXPECT_THROW(ProblemParams(1.0, 1.5, {1.0, 1.0}), InvalidInput);
  EXPECT_NO_THROW(ProblemParams(-3.0, 1.0, {0.0, 5.0}));
}

TEST(GridFunction, NodesAreInteriorAndUniform) {
  const GridFunction u = GridFunction::sample([](double) { return 1.0; }, 9, {0.0, 1.0});
  EXPECT_DOUBLE_EQ(u.spacing(), 0.1);
  EXPECT_DOUBLE_EQ(u.node(0), 0.1);
  EXPECT_DOUBLE_EQ(u.node(8), 0.9);
  EXPECT_THROW(GridFunction(std::vector<double>{1.0, 2.0}), InvalidInput);
  EXPECT_THROW(GridFunction(std::vector<double>{1.0, NAN, 2.0}), InvalidInput);
}

TEST(RayleighQuotient, SineModeGivesPiSquared) {
  for (double q : {1.0, 1.5, 2.0}) {
    const double v = rayleigh_quotient(sine(), ProblemParams(7.0, q));
    EXPECT_NEAR(v / (kPi * kPi), 1.0, 1e-6);
  }
}

TEST(RayleighQuotient, CosineBumpGivesPoincareConstant) {
  for (double q : {1.0, 1.5, 2.0})
    EXPECT_NEAR(rayleigh_quotient(cosine(), ProblemParams(0.0, q)) / (kPi * kPi / 4), 1.0, 1e-6);
}

TEST(RayleighQuotient, PositiveFunctionAtQ2AddsAlpha) {
  // For u > 0 and q = 2 the nonlocal term is alpha * int u^2.
  const GridFunction u = cosine();
  const double base = rayleigh_quotient(u, ProblemParams(0.0, 2.0));
  const double with = rayleigh_quotient(u, ProblemParams(1.0, 2.0));
  EXPECT_NEAR(with - base, 1.0, 1e-12);
  EXPECT_NEAR(with / (kPi * kPi / 4 + 1), 1.0, 1e-6);
}

TEST(RayleighQuotient, ZeroFunctionIsDegenerate) {
  const GridFunction zero(std::vector<double>(10, 0.0));
  EXPECT_THROW(rayleigh_quotient(zero, ProblemParams(1.0, 1.5)), InvalidInput);
}

TEST(RayleighQuotient, ScaleInvariant) {
  const GridFunction u = GridFunction::sample(
      [](double x) { return (1 - x * x) * (0.3 + std::sin(2 * x)); }, 1000);
  for (double q : {1.0, 1.3, 2.0}) {
    const ProblemParams p(2.5, q);
    const double ref = rayleigh_quotient(u, p);
    for (double c : {-3.0, 0.1, 7.0}) {
      GridFunction v = u;
      for (double& x : v.values()) x *= c;
      EXPECT_NEAR(rayleigh_quotient(v, p) / ref, 1.0, 1e-12);
    }
  }
}

TEST(RayleighQuotient, LocalCaseIndependentOfQ) {
  const GridFunction u = GridFunction::sample([](double x) { return std::exp(x) * (1 - x * x); }, 500);
  const double ref = rayleigh_quotient(u, ProblemParams(0.0, 1.0));
  for (double q : {1.5, 2.0}) EXPECT_NEAR(rayleigh_quotient(u, ProblemParams(0.0, q)), ref, 1e-15);
}

TEST(QAverage, OddFunctionVanishes) {
  for (double q : {1.0, 1.5, 2.0}) EXPECT_LT(std::abs(q_average(sine(), q)), 1e-12);
}

TEST(QAverage, CosineAtQ1MatchesAntiderivative) {
  EXPECT_NEAR(q_average(cosine(), 1.0), 4.0 / kPi, 1e-6);
}

TEST(QAverage, SignFlipIsExact) {
  const GridFunction u = GridFunction::sample([](double x) { return std::cos(3 * x) + x; }, 777);
  GridFunction v = u;
  for (double& x : v.values()) x = -x;
  for (double q : {1.0, 1.25, 1.5, 2.0}) EXPECT_EQ(q_average(v, q), -q_average(u, q));
}

TEST(GammaCoefficient, CaseSplit) {
  EXPECT_EQ(gamma_coefficient(0.0, 2.0), 0.0);
  EXPECT_EQ(gamma_coefficient(1e-14, 2.0), 0.0);
  EXPECT_DOUBLE_EQ(gamma_coefficient(0.5, 2.0), 1.0);
  EXPECT_DOUBLE_EQ(gamma_coefficient(0.25, 1.0), 0.25);
  EXPECT_NEAR(gamma_coefficient(0.5, 1.5), std::pow(0.5, 1.0 / 3.0), 1e-15);
}

TEST(Analyze, SineIsOddWithCentralZero) {
  const GridFunction u = sine();
  const MinimizerProfile p = analyze(u);
  EXPECT_EQ(p.sign_class, SignClass::sign_changing);
  ASSERT_EQ(p.zeros.size(), 1u);
  EXPECT_LE(std::abs(p.zeros[0]), u.spacing());
  EXPECT_NEAR(p.m_bar, 1.0, 1e-6);
  EXPECT_LT(p.odd_defect, 1e-6);
  // Tie between the extrema: oriented so the maximum comes first.
  EXPECT_NEAR(p.max_point, -0.5, 1e-6);
  EXPECT_NEAR(p.min_point, 0.5, 1e-6);
  EXPECT_LT(p.positive_part_symmetry_defect, 1e-6);
  EXPECT_LT(p.negative_part_symmetry_defect, 1e-6);
}

TEST(Analyze, CosineIsPositive) {
  const MinimizerProfile p = analyze(cosine());
  EXPECT_EQ(p.sign_class, SignClass::positive);
  EXPECT_TRUE(p.zeros.empty());
  EXPECT_NEAR(p.max_point, 0.0, 1e-9);
  EXPECT_EQ(p.m_bar, 0.0);
  EXPECT_DOUBLE_EQ(p.max_value, 1.0);
}

TEST(Analyze, NegativeFunction) {
  GridFunction u = cosine(200);
  for (double& x : u.values()) x = -x;
  EXPECT_EQ(analyze(u).sign_class, SignClass::negative);
}

TEST(Analyze, RoundoffUndershootStaysConstantSign) {
  GridFunction u = cosine(200);
  u[0] = -1e-9;
  const MinimizerProfile p = analyze(u);
  EXPECT_EQ(p.sign_class, SignClass::positive);
  EXPECT_TRUE(p.zeros.empty());
}

TEST(Analyze, ZeroCountOfSineModes) {
  EXPECT_EQ(analyze(sine(kN, 1)).zeros.size(), 1u);
  EXPECT_EQ(analyze(sine(kN, 2)).zeros.size(), 3u);
}

TEST(Analyze, FamilyMemberHasOneShiftedZero) {
  const double A = 0.5;
  const GridFunction u = GridFunction::sample(
      [A](double x) { return 0.5 * A * (1 + std::cos(kPi * x)) - std::sqrt(1 - A) * std::sin(kPi * x); }, kN);
  const MinimizerProfile p = analyze(u);
  EXPECT_EQ(p.sign_class, SignClass::sign_changing);
  ASSERT_EQ(p.zeros.size(), 1u);
  EXPECT_GT(p.zeros[0], 0.0);
  EXPECT_NEAR(p.zeros[0], yA_root(A), 1e-6);
}

TEST(Analyze, ExtremumRefinementIsSecondOrder) {
  // Peak of cos(pi (x - 0.1234)/2) sits between nodes.
  const GridFunction u = GridFunction::sample(
      [](double x) { return std::cos(0.5 * kPi * (x - 0.1234)); }, 101);
  EXPECT_NEAR(analyze(u).max_point, 0.1234, 1e-4);
}

TEST(Analyze, ZeroFunctionRejected) {
  EXPECT_THROW(analyze(GridFunction(std::vector<double>(5, 0.0))), InvalidInput);
}
