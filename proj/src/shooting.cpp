#include "nleig/shooting.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "nleig/hfun.hpp"
#include "nleig/quadrature.hpp"

namespace nleig {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTableTolerance = 1e-12;

void check_depth(double m) {
  if (!(m > 0.0 && m <= 1.0)) throw InvalidInput("depth m must lie in ]0,1]");
}

// One arc of the profile, from its extremum (distance 0) to its zero.
// Parametrized by sigma with |y| = scale (1 - sigma^2), the distance from the
// extremum is (1/sqrt(lambda)) int_0^sigma 2 s scale / F(1 - s^2) ds, whose
// integrand stays finite at the extremum.
struct Arc {
  std::vector<double> distance;
  std::vector<double> sigma;
};

Arc build_arc(double m, double q, double sqrt_lambda, bool positive) {
  const FirstIntegralCoeffs c = coeffs(m, q);
  const double mq = std::pow(m, q);
  const double scale = positive ? 1.0 : m;
  // Limit of s/F as s -> 0, from F^2 ~ e (2 - z q) resp. e (q z m^q + 2 m^2).
  const double limit = positive ? 1.0 / std::sqrt(2.0 - c.z * q)
                                : 1.0 / std::sqrt(q * c.z * mq + 2.0 * m * m);
  auto integrand = [&](double s) {
    const double e = s * s;
    if (e < 1e-200) return 2.0 * scale * limit;
    const IntegrandParts p = integrand_parts_complement(m, q, std::min(e, 1.0));
    return 2.0 * scale * s / (positive ? p.f_one : p.f_two);
  };

  Arc arc;
  arc.distance.resize(kProfileMesh + 1);
  arc.sigma.resize(kProfileMesh + 1);
  arc.distance[0] = 0.0;
  arc.sigma[0] = 0.0;
  const double ds = 1.0 / static_cast<double>(kProfileMesh);
  for (std::size_t j = 1; j <= kProfileMesh; ++j) {
    const double s0 = static_cast<double>(j - 1) * ds;
    const QuadResult seg = integrate_endpoint_singular(
        SplitIntegrand([&](double x, double) { return integrand(s0 + x * ds); }), kTableTolerance);
    arc.sigma[j] = static_cast<double>(j) * ds;
    arc.distance[j] = arc.distance[j - 1] + seg.value * ds / sqrt_lambda;
  }
  return arc;
}

// Fritsch-Carlson monotone cubic Hermite interpolant on increasing abscissae.
class MonotoneCubic {
 public:
  MonotoneCubic(std::vector<double> x, std::vector<double> y)
      : x_(std::move(x)), y_(std::move(y)), d_(x_.size()) {
    const std::size_t n = x_.size();
    std::vector<double> secant(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) secant[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
    d_[0] = secant[0];
    d_[n - 1] = secant[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (secant[i - 1] * secant[i] <= 0.0) {
        d_[i] = 0.0;
      } else {
        // Weighted harmonic mean.
        const double h0 = x_[i] - x_[i - 1], h1 = x_[i + 1] - x_[i];
        const double w0 = 2.0 * h1 + h0, w1 = h1 + 2.0 * h0;
        d_[i] = (w0 + w1) / (w0 / secant[i - 1] + w1 / secant[i]);
      }
    }
  }

  double operator()(double x) const {
    const auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t i = it == x_.begin() ? 0 : static_cast<std::size_t>(it - x_.begin()) - 1;
    i = std::min(i, x_.size() - 2);
    const double h = x_[i + 1] - x_[i];
    const double t = (x - x_[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * y_[i] + (t3 - 2 * t2 + t) * h * d_[i] +
           (-2 * t3 + 3 * t2) * y_[i + 1] + (t3 - t2) * h * d_[i + 1];
  }

 private:
  std::vector<double> x_, y_, d_;
};

}  // namespace

double lambda_from_m(double m, double q) {
  check_depth(m);
  const double h = H(m, q).value;
  return h * h;
}

BranchPoint branch_point(double m, double q) {
  check_depth(m);
  const FirstIntegralCoeffs c = coeffs(m, q);
  const double lambda = lambda_from_m(m, q);
  return {q, m, lambda, 0.5 * q * lambda * c.z, 0.5 * lambda * c.t};
}

GridFunction reconstruct_profile(double m, double q, std::size_t n) {
  check_depth(m);
  check_exponent(q);
  if (n < 100) throw InvalidInput("n must be at least 100");
  const double sqrt_lambda = H(m, q).value;

  Arc pos = build_arc(m, q, sqrt_lambda, true);
  Arc neg = build_arc(m, q, sqrt_lambda, false);
  const double pos_half = pos.distance.back();
  const double neg_half = neg.distance.back();
  // The two half-arcs add up to half the interval; spread any quadrature
  // mismatch proportionally.
  const double fix = 1.0 / (pos_half + neg_half);
  for (double& d : pos.distance) d *= fix;
  for (double& d : neg.distance) d *= fix;
  const double peak = -1.0 + pos_half * fix;
  const double zero = -1.0 + 2.0 * pos_half * fix;
  const double trough = zero + neg_half * fix;
  const double pos_end = pos.distance.back(), neg_end = neg.distance.back();

  const MonotoneCubic pos_sigma(std::move(pos.distance), std::move(pos.sigma));
  const MonotoneCubic neg_sigma(std::move(neg.distance), std::move(neg.sigma));

  return GridFunction::sample(
      [&](double x) {
        if (x < zero) {
          const double s = pos_sigma(std::min(std::abs(x - peak), pos_end));
          return 1.0 - s * s;
        }
        const double s = neg_sigma(std::min(std::abs(x - trough), neg_end));
        return -m * (1.0 - s * s);
      },
      n);
}

double q1_alpha_of_lambda(double lambda) {
  if (!(lambda > 0.25 * kPi * kPi && lambda < kPi * kPi))
    throw InvalidInput("lambda must lie in ]pi^2/4, pi^2[");
  const double r = std::sqrt(lambda);
  return lambda * r / (2.0 * r - 2.0 * std::tan(r));
}

double q1_lambda_of_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 0.5 * kPi * kPi))
    throw InvalidInput("alpha must lie in ]0, pi^2/2[");
  double lo = 0.25 * kPi * kPi, hi = kPi * kPi;
  for (int i = 0; i < 200 && hi - lo > 1e-14 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (q1_alpha_of_lambda(mid) < alpha) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

GridFunction q1_positive_profile(double lambda, std::size_t n) {
  const double alpha = q1_alpha_of_lambda(lambda);
  const double r = std::sqrt(lambda);
  const double denom = std::cos(r);
  return GridFunction::sample(
      [=](double x) { return alpha / lambda * (1.0 - std::cos(r * x) / denom); }, n);
}

GridFunction q1_family_yA(double A, std::size_t n) {
  if (!(A >= 0.0 && A <= 1.0)) throw InvalidInput("A must lie in [0,1]");
  const double b = std::sqrt(1.0 - A);
  return GridFunction::sample(
      [=](double x) { return 0.5 * A * (1.0 + std::cos(kPi * x)) - b * std::sin(kPi * x); }, n);
}

}  // namespace nleig
