#include "nleig/hfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nleig/core.hpp"

namespace nleig {

namespace {

constexpr double kRadicandGuard = 1e-14;

void check_m(double m) {
  if (!(m >= 0.0 && m <= 1.0)) throw InvalidInput("depth m must lie in [0,1]");
}

void check_open_m(double m) {
  if (!(m > 0.0 && m < 1.0)) throw InvalidInput("depth m must lie in ]0,1[");
}

double checked_root(double radicand) {
  if (radicand < -kRadicandGuard) throw std::domain_error("integrand domain violation");
  return std::sqrt(std::max(radicand, 0.0));
}

// Radicands from y directly (accurate for small y) or from e = 1 - y
// (accurate near y = 1). Both use the exact identity
//   1 - z(1 + m^q y^q) - m^2 y^2 = z m^q (1 - y^q) + m^2 (1 - y^2).
IntegrandParts parts(double m, double q, double y, double e) {
  const double mq = std::pow(m, q);
  const double z = (1.0 - m * m) / (1.0 + mq);
  double r1, one_minus_yq, one_minus_y2;
  if (y < 0.5) {
    const double yq = std::pow(y, q);
    const double t = (m * m + mq) / (1.0 + mq);
    r1 = t + z * yq - y * y;
    one_minus_yq = 1.0 - yq;
    one_minus_y2 = 1.0 - y * y;
  } else {
    one_minus_yq = -std::expm1(q * std::log1p(-e));
    one_minus_y2 = e * (2.0 - e);
    r1 = one_minus_y2 - z * one_minus_yq;
  }
  const double r2 = z * mq * one_minus_yq + m * m * one_minus_y2;
  IntegrandParts p{checked_root(r1), checked_root(r2), 0.0};
  // m = 0: r1 = y^q (1 - y^(2-q)) underflows near y = 0; factor it.
  if (m == 0.0 && y < 0.5) p.f_one = std::pow(y, 0.5 * q) * std::sqrt(-std::expm1((2.0 - q) * std::log(y)));
  const double second = m == 0.0 ? 0.0 : m / p.f_two;
  p.value = 1.0 / p.f_one + second;
  return p;
}

}  // namespace

FirstIntegralCoeffs coeffs(double m, double q) {
  check_m(m);
  check_exponent(q);
  const double z = (1.0 - m * m) / (1.0 + std::pow(m, q));
  return {z, 1.0 - z, m, q};
}

IntegrandParts integrand_parts(double m, double q, double y) {
  check_m(m);
  check_exponent(q);
  if (!(y >= 0.0 && y < 1.0)) throw InvalidInput("y must lie in [0,1[");
  return parts(m, q, y, 1.0 - y);
}

IntegrandParts integrand_parts_complement(double m, double q, double e) {
  check_m(m);
  check_exponent(q);
  if (!(e > 0.0 && e <= 1.0)) throw InvalidInput("1 - y must lie in ]0,1]");
  return parts(m, q, 1.0 - e, e);
}

double integrand_h(double m, double q, double y) { return integrand_parts(m, q, y).value; }

HEval H(double m, double q, double target_rel_err) {
  check_m(m);
  check_exponent(q);
  if (m == 0.0 && q == 2.0) throw std::domain_error("divergent: H(0,2) is infinite");

  const QuadResult first = integrate_endpoint_singular(
      SplitIntegrand([m, q](double y, double e) { return 1.0 / parts(m, q, y, e).f_one; }),
      target_rel_err);
  HEval out{m, q, first.value, first.error_estimate};
  if (m > 0.0) {
    const QuadResult second = integrate_endpoint_singular(
        SplitIntegrand([m, q](double y, double e) { return m / parts(m, q, y, e).f_two; }),
        target_rel_err);
    out.value += second.value;
    out.error_estimate += second.error_estimate;
  }
  return out;
}

double lemma_g(double m, double q, double y) {
  check_open_m(m);
  check_exponent(q);
  if (!(y > 0.0 && y <= 1.0)) throw InvalidInput("y must lie in ]0,1]");
  const double mq = std::pow(m, q);
  const double yq = std::pow(y, q);
  const double lm = std::log(m), ly = std::log(y);
  const double first = -(1.0 - yq) * mq * lm - yq * (1.0 + mq) * ly;
  const double second = (yq - 1.0) * lm + (1.0 + mq) * yq * ly;
  return first + second * std::pow(m, q - 2.0);
}

double lemma_ell(double m, double q) {
  check_open_m(m);
  check_exponent(q);
  if (q == 2.0) return std::numeric_limits<double>::infinity();
  const double mq = std::pow(m, q), mq2 = std::pow(m, q - 2.0);
  return (mq + mq2) * std::log(m) / ((1.0 + mq) * (1.0 - mq2));
}

double lemma_mu(double m, double q) {
  check_open_m(m);
  check_exponent(q);
  const double mq = std::pow(m, q), mq2 = std::pow(m, q - 2.0);
  return (mq + mq2) * std::log(1.0 / m) - (1.0 + mq) * (mq2 - 1.0);
}

}  // namespace nleig
