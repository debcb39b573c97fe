#include "nleig/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "nleig/core.hpp"

namespace nleig {

namespace {

// Beyond this |t| the complementary abscissa drops below ~1e-275.
constexpr double kTMax = 6.0;
constexpr int kMinLevel = 2;

struct Node {
  double x;
  double xc;
  double weight;
};

// x = 1/(1 + exp(-2u)), u = (pi/2) sinh t, mapped from the real line onto (0,1).
Node node_at(double t) {
  const double u = 0.5 * std::numbers::pi * std::sinh(t);
  const double e = std::exp(-2.0 * std::abs(u));
  const double small = e / (1.0 + e);
  const double large = 1.0 / (1.0 + e);
  const double x = u >= 0.0 ? large : small;
  const double xc = u >= 0.0 ? small : large;
  return {x, xc, std::numbers::pi * std::cosh(t) * x * xc};
}

double evaluate(const SplitIntegrand& f, const Node& nd, int& count) {
  ++count;
  if (nd.weight == 0.0 || nd.x <= 0.0 || nd.xc <= 0.0) return 0.0;
  const double v = f(nd.x, nd.xc);
  if (!std::isfinite(v)) throw std::domain_error("quadrature: non-finite integrand value");
  return nd.weight * v;
}

}  // namespace

QuadResult integrate_endpoint_singular(const SplitIntegrand& f, double target_rel_err) {
  if (!(target_rel_err >= 1e-14 && target_rel_err <= 1e-4))
    throw InvalidInput("target_rel_err must lie in [1e-14, 1e-4]");

  QuadResult r;
  double step = 1.0;
  double sum = evaluate(f, node_at(0.0), r.evaluations);
  for (int j = 1; j <= static_cast<int>(kTMax); ++j) {
    const double t = static_cast<double>(j);
    sum += evaluate(f, node_at(t), r.evaluations) + evaluate(f, node_at(-t), r.evaluations);
  }
  double estimate = sum * step;
  r.value = estimate;
  r.error_estimate = std::abs(estimate);
  r.levels = 1;

  for (int level = 1; level <= kMaxQuadratureLevel; ++level) {
    step *= 0.5;
    const int count = static_cast<int>(kTMax / step);
    for (int j = 1; j <= count; j += 2) {
      const double t = static_cast<double>(j) * step;
      sum += evaluate(f, node_at(t), r.evaluations) + evaluate(f, node_at(-t), r.evaluations);
    }
    const double next = sum * step;
    const double diff = std::abs(next - estimate);
    r.error_history.push_back(diff);
    r.value = next;
    r.error_estimate = diff;
    r.levels = level + 1;
    estimate = next;
    if (level >= kMinLevel && diff <= target_rel_err * std::abs(next)) return r;
    if (level >= kMinLevel && next == 0.0 && diff == 0.0) return r;
  }
  throw QuadratureNonconvergence("quadrature nonconvergence", r);
}

QuadResult integrate_endpoint_singular(const std::function<double(double)>& f,
                                       double target_rel_err) {
  const double lo = std::numeric_limits<double>::denorm_min();
  const double hi = std::nextafter(1.0, 0.0);
  return integrate_endpoint_singular(
      SplitIntegrand([&f, lo, hi](double x, double) { return f(std::clamp(x, lo, hi)); }),
      target_rel_err);
}

}  // namespace nleig
