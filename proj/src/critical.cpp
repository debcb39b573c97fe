#include "nleig/critical.hpp"

#include <cmath>
#include <numbers>

#include "descent.hpp"

namespace nleig {

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

// The bound is attained at q = 2; start slightly below it so that the
// predicate is false at the lower end on every grid.
constexpr double kLowerBracketFactor = 0.99;

double solve_lambda(double alpha, double q, const SolverOptions& opts, int& calls) {
  ++calls;
  return minimize(ProblemParams(alpha, q), opts).lambda;
}

}  // namespace

double alpha_critical_lower_bound(double q) {
  check_exponent(q);
  return 3.0 * kPi2 / std::pow(2.0, 1.0 + 2.0 / q);
}

CriticalResult alpha_critical(double q, double tol, const SolverOptions& opts) {
  check_exponent(q);
  if (!(tol >= 1e-4)) throw InvalidInput("tol must be at least 1e-4");
  opts.validate();

  CriticalResult r;
  r.q = q;
  r.tolerance = tol;
  r.saturation_value = saturation_reference(opts.n, q);
  const double delta = 10.0 * std::abs(r.saturation_value - kPi2) + 1e-8;
  auto saturated = [&](double alpha) {
    return solve_lambda(alpha, q, opts, r.solver_calls) >= r.saturation_value - delta;
  };

  double lo = kLowerBracketFactor * alpha_critical_lower_bound(q);
  double hi = 2.0 * kPi2;
  if (saturated(lo)) throw BracketViolation("bracket violation: saturated at the lower end");
  if (!saturated(hi)) throw BracketViolation("bracket violation: not saturated at the upper end");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (saturated(mid)) hi = mid;
    else lo = mid;
  }
  r.bracket = {lo, hi};
  r.alpha_q = 0.5 * (lo + hi);
  return r;
}

std::pair<double, GridFunction> dual_quotient_minimum(double q, const SolverOptions& opts) {
  check_exponent(q);
  opts.validate();
  const auto n = static_cast<std::size_t>(opts.n);
  GridFunction w = initial_guess(StartKind::positive_bump, n, {}, opts.random_seed);
  const double h = w.spacing();

  auto power_sum = [=](std::span<const double> v) {
    double p = 0.0;
    for (double x : v) p += std::pow(std::abs(x), q);
    return p * h;
  };
  auto energy = [=](std::span<const double> v) {
    double e = v.front() * v.front() + v.back() * v.back();
    for (std::size_t i = 1; i < v.size(); ++i) e += (v[i] - v[i - 1]) * (v[i] - v[i - 1]);
    return e / h;
  };

  detail::DescentObjective obj;
  obj.value = [=](std::span<const double> v) {
    return energy(v) / std::pow(power_sum(v), 2.0 / q);
  };
  obj.gradient = [=](std::span<const double> v, double value, std::span<double> g) {
    const double p = power_sum(v);
    const double pw = std::pow(p, 2.0 / q);
    const double coef = value * pw / p;
    const std::size_t m = v.size();
    for (std::size_t i = 0; i < m; ++i) {
      const double left = i > 0 ? v[i - 1] : 0.0;
      const double right = i + 1 < m ? v[i + 1] : 0.0;
      const double sgn = v[i] > 0.0 ? 1.0 : (v[i] < 0.0 ? -1.0 : 0.0);
      const double r = (2.0 * v[i] - left - right) / (h * h) - coef * abs_power_qm1(v[i], q) * sgn;
      g[i] = 2.0 * h * r / pw;
    }
  };
  obj.normalize = [=](std::span<double> v) {
    const double s = 1.0 / std::pow(power_sum(v), 1.0 / q);
    for (double& x : v) x *= s;
  };

  detail::DescentSettings settings;
  settings.spacing = h;
  settings.max_iterations = opts.max_iterations;
  settings.tolerance = opts.lambda_tol;
  std::vector<double> v(w.values().begin(), w.values().end());
  const auto out = detail::descend(v, obj, settings);
  if (!out.converged) throw std::runtime_error("dual quotient descent nonconverged");
  return {out.value, normalized(GridFunction(std::move(v)))};
}

AlphaZeroResult alpha_zero(double q, double tol, const SolverOptions& opts) {
  check_exponent(q);
  if (!(tol > 0.0)) throw InvalidInput("tol must be positive");
  opts.validate();

  AlphaZeroResult r;
  r.q = q;
  double hi = 0.0;
  double lo = -1.0;
  while (solve_lambda(lo, q, opts, r.solver_calls) >= 0.0) {
    hi = lo;
    lo *= 2.0;
    if (lo < -1e6) throw BracketViolation("bracket violation: lambda stays nonnegative");
  }
  while (hi - lo > tol * std::max(std::abs(0.5 * (lo + hi)), 1e-12) / 8.0) {
    const double mid = 0.5 * (lo + hi);
    if (solve_lambda(mid, q, opts, r.solver_calls) >= 0.0) hi = mid;
    else lo = mid;
  }
  r.bracket = {lo, hi};
  r.alpha = 0.5 * (lo + hi);
  r.lambda_at_alpha = solve_lambda(r.alpha, q, opts, r.solver_calls);

  auto [dual, minimizer] = dual_quotient_minimum(q, opts);
  r.dual_alpha = -dual;
  r.dual_minimizer = std::move(minimizer);
  if (std::abs(r.alpha - r.dual_alpha) > tol * std::abs(r.dual_alpha))
    throw DualityMismatch("duality mismatch");
  return r;
}

double rescale_lambda(double a, double b, double alpha, double q, const SolverOptions& opts) {
  if (!(a < b)) throw InvalidInput("interval must satisfy a < b");
  check_exponent(q);
  const double half = 0.5 * (b - a);
  const double scaled = std::pow(half, 1.0 + 2.0 / q) * alpha;
  return minimize(ProblemParams(scaled, q), opts).lambda / (half * half);
}

}  // namespace nleig
