#include "nleig/solver.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "descent.hpp"

namespace nleig {

namespace {

struct Functionals {
  double energy;
  double mass;
  double average;
};

Functionals functionals(std::span<const double> u, double h, double q) {
  Functionals f{u.front() * u.front() + u.back() * u.back(), 0.0, 0.0};
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i > 0) {
      const double d = u[i] - u[i - 1];
      f.energy += d * d;
    }
    f.mass += u[i] * u[i];
    f.average += signed_power(u[i], q);
  }
  f.energy /= h;
  f.mass *= h;
  f.average *= h;
  return f;
}

double quotient(const Functionals& f, double alpha, double q) {
  double num = f.energy;
  if (alpha != 0.0) num += alpha * std::pow(std::abs(f.average), 2.0 / q);
  return num / f.mass;
}

detail::DescentObjective rayleigh_objective(const ProblemParams& params, double h) {
  const double alpha = params.alpha(), q = params.q();
  detail::DescentObjective obj;
  obj.value = [=](std::span<const double> u) { return quotient(functionals(u, h, q), alpha, q); };
  obj.gradient = [=](std::span<const double> u, double value, std::span<double> g) {
    const Functionals f = functionals(u, h, q);
    const double coef = alpha * gamma_coefficient(f.average, q);
    const std::size_t n = u.size();
    const double inv_h2 = 1.0 / (h * h);
    for (std::size_t i = 0; i < n; ++i) {
      const double left = i > 0 ? u[i - 1] : 0.0;
      const double right = i + 1 < n ? u[i + 1] : 0.0;
      double r = (2.0 * u[i] - left - right) * inv_h2 - value * u[i];
      if (coef != 0.0) r += coef * abs_power_qm1(u[i], q);
      g[i] = 2.0 * h * r / f.mass;
    }
  };
  obj.normalize = [h](std::span<double> u) {
    double m = 0.0;
    for (double x : u) m += x * x;
    const double s = 1.0 / std::sqrt(m * h);
    for (double& x : u) x *= s;
  };
  return obj;
}

bool is_constant_sign(std::span<const double> u) {
  double lo = 0.0, hi = 0.0;
  for (double x : u) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  const double sup = std::max(-lo, hi);
  return lo * hi > -kSignThreshold * sup * sup;
}

struct Run {
  StartOutcome outcome;
  std::vector<double> values;
};

}  // namespace

void SolverOptions::validate() const {
  if (n < 100) throw InvalidInput("solver grid size n must be at least 100");
  if (max_iterations < 1) throw InvalidInput("max_iterations must be positive");
  if (!(lambda_tol > 0.0)) throw InvalidInput("lambda_tol must be positive");
  if (starts.empty()) throw InvalidInput("at least one start is required");
}

GridFunction initial_guess(StartKind start, std::size_t n, const Interval& interval,
                           std::uint64_t seed) {
  const double c = interval.midpoint(), half = 0.5 * interval.length();
  switch (start) {
    case StartKind::positive_bump:
      return GridFunction::sample(
          [=](double x) { return std::cos(0.5 * std::numbers::pi * (x - c) / half); }, n, interval);
    case StartKind::odd_sine:
      return GridFunction::sample([=](double x) { return std::sin(std::numbers::pi * (x - c) / half); },
                                  n, interval);
    case StartKind::random: {
      std::mt19937_64 rng(seed);
      std::uniform_real_distribution<double> dist(-1.0, 1.0);
      std::vector<double> v(n);
      for (double& x : v) x = dist(rng);
      return GridFunction(std::move(v), interval);
    }
  }
  throw InvalidInput("unknown start kind");
}

EigenResult minimize(const ProblemParams& params, const SolverOptions& opts) {
  opts.validate();
  const auto n = static_cast<std::size_t>(opts.n);
  const Interval& iv = params.interval();
  const double h = iv.length() / static_cast<double>(n + 1);
  const auto objective = rayleigh_objective(params, h);
  detail::DescentSettings settings;
  settings.spacing = h;
  settings.max_iterations = opts.max_iterations;
  settings.tolerance = opts.lambda_tol;

  std::vector<Run> runs;
  for (StartKind start : opts.starts) {
    GridFunction init = initial_guess(start, n, iv, opts.random_seed);
    Run run;
    run.values.assign(init.values().begin(), init.values().end());
    run.outcome.start = start;
    run.outcome.initial_quotient = rayleigh_quotient(init, params);
    const auto d = detail::descend(run.values, objective, settings);
    run.outcome.lambda = d.value;
    run.outcome.iterations = d.iterations;
    run.outcome.converged = d.converged;
    run.outcome.constant_sign = is_constant_sign(run.values);
    runs.push_back(std::move(run));
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < runs.size(); ++i)
    if (runs[i].outcome.lambda < runs[best].outcome.lambda) best = i;

  bool degenerate = false;
  if (!runs[best].outcome.constant_sign) {
    for (std::size_t i = 0; i < runs.size(); ++i) {
      if (runs[i].outcome.constant_sign &&
          runs[i].outcome.lambda - runs[best].outcome.lambda < kBranchTie) {
        best = i;
        degenerate = true;
        break;
      }
    }
  } else {
    for (const Run& r : runs)
      if (!r.outcome.constant_sign && r.outcome.lambda - runs[best].outcome.lambda < kBranchTie)
        degenerate = true;
  }

  EigenResult res;
  Run& chosen = runs[best];
  GridFunction y(std::move(chosen.values), iv);
  double s = q_average(y, params.q());
  if (s < 0.0) {
    for (double& x : y.values()) x = -x;
    s = -s;
  }
  res.lambda = rayleigh_quotient(y, params);
  res.q_average = s;
  res.gamma = gamma_coefficient(s, params.q());
  res.iterations = chosen.outcome.iterations;
  res.restarts_used = static_cast<int>(runs.size());
  res.converged = chosen.outcome.converged;
  res.degenerate = degenerate;
  res.selected_start = chosen.outcome.start;
  for (const Run& r : runs) res.starts.push_back(r.outcome);
  res.minimizer = std::move(y);

  if (!chosen.outcome.constant_sign) {
    double top = 0.0;
    for (double x : res.minimizer.values()) top = std::max(top, x);
    GridFunction unit = res.minimizer;
    for (double& x : unit.values()) x /= top;
    const double gamma_unit = gamma_coefficient(q_average(unit, params.q()), params.q());
    res.first_integral_constant = 0.5 * res.lambda - params.alpha() * gamma_unit / params.q();
  }
  res.residual = el_residual(res, params);
  if (!res.converged) throw SolverNonconvergence(std::move(res));
  return res;
}

double el_residual(const EigenResult& result, const ProblemParams& params) {
  const auto y = result.minimizer.values();
  const double h = result.minimizer.spacing();
  const double coef = params.alpha() * result.gamma;
  const std::size_t n = y.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double left = i > 0 ? y[i - 1] : 0.0;
    const double right = i + 1 < n ? y[i + 1] : 0.0;
    double r = (2.0 * y[i] - left - right) / (h * h) - result.lambda * y[i];
    if (coef != 0.0) r += coef * abs_power_qm1(y[i], params.q());
    sum += r * r;
  }
  return std::sqrt(sum / static_cast<double>(n));
}

double saturation_reference(int n, double q) {
  check_exponent(q);
  if (n < 100) throw InvalidInput("n must be at least 100");
  const GridFunction s = initial_guess(StartKind::odd_sine, static_cast<std::size_t>(n), {}, 0);
  return dirichlet_energy(s) / mass(s);
}

}  // namespace nleig
