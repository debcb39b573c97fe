#pragma once

#include <stdexcept>
#include <utility>

#include "nleig/core.hpp"
#include "nleig/solver.hpp"

namespace nleig {

class BracketViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DualityMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CriticalResult {
  double q = 0.0;
  double alpha_q = 0.0;
  std::pair<double, double> bracket{0.0, 0.0};
  /// Grid sine quotient used as the saturation level.
  double saturation_value = 0.0;
  double tolerance = 0.0;
  int solver_calls = 0;
};

/// 3 pi^2 / 2^(1 + 2/q), a lower bound for the critical coupling.
double alpha_critical_lower_bound(double q);

/// Smallest alpha with lambda(alpha,q) at the saturation level, by bisection
/// on lambda >= saturation_reference - delta, delta = 10 |reference - pi^2| + 1e-8.
/// The final bracket is no wider than tol (tol >= 1e-4).
CriticalResult alpha_critical(double q, double tol, const SolverOptions& opts = {});

struct AlphaZeroResult {
  double q = 0.0;
  /// Root of lambda(alpha,q) = 0 from bisection.
  double alpha = 0.0;
  std::pair<double, double> bracket{0.0, 0.0};
  double lambda_at_alpha = 0.0;
  /// Minus the minimum of int |w'|^2 / (int |w|^q)^(2/q).
  double dual_alpha = 0.0;
  GridFunction dual_minimizer{std::vector<double>(3, 0.0)};
  int solver_calls = 0;
};

/// Minimum of int |w'|^2 / (int |w|^q)^(2/q) over the grid, by descent
/// from the positive bump; the minimizer is returned normalized to unit L2.
std::pair<double, GridFunction> dual_quotient_minimum(double q, const SolverOptions& opts = {});

/// Negative coupling where lambda(alpha,q) vanishes, cross-checked against
/// the dual quotient. tol is relative; throws DualityMismatch when the two
/// routes disagree by more than tol.
AlphaZeroResult alpha_zero(double q, double tol, const SolverOptions& opts = {});

/// lambda on ]a,b[ from the reference-interval solve:
/// (2/(b-a))^2 lambda(((b-a)/2)^(1+2/q) alpha, q).
double rescale_lambda(double a, double b, double alpha, double q, const SolverOptions& opts = {});

}  // namespace nleig
