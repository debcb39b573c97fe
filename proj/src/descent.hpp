#pragma once

#include <functional>
#include <span>
#include <vector>

namespace nleig::detail {

/// Scale-invariant objective on grid functions with a Euclidean gradient and
/// a normalization that fixes the scale.
struct DescentObjective {
  std::function<double(std::span<const double>)> value;
  std::function<void(std::span<const double>, double, std::span<double>)> gradient;
  std::function<void(std::span<double>)> normalize;
};

struct DescentSettings {
  double spacing = 0.0;
  int max_iterations = 50000;
  double tolerance = 1e-11;
  double armijo = 1e-4;
  double min_step = 1e-14;
};

struct DescentOutcome {
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Projected descent with backtracking line search. The search direction is
/// the gradient in the discrete H^1_0 metric (stiffness matrix 2K), obtained
/// with one tridiagonal solve per iteration. Iterates are renormalized after
/// each accepted step. Stops when successive values differ by less than the
/// tolerance or when no step down to min_step decreases the objective.
DescentOutcome descend(std::vector<double>& u, const DescentObjective& objective,
                       const DescentSettings& settings);

/// Solves tridiag(-1, 2, -1) x = rhs in place.
void solve_laplacian(std::span<double> rhs);

}  // namespace nleig::detail
