#include "descent.hpp"

#include <cmath>

namespace nleig::detail {

void solve_laplacian(std::span<double> rhs) {
  // Thomas algorithm; the modified diagonal is c_i = (i + 2)/(i + 1).
  const std::size_t n = rhs.size();
  std::vector<double> diag(n);
  diag[0] = 2.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double w = -1.0 / diag[i - 1];
    diag[i] = 2.0 + w;
    rhs[i] -= w * rhs[i - 1];
  }
  rhs[n - 1] /= diag[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) rhs[i] = (rhs[i] + rhs[i + 1]) / diag[i];
}

DescentOutcome descend(std::vector<double>& u, const DescentObjective& objective,
                       const DescentSettings& settings) {
  const std::size_t n = u.size();
  std::vector<double> grad(n), dir(n), trial(n);
  objective.normalize(u);
  double f = objective.value(u);

  DescentOutcome out;
  for (int it = 1; it <= settings.max_iterations; ++it) {
    out.iterations = it;
    objective.gradient(u, f, grad);
    // H^1_0 gradient: (2K)^{-1} grad with K = tridiag(-1,2,-1)/h.
    for (std::size_t i = 0; i < n; ++i) dir[i] = -0.5 * settings.spacing * grad[i];
    solve_laplacian(dir);
    double slope = 0.0;
    for (std::size_t i = 0; i < n; ++i) slope += grad[i] * dir[i];
    if (!(slope < 0.0)) {
      out.converged = true;
      break;
    }

    double step = 1.0;
    double ft = f;
    bool accepted = false;
    while (step >= settings.min_step) {
      for (std::size_t i = 0; i < n; ++i) trial[i] = u[i] + step * dir[i];
      ft = objective.value(trial);
      if (std::isfinite(ft) && ft <= f + settings.armijo * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      out.converged = true;
      break;
    }
    objective.normalize(trial);
    u.swap(trial);
    const double fn = objective.value(u);
    const double change = std::abs(f - fn);
    f = fn;
    if (change < settings.tolerance) {
      out.converged = true;
      break;
    }
  }
  out.value = f;
  return out;
}

}  // namespace nleig::detail
