#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace nleig {

struct QuadResult {
  double value = 0.0;
  /// Difference between the last two refinement levels.
  double error_estimate = 0.0;
  int evaluations = 0;
  int levels = 0;
  /// Inter-level differences, one per refinement after the first level.
  std::vector<double> error_history;
};

class QuadratureNonconvergence : public std::runtime_error {
 public:
  QuadratureNonconvergence(const std::string& what, QuadResult best)
      : std::runtime_error(what), best_(std::move(best)) {}
  const QuadResult& best() const { return best_; }

 private:
  QuadResult best_;
};

/// Integrand on (0,1) receiving both x and 1 - x, each computed without
/// cancellation, so that endpoint singularities can be evaluated accurately.
using SplitIntegrand = std::function<double(double x, double one_minus_x)>;

inline constexpr int kMaxQuadratureLevel = 12;

/// Tanh-sinh quadrature over (0,1), halving the step until two successive
/// levels agree to target_rel_err (in [1e-14, 1e-4]).
QuadResult integrate_endpoint_singular(const SplitIntegrand& f, double target_rel_err);

/// Overload for integrands of x alone. Abscissae that round to an endpoint
/// are clamped to the nearest interior double, so strong singularities
/// limit the attainable accuracy; prefer the split form for those.
QuadResult integrate_endpoint_singular(const std::function<double(double)>& f,
                                       double target_rel_err);

}  // namespace nleig
