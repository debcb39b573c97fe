#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nleig {

/// Thrown for inputs outside an operation's admissible range.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Open interval ]a,b[ on which the problem is posed.
struct Interval {
  double a = -1.0;
  double b = 1.0;

  double length() const { return b - a; }
  double midpoint() const { return 0.5 * (a + b); }
};

/// A validated problem instance: coupling alpha, exponent q in [1,2] and the
/// interval of integration.
class ProblemParams {
 public:
  ProblemParams(double alpha, double q, Interval interval = {});

  double alpha() const { return alpha_; }
  double q() const { return q_; }
  const Interval& interval() const { return interval_; }

 private:
  double alpha_;
  double q_;
  Interval interval_;
};

/// Throws InvalidInput unless 1 <= q <= 2.
void check_exponent(double q);

/// Nodal values at the n interior points of a uniform partition of an
/// interval into n+1 cells. Both endpoint values are zero and not stored.
class GridFunction {
 public:
  GridFunction(std::vector<double> values, Interval interval = {});

  /// Samples f at the interior nodes.
  static GridFunction sample(const std::function<double(double)>& f, std::size_t n,
                             Interval interval = {});

  std::size_t size() const { return values_.size(); }
  const Interval& interval() const { return interval_; }
  double spacing() const { return interval_.length() / static_cast<double>(values_.size() + 1); }
  double node(std::size_t i) const;

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }

 private:
  std::vector<double> values_;
  Interval interval_;
};

enum class SignClass { positive, negative, sign_changing };

std::string to_string(SignClass c);

/// Initial guesses used by the multi-start minimizer.
enum class StartKind { positive_bump, odd_sine, random };

std::string to_string(StartKind s);
StartKind start_kind_from_string(const std::string& s);

/// Outcome of one descent run inside a multi-start solve.
struct StartOutcome {
  StartKind start;
  double initial_quotient = 0.0;
  double lambda = 0.0;
  int iterations = 0;
  bool converged = false;
  bool constant_sign = true;
};

struct EigenResult {
  double lambda = 0.0;
  /// Normalized so that the trapezoidal integral of u^2 is 1, with
  /// q_average >= 0.
  GridFunction minimizer{std::vector<double>(3, 0.0)};
  double q_average = 0.0;
  /// Coefficient of the nonlocal term in the Euler-Lagrange equation.
  double gamma = 0.0;
  /// First-integral constant of the max-1 normalized minimizer; present only
  /// for sign-changing minimizers.
  std::optional<double> first_integral_constant;
  int iterations = 0;
  double residual = 0.0;
  /// Number of descent runs performed (one per start).
  int restarts_used = 0;
  bool converged = true;
  /// Set when constant-sign and sign-changing starts tie in the quotient.
  bool degenerate = false;
  StartKind selected_start = StartKind::positive_bump;
  std::vector<StartOutcome> starts;
};

struct MinimizerProfile {
  SignClass sign_class = SignClass::positive;
  std::vector<double> zeros;
  double max_point = 0.0;
  double max_value = 0.0;
  double min_point = 0.0;
  double min_value = 0.0;
  double m_bar = 0.0;
  double positive_part_symmetry_defect = 0.0;
  double negative_part_symmetry_defect = 0.0;
  double odd_defect = 0.0;
};

/// |s|^(q-1) s
double signed_power(double s, double q);
/// |s|^(q-1), with the q = 1 value taken as 1 everywhere.
double abs_power_qm1(double s, double q);

// Discrete functionals: central differences for the Dirichlet energy,
// composite trapezoid (zero endpoint values) for the integrals.
double dirichlet_energy(const GridFunction& u);
double mass(const GridFunction& u);
double q_average(const GridFunction& u, double q);
/// Trapezoidal integral of |u|^q.
double q_norm_power(const GridFunction& u, double q);

double rayleigh_quotient(const GridFunction& u, const ProblemParams& params);

/// Below this magnitude a q-average is treated as exactly zero when selecting
/// the q = 2 subgradient and the Euler-Lagrange coefficient.
inline constexpr double kZeroAverage = 1e-12;

/// gamma = S^(2/q - 1) for S > 0 (sign carried through for S < 0); zero for
/// a vanishing average.
double gamma_coefficient(double q_avg, double q);

/// Relative threshold below which opposite-sign values are roundoff.
inline constexpr double kSignThreshold = 1e-6;

MinimizerProfile analyze(const GridFunction& u);

/// Trapezoidal L2 norm and distance; the grids must match.
double l2_norm(const GridFunction& u);
double l2_distance(const GridFunction& u, const GridFunction& v);

/// Rescales to unit trapezoidal L2 norm.
GridFunction normalized(GridFunction u);

}  // namespace nleig
