#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "nleig/core.hpp"

namespace nleig {

struct SolverOptions {
  int n = 4000;
  int max_iterations = 50000;
  /// Stop when successive quotient values differ by less than this.
  double lambda_tol = 1e-11;
  std::vector<StartKind> starts{StartKind::positive_bump, StartKind::odd_sine,
                                StartKind::random};
  std::uint64_t random_seed = 42;

  void validate() const;
};

/// Thrown when the selected descent run exhausts max_iterations; carries the
/// best iterate found.
class SolverNonconvergence : public std::runtime_error {
 public:
  explicit SolverNonconvergence(EigenResult best)
      : std::runtime_error("solver nonconverged"), best_(std::move(best)) {}
  const EigenResult& best() const { return best_; }

 private:
  EigenResult best_;
};

/// Quotients closer than this count as a tie between branches.
inline constexpr double kBranchTie = 1e-9;

/// Initial grid function for a start kind on the problem interval.
GridFunction initial_guess(StartKind start, std::size_t n, const Interval& interval,
                           std::uint64_t seed);

/// Multi-start minimization of the discrete Rayleigh quotient on the unit
/// L2 sphere. Returns the lowest quotient; on a tie between a constant-sign
/// and a sign-changing run, the constant-sign one is reported and the result
/// is flagged degenerate.
EigenResult minimize(const ProblemParams& params, const SolverOptions& opts = {});

/// Root-mean-square over interior nodes of -y'' + alpha gamma |y|^(q-1) - lambda y.
double el_residual(const EigenResult& result, const ProblemParams& params);

/// Discrete quotient of the sampled sine mode sin(pi x) on (-1,1); its
/// q-average vanishes, so the value does not depend on q.
double saturation_reference(int n, double q);

}  // namespace nleig
