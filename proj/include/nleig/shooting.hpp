#pragma once

#include <cstddef>

#include "nleig/core.hpp"

namespace nleig {

/// A point on the sign-changing branch parametrized by the depth m_bar.
struct BranchPoint {
  double q;
  double m_bar;
  double lambda;       // H(m_bar, q)^2
  double gamma_alpha;  // (q lambda / 2) z(m_bar, q)
  double c;            // (lambda / 2) t(m_bar, q)
};

/// H(m,q)^2 for 0 < m <= 1.
double lambda_from_m(double m, double q);

BranchPoint branch_point(double m, double q);

/// Mesh size of the (x, y) table used to invert the first integral.
inline constexpr std::size_t kProfileMesh = 2048;

/// Sign-changing solution on (-1,1) with max 1 and min -m, built by
/// inverting the first integral (y')^2 = lambda [1 - z (1 - |y|^(q-1) y) - y^2].
/// The positive arc comes first, starting at x = -1.
GridFunction reconstruct_profile(double m, double q, std::size_t n);

/// Coupling on the constant-sign q = 1 branch as a function of its
/// eigenvalue, for pi^2/4 < lambda < pi^2.
double q1_alpha_of_lambda(double lambda);

/// Inverse of q1_alpha_of_lambda by bisection, for 0 < alpha < pi^2/2.
double q1_lambda_of_alpha(double alpha);

/// Positive q = 1 eigenfunction (alpha/lambda)(1 - cos(sqrt(lambda) x)/cos(sqrt(lambda)))
/// with alpha = q1_alpha_of_lambda(lambda); its average is 1.
GridFunction q1_positive_profile(double lambda, std::size_t n);

/// (A/2)(1 + cos(pi x)) - sqrt(1 - A) sin(pi x), A in [0,1]: minimizers at
/// q = 1, alpha = pi^2/2.
GridFunction q1_family_yA(double A, std::size_t n);

}  // namespace nleig
