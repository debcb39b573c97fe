#pragma once

#include <stdexcept>

#include "nleig/quadrature.hpp"

namespace nleig {

/// Coefficients of the first integral of a sign-changing solution normalized
/// to max 1 and min -m: z = (1 - m^2)/(1 + m^q), t = 1 - z.
struct FirstIntegralCoeffs {
  double z;
  double t;
  double m;
  double q;
};

struct HEval {
  double m;
  double q;
  double value;
  double error_estimate;
};

/// The two radicand roots of the period integrand and their sum.
struct IntegrandParts {
  double f_one;   // sqrt(1 - z(1 - y^q) - y^2)
  double f_two;   // sqrt(1 - z(1 + m^q y^q) - m^2 y^2)
  double value;   // 1/f_one + m/f_two
};

inline constexpr double kDefaultHTolerance = 1e-10;

FirstIntegralCoeffs coeffs(double m, double q);

/// Period integrand at y in [0,1). Throws std::domain_error("integrand domain
/// violation") when a radicand is below -1e-14.
double integrand_h(double m, double q, double y);
IntegrandParts integrand_parts(double m, double q, double y);

/// Same, parametrized by e = 1 - y so that the radicands keep full relative
/// accuracy as y approaches 1.
IntegrandParts integrand_parts_complement(double m, double q, double e);

/// H(m,q) = int_0^1 h(m,q,y) dy; (m,q) = (0,2) is divergent.
HEval H(double m, double q, double target_rel_err = kDefaultHTolerance);

// Auxiliary functions from the monotonicity argument for h in q.
// All require 0 < m < 1 and 1 <= q <= 2.
double lemma_g(double m, double q, double y);
/// +infinity at q = 2.
double lemma_ell(double m, double q);
double lemma_mu(double m, double q);

}  // namespace nleig
