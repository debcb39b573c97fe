#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "nleig/solver.hpp"

namespace nleig {

struct Range {
  double min = 0.0;
  double max = 0.0;
  int count = 1;

  /// count evenly spaced values from min to max (just min when count == 1).
  std::vector<double> values() const;
};

struct ScanSpec {
  Range alpha{0.0, 10.0, 21};
  Range q{1.0, 2.0, 3};
  SolverOptions solver;
  std::string output_path;
  int parallelism = 1;

  void validate() const;
};

struct ScanRow {
  double alpha;
  double q;
  double lambda;
  SignClass sign_class;
  double q_average;
  double m_bar;
  double odd_defect;
  double residual;
  int iterations;
  bool converged;
};

inline constexpr const char* kScanHeader =
    "alpha,q,lambda,sign_class,q_average,m_bar,odd_defect,residual,iterations";

/// Solves every (alpha, q) grid point, q-major. Points are split into
/// contiguous blocks across `parallelism` threads; the returned rows are in
/// grid order regardless of scheduling.
std::vector<ScanRow> run_scan(const ScanSpec& spec);

/// Number formatting shared by the CSV and JSON writers (12 significant digits).
std::string format_number(double x);
/// x rounded to 12 significant digits.
double round_significant(double x);

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);

}  // namespace nleig
