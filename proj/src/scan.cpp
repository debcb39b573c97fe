#include "nleig/scan.hpp"

#include <cstdio>
#include <cstdlib>
#include <thread>

namespace nleig {

std::vector<double> Range::values() const {
  std::vector<double> v(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    v[static_cast<std::size_t>(i)] =
        count == 1 ? min : min + (max - min) * static_cast<double>(i) / (count - 1);
  return v;
}

void ScanSpec::validate() const {
  if (alpha.count < 1 || q.count < 1) throw InvalidInput("scan counts must be at least 1");
  if (alpha.min > alpha.max || q.min > q.max) throw InvalidInput("scan ranges must be ordered");
  if (parallelism < 1) throw InvalidInput("parallelism must be at least 1");
  check_exponent(q.min);
  check_exponent(q.max);
  solver.validate();
}

namespace {

ScanRow solve_point(double alpha, double q, const SolverOptions& opts) {
  const ProblemParams params(alpha, q);
  EigenResult res;
  try {
    res = minimize(params, opts);
  } catch (const SolverNonconvergence& e) {
    res = e.best();
  }
  const MinimizerProfile prof = analyze(res.minimizer);
  return {alpha,          q,          res.lambda,   prof.sign_class, res.q_average,
          prof.m_bar,     prof.odd_defect, res.residual, res.iterations,  res.converged};
}

}  // namespace

std::vector<ScanRow> run_scan(const ScanSpec& spec) {
  spec.validate();
  const auto alphas = spec.alpha.values();
  const auto qs = spec.q.values();
  const std::size_t total = alphas.size() * qs.size();
  std::vector<ScanRow> rows(total);

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k)
      rows[k] = solve_point(alphas[k % alphas.size()], qs[k / alphas.size()], spec.solver);
  };

  const auto threads = std::min<std::size_t>(static_cast<std::size_t>(spec.parallelism), total);
  if (threads <= 1) {
    work(0, total);
    return rows;
  }
  std::vector<std::jthread> pool;
  const std::size_t block = (total + threads - 1) / threads;
  for (std::size_t t = 0; t < threads; ++t) {
    const std::size_t begin = t * block, end = std::min(total, begin + block);
    if (begin < end) pool.emplace_back(work, begin, end);
  }
  pool.clear();
  return rows;
}

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round_significant(double x) { return std::strtod(format_number(x).c_str(), nullptr); }

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
  out << kScanHeader << '\n';
  for (const ScanRow& r : rows) {
    out << format_number(r.alpha) << ',' << format_number(r.q) << ',' << format_number(r.lambda)
        << ',' << to_string(r.sign_class) << ',' << format_number(r.q_average) << ','
        << format_number(r.m_bar) << ',' << format_number(r.odd_defect) << ','
        << format_number(r.residual) << ',' << r.iterations << '\n';
  }
}

}  // namespace nleig
