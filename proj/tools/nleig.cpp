// Command-line front end for the nonlocal eigenvalue solver.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "nleig/acceptance.hpp"
#include "nleig/critical.hpp"
#include "nleig/hfun.hpp"
#include "nleig/scan.hpp"
#include "nleig/solver.hpp"

namespace {

using nleig::round_significant;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNonconverged = 2;
constexpr int kExitVerifyFailed = 3;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("NE_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
    std::cerr << "warning: ignoring malformed NE_SEED='" << env << "'\n";
  }
  return 42;
}

void add_solver_flags(CLI::App* cmd, nleig::SolverOptions& opts) {
  cmd->add_option("--n", opts.n, "interior grid nodes")->capture_default_str();
  cmd->add_option("--max-iterations", opts.max_iterations)->capture_default_str();
  cmd->add_option("--lambda-tol", opts.lambda_tol)->capture_default_str();
  cmd->add_option("--seed", opts.random_seed, "random start seed (default 42 or $NE_SEED)");
}

Json eigen_json(double alpha, double q, const nleig::EigenResult& r) {
  const nleig::MinimizerProfile p = nleig::analyze(r.minimizer);
  Json j;
  j["alpha"] = alpha;
  j["q"] = q;
  j["n"] = r.minimizer.size();
  j["lambda"] = round_significant(r.lambda);
  j["sign_class"] = nleig::to_string(p.sign_class);
  j["q_average"] = round_significant(r.q_average);
  j["gamma"] = round_significant(r.gamma);
  j["m_bar"] = round_significant(p.m_bar);
  j["odd_defect"] = round_significant(p.odd_defect);
  j["zeros"] = Json::array();
  for (double z : p.zeros) j["zeros"].push_back(round_significant(z));
  j["residual"] = round_significant(r.residual);
  j["iterations"] = r.iterations;
  j["selected_start"] = nleig::to_string(r.selected_start);
  j["degenerate"] = r.degenerate;
  j["converged"] = r.converged;
  if (r.first_integral_constant) j["first_integral_constant"] = round_significant(*r.first_integral_constant);
  return j;
}

// Solves and prints; returns the exit code.
int run_lambda(double alpha, double q, const nleig::SolverOptions& opts, nleig::EigenResult* out) {
  nleig::EigenResult r;
  int code = kExitOk;
  try {
    r = nleig::minimize(nleig::ProblemParams(alpha, q), opts);
  } catch (const nleig::SolverNonconvergence& e) {
    r = e.best();
    code = kExitNonconverged;
  }
  std::cout << eigen_json(alpha, q, r).dump(2) << '\n';
  if (out) *out = std::move(r);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonlocal eigenvalue solver: lambda(alpha,q), period function H, critical couplings"};
  app.require_subcommand(1);

  nleig::SolverOptions opts;
  opts.random_seed = default_seed();
  double alpha = 0.0, q = 1.0, m = 0.5, tol = 1e-3;
  std::string out_path;

  auto* lambda_cmd = app.add_subcommand("lambda", "compute lambda(alpha,q) and print JSON");
  lambda_cmd->add_option("--alpha", alpha)->required();
  lambda_cmd->add_option("--q", q)->required();
  add_solver_flags(lambda_cmd, opts);

  double h_tol = nleig::kDefaultHTolerance;
  auto* hfun_cmd = app.add_subcommand("hfun", "evaluate the period function H(m,q)");
  hfun_cmd->add_option("--m", m)->required();
  hfun_cmd->add_option("--q", q)->required();
  hfun_cmd->add_option("--tol", h_tol, "target relative error")->capture_default_str();

  auto* crit_cmd = app.add_subcommand("alpha-crit", "locate the critical coupling alpha_q");
  crit_cmd->add_option("--q", q)->required();
  crit_cmd->add_option("--tol", tol, "final bracket width")->capture_default_str();
  add_solver_flags(crit_cmd, opts);

  auto* zero_cmd = app.add_subcommand("alpha-zero", "locate the coupling where lambda vanishes");
  zero_cmd->add_option("--q", q)->required();
  zero_cmd->add_option("--tol", tol, "relative tolerance")->capture_default_str();
  add_solver_flags(zero_cmd, opts);

  auto* profile_cmd = app.add_subcommand("profile", "write the minimizer as x,u CSV");
  profile_cmd->add_option("--alpha", alpha)->required();
  profile_cmd->add_option("--q", q)->required();
  profile_cmd->add_option("--out", out_path, "output CSV path")->required();
  add_solver_flags(profile_cmd, opts);

  nleig::ScanSpec scan;
  auto* scan_cmd = app.add_subcommand("scan", "solve on an (alpha,q) grid and write CSV");
  scan_cmd->add_option("--alpha-min", scan.alpha.min)->capture_default_str();
  scan_cmd->add_option("--alpha-max", scan.alpha.max)->capture_default_str();
  scan_cmd->add_option("--alpha-count", scan.alpha.count)->capture_default_str();
  scan_cmd->add_option("--q-min", scan.q.min)->capture_default_str();
  scan_cmd->add_option("--q-max", scan.q.max)->capture_default_str();
  scan_cmd->add_option("--q-count", scan.q.count)->capture_default_str();
  scan_cmd->add_option("--jobs", scan.parallelism, "worker threads")->capture_default_str();
  scan_cmd->add_option("--out", scan.output_path, "output CSV path ('-' for stdout)")->required();
  add_solver_flags(scan_cmd, opts);

  nleig::AcceptanceOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance suite");
  verify_cmd->add_option("--n", verify_opts.n)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*lambda_cmd) return run_lambda(alpha, q, opts, nullptr);

    if (*hfun_cmd) {
      const nleig::HEval h = nleig::H(m, q, h_tol);
      Json j;
      j["m"] = m;
      j["q"] = q;
      j["H"] = round_significant(h.value);
      j["error_estimate"] = h.error_estimate;
      j["lambda"] = round_significant(h.value * h.value);
      std::cout << j.dump(2) << '\n';
      return kExitOk;
    }

    if (*crit_cmd) {
      const nleig::CriticalResult r = nleig::alpha_critical(q, tol, opts);
      Json j;
      j["q"] = q;
      j["alpha_q"] = round_significant(r.alpha_q);
      j["bracket"] = {round_significant(r.bracket.first), round_significant(r.bracket.second)};
      j["saturation_value"] = round_significant(r.saturation_value);
      j["lower_bound"] = round_significant(nleig::alpha_critical_lower_bound(q));
      j["tolerance"] = tol;
      j["solver_calls"] = r.solver_calls;
      std::cout << j.dump(2) << '\n';
      return kExitOk;
    }

    if (*zero_cmd) {
      const nleig::AlphaZeroResult r = nleig::alpha_zero(q, tol, opts);
      Json j;
      j["q"] = q;
      j["alpha_zero"] = round_significant(r.alpha);
      j["dual_alpha"] = round_significant(r.dual_alpha);
      j["lambda_at_alpha"] = round_significant(r.lambda_at_alpha);
      j["solver_calls"] = r.solver_calls;
      std::cout << j.dump(2) << '\n';
      return kExitOk;
    }

    if (*profile_cmd) {
      nleig::EigenResult r;
      const int code = run_lambda(alpha, q, opts, &r);
      std::ofstream f(out_path);
      if (!f) {
        std::cerr << "error: cannot open " << out_path << '\n';
        return kExitUsage;
      }
      f << "x,u\n";
      for (std::size_t i = 0; i < r.minimizer.size(); ++i)
        f << nleig::format_number(r.minimizer.node(i)) << ','
          << nleig::format_number(r.minimizer[i]) << '\n';
      if (!f) {
        std::cerr << "error: failed writing " << out_path << '\n';
        return kExitUsage;
      }
      return code;
    }

    if (*scan_cmd) {
      scan.solver = opts;
      const auto rows = nleig::run_scan(scan);
      if (scan.output_path == "-") {
        nleig::write_scan_csv(std::cout, rows);
      } else {
        std::ofstream f(scan.output_path);
        if (!f) {
          std::cerr << "error: cannot open " << scan.output_path << '\n';
          return kExitUsage;
        }
        nleig::write_scan_csv(f, rows);
        if (!f) {
          std::cerr << "error: failed writing " << scan.output_path << '\n';
          return kExitUsage;
        }
      }
      for (const auto& r : rows)
        if (!r.converged) return kExitNonconverged;
      return kExitOk;
    }

    if (*verify_cmd) {
      verify_opts.on_result = [](const nleig::CriterionResult& r) {
        std::cout << std::setw(3) << r.id << "  " << (r.passed ? "PASS" : "FAIL") << "  "
                  << std::fixed << std::setprecision(2) << std::setw(8) << r.seconds << " s  "
                  << r.name << "  (" << r.detail << ")" << std::endl;
      };
      const auto results = nleig::run_acceptance(verify_opts);
      int failed = 0;
      for (const auto& r : results) failed += r.passed ? 0 : 1;
      std::cout << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size()
                << " criteria passed\n";
      return failed == 0 ? kExitOk : kExitVerifyFailed;
    }
  } catch (const nleig::InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
