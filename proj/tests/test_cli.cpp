#include <gtest/gtest.h>

#include <json.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <sys/wait.h>

namespace {

constexpr double kPi = std::numbers::pi;

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" NLEIG_CLI_PATH "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json json_of(const CliRun& r) { return nlohmann::json::parse(r.out); }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("nleig_cli_test_" + name);
}

}  // namespace

TEST(Cli, LambdaPoincare) {
  const CliRun r = run("lambda --alpha 0 --q 1.5");
  ASSERT_EQ(r.code, 0);
  const auto j = json_of(r);
  EXPECT_NEAR(j["lambda"].get<double>(), kPi * kPi / 4, 1e-4);
  EXPECT_EQ(j["sign_class"], "positive");
  EXPECT_TRUE(j.contains("q_average"));
  EXPECT_TRUE(j.contains("residual"));
}

TEST(Cli, LambdaSaturated) {
  const CliRun r = run("lambda --alpha 10 --q 2");
  ASSERT_EQ(r.code, 0);
  const auto j = json_of(r);
  EXPECT_NEAR(j["lambda"].get<double>(), kPi * kPi, 1e-3);
  EXPECT_EQ(j["sign_class"], "sign_changing");
}

TEST(Cli, LambdaQuadraticBranch) {
  const CliRun r = run("lambda --alpha 2 --q 2");
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(json_of(r)["lambda"].get<double>(), kPi * kPi / 4 + 2, 1e-3);
}

TEST(Cli, InvalidArgumentsExitOne) {
  EXPECT_EQ(run("lambda --alpha 0 --q 3").code, 1);
  EXPECT_EQ(run("lambda --alpha 0").code, 1);
  EXPECT_EQ(run("lambda --alpha x --q 1").code, 1);
  EXPECT_EQ(run("nosuchcommand").code, 1);
  EXPECT_EQ(run("lambda --alpha 0 --q 1.5 --n 10").code, 1);
  EXPECT_EQ(run("hfun --m 0 --q 2").code, 1);
}

TEST(Cli, NonconvergenceExitsTwo) {
  const CliRun r = run("lambda --alpha 3 --q 1.5 --n 400 --max-iterations 1");
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(json_of(r)["converged"].get<bool>());
}

TEST(Cli, Hfun) {
  const CliRun r = run("hfun --m 0.5 --q 1");
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(json_of(r)["H"].get<double>(), kPi, 1e-9);
}

TEST(Cli, AlphaCrit) {
  const CliRun r = run("alpha-crit --q 2 --tol 1e-2");
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(json_of(r)["alpha_q"].get<double>(), 7.402, 1e-2);
}

TEST(Cli, ScanWritesCsv) {
  const auto path = temp_file("scan.csv");
  const CliRun r = run("scan --alpha-min 0 --alpha-max 10 --alpha-count 21 --q-min 1 --q-max 2 --q-count 3 --out " +
                    path.string());
  ASSERT_EQ(r.code, 0);
  std::ifstream f(path);
  std::string line;
  std::getline(f, line);
  EXPECT_EQ(line, "alpha,q,lambda,sign_class,q_average,m_bar,odd_defect,residual,iterations");
  int rows = 0;
  double prev_lambda = -1e300, prev_q = -1;
  while (std::getline(f, line)) {
    ++rows;
    std::stringstream ss(line);
    std::string alpha, q, lambda;
    std::getline(ss, alpha, ',');
    std::getline(ss, q, ',');
    std::getline(ss, lambda, ',');
    if (std::stod(q) != prev_q) prev_lambda = -1e300;
    EXPECT_LE(prev_lambda, std::stod(lambda) + 1e-6) << line;
    prev_lambda = std::stod(lambda);
    prev_q = std::stod(q);
  }
  EXPECT_EQ(rows, 63);
  std::filesystem::remove(path);
}

TEST(Cli, ScanIsByteIdentical) {
  const std::string args = "scan --alpha-min -2 --alpha-max 9 --alpha-count 4 --q-count 2 --n 400 --out -";
  const CliRun a = run(args);
  const CliRun b = run(args + " --jobs 3");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 9);
}

TEST(Cli, SeedFromEnvironment) {
  const std::string args = "lambda --alpha 3 --q 1.5 --n 400";
  const CliRun a = run(args, "NE_SEED=7");
  const CliRun b = run(args + " --seed 7");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  // A malformed value falls back to the default seed.
  EXPECT_EQ(run(args, "NE_SEED=abc").out, run(args).out);
}

TEST(Cli, ProfileWritesNodes) {
  const auto path = temp_file("profile.csv");
  const CliRun r = run("profile --alpha 10 --q 2 --n 200 --out " + path.string());
  ASSERT_EQ(r.code, 0);
  std::ifstream f(path);
  std::string line;
  std::getline(f, line);
  EXPECT_EQ(line, "x,u");
  int rows = 0;
  while (std::getline(f, line)) ++rows;
  EXPECT_EQ(rows, 200);
  std::filesystem::remove(path);
}

TEST(Cli, UnwritableOutputExitsOne) {
  EXPECT_EQ(run("profile --alpha 0 --q 1 --n 200 --out /nonexistent/dir/p.csv").code, 1);
  EXPECT_EQ(run("scan --alpha-count 2 --q-count 1 --n 200 --out /nonexistent/dir/s.csv").code, 1);
}
