#include "nleig/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nleig {

void check_exponent(double q) {
  if (!(q >= 1.0 && q <= 2.0)) throw InvalidInput("exponent q must lie in [1,2]");
}

ProblemParams::ProblemParams(double alpha, double q, Interval interval)
    : alpha_(alpha), q_(q), interval_(interval) {
  if (!std::isfinite(alpha)) throw InvalidInput("alpha must be finite");
  check_exponent(q);
  if (!(interval.a < interval.b) || !std::isfinite(interval.a) || !std::isfinite(interval.b))
    throw InvalidInput("interval must satisfy a < b");
}

GridFunction::GridFunction(std::vector<double> values, Interval interval)
    : values_(std::move(values)), interval_(interval) {
  if (values_.size() < 3) throw InvalidInput("grid function needs at least 3 interior nodes");
  if (!(interval.a < interval.b)) throw InvalidInput("interval must satisfy a < b");
  for (double v : values_)
    if (!std::isfinite(v)) throw InvalidInput("grid function values must be finite");
}

GridFunction GridFunction::sample(const std::function<double(double)>& f, std::size_t n,
                                  Interval interval) {
  if (n < 3) throw InvalidInput("grid function needs at least 3 interior nodes");
  std::vector<double> v(n);
  const double len = interval.length();
  for (std::size_t i = 0; i < n; ++i)
    v[i] = f(interval.a + len * static_cast<double>(i + 1) / static_cast<double>(n + 1));
  return GridFunction(std::move(v), interval);
}

double GridFunction::node(std::size_t i) const {
  return interval_.a +
         interval_.length() * static_cast<double>(i + 1) / static_cast<double>(values_.size() + 1);
}

std::string to_string(SignClass c) {
  switch (c) {
    case SignClass::positive: return "positive";
    case SignClass::negative: return "negative";
    case SignClass::sign_changing: return "sign_changing";
  }
  return "unknown";
}

std::string to_string(StartKind s) {
  switch (s) {
    case StartKind::positive_bump: return "positive_bump";
    case StartKind::odd_sine: return "odd_sine";
    case StartKind::random: return "random";
  }
  return "unknown";
}

StartKind start_kind_from_string(const std::string& s) {
  if (s == "positive_bump") return StartKind::positive_bump;
  if (s == "odd_sine") return StartKind::odd_sine;
  if (s == "random") return StartKind::random;
  throw InvalidInput("unknown start kind: " + s);
}

double signed_power(double s, double q) {
  if (q == 1.0) return s;
  if (q == 2.0) return s * std::abs(s);
  return std::copysign(std::pow(std::abs(s), q), s);
}

double abs_power_qm1(double s, double q) {
  if (q == 1.0) return 1.0;
  if (q == 2.0) return std::abs(s);
  return std::pow(std::abs(s), q - 1.0);
}

double dirichlet_energy(const GridFunction& u) {
  const auto v = u.values();
  double sum = v.front() * v.front() + v.back() * v.back();
  for (std::size_t i = 1; i < v.size(); ++i) {
    const double d = v[i] - v[i - 1];
    sum += d * d;
  }
  return sum / u.spacing();
}

double mass(const GridFunction& u) {
  double sum = 0.0;
  for (double x : u.values()) sum += x * x;
  return sum * u.spacing();
}

double q_average(const GridFunction& u, double q) {
  check_exponent(q);
  double sum = 0.0;
  for (double x : u.values()) sum += signed_power(x, q);
  return sum * u.spacing();
}

double q_norm_power(const GridFunction& u, double q) {
  check_exponent(q);
  double sum = 0.0;
  for (double x : u.values()) sum += std::pow(std::abs(x), q);
  return sum * u.spacing();
}

double rayleigh_quotient(const GridFunction& u, const ProblemParams& params) {
  const double m = mass(u);
  if (!(m > 0.0)) throw InvalidInput("degenerate input: zero function");
  double numerator = dirichlet_energy(u);
  if (params.alpha() != 0.0)
    numerator += params.alpha() * std::pow(std::abs(q_average(u, params.q())), 2.0 / params.q());
  return numerator / m;
}

double gamma_coefficient(double q_avg, double q) {
  if (std::abs(q_avg) < kZeroAverage) return 0.0;
  return std::copysign(std::pow(std::abs(q_avg), 2.0 / q - 1.0), q_avg);
}

double l2_norm(const GridFunction& u) { return std::sqrt(mass(u)); }

double l2_distance(const GridFunction& u, const GridFunction& v) {
  if (u.size() != v.size()) throw InvalidInput("grid size mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double d = u[i] - v[i];
    sum += d * d;
  }
  return std::sqrt(sum * u.spacing());
}

GridFunction normalized(GridFunction u) {
  const double norm = l2_norm(u);
  if (!(norm > 0.0)) throw InvalidInput("degenerate input: zero function");
  for (double& x : u.values()) x /= norm;
  return u;
}

namespace {

// Value at ghost-extended index j in [0, n+1]; j = 0 and j = n+1 are the
// Dirichlet endpoints.
double extended(std::span<const double> v, std::ptrdiff_t j) {
  if (j <= 0 || j > static_cast<std::ptrdiff_t>(v.size())) return 0.0;
  return v[static_cast<std::size_t>(j - 1)];
}

double interpolate(const GridFunction& u, std::span<const double> v, double x) {
  const double t = (x - u.interval().a) / u.spacing();
  if (t <= 0.0 || t >= static_cast<double>(v.size() + 1)) return 0.0;
  const auto j = static_cast<std::ptrdiff_t>(std::floor(t));
  const double w = t - static_cast<double>(j);
  return (1.0 - w) * extended(v, j) + w * extended(v, j + 1);
}

struct Extremum {
  double point;
  double value;
};

// 3-point parabola through the nodal extremum and its neighbours.
Extremum refine(const GridFunction& u, std::span<const double> v, std::size_t i) {
  const auto j = static_cast<std::ptrdiff_t>(i) + 1;
  const double fm = extended(v, j - 1), f0 = extended(v, j), fp = extended(v, j + 1);
  const double curvature = fm - 2.0 * f0 + fp;
  double offset = 0.0;
  if (curvature != 0.0) offset = std::clamp(0.5 * (fm - fp) / curvature, -0.5, 0.5);
  return {u.node(i) + offset * u.spacing(), f0 - 0.25 * (fm - fp) * offset};
}

double part_symmetry_defect(const GridFunction& u, std::span<const double> part, double center) {
  double diff = 0.0, norm = 0.0;
  for (std::size_t i = 0; i < part.size(); ++i) {
    const double r = interpolate(u, part, 2.0 * center - u.node(i));
    diff += (part[i] - r) * (part[i] - r);
    norm += part[i] * part[i];
  }
  return norm > 0.0 ? std::sqrt(diff / norm) : 0.0;
}

}  // namespace

MinimizerProfile analyze(const GridFunction& u) {
  const auto raw = u.values();
  const auto [mn_it, mx_it] = std::minmax_element(raw.begin(), raw.end());
  const double sup = std::max(std::abs(*mn_it), std::abs(*mx_it));
  if (!(sup > 0.0)) throw InvalidInput("degenerate input: zero function");

  MinimizerProfile p;
  const bool changes_sign = *mn_it * *mx_it <= -kSignThreshold * sup * sup;

  // Orientation: positive part dominant; on a tie the maximum comes first.
  double orient = 1.0;
  if (!changes_sign) {
    orient = *mx_it > 0.0 ? 1.0 : -1.0;
    p.sign_class = orient > 0.0 ? SignClass::positive : SignClass::negative;
  } else {
    p.sign_class = SignClass::sign_changing;
    const double top = *mx_it, bottom = -*mn_it;
    if (std::abs(top - bottom) <= 1e-9 * sup) {
      orient = (mx_it < mn_it) ? 1.0 : -1.0;
    } else {
      orient = top > bottom ? 1.0 : -1.0;
    }
  }

  std::vector<double> y(raw.begin(), raw.end());
  for (double& v : y) v *= orient / sup;

  const auto imax = static_cast<std::size_t>(std::max_element(y.begin(), y.end()) - y.begin());
  const auto imin = static_cast<std::size_t>(std::min_element(y.begin(), y.end()) - y.begin());
  const Extremum hi = refine(u, y, imax);
  const Extremum lo = refine(u, y, imin);
  const double scale = hi.value;

  p.max_point = hi.point;
  p.max_value = 1.0;
  p.min_point = lo.point;
  p.min_value = lo.value / scale;
  p.m_bar = p.sign_class == SignClass::sign_changing ? std::clamp(-p.min_value, 0.0, 1.0) : 0.0;

  // Zeros: sign changes between nodes outside the roundoff band.
  const double band = kSignThreshold;
  std::ptrdiff_t last = -1;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (std::abs(y[i]) < band) continue;
    if (last >= 0 && (y[i] > 0.0) != (y[static_cast<std::size_t>(last)] > 0.0)) {
      const bool positive_before = y[static_cast<std::size_t>(last)] > 0.0;
      std::size_t k = static_cast<std::size_t>(last);
      while ((y[k + 1] > 0.0) == positive_before && y[k + 1] != 0.0) ++k;
      if (y[k + 1] == 0.0) {
        p.zeros.push_back(u.node(k + 1));
      } else {
        const double w = y[k] / (y[k] - y[k + 1]);
        p.zeros.push_back(u.node(k) + w * u.spacing());
      }
    }
    last = static_cast<std::ptrdiff_t>(i);
  }

  std::vector<double> pos(y.size()), neg(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    pos[i] = std::max(y[i], 0.0);
    neg[i] = std::min(y[i], 0.0);
  }
  p.positive_part_symmetry_defect = part_symmetry_defect(u, pos, p.max_point);
  if (p.sign_class == SignClass::sign_changing)
    p.negative_part_symmetry_defect = part_symmetry_defect(u, neg, p.min_point);

  double diff = 0.0, norm = 0.0;
  const std::size_t n = raw.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double s = raw[i] + raw[n - 1 - i];
    diff += s * s;
    norm += raw[i] * raw[i];
  }
  p.odd_defect = std::sqrt(diff / norm);
  return p;
}

}  // namespace nleig
