#include <cmath>
#include <functional>
#include <limits>

#include "finitehyper/harness.hpp"

namespace finitehyper {

namespace {

struct LogValue {
  double log_abs;
  int sign;        // 0 when the value is zero
  double scale = 0;  // sum of |lgamma| terms, for a round-off estimate
};

// A value with an estimate of its absolute round-off.
struct Estimate {
  double value;
  double roundoff;
};

constexpr double kEps = std::numeric_limits<double>::epsilon();

// log |(x)_m| and its sign, for real x and integral m >= 0. Negative factors
// are folded into a product of positive ones so lgamma only sees positive
// arguments.
LogValue log_rising(double x, double m) {
  if (m <= 0) return {0.0, 1};
  double negatives = 0;
  if (x < 0) {
    if (x == std::floor(x) && -x < m) return {-std::numeric_limits<double>::infinity(), 0};
    negatives = std::min(m, std::ceil(-x));
  }
  double log_abs = 0;
  double scale = 0;
  int sign = 1;
  if (negatives > 0) {
    // x (x+1) ... (x+j-1) with every factor negative equals (-1)^j (1-x-j)_j.
    const double y = 1 - x - negatives;
    const double hi = std::lgamma(y + negatives), lo = std::lgamma(y);
    log_abs += hi - lo;
    scale += std::fabs(hi) + std::fabs(lo);
    if (std::fmod(negatives, 2.0) != 0) sign = -1;
  }
  if (m > negatives) {
    const double start = x + negatives;
    const double hi = std::lgamma(start + (m - negatives)), lo = std::lgamma(start);
    log_abs += hi - lo;
    scale += std::fabs(hi) + std::fabs(lo);
  }
  return {log_abs, sign, scale};
}

Estimate rising_ratio(double num, double den, double m) {
  const LogValue a = log_rising(num, m);
  const LogValue b = log_rising(den, m);
  if (b.sign == 0) return {std::numeric_limits<double>::quiet_NaN(), 0};
  if (a.sign == 0) return {0.0, 0};
  const double v = a.sign * b.sign * std::exp(a.log_abs - b.log_abs);
  return {v, 4 * kEps * (a.scale + b.scale + 1) * std::fabs(v)};
}

Estimate operator*(const Estimate& x, const Estimate& y) {
  return {x.value * y.value,
          std::fabs(x.value) * y.roundoff + std::fabs(y.value) * x.roundoff};
}

LimitReport finish(std::string id, std::vector<std::pair<std::string, double>> params,
                   double limit, const std::vector<double>& grid, double tol,
                   const std::function<Estimate(double)>& value_at) {
  LimitReport r;
  r.limit_id = std::move(id);
  r.params = std::move(params);
  r.limit = limit;
  r.tolerance = tol;
  std::vector<double> roundoff;
  for (double n : grid) {
    const Estimate v = value_at(n);
    r.points.push_back({n, v.value, std::fabs(v.value - limit)});
    roundoff.push_back(v.roundoff + kEps * std::fabs(limit));
  }
  bool pass = !r.points.empty() && r.points.back().error <= tol;
  const std::size_t from = r.points.size() > 3 ? r.points.size() - 3 : 0;
  // Errors within the evaluation's own round-off count as zero.
  for (std::size_t i = from + 1; i < r.points.size(); ++i) {
    const double e = r.points[i].error;
    if (!(e <= r.points[i - 1].error || e <= roundoff[i])) pass = false;
  }
  r.pass = pass;
  return r;
}

}  // namespace

LimitReport limit_disc_power(double a, double t, const std::vector<double>& grid, double tol) {
  if (!(t > 0 && t < 1)) throw ConfigError("t must lie in (0, 1)");
  return finish("disc-power", {{"a", a}, {"t", t}}, std::pow(t, a - 1), grid, tol,
                [a, t](double n) {
                  const double k = std::round(t * n);
                  return rising_ratio(1 + k, a + k, n - k);
                });
}

LimitReport limit_disc_power_complement(double b, double t, const std::vector<double>& grid,
                                        double tol) {
  if (!(t > 0 && t < 1)) throw ConfigError("t must lie in (0, 1)");
  return finish("disc-power-complement", {{"b", b}, {"t", t}}, std::pow(1 - t, b - 1), grid,
                tol, [b, t](double n) {
                  const double k = std::round(t * n);
                  return rising_ratio(1 + n - k, b + n - k, k);
                });
}

LimitReport limit_t1F0(double a, double z, const std::vector<double>& grid, double tol) {
  if (!(z < 1) || z == 0) throw ConfigError("z must satisfy z < 1, z != 0");
  return finish("t1f0", {{"a", a}, {"z", z}}, std::pow(1 - z, -a), grid, tol,
                [a, z](double n) {
                  const double w = n / z;
                  return rising_ratio(a + w - n, w - n, n);
                });
}

LimitReport limit_aar_beta(double a, double b, const std::vector<double>& grid, double tol) {
  if (!(a > 0 && b > 0)) throw ConfigError("a and b must be positive");
  const double beta = std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
  return finish("aar-beta", {{"a", a}, {"b", b}}, beta, grid, tol, [a, b](double n) {
    Estimate sum{0, 0};
    for (double k = 0; k <= n; ++k) {
      const Estimate term =
          rising_ratio(1 + k, a + k, n - k) * rising_ratio(1 + n - k, b + n - k, k);
      sum.value += term.value;
      sum.roundoff += term.roundoff + kEps * std::fabs(sum.value);
    }
    return Estimate{sum.value / n, sum.roundoff / n};
  });
}

const std::vector<double>& default_limit_grid() {
  static const std::vector<double> grid{1e2, 1e3, 1e4};
  return grid;
}

std::vector<LimitReport> run_limits(const std::vector<double>& grid, double tol) {
  for (double n : grid) {
    if (!(n >= 1) || n != std::floor(n)) throw ConfigError("grid entries must be positive integers");
  }
  return {
      limit_disc_power(1, 0.5, grid, tol),
      limit_disc_power(2, 0.5, grid, tol),
      limit_disc_power(0.5, 0.25, grid, tol),
      limit_disc_power_complement(2, 0.5, grid, tol),
      limit_disc_power_complement(0.5, 0.25, grid, tol),
      limit_t1F0(0, 0.5, grid, tol),
      limit_t1F0(1, 0.5, grid, tol),
      limit_t1F0(2, -1, grid, tol),
      limit_aar_beta(1, 1, grid, tol),
      limit_aar_beta(2, 1, grid, tol),
      limit_aar_beta(0.5, 0.5, grid, tol),
  };
}

}  // namespace finitehyper
