#pragma once

// Verification engine: seeded sampling with pole rejection, the identity
// catalog, report serialization and the floating-point limit checks.
//
// Every exact comparison here delegates both sides to the math modules; this
// layer only chooses parameters and records results.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "finitehyper/exact.hpp"
#include "finitehyper/series.hpp"

namespace finitehyper {

std::uint64_t splitmix64(std::uint64_t x);

/// Deterministic random stream. Bounded draws use rejection on the raw
/// 64-bit engine output, so results do not depend on the standard library's
/// distribution implementations.
class SeedStream {
 public:
  explicit SeedStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  long uniform(long lo, long hi);
  /// Uniform in [0, 1).
  double unit();

 private:
  std::mt19937_64 engine_;
};

struct SampleBounds {
  long numerator = 20;
  long denominator = 10;
};

/// Numerator uniform in [-B_n, B_n], denominator uniform in [1, B_d], reduced.
Rational sample_rational(const SampleBounds& bounds, SeedStream& stream);

/// Every knob is optional; unset values take the identity's defaults.
struct RunConfig {
  std::optional<int> n_min;
  std::optional<int> n_max;
  std::optional<int> trials;
  std::optional<int> degree;
  std::optional<int> weight_max;
  std::uint64_t seed = 42;
  SampleBounds bounds;
  bool timing = false;
};

struct VerificationReport {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> params;
  int n = 0;
  std::string lhs;
  std::string rhs;
  bool equal = false;
  std::uint64_t seed = 0;
  int rejected = 0;
  double ms = 0;
};

/// The registered identity ids, in suite order.
const std::vector<std::string>& identity_catalog();

/// Runs one identity. Throws UnknownIdentity, ConfigError, and PoleExhaustion
/// when more than 10x the requested trials are rejected.
std::vector<VerificationReport> run_identity(const std::string& id, const RunConfig& cfg);

/// "series[<terms> terms]:<16 hex digits>" from FNV-1a over the rendered text.
std::string series_digest(const TruncatedSeries& s);

enum class ReportFormat { Json, Csv, Markdown };

ReportFormat parse_format(const std::string& name);

std::string emit_report(const std::vector<VerificationReport>& reports, ReportFormat format);

struct LimitPoint {
  double n;
  double value;
  double error;
};

struct LimitReport {
  std::string limit_id;
  std::vector<std::pair<std::string, double>> params;
  double limit = 0;
  std::vector<LimitPoint> points;
  double tolerance = 1e-2;
  bool pass = false;
};

/// (1+n)_{N-n}/(a+n)_{N-n} with n = round(tN); limit t^{a-1}.
LimitReport limit_disc_power(double a, double t, const std::vector<double>& grid, double tol);

/// (1+N-n)_n/(b+N-n)_n with n = round(tN); limit (1-t)^{b-1}.
LimitReport limit_disc_power_complement(double b, double t, const std::vector<double>& grid,
                                        double tol);

/// (a + N/z - N)_N / (N/z - N)_N; limit (1-z)^{-a}.
LimitReport limit_t1F0(double a, double z, const std::vector<double>& grid, double tol);

/// (1/N) sum_n (1+n)_{N-n}/(a+n)_{N-n} (1+N-n)_n/(b+N-n)_n; limit B(a,b).
LimitReport limit_aar_beta(double a, double b, const std::vector<double>& grid, double tol);

const std::vector<double>& default_limit_grid();

/// The fixed limit suite.
std::vector<LimitReport> run_limits(const std::vector<double>& grid, double tol);

std::string emit_limits(const std::vector<LimitReport>& limits, ReportFormat format);

/// {"reports": [...], "limits": [...]} for the full suite.
std::string emit_suite_json(const std::vector<VerificationReport>& reports,
                            const std::vector<LimitReport>& limits);

}  // namespace finitehyper
