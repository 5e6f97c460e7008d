#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "shatter/logarithmetic.hpp"
#include "shatter/shattering.hpp"

namespace shatter {

enum class ComputationPath { exact, log_domain };

const char* to_string(ComputationPath path);

struct BoundQuery {
  std::uint64_t n = 0;
  double eps = 0.0;
  double delta = 0.0;
  HypothesisSpec spec;
};

struct BoundReport {
  BoundQuery query;
  std::optional<LogNum> delta_log;
  std::optional<std::uint64_t> solved_n;
  std::optional<double> solved_eps;
  ComputationPath path = ComputationPath::log_domain;
  bool saturated = false;
  /// Bound above 1 (delta) or eps >= 1 (solved eps).
  bool vacuous = false;
};

/// Raised when the minimal-n search finds no bracket below its ceiling.
class NonConvergence : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// ln of 2 * N(F) * exp(-n eps^2 / 4) = ln 2 + ln N - n eps^2 / 4.
/// eps may be any positive real so that vacuous inversions still round-trip.
LogNum delta_bound(std::uint64_t n, double eps, HypothesisSpec spec);

struct MinNTrace {
  std::uint64_t n = 0;
  /// Last expansion point above the target and first point below it.
  std::uint64_t bracket_lo = 0;
  std::uint64_t bracket_hi = 0;
  int expansions = 0;
  int bisections = 0;
  int probes = 0;
};

struct MinNOptions {
  std::uint64_t ceiling = std::numeric_limits<std::int64_t>::max();
  int probe_count = 100;
};

/// Smallest n on the decreasing branch of delta_bound with delta_bound(n) <= ln delta.
/// Throws NonConvergence when no bracket exists below options.ceiling, or when
/// a probe beyond the answer climbs back above the target.
MinNTrace solve_min_n_traced(double delta, double eps, HypothesisSpec spec, MinNOptions options = {});
std::uint64_t solve_min_n(double delta, double eps, HypothesisSpec spec);

/// Closed-form inversion: eps = sqrt((4/n)(ln 2N - ln delta)). May exceed 1.
double solve_max_eps(std::uint64_t n, double delta, HypothesisSpec spec);

BoundReport report_delta(std::uint64_t n, double eps, HypothesisSpec spec);
BoundReport report_min_n(double delta, double eps, HypothesisSpec spec);
BoundReport report_max_eps(std::uint64_t n, double delta, HypothesisSpec spec);

struct CurveRow {
  std::uint64_t n;
  std::uint32_t h;
  std::uint32_t p;
  double epsilon;
};

/// One row per (spec, n), ordered by (h, p, n). n_grid must be nonempty,
/// strictly ascending, with every entry >= 2.
std::vector<CurveRow> emit_epsilon_curve(const std::vector<std::uint64_t>& n_grid,
                                         const std::vector<HypothesisSpec>& specs);

/// Integer grid of `points` logarithmically spaced values in [start, end], duplicates dropped.
std::vector<std::uint64_t> log_spaced_grid(std::uint64_t start, std::uint64_t end, int points);

}  // namespace shatter
