#include "shatter/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace shatter {

namespace {

void require_unit_open(double v, const char* name) {
  if (!(v > 0.0 && v < 1.0)) throw std::invalid_argument(std::string(name) + " must lie in (0, 1)");
}

}  // namespace

const char* to_string(ComputationPath path) {
  return path == ComputationPath::exact ? "exact" : "log";
}

LogNum delta_bound(std::uint64_t n, double eps, HypothesisSpec spec) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw std::invalid_argument("eps must be positive");
  const double decay = static_cast<double>(n) * eps * eps / 4.0;
  return LogNum::from_log(std::numbers::ln2 + shatter_log(n, spec).log() - decay);
}

MinNTrace solve_min_n_traced(double delta, double eps, HypothesisSpec spec, MinNOptions options) {
  require_unit_open(delta, "delta");
  require_unit_open(eps, "eps");
  const double target = std::log(delta);
  auto f = [&](std::uint64_t n) { return delta_bound(n, eps, spec).log(); };

  MinNTrace trace;
  // Expand n, 2n, 4n, ... until the bound is falling and below target.
  std::uint64_t prev = 1;
  double prev_value = f(prev);
  if (prev_value <= target) {
    trace.n = trace.bracket_hi = 1;
    return trace;
  }
  std::uint64_t lo = prev;
  std::uint64_t hi = 0;
  while (true) {
    if (prev > options.ceiling / 2)
      throw NonConvergence("no bracket below ceiling " + std::to_string(options.ceiling) +
                           "; the (delta, eps, h, p) combination is unachievable in practice");
    const std::uint64_t next = prev * 2;
    const double value = f(next);
    ++trace.expansions;
    if (value <= target && value < prev_value) {
      hi = next;
      break;
    }
    if (value > target) lo = next;
    prev = next;
    prev_value = value;
  }

  trace.bracket_lo = lo;
  trace.bracket_hi = hi;
  // Invariant: f(lo) > target >= f(hi).
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (f(mid) <= target)
      hi = mid;
    else
      lo = mid;
    ++trace.bisections;
  }
  trace.n = hi;

  // Probe past the answer: linear steps, then doublings.
  const std::uint64_t step = std::max<std::uint64_t>(1, hi / 100);
  const int half = options.probe_count / 2;
  std::uint64_t m = hi;
  for (int i = 0; i < options.probe_count; ++i) {
    if (i < half) {
      m += step;
    } else {
      if (m > options.ceiling / 2) break;
      m *= 2;
    }
    ++trace.probes;
    if (f(m) > target)
      throw NonConvergence("bound rises above target again at n = " + std::to_string(m));
  }
  return trace;
}

std::uint64_t solve_min_n(double delta, double eps, HypothesisSpec spec) {
  return solve_min_n_traced(delta, eps, spec).n;
}

double solve_max_eps(std::uint64_t n, double delta, HypothesisSpec spec) {
  require_unit_open(delta, "delta");
  if (n < 1) throw std::invalid_argument("sample size n must be >= 1");
  const double log_two_n = std::numbers::ln2 + shatter_log(n, spec).log();
  return std::sqrt(4.0 / static_cast<double>(n) * (log_two_n - std::log(delta)));
}

BoundReport report_delta(std::uint64_t n, double eps, HypothesisSpec spec) {
  BoundReport r;
  r.query = {n, eps, 0.0, spec};
  r.delta_log = delta_bound(n, eps, spec);
  r.path = ComputationPath::log_domain;
  r.saturated = is_saturated(n, spec.h);
  r.vacuous = r.delta_log->log() > 0.0;
  return r;
}

BoundReport report_min_n(double delta, double eps, HypothesisSpec spec) {
  BoundReport r;
  r.solved_n = solve_min_n(delta, eps, spec);
  r.query = {*r.solved_n, eps, delta, spec};
  r.path = ComputationPath::log_domain;
  r.saturated = is_saturated(*r.solved_n, spec.h);
  return r;
}

BoundReport report_max_eps(std::uint64_t n, double delta, HypothesisSpec spec) {
  BoundReport r;
  r.solved_eps = solve_max_eps(n, delta, spec);
  r.query = {n, *r.solved_eps, delta, spec};
  r.path = ComputationPath::log_domain;
  r.saturated = is_saturated(n, spec.h);
  r.vacuous = *r.solved_eps >= 1.0;
  return r;
}

std::vector<CurveRow> emit_epsilon_curve(const std::vector<std::uint64_t>& n_grid,
                                         const std::vector<HypothesisSpec>& specs) {
  if (n_grid.empty()) throw std::invalid_argument("epsilon curve: empty n grid");
  if (n_grid.front() < 2) throw std::invalid_argument("epsilon curve: grid values must be >= 2");
  if (!std::is_sorted(n_grid.begin(), n_grid.end()) ||
      std::adjacent_find(n_grid.begin(), n_grid.end()) != n_grid.end())
    throw std::invalid_argument("epsilon curve: grid must be strictly ascending");

  std::vector<HypothesisSpec> ordered = specs;
  std::stable_sort(ordered.begin(), ordered.end(), [](const HypothesisSpec& a, const HypothesisSpec& b) {
    return a.h != b.h ? a.h < b.h : a.p < b.p;
  });

  std::vector<CurveRow> rows;
  rows.reserve(n_grid.size() * ordered.size());
  for (const auto& spec : ordered)
    for (auto n : n_grid) rows.push_back({n, spec.h, spec.p, epsilon_curve(static_cast<double>(n), spec)});
  return rows;
}

std::vector<std::uint64_t> log_spaced_grid(std::uint64_t start, std::uint64_t end, int points) {
  if (start < 2 || end <= start || points < 2)
    throw std::invalid_argument("grid requires 2 <= start < end and at least 2 points");
  std::vector<std::uint64_t> grid;
  grid.reserve(static_cast<std::size_t>(points));
  const double ratio = std::log(static_cast<double>(end) / static_cast<double>(start));
  for (int i = 0; i < points; ++i) {
    std::uint64_t v;
    if (i == 0)
      v = start;
    else if (i == points - 1)
      v = end;
    else
      v = static_cast<std::uint64_t>(std::llround(static_cast<double>(start) * std::exp(ratio * i / (points - 1))));
    if (grid.empty() || v > grid.back()) grid.push_back(v);
  }
  return grid;
}

}  // namespace shatter
