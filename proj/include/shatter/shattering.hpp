#pragma once

#include <cstdint>
#include <optional>

#include "shatter/logarithmetic.hpp"

namespace shatter {

/// Hilbert-space dimension h and number of (h-1)-dimensional hyperplanes p.
struct HypothesisSpec {
  std::uint32_t h = 0;
  std::uint32_t p = 1;

  /// Throws std::invalid_argument when p == 0.
  static HypothesisSpec make(std::uint32_t h, std::uint32_t p = 1);

  friend bool operator==(const HypothesisSpec&, const HypothesisSpec&) = default;
};

struct ShatterValue {
  std::optional<BigCount> exact;
  LogNum log;
  std::uint64_t n = 0;
  HypothesisSpec spec;
  /// h >= n-1: every labeling is admissible and no guarantee follows.
  bool saturated = false;
};

/// 2 * sum_{i=0}^{h} C(n-1, i). Requires n >= 1.
BigCount shatter_single(std::uint64_t n, std::uint32_t h);

/// 2 * sum_{i=0}^{h} C(n-1, i)^p. Requires n >= 1.
BigCount shatter_multi(std::uint64_t n, HypothesisSpec spec);

/// Log-domain twin of shatter_multi, usable for any n.
LogNum shatter_log(std::uint64_t n, HypothesisSpec spec);

/// Both paths at once when `exact` is set, log path only otherwise.
ShatterValue evaluate_shatter(std::uint64_t n, HypothesisSpec spec, bool exact = true);

bool is_saturated(std::uint64_t n, std::uint32_t h);

/// 2 * sum_{i=h+1}^{n} C(n-1, i), the labelings excluded by the bias.
BigCount complement_count(std::uint64_t n, std::uint32_t h);

/// log of [2x(x^h - 1)/(x - 1) + 2]^p with x = e(n-1). Requires n >= 2, h >= 1.
LogNum shatter_upper_closed(std::uint64_t n, HypothesisSpec spec);

/// (m/k)^k and (em/k)^k in log space. Require m >= k > 0.
LogNum binom_lower_bound(std::uint64_t m, std::uint64_t k);
LogNum binom_upper_bound(std::uint64_t m, std::uint64_t k);

/// p ln 2 + h p
double gamma_const(HypothesisSpec spec);

/// 2 sqrt(h p ln n + gamma) / sqrt(n), n >= 2 (real-valued n allowed).
double epsilon_curve(double n, HypothesisSpec spec);

/// p ln(2x(x^h - 1)/(x - 1)) - n eps^2 / 4 with x = e(n-1); negative means the
/// exponential bound converges. Requires n >= 2, h >= 1, 0 < eps < 1.
double psi(std::uint64_t n, HypothesisSpec spec, double eps);

/// p ln 2 + h p + h p ln n - n eps^2 / 4. Requires n >= 2, 0 < eps < 1.
double asymptotic_condition(double n, HypothesisSpec spec, double eps);

}  // namespace shatter
