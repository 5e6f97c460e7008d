#pragma once

#include <cstdint>
#include <limits>

#include <gmpxx.h>

namespace shatter {

/// Exact nonnegative integer. Shattering counts reach hundreds of digits at
/// n ~ 1e6, so every exact path runs on GMP integers.
using BigCount = mpz_class;

/// A nonnegative extended real held as its natural logarithm.
/// A log value of -inf encodes zero; NaN is rejected at construction.
class LogNum {
public:
  constexpr LogNum() = default;

  static LogNum from_log(double log_value);
  /// x must be >= 0 and finite.
  static LogNum from_real(double x);
  static constexpr LogNum zero() { return LogNum{}; }
  static constexpr LogNum one() { return LogNum{0.0, Tag{}}; }

  double log() const { return log_; }
  /// Linear-scale value; overflows to +inf or underflows to 0 outside double range.
  double to_real() const;
  bool is_zero() const { return log_ == -std::numeric_limits<double>::infinity(); }

  friend bool operator==(const LogNum&, const LogNum&) = default;
  friend auto operator<=>(const LogNum& a, const LogNum& b) { return a.log_ <=> b.log_; }

private:
  struct Tag {};
  constexpr LogNum(double v, Tag) : log_(v) {}

  double log_ = -std::numeric_limits<double>::infinity();
};

BigCount exact_binomial(std::uint64_t n, std::uint64_t k);
LogNum log_binomial(std::uint64_t n, std::uint64_t k);

/// log(e^a + e^b), factoring out the larger term: log a + log(1 + c/a).
LogNum log_sum(LogNum a, LogNum b);
/// a^p in log space. p >= 1.
LogNum log_pow(LogNum a, std::uint64_t p);
LogNum log_product(LogNum a, LogNum b);
LogNum log_of_bigcount(const BigCount& v);

/// ln Gamma(x) for x >= 1: Stirling series at x >= 15, upward recurrence below.
double log_gamma(double x);

}  // namespace shatter
