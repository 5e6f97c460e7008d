#include "shatter/logarithmetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace shatter {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Terms of the Stirling series B_{2k} / (2k (2k-1) x^{2k-1}), k = 1..7.
constexpr double kStirling[] = {
    1.0 / 12.0,       -1.0 / 360.0,        1.0 / 1260.0,  -1.0 / 1680.0,
    1.0 / 1188.0,     -691.0 / 360360.0,   1.0 / 156.0,
};

double stirling(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  double power = inv;
  for (double c : kStirling) {
    series += c * power;
    power *= inv2;
  }
  return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi) + series;
}

// Below this, log C(n,k) is summed factor by factor instead of via log-gamma.
constexpr std::uint64_t kDirectSumLimit = 64;

}  // namespace

LogNum LogNum::from_log(double log_value) {
  if (std::isnan(log_value)) throw std::domain_error("LogNum: NaN log value");
  if (log_value == std::numeric_limits<double>::infinity())
    throw std::domain_error("LogNum: infinite quantity");
  return LogNum{log_value, Tag{}};
}

LogNum LogNum::from_real(double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw std::domain_error("LogNum: expected a finite nonnegative real");
  return x == 0.0 ? zero() : LogNum{std::log(x), Tag{}};
}

double LogNum::to_real() const { return std::exp(log_); }

double log_gamma(double x) {
  if (!(x >= 1.0)) throw std::domain_error("log_gamma: argument must be >= 1");
  if (x >= 15.0) return stirling(x);
  // Gamma(x) = Gamma(x + m) / (x (x+1) ... (x+m-1))
  double shift = 1.0;
  double y = x;
  while (y < 15.0) {
    shift *= y;
    y += 1.0;
  }
  return stirling(y) - std::log(shift);
}

BigCount exact_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigCount acc = 1;
  // acc * (n - i) is always divisible by (i + 1): acc = C(n, i) before the step.
  for (std::uint64_t i = 0; i < k; ++i) {
    acc *= static_cast<unsigned long>(n - i);
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(i + 1));
  }
  return acc;
}

LogNum log_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return LogNum::zero();
  const std::uint64_t m = std::min(k, n - k);
  if (m <= kDirectSumLimit) {
    double s = 0.0;
    for (std::uint64_t i = 0; i < m; ++i)
      s += std::log(static_cast<double>(n - i) / static_cast<double>(m - i));
    return LogNum::from_log(s);
  }
  const auto nd = static_cast<double>(n);
  const auto kd = static_cast<double>(k);
  return LogNum::from_log(log_gamma(nd + 1.0) - log_gamma(kd + 1.0) - log_gamma(nd - kd + 1.0));
}

LogNum log_sum(LogNum a, LogNum b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const double hi = std::max(a.log(), b.log());
  const double lo = std::min(a.log(), b.log());
  return LogNum::from_log(hi + std::log1p(std::exp(lo - hi)));
}

LogNum log_pow(LogNum a, std::uint64_t p) {
  if (p == 0) throw std::domain_error("log_pow: exponent must be >= 1");
  if (a.is_zero()) return a;
  return LogNum::from_log(static_cast<double>(p) * a.log());
}

LogNum log_product(LogNum a, LogNum b) {
  if (a.is_zero() || b.is_zero()) return LogNum::zero();
  return LogNum::from_log(a.log() + b.log());
}

LogNum log_of_bigcount(const BigCount& v) {
  if (sgn(v) < 0) throw std::domain_error("log_of_bigcount: negative value");
  if (sgn(v) == 0) return LogNum::zero();
  // Exactly representable: same rounding as std::log on the double.
  if (mpz_sizeinbase(v.get_mpz_t(), 2) <= 53) return LogNum::from_log(std::log(v.get_d()));
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, v.get_mpz_t());
  return LogNum::from_log(std::log(mantissa) + static_cast<double>(exponent) * std::numbers::ln2);
}

}  // namespace shatter
