#include "shatter/shattering.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace shatter {

namespace {

void require_sample(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("sample size n must be >= 1");
}

void require_closed_form_domain(std::uint64_t n, std::uint32_t h, const char* what) {
  if (n < 2) throw std::invalid_argument(std::string(what) + ": requires n >= 2");
  if (h < 1) throw std::invalid_argument(std::string(what) + ": requires h >= 1");
}

void require_eps(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0, 1)");
}

// ln[2x(x^h - 1)/(x - 1)] for x = e(n-1) > 1.
double log_geometric_term(std::uint64_t n, std::uint32_t h) {
  const double log_x = 1.0 + std::log(static_cast<double>(n - 1));
  const double x = std::exp(log_x);
  const double log_xh_minus_1 = h * log_x + std::log1p(-std::exp(-(h * log_x)));
  return std::numbers::ln2 + log_x + log_xh_minus_1 - std::log(x - 1.0);
}

}  // namespace

HypothesisSpec HypothesisSpec::make(std::uint32_t h, std::uint32_t p) {
  if (p < 1) throw std::invalid_argument("hyperplane count p must be >= 1");
  return HypothesisSpec{h, p};
}

BigCount shatter_single(std::uint64_t n, std::uint32_t h) {
  return shatter_multi(n, HypothesisSpec{h, 1});
}

BigCount shatter_multi(std::uint64_t n, HypothesisSpec spec) {
  require_sample(n);
  if (spec.p < 1) throw std::invalid_argument("hyperplane count p must be >= 1");
  BigCount sum = 0;
  BigCount term;
  for (std::uint64_t i = 0; i <= spec.h && i <= n - 1; ++i) {
    mpz_pow_ui(term.get_mpz_t(), exact_binomial(n - 1, i).get_mpz_t(), spec.p);
    sum += term;
  }
  return 2 * sum;
}

LogNum shatter_log(std::uint64_t n, HypothesisSpec spec) {
  require_sample(n);
  if (spec.p < 1) throw std::invalid_argument("hyperplane count p must be >= 1");
  LogNum sum = LogNum::zero();
  for (std::uint64_t i = 0; i <= spec.h && i <= n - 1; ++i)
    sum = log_sum(sum, log_pow(log_binomial(n - 1, i), spec.p));
  return log_product(LogNum::from_log(std::numbers::ln2), sum);
}

bool is_saturated(std::uint64_t n, std::uint32_t h) { return n <= static_cast<std::uint64_t>(h) + 1; }

ShatterValue evaluate_shatter(std::uint64_t n, HypothesisSpec spec, bool exact) {
  ShatterValue v;
  v.n = n;
  v.spec = spec;
  v.saturated = is_saturated(n, spec.h);
  if (exact) {
    v.exact = shatter_multi(n, spec);
    v.log = log_of_bigcount(*v.exact);
  } else {
    v.log = shatter_log(n, spec);
  }
  return v;
}

BigCount complement_count(std::uint64_t n, std::uint32_t h) {
  require_sample(n);
  BigCount sum = 0;
  for (std::uint64_t i = static_cast<std::uint64_t>(h) + 1; i <= n; ++i) sum += exact_binomial(n - 1, i);
  return 2 * sum;
}

LogNum shatter_upper_closed(std::uint64_t n, HypothesisSpec spec) {
  require_closed_form_domain(n, spec.h, "shatter_upper_closed");
  const LogNum inner = log_sum(LogNum::from_log(log_geometric_term(n, spec.h)),
                               LogNum::from_log(std::numbers::ln2));
  return log_pow(inner, spec.p);
}

LogNum binom_lower_bound(std::uint64_t m, std::uint64_t k) {
  if (k == 0 || k > m) throw std::invalid_argument("binomial bound requires m >= k > 0");
  const auto kd = static_cast<double>(k);
  return LogNum::from_log(kd * (std::log(static_cast<double>(m)) - std::log(kd)));
}

LogNum binom_upper_bound(std::uint64_t m, std::uint64_t k) {
  if (k == 0 || k > m) throw std::invalid_argument("binomial bound requires m >= k > 0");
  const auto kd = static_cast<double>(k);
  return LogNum::from_log(kd * (1.0 + std::log(static_cast<double>(m)) - std::log(kd)));
}

double gamma_const(HypothesisSpec spec) {
  return spec.p * std::numbers::ln2 + static_cast<double>(spec.h) * spec.p;
}

double epsilon_curve(double n, HypothesisSpec spec) {
  if (!(n >= 2.0)) throw std::invalid_argument("epsilon_curve: requires n >= 2");
  const double hp = static_cast<double>(spec.h) * spec.p;
  return 2.0 * std::sqrt(hp * std::log(n) + gamma_const(spec)) / std::sqrt(n);
}

double psi(std::uint64_t n, HypothesisSpec spec, double eps) {
  require_closed_form_domain(n, spec.h, "psi");
  require_eps(eps);
  return spec.p * log_geometric_term(n, spec.h) - static_cast<double>(n) * eps * eps / 4.0;
}

double asymptotic_condition(double n, HypothesisSpec spec, double eps) {
  if (!(n >= 2.0)) throw std::invalid_argument("asymptotic_condition: requires n >= 2");
  require_eps(eps);
  const double hp = static_cast<double>(spec.h) * spec.p;
  return gamma_const(spec) + hp * std::log(n) - n * eps * eps / 4.0;
}

}  // namespace shatter
