#include <cmath>
#include <limits>
#include <random>

#include <doctest.h>

#include "shatter/logarithmetic.hpp"

using namespace shatter;

namespace {

// Independent reference: ln n! summed term by term in long double.
long double log_factorial_ref(int n) {
  long double s = 0.0L;
  for (int i = 2; i <= n; ++i) s += std::log(static_cast<long double>(i));
  return s;
}

}  // namespace

TEST_CASE("exact_binomial small values") {
  CHECK(exact_binomial(3, 0) == 1);
  CHECK(exact_binomial(3, 2) == 3);
  CHECK(exact_binomial(4, 2) == 6);
  CHECK(exact_binomial(3, 5) == 0);
  CHECK(exact_binomial(0, 0) == 1);
  CHECK(exact_binomial(1'000'000, 3) == BigCount("166666166667000000"));
}

TEST_CASE("Pascal identity up to n = 200") {
  for (std::uint64_t n = 1; n <= 200; ++n)
    for (std::uint64_t k = 1; k <= n; ++k)
      REQUIRE(exact_binomial(n, k) == exact_binomial(n - 1, k) + exact_binomial(n - 1, k - 1));
}

TEST_CASE("log_gamma against summed log factorials") {
  for (int n = 1; n <= 170; ++n) {
    const long double ref = log_factorial_ref(n);
    const double got = log_gamma(n + 1.0);
    CHECK(std::fabs(got - static_cast<double>(ref)) <= 1e-12 * std::max(1.0L, std::fabs(ref)));
  }
  CHECK(std::fabs(log_gamma(1.0)) <= 1e-12);
  CHECK(log_gamma(1.5) == doctest::Approx(std::lgamma(1.5)).epsilon(1e-13));
  CHECK_THROWS_AS(log_gamma(0.5), std::domain_error);
}

TEST_CASE("log_binomial") {
  CHECK(log_binomial(3, 1).log() == doctest::Approx(std::log(3.0)).epsilon(1e-15));
  CHECK(log_binomial(10, 5).log() == doctest::Approx(5.529429087511423).epsilon(1e-14));
  CHECK(log_binomial(3, 4).is_zero());

  const double big = log_binomial(1'000'000, 3).log();
  CHECK(std::fabs(big - 39.65476920466227) / 39.65476920466227 <= 1e-9);

  SUBCASE("matches exact path for all n <= 170") {
    for (std::uint64_t n = 0; n <= 170; ++n)
      for (std::uint64_t k = 0; k <= n; ++k)
        REQUIRE(std::fabs(log_binomial(n, k).log() - log_of_bigcount(exact_binomial(n, k)).log()) <= 1e-9);
  }
  SUBCASE("log-gamma branch for large k") {
    CHECK(log_binomial(200, 100).log() == doctest::Approx(135.7532360812785).epsilon(1e-13));
  }
}

TEST_CASE("LogNum basics") {
  CHECK(LogNum::zero().is_zero());
  CHECK(LogNum::from_real(0.0).is_zero());
  CHECK_THROWS_AS(LogNum::from_log(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
  CHECK_THROWS_AS(LogNum::from_real(-1.0), std::domain_error);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> exponent(-300.0, 300.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = std::pow(10.0, exponent(rng));
    const double back = LogNum::from_real(x).to_real();
    REQUIRE(std::fabs(back - x) / x <= 1e-12);
  }
}

TEST_CASE("log_sum") {
  CHECK(log_sum(LogNum::from_real(2), LogNum::from_real(6)).log() == doctest::Approx(std::log(8.0)).epsilon(1e-15));
  const LogNum x = LogNum::from_real(3.5);
  CHECK(log_sum(x, LogNum::zero()) == x);
  CHECK(log_sum(LogNum::zero(), x) == x);

  const LogNum huge = LogNum::from_log(300.0 * std::log(10.0));
  const double doubled = log_sum(huge, huge).log();
  CHECK(std::isfinite(doubled));
  CHECK(doubled == doctest::Approx(std::log(2.0) + 300.0 * std::log(10.0)).epsilon(1e-15));
  CHECK(log_sum(LogNum::from_log(1e6), LogNum::from_log(1e6)).log() == doctest::Approx(1e6 + std::log(2.0)));

  SUBCASE("commutative and associative") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> d(-50.0, 50.0);
    for (int i = 0; i < 2000; ++i) {
      const auto a = LogNum::from_log(d(rng)), b = LogNum::from_log(d(rng)), c = LogNum::from_log(d(rng));
      REQUIRE(std::fabs(log_sum(a, b).log() - log_sum(b, a).log()) <= 1e-12);
      REQUIRE(std::fabs(log_sum(log_sum(a, b), c).log() - log_sum(a, log_sum(b, c)).log()) <= 1e-12);
    }
  }
}

TEST_CASE("log_pow") {
  CHECK(log_pow(LogNum::from_real(3), 2).log() == doctest::Approx(std::log(9.0)).epsilon(1e-15));
  CHECK(log_pow(LogNum::zero(), 5).is_zero());
  CHECK_THROWS_AS(log_pow(LogNum::from_real(3), 0), std::domain_error);

  BigCount c = exact_binomial(999'999, 3);
  BigCount c16;
  mpz_pow_ui(c16.get_mpz_t(), c.get_mpz_t(), 16);
  CHECK(std::fabs(log_pow(log_of_bigcount(c), 16).log() - log_of_bigcount(c16).log()) <= 1e-9);
  CHECK(log_of_bigcount(c16).log() == doctest::Approx(634.4762592745243).epsilon(1e-13));

  SUBCASE("agrees with exact powers") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 60; ++i) {
      const std::uint64_t k = rng() % 51;
      const unsigned p = 1 + static_cast<unsigned>(rng() % 32);
      const BigCount v = exact_binomial(10'000, k);
      BigCount vp;
      mpz_pow_ui(vp.get_mpz_t(), v.get_mpz_t(), p);
      REQUIRE(std::fabs(log_pow(log_of_bigcount(v), p).log() - log_of_bigcount(vp).log()) <= 1e-9);
    }
  }
}

TEST_CASE("log_of_bigcount") {
  CHECK(log_of_bigcount(1).log() == 0.0);
  CHECK(log_of_bigcount(8).log() == doctest::Approx(std::log(8.0)).epsilon(1e-15));
  CHECK(log_of_bigcount(0).is_zero());
  CHECK(std::fabs(log_of_bigcount(exact_binomial(200, 100)).log() - log_binomial(200, 100).log()) <= 1e-9);
  // Far beyond double range.
  BigCount big;
  mpz_ui_pow_ui(big.get_mpz_t(), 2, 100'000);
  CHECK(log_of_bigcount(big).log() == doctest::Approx(100'000 * std::log(2.0)).epsilon(1e-15));
}
