#include <cmath>
#include <numbers>

#include <doctest.h>

#include "shatter/shattering.hpp"

using namespace shatter;

namespace {

// GMP's own binomial, independent of exact_binomial.
BigCount gmp_binomial(unsigned long n, unsigned long k) {
  BigCount r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigCount pow2(unsigned long n) {
  BigCount r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, n);
  return r;
}

}  // namespace

TEST_CASE("HypothesisSpec validation") {
  CHECK_NOTHROW(HypothesisSpec::make(0, 1));
  CHECK_THROWS_AS(HypothesisSpec::make(3, 0), std::invalid_argument);
}

TEST_CASE("shatter_single reproduces the four-point construction") {
  CHECK(shatter_single(4, 0) == 2);
  CHECK(shatter_single(4, 1) == 8);
  CHECK(shatter_single(4, 2) == 14);
  CHECK(shatter_single(3, 5) == 8);
  CHECK_THROWS_AS(shatter_single(0, 1), std::invalid_argument);
}

TEST_CASE("saturation and monotonicity") {
  for (std::uint64_t n = 1; n <= 64; ++n) {
    for (std::uint32_t h = 0; h <= 65; ++h) {
      const BigCount s = shatter_single(n, h);
      if (h + 1 >= n) REQUIRE(s == pow2(n));
      REQUIRE(shatter_single(n + 1, h) >= s);
      REQUIRE(shatter_single(n, h + 1) >= s);
    }
  }
}

TEST_CASE("complement identity") {
  CHECK(complement_count(4, 2) == 2);
  CHECK(complement_count(4, 3) == 0);
  CHECK(complement_count(10, 2) == 932);
  for (std::uint64_t n = 1; n <= 64; ++n)
    for (std::uint32_t h = 0; h <= n; ++h) REQUIRE(shatter_single(n, h) + complement_count(n, h) == pow2(n));
}

TEST_CASE("shatter_multi") {
  CHECK(shatter_multi(4, {2, 1}) == 14);
  CHECK(shatter_multi(4, {1, 2}) == 20);

  BigCount expected = 0;
  for (unsigned long i = 0; i <= 3; ++i) {
    BigCount t;
    mpz_pow_ui(t.get_mpz_t(), gmp_binomial(9, i).get_mpz_t(), 16);
    expected += t;
  }
  expected *= 2;
  CHECK(shatter_multi(10, {3, 16}) == expected);
  CHECK(expected == BigCount("12288507395863986221343181667588"));

  for (std::uint64_t n = 1; n <= 40; ++n)
    for (std::uint32_t h = 0; h <= 6; ++h) REQUIRE(shatter_multi(n, {h, 1}) == shatter_single(n, h));
}

TEST_CASE("shatter_log agrees with the exact path") {
  CHECK(shatter_log(4, {2, 1}).log() == doctest::Approx(std::log(14.0)).epsilon(1e-14));
  for (std::uint32_t h : {0u, 3u, 10u})
    for (std::uint32_t p : {1u, 7u}) CHECK(shatter_log(1, {h, p}).log() == doctest::Approx(std::numbers::ln2));

  const double exact = log_of_bigcount(shatter_multi(1'000'000, {3, 16})).log();
  const double logd = shatter_log(1'000'000, {3, 16}).log();
  CHECK(std::fabs(exact - logd) / exact <= 1e-9);
  CHECK(exact == doctest::Approx(635.1694064550842).epsilon(1e-13));

  for (std::uint64_t n = 1; n <= 120; n += 7)
    for (std::uint32_t h = 0; h <= 5; ++h)
      for (std::uint32_t p : {1u, 2u, 16u}) {
        const double a = log_of_bigcount(shatter_multi(n, {h, p})).log();
        const double b = shatter_log(n, {h, p}).log();
        REQUIRE(std::fabs(a - b) <= 1e-9 * std::max(1.0, std::fabs(a)));
      }
}

TEST_CASE("evaluate_shatter") {
  const ShatterValue v = evaluate_shatter(3, {9, 1});
  REQUIRE(v.exact.has_value());
  CHECK(*v.exact == 8);
  CHECK(v.saturated);
  const ShatterValue w = evaluate_shatter(1'000'000, {3, 16}, false);
  CHECK_FALSE(w.exact.has_value());
  CHECK_FALSE(w.saturated);
}

TEST_CASE("shatter_upper_closed") {
  CHECK(shatter_upper_closed(4, {2, 1}) >= LogNum::from_real(14.0));
  CHECK(shatter_upper_closed(2, {1, 1}).log() == doctest::Approx(2.006408868078168).epsilon(1e-14));
  CHECK(shatter_upper_closed(100, {3, 16}) >= shatter_log(100, {3, 16}));
  CHECK_THROWS_AS(shatter_upper_closed(1, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(shatter_upper_closed(5, {0, 1}), std::invalid_argument);

  for (std::uint64_t n = 2; n <= 100; ++n)
    for (std::uint32_t h = 1; h <= 4; ++h)
      for (std::uint32_t p : {1u, 2u, 16u}) REQUIRE(shatter_log(n, {h, p}) <= shatter_upper_closed(n, {h, p}));
}

TEST_CASE("binomial sandwich") {
  CHECK(binom_lower_bound(4, 2).log() == doctest::Approx(std::log(4.0)).epsilon(1e-15));
  CHECK(binom_upper_bound(4, 2).log() == doctest::Approx(3.386294361119891).epsilon(1e-15));
  CHECK_THROWS_AS(binom_lower_bound(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(binom_upper_bound(4, 5), std::invalid_argument);

  const double c = log_of_bigcount(gmp_binomial(50, 17)).log();
  CHECK(binom_lower_bound(50, 17).log() <= c);
  CHECK(c <= binom_upper_bound(50, 17).log());

  for (std::uint64_t m = 1; m <= 100; ++m)
    for (std::uint64_t k = 1; k <= m; ++k) {
      const double lc = log_of_bigcount(exact_binomial(m, k)).log();
      REQUIRE(binom_lower_bound(m, k).log() <= lc);
      REQUIRE(lc <= binom_upper_bound(m, k).log());
    }
}

TEST_CASE("gamma_const and epsilon_curve") {
  CHECK(gamma_const({3, 16}) == doctest::Approx(59.09035488895912).epsilon(1e-14));
  CHECK(gamma_const({0, 1}) == doctest::Approx(std::numbers::ln2));
  CHECK(gamma_const({1, 1}) == doctest::Approx(std::numbers::ln2 + 1.0));

  CHECK(epsilon_curve(1e6, {3, 16}) == doctest::Approx(0.05374885530581072).epsilon(1e-13));
  CHECK(epsilon_curve(std::numbers::e, {0, 1}) == doctest::Approx(1.009939795104547).epsilon(1e-13));
  CHECK(epsilon_curve(1000, {3, 16}) > epsilon_curve(1000, {2, 16}));
  CHECK(epsilon_curve(1000, {2, 16}) > epsilon_curve(1000, {2, 1}));
  CHECK_THROWS_AS(epsilon_curve(1.5, {1, 1}), std::invalid_argument);
}

TEST_CASE("psi") {
  CHECK(psi(2, {1, 1}, 0.05) == doctest::Approx(1.691897180559945).epsilon(1e-13));
  CHECK(psi(10'000'000, {3, 16}, 0.05) < 0.0);
  CHECK(psi(1000, {3, 16}, 0.05) > 0.0);
  CHECK_THROWS_AS(psi(1, {1, 1}, 0.05), std::invalid_argument);
  CHECK_THROWS_AS(psi(10, {1, 1}, 1.0), std::invalid_argument);

  // Bisection for the sign change between 1e3 and 1e7.
  std::uint64_t lo = 1000, hi = 10'000'000;
  while (hi - lo > 1) {
    const auto mid = lo + (hi - lo) / 2;
    (psi(mid, {3, 16}, 0.05) < 0.0 ? hi : lo) = mid;
  }
  CHECK(psi(lo, {3, 16}, 0.05) >= 0.0);
  CHECK(psi(hi, {3, 16}, 0.05) < 0.0);
}

TEST_CASE("asymptotic_condition") {
  CHECK(asymptotic_condition(2, {3, 16}, 0.05) == doctest::Approx(92.3601695558365).epsilon(1e-13));
  const double root0 = 4.0 * std::numbers::ln2 / (0.05 * 0.05);
  CHECK(std::fabs(asymptotic_condition(root0, {0, 1}, 0.05)) <= 1e-9);
  CHECK(asymptotic_condition(root0 * 1.01, {0, 1}, 0.05) < 0.0);

  // Real root in n by bisection; should land within 2x of the exact minimal n (~1.027e6).
  double lo = 1e3, hi = 1e8;
  for (int i = 0; i < 200; ++i) {
    const double mid = std::sqrt(lo * hi);
    (asymptotic_condition(mid, {3, 16}, 0.05) < 0.0 ? hi : lo) = mid;
  }
  CHECK(hi > 1.02678e6 / 2.0);
  CHECK(hi < 1.02678e6 * 2.0);
}
