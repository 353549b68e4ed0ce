#include <doctest.h>

#include <boost/math/special_functions/digamma.hpp>
#include <cmath>
#include <numbers>

#include "bohr/classes.hpp"
#include "bohr/errors.hpp"
#include "oracles.hpp"

using namespace bohr;

namespace {

constexpr double kLn2 = std::numbers::ln2;

const ClassSpec kSpecs[] = {
    {ClassKind::ph0_alpha, 0.0}, {ClassKind::ph0_alpha, 0.5}, {ClassKind::ph0_alpha, 0.9},
    {ClassKind::ph0_m, 0.2},     {ClassKind::ph0_m, 0.7},     {ClassKind::ph0_m, 1.25},
    {ClassKind::wh0_alpha, 0.0}, {ClassKind::wh0_alpha, 0.4}, {ClassKind::wh0_alpha, 0.95},
};

// sum_{n>=2} 2(-1)^(n-1) / (n (alpha n + 1 - alpha)) via partial fractions and
// the digamma function: 1/(n(an+b)) = (1/b)(1/n - 1/(n+c)), c = b/a, and
// sum_{n>=1} (-1)^(n-1)/(n+c) = (psi((c+2)/2) - psi((c+1)/2)) / 2.
double wh0_distance_digamma(double alpha) {
  const double b = 1.0 - alpha;
  const double c = b / alpha;
  const double shifted =
      0.5 * (boost::math::digamma((c + 2.0) / 2.0) - boost::math::digamma((c + 1.0) / 2.0));
  const double from_one = (kLn2 - shifted) / b;
  return 1.0 + 2.0 * (from_one - 1.0);
}

}  // namespace

TEST_CASE("class parameter validity") {
  CHECK_NOTHROW(ClassSpec(ClassKind::ph0_alpha, 0.0));
  CHECK_THROWS_AS(ClassSpec(ClassKind::ph0_alpha, 1.0), DomainError);
  CHECK_THROWS_AS(ClassSpec(ClassKind::ph0_alpha, -0.1), DomainError);
  CHECK_THROWS_AS(ClassSpec(ClassKind::wh0_alpha, 1.0), DomainError);
  CHECK_THROWS_AS(ClassSpec(ClassKind::ph0_m, 0.0), DomainError);
  CHECK_THROWS_AS(ClassSpec(ClassKind::ph0_m, max_class_m()), DomainError);
  CHECK_NOTHROW(ClassSpec(ClassKind::ph0_m, 1.29));
  CHECK_THROWS_AS(ClassSpec(ClassKind::ph0_alpha, std::nan("")), DomainError);
  CHECK(std::abs(max_class_m() - 1.0 / (2.0 * (std::log(4.0) - 1.0))) < 1e-15);
}

TEST_CASE("class names round-trip") {
  for (auto k : {ClassKind::ph0_alpha, ClassKind::ph0_m, ClassKind::wh0_alpha}) {
    CHECK(parse_class_kind(to_string(k)) == k);
  }
  CHECK_FALSE(parse_class_kind("ph0").has_value());
}

TEST_CASE("coeff_bound") {
  CHECK(coeff_bound({ClassKind::ph0_alpha, 0.5}, 2) == doctest::Approx(0.5));
  CHECK(coeff_bound({ClassKind::ph0_m, 0.25}, 2) == doctest::Approx(0.25));
  for (int n = 2; n < 50; ++n) {
    CHECK(coeff_bound({ClassKind::wh0_alpha, 0.0}, n) ==
          doctest::Approx(coeff_bound({ClassKind::ph0_alpha, 0.0}, n)).epsilon(1e-15));
    CHECK(coeff_bound({ClassKind::wh0_alpha, 0.0}, n) == doctest::Approx(2.0 / n));
  }
  CHECK_THROWS_AS(coeff_bound({ClassKind::ph0_alpha, 0.5}, 1), DomainError);
}

TEST_CASE("coeff_bound is strictly decreasing in n") {
  for (const auto& spec : kSpecs) {
    for (int n = 2; n < 500; ++n) {
      CHECK(coeff_bound(spec, n + 1) < coeff_bound(spec, n));
      CHECK(coeff_bound(spec, n) > 0.0);
    }
  }
}

TEST_CASE("growth_upper") {
  for (const auto& spec : kSpecs) CHECK(growth_upper(spec, 0.0) == 0.0);
  CHECK(growth_upper({ClassKind::ph0_alpha, 0.0}, 0.5) ==
        doctest::Approx(2.0 * kLn2 - 0.5).epsilon(1e-15));
  CHECK(std::abs(growth_upper({ClassKind::wh0_alpha, 0.0}, 0.5) -
                 growth_upper({ClassKind::ph0_alpha, 0.0}, 0.5)) < 1e-10);
  // mpmath reference.
  CHECK(std::abs(growth_upper({ClassKind::wh0_alpha, 0.4}, 0.7) - 1.2864261179829283627) < 1e-13);
  CHECK_THROWS_AS(growth_upper({ClassKind::ph0_alpha, 0.0}, 1.0), DomainError);
  CHECK_THROWS_AS(growth_upper({ClassKind::ph0_alpha, 0.0}, -0.1), DomainError);
}

TEST_CASE("growth_upper matches brute-force summation of the coefficient bounds") {
  for (const auto& spec : kSpecs) {
    for (int i = 1; i <= 9; ++i) {
      const double r = 0.1 * i;
      // 4000 terms: geometric remainder below 0.9^4000 ~ 1e-183.
      const long double brute =
          r + oracle::power_sum([&](int n) { return (long double)coeff_bound(spec, n); }, r, 2, 4000);
      CHECK(std::abs(growth_upper(spec, r) - static_cast<double>(brute)) < 1e-13);
      CHECK(growth_upper(spec, r) >= r);
    }
  }
}

TEST_CASE("linear and squared tails match brute force") {
  for (const auto& spec : kSpecs) {
    for (int from : {2, 3, 5, 9}) {
      for (double r : {0.05, 0.3, 0.6, 0.85}) {
        const long double lin =
            oracle::power_sum([&](int n) { return (long double)coeff_bound(spec, n); }, r, from, 4000);
        const long double sq = oracle::power_sum(
            [&](int n) {
              const long double c = coeff_bound(spec, n);
              return c * c;
            },
            (long double)r * r, from, 4000);
        CHECK(std::abs(linear_tail(spec, from, r) - static_cast<double>(lin)) < 1e-13);
        CHECK(std::abs(squared_tail(spec, from, r) - static_cast<double>(sq)) < 1e-13);
      }
    }
  }
  CHECK_THROWS_AS(linear_tail(kSpecs[0], 1, 0.5), DomainError);
}

TEST_CASE("distance_lower_bound") {
  CHECK(distance_lower_bound({ClassKind::ph0_alpha, 0.0}) ==
        doctest::Approx(2.0 * kLn2 - 1.0).epsilon(1e-15));
  CHECK(std::abs(distance_lower_bound({ClassKind::ph0_alpha, 1.0 - 1e-12}) - 1.0) < 1e-11);
  CHECK(std::abs(distance_lower_bound({ClassKind::wh0_alpha, 0.0}) - (2.0 * kLn2 - 1.0)) < 1e-12);
  CHECK(distance_lower_bound({ClassKind::ph0_m, 0.25}) ==
        doctest::Approx(1.0 + 0.5 * (1.0 - 2.0 * kLn2)).epsilon(1e-15));
  // mpmath references.
  CHECK(std::abs(distance_lower_bound({ClassKind::wh0_alpha, 0.4}) - 0.5189472903279400784) < 1e-13);
  CHECK(std::abs(distance_lower_bound({ClassKind::wh0_alpha, 0.8}) - 0.61039129919589459713) < 1e-13);
  for (const auto& spec : kSpecs) CHECK(distance_lower_bound(spec) > 0.0);
}

TEST_CASE("wh0-alpha distance agrees with a digamma closed form") {
  for (double alpha : {0.05, 0.2, 0.4, 0.6, 0.8, 0.95}) {
    CHECK(std::abs(distance_lower_bound({ClassKind::wh0_alpha, alpha}) -
                   wh0_distance_digamma(alpha)) < 1e-12);
  }
}

TEST_CASE("distance is 1 + the alternating coefficient series") {
  // Averaging consecutive partial sums of an alternating series with convex
  // decreasing terms leaves an error below the next term difference.
  for (const auto& spec : kSpecs) {
    long double s = 0.0L;
    long double prev = 0.0L;
    const int K = 2000000;
    for (int n = 2; n <= K; ++n) {
      prev = s;
      const long double c = coeff_bound(spec, n);
      s += (n % 2 == 0 ? -c : c);
    }
    const double averaged = static_cast<double>(1.0L + 0.5L * (s + prev));
    CHECK(std::abs(distance_lower_bound(spec) - averaged) < 1e-10);
  }
}

TEST_CASE("extremal_sequence") {
  const auto seq = extremal_sequence({ClassKind::ph0_alpha, 0.5}, 3);
  REQUIRE(seq.n_max() == 3);
  CHECK(seq.at(1).a_mag == 1.0);
  CHECK(seq.at(1).b_mag == 0.0);
  CHECK(seq.at(2).a_mag == doctest::Approx(0.5));
  CHECK(seq.at(3).a_mag == doctest::Approx(1.0 / 3.0));

  const auto m = extremal_sequence({ClassKind::ph0_m, 0.2}, 2);
  CHECK(m.at(2).a_mag == doctest::Approx(0.2));
  CHECK(extremal_sequence({ClassKind::wh0_alpha, 0.3}, 1).n_max() == 1);

  for (const auto& spec : kSpecs) {
    const auto e = extremal_sequence(spec, 64);
    CHECK(e.admissible_for(spec));
    for (int n = 2; n <= 64; ++n) CHECK(e.sum_at(n) == coeff_bound(spec, n));
  }
  CHECK_THROWS_AS(extremal_sequence(kSpecs[0], 0), DomainError);
}

TEST_CASE("coefficient sequences must be normalized") {
  CHECK_THROWS_AS(CoefficientSequence({}), DomainError);
  CHECK_THROWS_AS(CoefficientSequence({{0.5, 0.0}}), DomainError);
  CHECK_THROWS_AS(CoefficientSequence({{1.0, 0.1}}), DomainError);
  CHECK_THROWS_AS(CoefficientSequence({{1.0, 0.0}, {-0.1, 0.0}}), DomainError);
  const CoefficientSequence over({{1.0, 0.0}, {0.6, 0.0}});
  CHECK_FALSE(over.admissible_for({ClassKind::ph0_alpha, 0.5}));
}

TEST_CASE("wh0-alpha tails near r = 1 match long-double brute force") {
  // Covers both sides of the switch to the asymptotic tail evaluation.
  for (double alpha : {1e-4, 0.05, 0.4, 0.8, 0.999}) {
    const ClassSpec spec(ClassKind::wh0_alpha, alpha);
    auto c = [alpha](int n) {
      return 2.0L / (alpha * static_cast<long double>(n) * n + (1.0 - alpha) * n);
    };
    for (int from : {2, 9, 300}) {
      for (double r : {0.98999999, 0.99000001, 0.9999}) {
        // 60/(1-r) terms leave a geometric remainder below e^-60.
        const int K = static_cast<int>(60.0 / (1.0 - r)) + 1000;
        const long double lin = oracle::power_sum(c, r, from, K);
        const long double sq =
            oracle::power_sum([&](int n) { return c(n) * c(n); }, (long double)r * r, from, K);
        CHECK(std::abs(linear_tail(spec, from, r) - static_cast<double>(lin)) < 1e-13);
        CHECK(std::abs(squared_tail(spec, from, r) - static_cast<double>(sq)) < 1e-13);
      }
    }
  }
}
