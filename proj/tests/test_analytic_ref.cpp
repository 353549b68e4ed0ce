#include <doctest.h>

#include <cmath>

#include "bohr/analytic_ref.hpp"
#include "bohr/errors.hpp"
#include "oracles.hpp"

using namespace bohr;

TEST_CASE("R_N") {
  CHECK(std::abs(rogosinski_RN(1) - (std::sqrt(5.0) - 2.0)) < 1e-13);
  const double r2 = rogosinski_RN(2);
  const double scanned =
      oracle::scan_root([](double r) { return 2 * r * r * r + r * r + 2 * r - 1; }, 0.0, 1.0);
  CHECK(r2 > 0.37);
  CHECK(r2 < 0.38);
  CHECK(std::abs(r2 - scanned) < 1e-13);
  CHECK(std::abs(r2 - 0.37608588944209327203) < 1e-13);
  double prev = 0.0;
  for (int N = 1; N <= 200; ++N) {
    const double r = rogosinski_RN(N);
    CHECK(r > prev);
    prev = r;
  }
  CHECK(prev > 0.95);
  CHECK_THROWS_AS(rogosinski_RN(0), DomainError);
}

TEST_CASE("R'_N") {
  CHECK(std::abs(rogosinski_RN_prime(1) - 1.0 / 3.0) < 1e-13);
  CHECK(std::abs(rogosinski_RN_prime_equation(1, 1.0 / 3.0)) < 1e-15);
  const double r2 = rogosinski_RN_prime(2);
  CHECK(r2 > 0.43);
  CHECK(r2 < 0.47);
  CHECK(std::abs(r2 - 0.45339765151640376764) < 1e-13);
  for (int N = 1; N <= 30; ++N) CHECK(rogosinski_RN(N) < rogosinski_RN_prime(N));
}

TEST_CASE("r_a0 closed form") {
  CHECK(refined_r_a0(0.0) == doctest::Approx(2.0 / (3.0 + std::sqrt(5.0))));
  CHECK(refined_r_a0(0.5) == doctest::Approx(2.0 / (3.5 + 1.5 * std::sqrt(5.0))));
  CHECK(refined_r_a0(1.0 - 1e-12) == doctest::Approx(std::sqrt(5.0) - 2.0));
  for (int i = 0; i < 100; ++i) {
    CHECK(refined_r_a0(0.99 * i / 99.0) > std::sqrt(5.0) - 2.0);
  }
  CHECK_THROWS_AS(refined_r_a0(1.0), DomainError);
  CHECK_THROWS_AS(refined_r_a0(-0.1), DomainError);
}

TEST_CASE("r'_a0 cubic root") {
  CHECK(refined_r_a0_prime_equation(0.0, 1.0 / 3.0) == doctest::Approx(7.0 / 27.0));
  CHECK(refined_r_a0_prime_equation(0.0, 0.5) == doctest::Approx(-1.0 / 8.0));
  const double r0 = refined_r_a0_prime(0.0);
  CHECK(r0 > 1.0 / 3.0);
  CHECK(r0 < 0.5);
  CHECK(std::abs(r0 - 0.44504186791262880858) < 1e-13);
  const double r9 = refined_r_a0_prime(0.9);
  CHECK(r9 > 1.0 / 3.0);
  CHECK(r9 < 1.0 / 2.9);
  CHECK(std::abs(r9 - 0.34182753955735007838) < 1e-13);
  for (int i = 0; i < 100; ++i) {
    const double a0 = 0.99 * i / 99.0;
    const double r = refined_r_a0_prime(a0);
    CHECK(r > 1.0 / 3.0);
    CHECK(r < 1.0 / (2.0 + a0));
    CHECK(std::abs(refined_r_a0_prime_equation(a0, r)) < 1e-12);
  }
}

TEST_CASE("variant names") {
  for (auto v : {AnalyticVariant::r_n, AnalyticVariant::r_n_prime, AnalyticVariant::r_a0,
                 AnalyticVariant::r_a0_prime}) {
    CHECK(parse_analytic_variant(to_string(v)) == v);
  }
  CHECK_FALSE(parse_analytic_variant("R_N").has_value());
}
