#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "bohr/radius.hpp"
#include "oracles.hpp"

using namespace bohr;

namespace {
constexpr double kLn2 = std::numbers::ln2;
}

TEST_CASE("bisect keeps the sign invariant") {
  auto f = [](double x) { return x * x - 2.0; };
  const Bracket b = bisect(f, 0.0, 2.0, 1e-14);
  CHECK(f(b.lo) < 0.0);
  CHECK(f(b.hi) >= 0.0);
  CHECK(b.hi - b.lo <= 2e-14);
  CHECK(std::abs(b.mid() - std::sqrt(2.0)) <= 1e-14);
  CHECK_THROWS_AS(bisect(f, 2.0, 3.0, 1e-10), NoSignChange);
  CHECK_THROWS_AS(bisect(f, 1.0, 2.0, 0.0), DomainError);
}

TEST_CASE("solve_radius for ph0-alpha(0), m = N = 1, mu = lambda = 0") {
  const ClassSpec spec(ClassKind::ph0_alpha, 0.0);
  const RadiusResult res = solve_radius(spec, FunctionalParams(1, 1, 0, 0), Convention::exact_a1, 1e-12);
  // Independent route: fine-grid sign scan + bisection on 2 F_0(r) = 2 ln 2 - 1.
  const double scanned = oracle::scan_root(
      [](double r) { return 2.0 * (r - 2.0 * (r + std::log(1.0 - r))) - (2.0 * kLn2 - 1.0); }, 0.0,
      0.99);
  CHECK(res.radius > 0.16);
  CHECK(res.radius < 0.17);
  CHECK(std::abs(res.radius - scanned) <= 1e-12);
  CHECK(std::abs(res.radius - 0.16320489849045785713) <= 1e-12);
  CHECK(res.bracket_hi - res.bracket_lo <= 2e-12);
  CHECK(res.d == doctest::Approx(2.0 * kLn2 - 1.0));
  CHECK(res.residual < 1e-11);
}

TEST_CASE("solve_radius matches high-precision references") {
  struct Case {
    ClassSpec spec;
    FunctionalParams params;
    double expected;
  };
  // mpmath brute-force series + findroot (tests/oracle/freeze_values.py).
  const std::vector<Case> cases = {
      {{ClassKind::ph0_alpha, 0.3}, {1, 5, 1, 1}, 0.39312920129326678641},
      {{ClassKind::ph0_m, 0.6}, {2, 6, 1, 1}, 0.50737869281946736623},
      {{ClassKind::wh0_alpha, 0.5}, {1, 5, 1, 1}, 0.39189888270075600184},
      {{ClassKind::wh0_alpha, 0.4}, {2, 3, 1, 0}, 0.423631706750808206},
  };
  for (const auto& c : cases) {
    const RadiusResult res = solve_radius(c.spec, c.params, Convention::exact_a1, 1e-12);
    CHECK(std::abs(res.radius - c.expected) <= 1e-12);
    CHECK(phi(c.spec, c.params, Convention::exact_a1, res.bracket_lo) < 0.0);
    CHECK(phi(c.spec, c.params, Convention::exact_a1, res.bracket_hi) >= 0.0);
  }
}

TEST_CASE("alpha -> 1 leaves only the linear term: radius -> 1/2") {
  const RadiusResult res = solve_radius({ClassKind::ph0_alpha, 1.0 - 1e-9},
                                        FunctionalParams(1, 1, 0, 0), Convention::exact_a1, 1e-12);
  CHECK(std::abs(res.radius - 0.5) < 1e-6);
}

TEST_CASE("wh0-alpha(0) radius equals ph0-alpha(0) radius") {
  for (int m : {1, 2}) {
    for (int N : {1, 2, 4, 7}) {
      for (double mu : {0.0, 1.0}) {
        const FunctionalParams params(m, N, mu, 1.0 - mu);
        const double a = solve_radius({ClassKind::ph0_alpha, 0.0}, params).radius;
        const double b = solve_radius({ClassKind::wh0_alpha, 0.0}, params).radius;
        CHECK(std::abs(a - b) < 1e-9);
      }
    }
  }
}

TEST_CASE("root identity and refinement stability") {
  const ClassSpec specs[] = {{ClassKind::ph0_alpha, 0.4}, {ClassKind::ph0_m, 1.2},
                             {ClassKind::wh0_alpha, 0.8}};
  for (const auto& spec : specs) {
    for (int N : {1, 4, 8}) {
      const FunctionalParams params(2, N, 1, 1);
      const double tol = 1e-9;
      const RadiusResult coarse = solve_radius(spec, params, Convention::exact_a1, tol);
      const RadiusResult fine = solve_radius(spec, params, Convention::exact_a1, tol / 100.0);
      const double lo = phi(spec, params, Convention::exact_a1, coarse.bracket_lo);
      const double hi = phi(spec, params, Convention::exact_a1, coarse.bracket_hi);
      CHECK(coarse.residual <= std::abs(hi - lo));
      CHECK(std::abs(fine.radius - coarse.radius) <= tol);
    }
  }
}

TEST_CASE("radius is non-increasing in mu and lambda") {
  const ClassSpec specs[] = {{ClassKind::ph0_alpha, 0.0}, {ClassKind::ph0_m, 0.6},
                             {ClassKind::wh0_alpha, 0.4}};
  for (const auto& spec : specs) {
    for (int N : {3, 5, 8}) {
      double prev_mu = 1.0;
      for (double mu : {0.0, 0.5, 1.0, 4.0}) {
        const double r = solve_radius(spec, FunctionalParams(1, N, mu, 0.5)).radius;
        CHECK(r <= prev_mu + 1e-12);
        prev_mu = r;
      }
      double prev_lambda = 1.0;
      for (double lambda : {0.0, 0.5, 1.0, 4.0}) {
        const double r = solve_radius(spec, FunctionalParams(2, N, 0.5, lambda)).radius;
        CHECK(r <= prev_lambda + 1e-12);
        prev_lambda = r;
      }
    }
  }
}

TEST_CASE("radius is non-decreasing in N when mu = lambda = 0") {
  const ClassSpec specs[] = {{ClassKind::ph0_alpha, 0.4}, {ClassKind::ph0_m, 0.2},
                             {ClassKind::wh0_alpha, 0.0}};
  for (const auto& spec : specs) {
    for (int m : {1, 2}) {
      double prev = 0.0;
      for (int N = 1; N <= 8; ++N) {
        const double r = solve_radius(spec, FunctionalParams(m, N, 0, 0)).radius;
        CHECK(r >= prev - 1e-12);
        prev = r;
      }
    }
  }
}

TEST_CASE("solve_radius is deterministic") {
  const ClassSpec spec(ClassKind::wh0_alpha, 0.4);
  const FunctionalParams params(2, 6, 1, 1);
  CHECK(solve_radius(spec, params) == solve_radius(spec, params));
}

TEST_CASE("solve_radius argument checks") {
  const ClassSpec spec(ClassKind::ph0_alpha, 0.2);
  CHECK_THROWS_AS(solve_radius(spec, FunctionalParams(1, 1, 0, 0), Convention::exact_a1, 0.0),
                  DomainError);
  CHECK_THROWS_AS(solve_radius(spec, FunctionalParams(1, 1, 0, 0), Convention::exact_a1, 0.01),
                  DomainError);
  CHECK_THROWS_AS(solve_radius({ClassKind::ph0_m, 0.3}, FunctionalParams(1, 5, 0, 0),
                               Convention::paper_literal),
                  ConventionError);
  CHECK_NOTHROW(solve_radius(spec, FunctionalParams(1, 5, 1, 1), Convention::exact_a1, 1e-10, 64));
}

TEST_CASE("audit_monotone") {
  CHECK(audit_monotone({ClassKind::ph0_alpha, 0.3}, FunctionalParams(1, 5, 1, 1),
                       Convention::exact_a1, 64));
  CHECK(audit_monotone({ClassKind::ph0_m, 0.2}, FunctionalParams(2, 6, 1, 1),
                       Convention::exact_a1, 64));
  CHECK(audit_monotone({ClassKind::wh0_alpha, 0.8}, FunctionalParams(2, 8, 0, 1),
                       Convention::exact_a1, 16));
  CHECK_THROWS_AS(audit_monotone({ClassKind::ph0_alpha, 0.3}, FunctionalParams(1, 5, 1, 1),
                                 Convention::exact_a1, 2),
                  DomainError);
}
