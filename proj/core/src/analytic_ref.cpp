#include "bohr/analytic_ref.hpp"

#include <cmath>
#include <string>

#include "bohr/errors.hpp"
#include "bohr/radius.hpp"

namespace bohr {

namespace {

void require_N(int N) {
  if (N < 1) throw DomainError("N must be >= 1");
}

void require_a0(double a0) {
  if (!(a0 >= 0.0) || !(a0 < 1.0)) {
    throw DomainError("a0 must satisfy 0 <= a0 < 1, got " + std::to_string(a0));
  }
}

}  // namespace

std::string_view to_string(AnalyticVariant v) {
  switch (v) {
    case AnalyticVariant::r_n:
      return "rn";
    case AnalyticVariant::r_n_prime:
      return "rn-prime";
    case AnalyticVariant::r_a0:
      return "ra0";
    case AnalyticVariant::r_a0_prime:
      return "ra0-prime";
  }
  return "unknown";
}

std::optional<AnalyticVariant> parse_analytic_variant(std::string_view text) {
  if (text == "rn") return AnalyticVariant::r_n;
  if (text == "rn-prime") return AnalyticVariant::r_n_prime;
  if (text == "ra0") return AnalyticVariant::r_a0;
  if (text == "ra0-prime") return AnalyticVariant::r_a0_prime;
  return std::nullopt;
}

double rogosinski_RN_equation(int N, double r) {
  return 2.0 * (1.0 + r) * std::pow(r, N) - (1.0 - r) * (1.0 - r);
}

double rogosinski_RN_prime_equation(int N, double r) {
  return (1.0 + r) * std::pow(r, N) - (1.0 - r) * (1.0 - r);
}

double refined_r_a0_prime_equation(double a0, double r) {
  return (1.0 - a0 * a0 * a0) * r * r * r - (1.0 + 2.0 * a0) * r * r - 2.0 * r + 1.0;
}

double rogosinski_RN(int N, double tol) {
  require_N(N);
  // -1 at r = 0, 4 at r = 1.
  return bisect([N](double r) { return rogosinski_RN_equation(N, r); }, 0.0, 1.0, tol).mid();
}

double rogosinski_RN_prime(int N, double tol) {
  require_N(N);
  return bisect([N](double r) { return rogosinski_RN_prime_equation(N, r); }, 0.0, 1.0, tol)
      .mid();
}

double refined_r_a0(double a0) {
  require_a0(a0);
  return 2.0 / (3.0 + a0 + std::sqrt(5.0) * (1.0 + a0));
}

double refined_r_a0_prime(double a0, double tol) {
  require_a0(a0);
  // The cubic is decreasing through its root; bisect its negation.
  auto g = [a0](double r) { return -refined_r_a0_prime_equation(a0, r); };
  const double lo = 1.0 / 3.0;
  const double hi = 1.0 / (2.0 + a0);
  if (!(g(lo) < 0.0) || !(g(hi) >= 0.0)) {
    throw BracketFailure("no sign change of the r'_a0 cubic on (1/3, 1/(2+a0))");
  }
  return bisect(g, lo, hi, tol).mid();
}

}  // namespace bohr
