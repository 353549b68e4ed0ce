// Closed forms for N = 1..4, where t = floor((N-1)/2) is 0 or 1.
//
// These are written out term by term, independently of phi(), so that the
// two evaluations can be checked against each other.

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bohr/errors.hpp"
#include "bohr/functional.hpp"
#include "bohr/specfun.hpp"

namespace bohr {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kTol = 1e-16;

double corollary_ph0_alpha(double alpha, int m, int N, double mu, double lambda, double r) {
  const double k = 2.0 * (1.0 - alpha);
  const double x = r * r;
  const double weight = 1.0 + r / (1.0 - r);
  const double F = r - k * (r + std::log1p(-r));
  const double J1 = x + k * k * (li2(x) - x);
  const double J2 = std::pow(F, m) - 1.0 - k * (kLn2 - 1.0);
  const double J3 = r + std::log1p(-r);
  switch (N) {
    case 1:
      return r - k * J3 + J2 + lambda * weight * J1;
    case 2:
      return -k * J3 + J2 + lambda * weight * J1;
    case 3:
      return -k * (J3 + x / 2.0) + J2 + mu * r * x / (1.0 - r) + lambda * weight * (J1 - x);
    case 4:
      return -k * (J3 + x / 2.0 + r * x / 3.0) + J2 + mu * x * x / (1.0 - r) +
             lambda * weight * (J1 - x);
  }
  return 0.0;
}

double corollary_ph0_m(double M, int m, int N, double mu, double lambda, double r) {
  const double k = 2.0 * M;
  const double x = r * r;
  const double weight = 1.0 + r / (1.0 - r);
  const double L3 = r + (1.0 - r) * std::log1p(-r);
  const double G = r + k * L3;
  const double L1 = x + k * k * ((x + 1.0) * li2(x) + 2.0 * (x - 1.0) * std::log1p(-x) - 3.0 * x);
  const double L2 = std::pow(G, m) - 1.0 - k * (1.0 - 2.0 * kLn2);
  switch (N) {
    case 1:
      return r + k * L3 + L2 + lambda * weight * L1;
    case 2:
      return k * L3 + L2 + lambda * weight * L1;
    case 3:
      return k * (L3 - x / 2.0) + L2 + mu * r * x / (1.0 - r) + lambda * weight * (L1 - x);
    case 4:
      return k * (L3 - x / 2.0 - r * x / 6.0) + L2 + mu * x * x / (1.0 - r) +
             lambda * weight * (L1 - x);
  }
  return 0.0;
}

double corollary_wh0_alpha(double alpha, int m, int N, double mu, double lambda, double r) {
  auto c = [alpha](std::int64_t n) {
    const double dn = static_cast<double>(n);
    return 2.0 / (alpha * dn * dn + (1.0 - alpha) * dn);
  };
  const double x = r * r;
  const double weight = 1.0 + r / (1.0 - r);
  const double growth = r + (r > 0.0 ? sum_geometric_tail(c, r, 2, kTol).value : 0.0);
  // n = 1 terms take the normalized value a_1 = 1.
  const double tail_from_N =
      (r > 0.0 ? sum_geometric_tail(c, r, std::max(N, 2), kTol).value : 0.0) +
      (N == 1 ? r : 0.0);
  const double alternating =
      sum_alternating([&](std::int64_t n) { return (n % 2 == 0 ? -1.0 : 1.0) * c(n); }, 2,
                      kTol)
          .value;
  const double C = std::pow(growth, m) + tail_from_N - 1.0 - alternating;
  const double squares_from_2 =
      x > 0.0 ? sum_geometric_tail([&](std::int64_t n) { return c(n) * c(n); }, x, 2, kTol).value
              : 0.0;
  switch (N) {
    case 1:
    case 2:
      return C + lambda * weight * (x + squares_from_2);
    case 3:
      return C + mu * r * x / (1.0 - r) + lambda * weight * squares_from_2;
    case 4:
      return C + mu * x * x / (1.0 - r) + lambda * weight * squares_from_2;
  }
  return 0.0;
}

}  // namespace

double phi_corollary(const ClassSpec& spec, const FunctionalParams& params, double r) {
  const int N = params.N();
  if (N < 1 || N > 4) throw DomainError("phi_corollary covers N = 1..4 only");
  if (!(r >= 0.0) || !(r < 1.0)) throw DomainError("phi_corollary: r must lie in [0, 1)");
  const double p = spec.param();
  switch (spec.kind()) {
    case ClassKind::ph0_alpha:
      return corollary_ph0_alpha(p, params.m(), N, params.mu(), params.lambda(), r);
    case ClassKind::ph0_m:
      return corollary_ph0_m(p, params.m(), N, params.mu(), params.lambda(), r);
    case ClassKind::wh0_alpha:
      return corollary_wh0_alpha(p, params.m(), N, params.mu(), params.lambda(), r);
  }
  return 0.0;
}

}  // namespace bohr
