#include "bohr/specfun.hpp"

#include <cmath>
#include <numbers>

namespace bohr {

namespace {

constexpr double kLi2Tol = 1e-17;
constexpr double kPi2Over6 = std::numbers::pi * std::numbers::pi / 6.0;

// x in [0, 1/2]: at most ~50 terms.
double li2_series(double x) {
  if (x == 0.0) return 0.0;
  return sum_geometric_tail(
             [](std::int64_t n) {
               const double dn = static_cast<double>(n);
               return 1.0 / (dn * dn);
             },
             x, 1, kLi2Tol)
      .value;
}

}  // namespace

double li2(double x) {
  if (std::isnan(x) || x < -1.0 || x > 1.0) {
    throw DomainError("li2: argument must lie in [-1, 1]");
  }
  if (x == 1.0) return kPi2Over6;
  if (x >= 0.0 && x <= 0.5) return li2_series(x);
  if (x > 0.5) {
    // Li2(x) + Li2(1-x) = pi^2/6 - ln(x) ln(1-x); 1-x is exact here.
    const double y = 1.0 - x;
    return kPi2Over6 - std::log1p(-y) * std::log(y) - li2_series(y);
  }
  const double ax = -x;
  return sum_alternating(
             [ax](std::int64_t n) {
               const double dn = static_cast<double>(n);
               const double mag = std::pow(ax, dn) / (dn * dn);
               return (n % 2 == 1) ? -mag : mag;
             },
             1, kLi2Tol)
      .value;
}

}  // namespace bohr
