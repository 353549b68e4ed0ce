#pragma once

#include <cmath>
#include <string>

#include "bohr/classes.hpp"
#include "bohr/errors.hpp"
#include "bohr/functional.hpp"

namespace bohr {

inline constexpr int kMaxBisectionIterations = 200;
// Largest r probed when searching for the upper end of the bracket.
inline constexpr double kRadiusCap = 1.0 - 1e-12;

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  int iterations = 0;
  double mid() const { return 0.5 * (lo + hi); }
};

// Bisection for an increasing sign change: f(lo) < 0 <= f(hi) on entry and
// on exit, with hi - lo <= 2 tol (or the bracket has collapsed to adjacent
// doubles). Throws NoSignChange if the entry condition does not hold.
template <class F>
Bracket bisect(F&& f, double lo, double hi, double tol) {
  if (!(tol > 0.0)) throw DomainError("bisection tolerance must be positive");
  if (!(lo < hi)) throw DomainError("bisection needs lo < hi");
  if (!(f(lo) < 0.0) || !(f(hi) >= 0.0)) {
    throw NoSignChange("bisection bracket does not satisfy f(lo) < 0 <= f(hi)");
  }
  Bracket b{lo, hi, 0};
  while (b.hi - b.lo > 2.0 * tol && b.iterations < kMaxBisectionIterations) {
    const double mid = b.mid();
    if (mid <= b.lo || mid >= b.hi) break;
    if (f(mid) < 0.0) {
      b.lo = mid;
    } else {
      b.hi = mid;
    }
    ++b.iterations;
  }
  return b;
}

struct RadiusResult {
  double radius = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  int iterations = 0;
  // |phi(radius)|
  double residual = 0.0;
  // distance_lower_bound of the class, reported alongside for convenience.
  double d = 0.0;

  friend bool operator==(const RadiusResult&, const RadiusResult&) = default;
};

// Unique zero of phi in (0, 1), to within tol (0 < tol <= 1e-3).
// With audit_grid > 0 the monotonicity audit runs first and a failure
// raises NonMonotoneDetected.
RadiusResult solve_radius(const ClassSpec& spec, const FunctionalParams& params,
                          Convention conv = Convention::exact_a1, double tol = 1e-12,
                          int audit_grid = 0);

// True iff phi is strictly increasing along grid_size uniform points of
// (0, 1 - 1e-6]. grid_size must be >= 16.
bool audit_monotone(const ClassSpec& spec, const FunctionalParams& params, Convention conv,
                    int grid_size);

}  // namespace bohr
