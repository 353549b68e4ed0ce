#include "bohr/radius.hpp"

#include <cmath>
#include <string>

namespace bohr {

RadiusResult solve_radius(const ClassSpec& spec, const FunctionalParams& params,
                          Convention conv, double tol, int audit_grid) {
  if (!(tol > 0.0) || tol > 1e-3) throw DomainError("tol must lie in (0, 1e-3]");
  require_convention(spec, params, conv);
  if (audit_grid > 0 && !audit_monotone(spec, params, conv, audit_grid)) {
    throw NonMonotoneDetected("phi is not increasing on the audit grid");
  }

  auto f = [&](double r) { return phi(spec, params, conv, r); };
  if (!(f(0.0) < 0.0)) {
    throw InvalidProblem("phi(0) >= 0: no positive radius exists for this configuration");
  }

  // Expand the upper end toward 1 until phi changes sign.
  double lo = 0.0;
  double hi = 0.5;
  while (f(hi) < 0.0) {
    lo = hi;
    if (hi >= kRadiusCap) {
      throw NoSignChange("phi is still negative at r = 1 - 1e-12");
    }
    hi = std::min(1.0 - 0.5 * (1.0 - hi), kRadiusCap);
  }

  const Bracket b = bisect(f, lo, hi, tol);
  RadiusResult out;
  out.radius = b.mid();
  out.bracket_lo = b.lo;
  out.bracket_hi = b.hi;
  out.iterations = b.iterations;
  out.residual = std::abs(f(out.radius));
  out.d = distance_lower_bound(spec);
  return out;
}

bool audit_monotone(const ClassSpec& spec, const FunctionalParams& params, Convention conv,
                    int grid_size) {
  if (grid_size < 16) throw DomainError("audit_monotone: grid_size must be >= 16");
  const double top = 1.0 - 1e-6;
  double previous = phi(spec, params, conv, 0.0);
  for (int i = 1; i <= grid_size; ++i) {
    const double r = top * static_cast<double>(i) / static_cast<double>(grid_size);
    const double value = phi(spec, params, conv, r);
    if (!(value > previous)) return false;
    previous = value;
  }
  return true;
}

}  // namespace bohr
