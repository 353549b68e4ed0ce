#include "bohr/functional.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bohr/errors.hpp"

namespace bohr {

namespace {

void require_radius(double r) {
  if (!(r >= 0.0) || !(r < 1.0)) {
    throw DomainError("r must satisfy 0 <= r < 1 (r^N/(1-r) diverges at 1), got " +
                      std::to_string(r));
  }
}

// Value used for |a_1| + |b_1| in the majorant.
double first_coefficient(const ClassSpec& spec, Convention conv) {
  if (conv == Convention::exact_a1) return 1.0;
  switch (spec.kind()) {
    case ClassKind::ph0_alpha:
      return 2.0 * (1.0 - spec.param());
    case ClassKind::wh0_alpha:
      return 2.0;
    case ClassKind::ph0_m:
      // The printed sums for this class start at n = 2.
      return 0.0;
  }
  return 1.0;
}

}  // namespace

FunctionalParams::FunctionalParams(int m, int N, double mu, double lambda)
    : m_(m), N_(N), mu_(mu), lambda_(lambda) {
  if (m < 1) throw DomainError("m must be >= 1");
  if (N < 1) throw DomainError("N must be >= 1");
  if (!(mu >= 0.0) || !std::isfinite(mu)) throw DomainError("mu must be finite and >= 0");
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw DomainError("lambda must be finite and >= 0");
  }
}

std::string_view to_string(Convention conv) {
  return conv == Convention::exact_a1 ? "exact-a1" : "paper-literal";
}

std::optional<Convention> parse_convention(std::string_view text) {
  if (text == "exact-a1") return Convention::exact_a1;
  if (text == "paper-literal") return Convention::paper_literal;
  return std::nullopt;
}

void require_convention(const ClassSpec& spec, const FunctionalParams& params, Convention conv) {
  if (conv == Convention::paper_literal && spec.kind() == ClassKind::ph0_m && params.t() >= 1) {
    throw ConventionError(
        "paper-literal convention is undefined for ph0-m with t >= 1 (N >= 3): the mu-sum "
        "term 1/(n^2 (n-1)^2) is singular at n = 1");
  }
}

double eval_S(const CoefficientSequence& seq, const FunctionalParams& params, double r,
              double modulus) {
  require_radius(r);
  if (!(modulus >= 0.0)) throw DomainError("modulus must be >= 0");
  const std::int64_t n_max = seq.n_max();
  const int N = params.N();
  const int t = params.t();
  const double inv_gap = 1.0 / (1.0 - r);

  CompensatedSum linear;
  double p = 1.0;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    p *= r;
    if (n >= N) linear.add(seq.sum_at(n) * p);
  }

  double refinement = 0.0;
  if (t >= 1 && params.mu() != 0.0) {
    CompensatedSum head;
    for (std::int64_t n = 1; n <= std::min<std::int64_t>(t, n_max); ++n) {
      head.add(seq.sum_at(n) * seq.sum_at(n));
    }
    refinement += params.mu() * head.value() * std::pow(r, N) * inv_gap;
  }
  if (params.lambda() != 0.0) {
    CompensatedSum squares;
    const double x = r * r;
    double q = std::pow(x, t);
    for (std::int64_t n = t + 1; n <= n_max; ++n) {
      q *= x;
      squares.add(seq.sum_at(n) * seq.sum_at(n) * q);
    }
    refinement += params.lambda() * inv_gap * squares.value();
  }
  return std::pow(modulus, params.m()) + linear.value() + refinement;
}

TailBound eval_S_bounded(const CoefficientSequence& seq, const FunctionalParams& params,
                         double r, double modulus, const ClassSpec& envelope) {
  const double value = eval_S(seq, params, r, modulus);
  const std::int64_t n_max = seq.n_max();
  const int N = params.N();
  const int t = params.t();
  const double inv_gap = 1.0 / (1.0 - r);

  double tail = linear_tail(envelope, std::max<std::int64_t>({n_max + 1, N, 2}), r);
  if (t >= 1 && n_max < t) {
    double missing = 0.0;
    for (std::int64_t n = n_max + 1; n <= t; ++n) {
      const double c = coeff_bound(envelope, n);
      missing += c * c;
    }
    tail += params.mu() * missing * std::pow(r, N) * inv_gap;
  }
  tail += params.lambda() * inv_gap *
          squared_tail(envelope, std::max<std::int64_t>({n_max + 1, t + 1, 2}), r);
  // The envelope remainder is exact in real arithmetic; cover the rounding.
  tail += 64.0 * std::numeric_limits<double>::epsilon() * (std::abs(value) + tail);
  return {value, tail, n_max, true};
}

double phi(const ClassSpec& spec, const FunctionalParams& params, Convention conv, double r) {
  require_convention(spec, params, conv);
  require_radius(r);
  const int N = params.N();
  const int t = params.t();
  const double a1 = first_coefficient(spec, conv);
  const double inv_gap = 1.0 / (1.0 - r);

  const double modulus = growth_upper(spec, r);
  double linear = linear_tail(spec, std::max(N, 2), r);
  if (N == 1) linear += a1 * r;

  double mu_term = 0.0;
  if (t >= 1) {
    mu_term = (a1 * a1 + squared_head(spec, t)) * std::pow(r, N) * inv_gap;
  }

  double lambda_sum = squared_tail(spec, std::max(t + 1, 2), r);
  if (t == 0) lambda_sum += a1 * a1 * r * r;

  return std::pow(modulus, params.m()) + linear + params.mu() * mu_term +
         params.lambda() * inv_gap * lambda_sum - distance_lower_bound(spec);
}

}  // namespace bohr
