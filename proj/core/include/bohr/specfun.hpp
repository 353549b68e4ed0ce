#pragma once

// Dilogarithm and tail-bounded series summation.
//
// Every infinite sum in the library goes through one of the summation
// routines below so that the value returned always carries a rigorous bound
// on the discarded tail.

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

#include "bohr/errors.hpp"

namespace bohr {

inline constexpr double kDefaultTol = 1e-12;
inline constexpr std::int64_t kMaxSeriesTerms = 400'000'000;

// A truncated sum together with a bound on what was left out.
//
// The exact infinite sum lies in [value - tail, value + tail]; when every
// term is nonnegative it lies in [value, value + tail].
struct TailBound {
  double value = 0.0;
  double tail = 0.0;
  std::int64_t terms_used = 0;
  bool nonnegative = false;

  double lower() const { return nonnegative ? value : value - tail; }
  double upper() const { return value + tail; }
  bool encloses(double x) const { return x >= lower() && x <= upper(); }
};

// Neumaier compensated accumulator.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

namespace detail {
inline void require_tol(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw DomainError("tolerance must be a positive finite number");
  }
}
}  // namespace detail

// Sums term(n) for n = start, start+1, ... and stops at the first K for which
// tail_after(K) <= tol, where tail_after(K) must bound |sum_{n>K} term(n)|.
template <class Term, class TailAfter>
TailBound sum_with_tail(Term&& term, TailAfter&& tail_after, std::int64_t start,
                        double tol = kDefaultTol) {
  detail::require_tol(tol);
  CompensatedSum acc;
  bool nonneg = true;
  for (std::int64_t n = start;; ++n) {
    const double x = term(n);
    nonneg = nonneg && x >= 0.0;
    acc.add(x);
    const double tail = tail_after(n);
    if (tail <= tol) {
      return {acc.value(), tail, n - start + 1, nonneg};
    }
    if (n - start >= kMaxSeriesTerms) {
      throw ConvergenceError("series did not reach tolerance within " +
                             std::to_string(kMaxSeriesTerms) + " terms");
    }
  }
}

// sum_{n >= start} coeff(n) * ratio^n.
//
// |coeff(n)| must be non-increasing for n >= start, so the discarded tail
// after K is at most |coeff(K+1)| ratio^(K+1) / (1 - ratio).
template <class Coeff>
TailBound sum_geometric_tail(Coeff&& coeff, double ratio, std::int64_t start,
                             double tol = kDefaultTol) {
  detail::require_tol(tol);
  if (!(ratio >= 0.0) || !(ratio < 1.0)) {
    throw ConvergenceError("geometric tail bound needs ratio in [0, 1), got " +
                           std::to_string(ratio));
  }
  const double inv_gap = 1.0 / (1.0 - ratio);
  double power = std::pow(ratio, static_cast<double>(start));
  double c = coeff(start);
  CompensatedSum acc;
  bool nonneg = true;
  for (std::int64_t n = start;; ++n) {
    const double x = c * power;
    nonneg = nonneg && x >= 0.0;
    acc.add(x);
    power *= ratio;
    c = coeff(n + 1);
    const double tail = std::abs(c) * power * inv_gap;
    if (tail <= tol) {
      return {acc.value(), tail, n - start + 1, nonneg};
    }
    if (n - start >= kMaxSeriesTerms) {
      throw ConvergenceError("geometric series did not reach tolerance");
    }
  }
}

// sum_{n >= start} term(n) for a strictly alternating series whose
// magnitudes |term(n)| are completely monotone in n (1/n, 1/n^2,
// 1/(n(an+b)), x^n/n^2 with |x| <= 1, ...).
//
// The remainder after a block of direct terms is estimated with the Euler
// transform: with b_j the remaining magnitudes and D^k the k-th forward
// difference, the remainder after p levels lies in [0, D^p b_0 / 2^p], so the
// centred estimate carries tail D^p b_0 / 2^(p+1). Level 0 is the classic
// "first omitted term" bound.
template <class Term>
TailBound sum_alternating(Term&& term, std::int64_t start, double tol = kDefaultTol) {
  detail::require_tol(tol);
  constexpr int kLevels = 12;
  constexpr double kEps = std::numeric_limits<double>::epsilon();

  CompensatedSum partial;
  std::int64_t next = start;
  std::int64_t block = 16;
  for (;;) {
    const double first = term(next);
    if (first == 0.0) {
      return {partial.value(), 0.0, next - start, false};
    }
    const double second = term(next + 1);
    if ((first > 0.0) == (second > 0.0) && second != 0.0) {
      throw DomainError("sum_alternating: terms do not alternate in sign");
    }
    const double sign = first > 0.0 ? 1.0 : -1.0;

    std::array<double, kLevels + 1> diff{};
    diff[0] = std::abs(first);
    diff[1] = std::abs(second);
    for (int j = 2; j <= kLevels; ++j) diff[j] = std::abs(term(next + j));

    const double b0 = diff[0];
    double running = 0.0;
    double scale = 0.5;
    double best_bound = std::numeric_limits<double>::infinity();
    double best_estimate = 0.0;
    for (int k = 0; k <= kLevels; ++k) {
      if (diff[0] < 0.0) break;
      running += diff[0] * scale;
      const double slack = static_cast<double>((k + 4) * (k + 4)) * kEps * b0;
      const double bound = diff[0] * scale + slack;
      if (bound < best_bound) {
        best_bound = bound;
        best_estimate = running;
      }
      for (int j = 0; j < kLevels - k; ++j) diff[j] -= diff[j + 1];
      scale *= 0.5;
    }
    if (best_bound <= tol) {
      return {partial.value() + sign * best_estimate, best_bound,
              next - start + kLevels + 1, false};
    }
    for (std::int64_t i = 0; i < block; ++i) partial.add(term(next++));
    block *= 2;
    if (next - start > kMaxSeriesTerms) {
      throw ConvergenceError("alternating series did not reach tolerance");
    }
  }
}

// Real dilogarithm Li_2(x) = sum_{n>=1} x^n / n^2 for -1 <= x <= 1.
// Absolute error below 1e-14 on the whole interval.
double li2(double x);

}  // namespace bohr
