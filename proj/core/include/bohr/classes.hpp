#pragma once

// The three normalized harmonic classes handled by the library:
//
//   ph0-alpha  Re(h'(z) - alpha) > |g'(z)|, 0 <= alpha < 1
//              |a_n| + |b_n| <= 2(1-alpha)/n
//   ph0-m      Re(z h''(z)) > -M + |z g''(z)|, 0 < M < 1/(2(ln 4 - 1))
//              |a_n| + |b_n| <= 2M/(n(n-1))
//   wh0-alpha  Re(h' + alpha z h'') > |g' + alpha z g''|, 0 <= alpha < 1
//              |a_n| + |b_n| <= 2/(alpha n^2 + (1-alpha) n)
//
// Everything here works with coefficient magnitudes and real radii only.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bohr {

enum class ClassKind { ph0_alpha, ph0_m, wh0_alpha };

std::string_view to_string(ClassKind kind);
std::optional<ClassKind> parse_class_kind(std::string_view text);

// Upper end of the admissible M range, 1 / (2 (ln 4 - 1)).
double max_class_m();

class ClassSpec {
 public:
  // Throws DomainError when param is outside the class range.
  ClassSpec(ClassKind kind, double param);

  ClassKind kind() const { return kind_; }
  double param() const { return param_; }

  friend bool operator==(const ClassSpec&, const ClassSpec&) = default;

 private:
  ClassKind kind_;
  double param_;
};

struct CoefficientPair {
  double a_mag = 0.0;
  double b_mag = 0.0;
  double sum() const { return a_mag + b_mag; }
};

// Coefficient magnitudes for n = 1..n_max with a_1 = 1, b_1 = 0.
class CoefficientSequence {
 public:
  // Throws DomainError unless pairs is non-empty, pairs[0] == (1, 0) and
  // every magnitude is finite and nonnegative.
  explicit CoefficientSequence(std::vector<CoefficientPair> pairs);

  std::int64_t n_max() const { return static_cast<std::int64_t>(pairs_.size()); }
  // 1-based, as in the series.
  const CoefficientPair& at(std::int64_t n) const { return pairs_.at(static_cast<std::size_t>(n - 1)); }
  double sum_at(std::int64_t n) const { return at(n).sum(); }
  const std::vector<CoefficientPair>& pairs() const { return pairs_; }

  // a_n + b_n <= coeff_bound(spec, n) for every 2 <= n <= n_max.
  bool admissible_for(const ClassSpec& spec, double slack = 0.0) const;

 private:
  std::vector<CoefficientPair> pairs_;
};

// Sharp bound on |a_n| + |b_n|, n >= 2.
double coeff_bound(const ClassSpec& spec, std::int64_t n);

// Sharp upper growth bound on |f(z)| at |z| = r, 0 <= r < 1.
double growth_upper(const ClassSpec& spec, double r);

// Lower bound on the distance from f(0) = 0 to the boundary of f(D):
// 1 + sum_{n>=2} (-1)^(n-1) coeff_bound(n). Exact for the extremal function.
double distance_lower_bound(const ClassSpec& spec);

// (1,0), (coeff_bound(2),0), ..., (coeff_bound(n_max),0).
CoefficientSequence extremal_sequence(const ClassSpec& spec, std::int64_t n_max);

// Majorant series used by the root functions. Both start at n = from >= 2.
//   linear_tail(from, r)  = sum_{n>=from} coeff_bound(n) r^n
//   squared_tail(from, r) = sum_{n>=from} coeff_bound(n)^2 r^(2n)
// Closed forms for ph0-alpha / ph0-m, tail-bounded sums for wh0-alpha.
double linear_tail(const ClassSpec& spec, std::int64_t from, double r);
double squared_tail(const ClassSpec& spec, std::int64_t from, double r);

// sum_{n=2}^{upto} coeff_bound(n)^2 (0 when upto < 2).
double squared_head(const ClassSpec& spec, std::int64_t upto);

}  // namespace bohr
