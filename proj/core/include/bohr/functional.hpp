#pragma once

// The refined Bohr-Rogosinski functional
//
//   S(r) = |f(z)|^m + sum_{n>=N} (|a_n|+|b_n|) r^n
//        + mu [t>=1] sum_{n=1}^{t} (|a_n|+|b_n|)^2 r^N / (1-r)
//        + lambda (1 + r/(1-r)) sum_{n>=t+1} (|a_n|+|b_n|)^2 r^(2n),
//   t = floor((N-1)/2),
//
// and the class-wise root functions phi(r) = majorant of S - distance bound,
// whose zero in (0, 1) is the sharp radius.

#include <cstdint>
#include <optional>
#include <string_view>

#include "bohr/classes.hpp"
#include "bohr/specfun.hpp"

namespace bohr {

class FunctionalParams {
 public:
  // m >= 1, N >= 1, mu >= 0, lambda >= 0; throws DomainError otherwise.
  FunctionalParams(int m, int N, double mu, double lambda);

  int m() const { return m_; }
  int N() const { return N_; }
  double mu() const { return mu_; }
  double lambda() const { return lambda_; }
  // floor((N-1)/2); the mu-sum is present only when t >= 1.
  int t() const { return (N_ - 1) / 2; }

  friend bool operator==(const FunctionalParams&, const FunctionalParams&) = default;

 private:
  int m_;
  int N_;
  double mu_;
  double lambda_;
};

// How the n = 1 terms of the majorant are treated.
//   exact_a1      (|a_1|+|b_1|) = 1 exactly, as in the extremal functions.
//   paper_literal the class coefficient bound formula is applied at n = 1 as
//                 well; undefined for ph0-m when t >= 1 (1/(n^2 (n-1)^2) at n=1).
enum class Convention { exact_a1, paper_literal };

std::string_view to_string(Convention conv);
std::optional<Convention> parse_convention(std::string_view text);

// Throws ConventionError if conv is not defined for (spec, params).
void require_convention(const ClassSpec& spec, const FunctionalParams& params, Convention conv);

// S for an explicit (truncated) coefficient sequence; modulus is the
// caller-supplied value of |f(z)| at |z| = r.
double eval_S(const CoefficientSequence& seq, const FunctionalParams& params, double r,
              double modulus);

// eval_S plus a bound on the terms beyond n_max, valid for any sequence of
// the class `envelope` (coefficients beyond n_max bounded by coeff_bound).
TailBound eval_S_bounded(const CoefficientSequence& seq, const FunctionalParams& params,
                         double r, double modulus, const ClassSpec& envelope);

// Class majorant of S (growth_upper as modulus) minus distance_lower_bound.
double phi(const ClassSpec& spec, const FunctionalParams& params, Convention conv, double r);

// The same root function written as the published N = 1..4 closed forms.
// Throws DomainError for N outside 1..4.
double phi_corollary(const ClassSpec& spec, const FunctionalParams& params, double r);

}  // namespace bohr
