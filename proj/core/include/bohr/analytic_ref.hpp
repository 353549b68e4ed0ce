#pragma once

// Reference radii for bounded analytic functions f(z) = sum a_n z^n with
// |f| < 1 on the unit disk:
//
//   R_N      positive root of 2(1+r) r^N - (1-r)^2 = 0
//   R'_N     positive root of   (1+r) r^N - (1-r)^2 = 0
//   r_a0     2 / (3 + a0 + sqrt(5) (1 + a0))
//   r'_a0    root in (1/3, 1/(2+a0)) of (1-a0^3) r^3 - (1+2a0) r^2 - 2r + 1 = 0
//
// R_1 = sqrt(5) - 2 and R'_1 = 1/3.

#include <optional>
#include <string_view>

namespace bohr {

enum class AnalyticVariant { r_n, r_n_prime, r_a0, r_a0_prime };

std::string_view to_string(AnalyticVariant v);
std::optional<AnalyticVariant> parse_analytic_variant(std::string_view text);

double rogosinski_RN(int N, double tol = 1e-14);
double rogosinski_RN_prime(int N, double tol = 1e-14);
double refined_r_a0(double a0);
double refined_r_a0_prime(double a0, double tol = 1e-14);

// Left-hand sides of the defining equations, for residual checks.
double rogosinski_RN_equation(int N, double r);
double rogosinski_RN_prime_equation(int N, double r);
double refined_r_a0_prime_equation(double a0, double r);

}  // namespace bohr
