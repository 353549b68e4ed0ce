#include "bohr/classes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "bohr/errors.hpp"
#include "bohr/specfun.hpp"

namespace bohr {

namespace {

constexpr double kSeriesTol = 1e-15;
constexpr double kLn2 = std::numbers::ln2;

void require_radius(double r) {
  if (!(r >= 0.0) || !(r < 1.0)) {
    throw DomainError("radius must satisfy 0 <= r < 1, got " + std::to_string(r));
  }
}

void require_from(std::int64_t from) {
  if (from < 2) throw DomainError("majorant tails start at n >= 2");
}

double w_denominator(double alpha, std::int64_t n) {
  const double dn = static_cast<double>(n);
  return alpha * dn * dn + (1.0 - alpha) * dn;
}

// sum_{n=1}^{upto} r^n / n
double log_head(double r, std::int64_t upto) {
  CompensatedSum acc;
  double p = 1.0;
  for (std::int64_t n = 1; n <= upto; ++n) {
    p *= r;
    acc.add(p / static_cast<double>(n));
  }
  return acc.value();
}

// sum_{n=1}^{upto} x^n / n^2
double li2_head(double x, std::int64_t upto) {
  CompensatedSum acc;
  double p = 1.0;
  for (std::int64_t n = 1; n <= upto; ++n) {
    p *= x;
    const double dn = static_cast<double>(n);
    acc.add(p / (dn * dn));
  }
  return acc.value();
}

// sum_{n=2}^{upto} r^n / (n (n-1))
double m_linear_head(double r, std::int64_t upto) {
  CompensatedSum acc;
  double p = r;
  for (std::int64_t n = 2; n <= upto; ++n) {
    p *= r;
    const double dn = static_cast<double>(n);
    acc.add(p / (dn * (dn - 1.0)));
  }
  return acc.value();
}

// sum_{n=2}^{upto} x^n / (n^2 (n-1)^2)
double m_squared_head(double x, std::int64_t upto) {
  CompensatedSum acc;
  double p = x;
  for (std::int64_t n = 2; n <= upto; ++n) {
    p *= x;
    const double dn = static_cast<double>(n);
    const double q = dn * (dn - 1.0);
    acc.add(p / (q * q));
  }
  return acc.value();
}

// sum_{n>=2} x^n / (n^2 (n-1)^2) = (x+1) Li2(x) + 2(x-1) ln(1-x) - 3x
double m_squared_full(double x) {
  return (x + 1.0) * li2(x) + 2.0 * (x - 1.0) * std::log1p(-x) - 3.0 * x;
}

// e^z E1(z) for z > 0; continued fraction for z >= 1.
double scaled_e1(double z) {
  if (z < 1.0) return std::exp(z) * -std::expint(-z);
  constexpr double kTiny = 1e-300;
  double b = z + 1.0;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) <= 1e-16) break;
  }
  return h;
}

// e^(u L) * integral_L^inf e^(-u y) y^(-m) dy for m = 1..m_max, by upward recursion.
std::vector<double> scaled_exp_integrals(double u, double L, int m_max) {
  std::vector<double> J(static_cast<std::size_t>(m_max) + 1, 0.0);
  J[1] = scaled_e1(u * L);
  for (int m = 2; m <= m_max; ++m) {
    J[m] = (std::pow(L, 1 - m) - u * J[m - 1]) / (m - 1);
  }
  return J;
}

// j-th derivative of e^(-u x) x^(-p) (x + c)^(-p) divided by e^(-u x);
// every Leibniz term carries the sign (-1)^j, so nothing cancels.
double w_summand_derivative(double u, double c, int p, double x, int j) {
  auto rising = [](int a, int k) {
    double v = 1.0;
    for (int i = 0; i < k; ++i) v *= a + i;
    return v;
  };
  auto binom = [](int n, int k) {
    double v = 1.0;
    for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
  };
  double total = 0.0;
  for (int i = 0; i <= j; ++i) {
    for (int k = 0; i + k <= j; ++k) {
      const int e = j - i - k;
      total += binom(j, i) * binom(j - i, k) * std::pow(u, e) * rising(p, i) * std::pow(x, -p - i) *
               rising(p, k) * std::pow(x + c, -p - k);
    }
  }
  return (j % 2 == 0) ? total : -total;
}

// sum_{n>=from} e^(-u n) / (n (n + c))^p for p in {1, 2}, u > 0 small.
// Direct head up to K - 1, then Euler-Maclaurin from K through the B_6 term.
// The summand is completely monotone, so the remainder is at most
// 2 zeta(6) / (2 pi)^6 |g^(5)(K)|; K doubles until that is negligible.
double w_near_one_sum(double u, double c, int p, std::int64_t from) {
  constexpr double kRemainderFactor = 2.0 * 1.0173430619844491 / 61528.908388819;
  std::int64_t K = std::max<std::int64_t>(from, 128);
  while (true) {
    const double dK = static_cast<double>(K);
    const double scale = std::exp(-u * dK);
    const double g5 = scale * std::abs(w_summand_derivative(u, c, p, dK, 5));
    if (kRemainderFactor * g5 <= 1e-17 || K > (std::int64_t{1} << 24)) break;
    K *= 2;
  }
  const double dK = static_cast<double>(K);
  const double scale = std::exp(-u * dK);

  double integral = 0.0;
  if (c >= 1.0) {
    // Partial fractions in 1/x and 1/(x + c).
    const auto J0 = scaled_exp_integrals(u, dK, 2);
    const auto Jc = scaled_exp_integrals(u, dK + c, 2);
    if (p == 1) {
      integral = (J0[1] - Jc[1]) / c;
    } else {
      integral = (J0[2] + Jc[2] - 2.0 / c * (J0[1] - Jc[1])) / (c * c);
    }
  } else {
    // 1/(x (x + c))^p = sum_k binom(k + p - 1, k) (-c)^k x^(-(2p + k)), c < 1 <= x.
    constexpr int kTerms = 24;
    const auto J = scaled_exp_integrals(u, dK, 2 * p + kTerms);
    double coef = 1.0;
    for (int k = 0; k < kTerms; ++k) {
      integral += coef * J[2 * p + k];
      coef *= -c * (k + p) / (k + 1);
    }
  }

  CompensatedSum acc;
  for (std::int64_t n = from; n < K; ++n) {
    const double dn = static_cast<double>(n);
    acc.add(std::exp(-u * dn) * std::pow(dn * (dn + c), -p));
  }
  acc.add(scale * integral);
  acc.add(scale * 0.5 * w_summand_derivative(u, c, p, dK, 0));
  acc.add(-scale / 12.0 * w_summand_derivative(u, c, p, dK, 1));
  acc.add(scale / 720.0 * w_summand_derivative(u, c, p, dK, 3));
  acc.add(-scale / 30240.0 * w_summand_derivative(u, c, p, dK, 5));
  return acc.value();
}

// Above this the geometric tail bound needs thousands of terms.
constexpr double kNearOne = 0.99;

double w_linear_tail(double alpha, std::int64_t from, double r) {
  if (r == 0.0) return 0.0;
  if (r > kNearOne) {
    // c_n = (2/alpha) / (n (n + c)), c = (1 - alpha)/alpha
    return 2.0 / alpha * w_near_one_sum(-std::log(r), (1.0 - alpha) / alpha, 1, from);
  }
  const double inv_gap = 1.0 / (1.0 - r);
  const double log_r = std::log(r);
  auto term = [&](std::int64_t n) {
    return 2.0 * std::exp(static_cast<double>(n) * log_r) / w_denominator(alpha, n);
  };
  auto tail_after = [&](std::int64_t k) {
    // c_n <= 2/(alpha n^2) and sum_{n>k} 1/n^2 <= 1/k
    return std::min(term(k + 1) * inv_gap, 2.0 / (alpha * static_cast<double>(k)));
  };
  return sum_with_tail(term, tail_after, from, kSeriesTol).value;
}

double w_squared_tail(double alpha, std::int64_t from, double r) {
  if (r == 0.0) return 0.0;
  const double x = r * r;
  if (x > kNearOne) {
    return 4.0 / (alpha * alpha) *
           w_near_one_sum(-2.0 * std::log(r), (1.0 - alpha) / alpha, 2, from);
  }
  const double inv_gap = 1.0 / (1.0 - x);
  const double log_x = std::log(x);
  auto term = [&](std::int64_t n) {
    const double c = 2.0 / w_denominator(alpha, n);
    return c * c * std::exp(static_cast<double>(n) * log_x);
  };
  auto tail_after = [&](std::int64_t k) {
    // c_n^2 <= 4/(alpha^2 n^4) and sum_{n>k} 1/n^4 <= 1/(3 k^3)
    const double dk = static_cast<double>(k);
    return std::min(term(k + 1) * inv_gap, 4.0 / (3.0 * alpha * alpha * dk * dk * dk));
  };
  return sum_with_tail(term, tail_after, from, kSeriesTol).value;
}

}  // namespace

std::string_view to_string(ClassKind kind) {
  switch (kind) {
    case ClassKind::ph0_alpha:
      return "ph0-alpha";
    case ClassKind::ph0_m:
      return "ph0-m";
    case ClassKind::wh0_alpha:
      return "wh0-alpha";
  }
  return "unknown";
}

std::optional<ClassKind> parse_class_kind(std::string_view text) {
  if (text == "ph0-alpha") return ClassKind::ph0_alpha;
  if (text == "ph0-m") return ClassKind::ph0_m;
  if (text == "wh0-alpha") return ClassKind::wh0_alpha;
  return std::nullopt;
}

double max_class_m() { return 1.0 / (2.0 * (2.0 * kLn2 - 1.0)); }

ClassSpec::ClassSpec(ClassKind kind, double param) : kind_(kind), param_(param) {
  if (!std::isfinite(param)) throw DomainError("class parameter must be finite");
  switch (kind) {
    case ClassKind::ph0_alpha:
    case ClassKind::wh0_alpha:
      if (param < 0.0 || param >= 1.0) {
        throw DomainError(std::string(to_string(kind)) +
                          ": alpha must satisfy 0 <= alpha < 1, got " + std::to_string(param));
      }
      break;
    case ClassKind::ph0_m:
      if (param <= 0.0) {
        throw DomainError("ph0-m: M must be > 0 (M = 0 collapses the class to f(z) = z), got " +
                          std::to_string(param));
      }
      if (param >= max_class_m()) {
        throw DomainError("ph0-m: M must be < 1/(2(ln 4 - 1)) ~ " +
                          std::to_string(max_class_m()) + ", got " + std::to_string(param));
      }
      break;
  }
}

CoefficientSequence::CoefficientSequence(std::vector<CoefficientPair> pairs)
    : pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw DomainError("coefficient sequence needs at least n = 1");
  if (pairs_.front().a_mag != 1.0 || pairs_.front().b_mag != 0.0) {
    throw DomainError("coefficient sequence must be normalized with a_1 = 1, b_1 = 0");
  }
  for (const auto& p : pairs_) {
    if (!(p.a_mag >= 0.0) || !(p.b_mag >= 0.0) || !std::isfinite(p.a_mag) ||
        !std::isfinite(p.b_mag)) {
      throw DomainError("coefficient magnitudes must be finite and nonnegative");
    }
  }
}

bool CoefficientSequence::admissible_for(const ClassSpec& spec, double slack) const {
  for (std::int64_t n = 2; n <= n_max(); ++n) {
    if (sum_at(n) > coeff_bound(spec, n) + slack) return false;
  }
  return true;
}

double coeff_bound(const ClassSpec& spec, std::int64_t n) {
  if (n < 2) throw DomainError("coeff_bound is defined for n >= 2 (a_1 = 1, b_1 = 0 is fixed)");
  const double dn = static_cast<double>(n);
  const double p = spec.param();
  switch (spec.kind()) {
    case ClassKind::ph0_alpha:
      return 2.0 * (1.0 - p) / dn;
    case ClassKind::ph0_m:
      return 2.0 * p / (dn * (dn - 1.0));
    case ClassKind::wh0_alpha:
      return 2.0 / w_denominator(p, n);
  }
  return 0.0;
}

double growth_upper(const ClassSpec& spec, double r) {
  require_radius(r);
  return r + linear_tail(spec, 2, r);
}

double distance_lower_bound(const ClassSpec& spec) {
  const double p = spec.param();
  switch (spec.kind()) {
    case ClassKind::ph0_alpha:
      return 1.0 + 2.0 * (1.0 - p) * (kLn2 - 1.0);
    case ClassKind::ph0_m:
      return 1.0 + 2.0 * p * (1.0 - 2.0 * kLn2);
    case ClassKind::wh0_alpha: {
      const auto alt = sum_alternating(
          [p](std::int64_t n) {
            const double c = 2.0 / w_denominator(p, n);
            return (n % 2 == 0) ? -c : c;
          },
          2, kSeriesTol);
      return 1.0 + alt.value;
    }
  }
  return 0.0;
}

CoefficientSequence extremal_sequence(const ClassSpec& spec, std::int64_t n_max) {
  if (n_max < 1) throw DomainError("extremal_sequence: n_max must be >= 1");
  std::vector<CoefficientPair> pairs;
  pairs.reserve(static_cast<std::size_t>(n_max));
  pairs.push_back({1.0, 0.0});
  for (std::int64_t n = 2; n <= n_max; ++n) pairs.push_back({coeff_bound(spec, n), 0.0});
  return CoefficientSequence(std::move(pairs));
}

double linear_tail(const ClassSpec& spec, std::int64_t from, double r) {
  require_from(from);
  require_radius(r);
  const double p = spec.param();
  switch (spec.kind()) {
    case ClassKind::ph0_alpha:
      // 2(1-alpha) sum_{n>=from} r^n/n = -2(1-alpha)(ln(1-r) + sum_{n<from} r^n/n)
      return -2.0 * (1.0 - p) * (std::log1p(-r) + log_head(r, from - 1));
    case ClassKind::ph0_m:
      return 2.0 * p * (r + (1.0 - r) * std::log1p(-r) - m_linear_head(r, from - 1));
    case ClassKind::wh0_alpha:
      // At alpha = 0 the coefficients are exactly those of ph0-alpha(0).
      if (p == 0.0) return linear_tail(ClassSpec(ClassKind::ph0_alpha, 0.0), from, r);
      return w_linear_tail(p, from, r);
  }
  return 0.0;
}

double squared_tail(const ClassSpec& spec, std::int64_t from, double r) {
  require_from(from);
  require_radius(r);
  const double p = spec.param();
  const double x = r * r;
  switch (spec.kind()) {
    case ClassKind::ph0_alpha: {
      const double k = 2.0 * (1.0 - p);
      return k * k * (li2(x) - li2_head(x, from - 1));
    }
    case ClassKind::ph0_m: {
      const double k = 2.0 * p;
      return k * k * (m_squared_full(x) - m_squared_head(x, from - 1));
    }
    case ClassKind::wh0_alpha:
      if (p == 0.0) return squared_tail(ClassSpec(ClassKind::ph0_alpha, 0.0), from, r);
      return w_squared_tail(p, from, r);
  }
  return 0.0;
}

double squared_head(const ClassSpec& spec, std::int64_t upto) {
  CompensatedSum acc;
  for (std::int64_t n = 2; n <= upto; ++n) {
    const double c = coeff_bound(spec, n);
    acc.add(c * c);
  }
  return acc.value();
}

}  // namespace bohr
