#include "bohr/verify.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <random>

namespace bohr {

namespace {

constexpr double kSolverTol = 1e-13;
constexpr double kFuzzTruncation = 1e-16;

std::string shortest(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform on [0, 1) from the top 53 bits; identical on every platform.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Smallest K >= start (doubling) with c_{K+1} r^{K+1} / (1 - r) <= eps.
std::int64_t truncation_index(const ClassSpec& spec, double r, std::int64_t start, double eps) {
  std::int64_t k = std::max<std::int64_t>(start, 16);
  if (r == 0.0) return k;
  while (coeff_bound(spec, k + 1) * std::pow(r, static_cast<double>(k + 1)) / (1.0 - r) > eps) {
    k *= 2;
    if (k > kMaxSeriesTerms) throw ConvergenceError("extremal series truncation did not converge");
  }
  return k;
}

}  // namespace

std::string_view to_string(ReportKind kind) {
  return kind == ReportKind::sharpness ? "sharpness" : "fuzz";
}

CounterexampleFound::CounterexampleFound(VerificationReport report, CoefficientSequence sequence)
    : std::runtime_error("counterexample: S > d for " + report.case_id + " at r = " +
                         shortest(report.eval_radius)),
      report_(std::move(report)),
      sequence_(std::move(sequence)) {}

std::string make_case_id(const ClassSpec& spec, const FunctionalParams& params) {
  const char* param_name = spec.kind() == ClassKind::ph0_m ? "M" : "alpha";
  return std::string(to_string(spec.kind())) + ":" + param_name + "=" + shortest(spec.param()) +
         ":m=" + std::to_string(params.m()) + ":N=" + std::to_string(params.N()) +
         ":mu=" + shortest(params.mu()) + ":lambda=" + shortest(params.lambda());
}

std::vector<double> lattice_params(ClassKind kind) {
  switch (kind) {
    case ClassKind::ph0_alpha:
    case ClassKind::wh0_alpha:
      return {0.0, 0.4, 0.8};
    case ClassKind::ph0_m:
      return {0.2, 0.6, 1.2};
  }
  return {};
}

std::vector<VerifyCase> default_lattice() {
  std::vector<VerifyCase> cases;
  for (ClassKind kind : {ClassKind::ph0_alpha, ClassKind::ph0_m, ClassKind::wh0_alpha}) {
    for (double p : lattice_params(kind)) {
      for (int m : {1, 2}) {
        for (int N = 1; N <= 8; ++N) {
          for (double mu : {0.0, 1.0}) {
            for (double lambda : {0.0, 1.0}) {
              cases.push_back({ClassSpec(kind, p), FunctionalParams(m, N, mu, lambda)});
            }
          }
        }
      }
    }
  }
  return cases;
}

TailBound oracle_S_extremal(const ClassSpec& spec, const FunctionalParams& params, double r,
                            double tol) {
  if (!(r >= 0.0) || !(r < 1.0)) throw DomainError("oracle_S_extremal: r must lie in [0, 1)");
  if (!(tol > 0.0)) throw DomainError("oracle_S_extremal: tol must be positive");
  if (r == 0.0) return {0.0, 0.0, 1, true};

  const int N = params.N();
  const int t = params.t();
  const int m = params.m();
  const double inv_gap = 1.0 / (1.0 - r);
  std::int64_t k = std::max<std::int64_t>({16, N, t});
  for (;;) {
    const auto seq = extremal_sequence(spec, k);
    double modulus = 0.0;
    {
      CompensatedSum acc;
      double p = 1.0;
      for (std::int64_t n = 1; n <= k; ++n) {
        p *= r;
        acc.add(seq.sum_at(n) * p);
      }
      modulus = acc.value();
    }
    const double value = eval_S(seq, params, r, modulus);

    // Geometric bounds on the omitted terms; coefficients decrease in n.
    const double next = coeff_bound(spec, k + 1);
    const double linear = next * std::pow(r, static_cast<double>(k + 1)) * inv_gap;
    const double squared = next * next * std::pow(r, 2.0 * static_cast<double>(k + 1)) /
                           (1.0 - r * r);
    const double modulus_tail = std::pow(modulus + linear, m) - std::pow(modulus, m);
    const double tail = modulus_tail + linear + params.lambda() * inv_gap * squared;
    if (tail <= tol) return {value, tail, k, true};
    k *= 2;
    if (k > kMaxSeriesTerms) throw ConvergenceError("oracle_S_extremal did not converge");
  }
}

VerificationReport check_root_and_sharpness(const ClassSpec& spec, const FunctionalParams& params,
                                            Convention conv, double tol, double delta) {
  if (!(delta > 0.0)) throw DomainError("delta must be > 0");
  if (!(tol > 0.0)) throw DomainError("tol must be > 0");
  const RadiusResult root = solve_radius(spec, params, conv, kSolverTol);
  if (!(delta < 1.0 - root.radius)) throw DomainError("delta must be < 1 - R");

  VerificationReport rep;
  rep.case_id = make_case_id(spec, params);
  rep.kind = ReportKind::sharpness;
  rep.convention = conv;
  rep.radius = root.radius;
  rep.d = root.d;
  rep.eval_radius = root.radius;
  rep.delta = delta;
  rep.tolerance = tol;
  rep.audit_only = conv == Convention::paper_literal;

  const TailBound at = oracle_S_extremal(spec, params, root.radius, 0.1 * kSolverTol);
  const double above_r = std::min(root.radius + delta, 1.0 - 1e-9);
  const TailBound above = oracle_S_extremal(spec, params, above_r, 0.1 * kSolverTol);
  rep.s_at_root = at.value;
  rep.s_above_root = above.value;
  rep.gap = at.value - rep.d;
  rep.tail_budget = at.tail;
  rep.passed = std::abs(rep.gap) <= tol + rep.tail_budget && rep.s_above_root > rep.d;
  return rep;
}

std::vector<VerificationReport> fuzz_admissible(const ClassSpec& spec,
                                                const FunctionalParams& params, Convention conv,
                                                int trials, std::uint64_t seed,
                                                double r_fraction) {
  if (trials < 1) throw DomainError("fuzz_admissible: trials must be >= 1");
  if (!(r_fraction > 0.0) || !(r_fraction < 1.0)) {
    throw DomainError("fuzz_admissible: r_fraction must lie in (0, 1)");
  }
  const RadiusResult root = solve_radius(spec, params, conv, kSolverTol);
  const double r = r_fraction * root.radius;
  const std::int64_t n_max =
      truncation_index(spec, r, std::max(params.N(), params.t()), kFuzzTruncation);
  const std::string case_id = make_case_id(spec, params);
  std::mt19937_64 rng(splitmix64(seed ^ fnv1a(case_id)));

  std::vector<VerificationReport> reports;
  reports.reserve(static_cast<std::size_t>(trials));
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<CoefficientPair> pairs;
    pairs.reserve(static_cast<std::size_t>(n_max));
    pairs.push_back({1.0, 0.0});
    for (std::int64_t n = 2; n <= n_max; ++n) {
      const double total = uniform01(rng) * coeff_bound(spec, n);
      const double split = uniform01(rng);
      pairs.push_back({split * total, (1.0 - split) * total});
    }
    CoefficientSequence seq(std::move(pairs));

    CompensatedSum modulus;
    double p = 1.0;
    for (std::int64_t n = 1; n <= n_max; ++n) {
      p *= r;
      modulus.add(seq.sum_at(n) * p);
    }
    const double s = eval_S(seq, params, r, modulus.value());

    VerificationReport rep;
    rep.case_id = case_id + ":trial=" + std::to_string(trial);
    rep.kind = ReportKind::fuzz;
    rep.convention = conv;
    rep.radius = root.radius;
    rep.d = root.d;
    rep.eval_radius = r;
    rep.s_at_root = s;
    rep.s_above_root = std::numeric_limits<double>::quiet_NaN();
    rep.gap = s - root.d;
    rep.passed = s <= root.d;
    rep.audit_only = conv == Convention::paper_literal;
    if (!rep.passed && !rep.audit_only) throw CounterexampleFound(rep, std::move(seq));
    reports.push_back(std::move(rep));
  }
  return reports;
}

}  // namespace bohr
