#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <thread>
#include <tuple>

#include "bohr/analytic_ref.hpp"
#include "bohr/radius.hpp"
#include "bohr/verify.hpp"
#include "config.hpp"
#include "output.hpp"

namespace bohr::cli {

namespace {

struct Flag {
  const char* key;
  const char* help;
};

const Flag kCaseFlags[] = {
    {"class", "ph0-alpha | ph0-m | wh0-alpha"},
    {"alpha", "class parameter alpha in [0, 1) (ph0-alpha, wh0-alpha)"},
    {"M", "class parameter M in (0, 1/(2(ln 4 - 1))) (ph0-m)"},
    {"convention", "exact-a1 | paper-literal"},
    {"format", "json | csv | table"},
    {"out", "also write the output bytes to this file"},
};

// Registers every flag as a string option; typed parsing happens in Settings
// so that flags and config entries share one code path.
class FlagSet {
 public:
  FlagSet(CLI::App* app, std::vector<Flag> flags, bool with_config) : flags_(std::move(flags)) {
    if (with_config) flags_.push_back({"config", "key=value settings file; flags override it"});
    for (const auto& f : flags_) {
      opts_[f.key] = app->add_option(std::string("--") + f.key, values_[f.key], f.help)
                         ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    }
  }

  bool given(const std::string& key) const {
    const auto it = opts_.find(key);
    return it != opts_.end() && it->second->count() > 0;
  }

  Settings resolve() const {
    KeyValues kv;
    if (given("config")) {
      kv = read_config_file(values_.at("config"));
      for (const auto& [key, value] : kv) {
        if (key == "config" || opts_.find(key) == opts_.end()) {
          throw UsageError("config file: unknown key '" + key + "'");
        }
      }
    }
    for (const auto& [key, opt] : opts_) {
      if (key != "config" && opt->count() > 0) kv[key] = values_.at(key);
    }
    return Settings(std::move(kv));
  }

 private:
  std::vector<Flag> flags_;
  std::map<std::string, std::string> values_;
  std::map<std::string, CLI::Option*> opts_;
};

std::vector<Flag> with_case_flags(std::initializer_list<Flag> extra) {
  std::vector<Flag> flags(std::begin(kCaseFlags), std::end(kCaseFlags));
  flags.insert(flags.end(), extra);
  return flags;
}

ClassKind class_from(const Settings& s) {
  const std::string name = s.text("class");
  const auto kind = parse_class_kind(name);
  if (!kind) throw UsageError("unknown class '" + name + "' (ph0-alpha | ph0-m | wh0-alpha)");
  return *kind;
}

const char* param_key(ClassKind kind) { return kind == ClassKind::ph0_m ? "M" : "alpha"; }

// The parameter flag of the other family is a conflict, not an override.
void reject_foreign_param(const Settings& s, ClassKind kind) {
  const char* other = kind == ClassKind::ph0_m ? "alpha" : "M";
  if (s.has(other)) {
    throw UsageError(std::string("--") + other + " does not apply to class " +
                     std::string(to_string(kind)) + "; use --" + param_key(kind));
  }
}

ClassSpec spec_from(ClassKind kind, double param) {
  try {
    return ClassSpec(kind, param);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

FunctionalParams params_from(std::int64_t m, std::int64_t N, double mu, double lambda) {
  if (m < 1 || m > 1000) throw UsageError("m must be an integer in [1, 1000]");
  if (N < 1 || N > 100000) throw UsageError("N must be an integer in [1, 100000]");
  try {
    return FunctionalParams(static_cast<int>(m), static_cast<int>(N), mu, lambda);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

Convention convention_from(const Settings& s) {
  const std::string name = s.text_or("convention", "exact-a1");
  const auto conv = parse_convention(name);
  if (!conv) throw UsageError("unknown convention '" + name + "' (exact-a1 | paper-literal)");
  return *conv;
}

Format format_from(const Settings& s) {
  const std::string name = s.text_or("format", "json");
  Format f = Format::json;
  if (!parse_format(name, f)) throw UsageError("unknown format '" + name + "' (json | csv | table)");
  return f;
}

double solver_tol_from(const Settings& s, double fallback) {
  const double tol = s.real_or("tol", fallback);
  if (!(tol > 0.0 && tol <= 1e-3)) throw UsageError("tol must lie in (0, 1e-3]");
  return tol;
}

unsigned threads_from(const Settings& s) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::int64_t n = s.integer_or("threads", hw);
  if (n < 1 || n > 1024) throw UsageError("threads must be in [1, 1024]");
  return static_cast<unsigned>(n);
}

// Runs job(i) for i in [0, count) on up to `threads` workers. Each job writes
// only to its own slot, so results never depend on scheduling.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& job) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) job(i);
  };
  const unsigned n = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

void emit(const std::string& text, const Settings& s, std::ostream& out) {
  if (s.has("out")) {
    const std::string path = s.text("out");
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("cannot write output file '" + path + "'");
    file << text;
    if (!file) throw UsageError("failed writing output file '" + path + "'");
  }
  out << text;
}

Value opt_real(bool present, double v) { return present ? Value(v) : Value(std::monostate{}); }

// ---------------------------------------------------------------- radius

struct RadiusCommand {
  CLI::App* app;
  FlagSet flags;

  explicit RadiusCommand(CLI::App& root)
      : app(root.add_subcommand("radius", "sharp radius for one class and parameter set")),
        flags(app, with_case_flags({{"m", "power of |f(z)| (integer >= 1)"},
                                    {"N", "first index of the tail sum (integer >= 1)"},
                                    {"mu", "weight of the mixed area term (>= 0)"},
                                    {"lambda", "weight of the squared tail (>= 0)"},
                                    {"tol", "bisection tolerance in (0, 1e-3], default 1e-12"}}),
              true) {}

  int run(std::ostream& out, std::ostream& err) const {
    const Settings s = flags.resolve();
    const ClassKind kind = class_from(s);
    reject_foreign_param(s, kind);
    const ClassSpec spec = spec_from(kind, s.real(param_key(kind)));
    const FunctionalParams params =
        params_from(s.integer("m"), s.integer("N"), s.real("mu"), s.real("lambda"));
    const Convention conv = convention_from(s);
    const Format format = format_from(s);
    const double tol = solver_tol_from(s, 1e-12);
    try {
      require_convention(spec, params, conv);
    } catch (const ConventionError& e) {
      throw UsageError(e.what());
    }

    RadiusResult res;
    try {
      res = solve_radius(spec, params, conv, tol);
    } catch (const SolverError& e) {
      err << "solver error: " << e.what() << '\n';
      return kExitSolver;
    } catch (const ConvergenceError& e) {
      err << "solver error: " << e.what() << '\n';
      return kExitSolver;
    }

    Record r;
    r.add("class", std::string(to_string(kind)))
        .add("param", spec.param())
        .add("m", std::int64_t{params.m()})
        .add("N", std::int64_t{params.N()})
        .add("mu", params.mu())
        .add("lambda", params.lambda())
        .add("t", std::int64_t{params.t()})
        .add("convention", std::string(to_string(conv)))
        .add("radius", res.radius)
        .add("bracket_lo", res.bracket_lo)
        .add("bracket_hi", res.bracket_hi)
        .add("iterations", std::int64_t{res.iterations})
        .add("residual", res.residual)
        .add("d", res.d);
    emit(render({r}, format, false), s, out);
    return kExitOk;
  }
};

// ---------------------------------------------------------------- sweep

struct SweepRow {
  ClassKind kind;
  double param;
  int m;
  int N;
  double mu;
  double lambda;
  std::optional<RadiusResult> result;
  std::string error;

  auto key() const { return std::tie(kind, param, m, N, mu, lambda); }
};

std::vector<double> param_grid(const Settings& s, ClassKind kind) {
  const bool grid = s.has("param-start") || s.has("param-stop") || s.has("param-steps");
  std::vector<double> values;
  if (!grid) {
    values.push_back(s.real(param_key(kind)));
  } else {
    if (s.has(param_key(kind))) {
      throw UsageError(std::string("--") + param_key(kind) +
                       " conflicts with --param-start/--param-stop/--param-steps");
    }
    const double start = s.real("param-start");
    const double stop = s.real("param-stop");
    const std::int64_t steps = s.integer("param-steps");
    if (steps < 1 || steps > 100000) throw UsageError("param-steps must be in [1, 100000]");
    if (steps == 1) {
      if (start != stop) throw UsageError("param-steps = 1 needs param-start == param-stop");
      values.push_back(start);
    } else {
      for (std::int64_t i = 0; i < steps; ++i) {
        values.push_back(i + 1 == steps ? stop
                                        : start + (stop - start) * static_cast<double>(i) /
                                                      static_cast<double>(steps - 1));
      }
    }
  }
  for (double v : values) spec_from(kind, v);
  return values;
}

struct SweepCommand {
  CLI::App* app;
  FlagSet flags;

  explicit SweepCommand(CLI::App& root)
      : app(root.add_subcommand("sweep", "radii over a parameter grid")),
        flags(app,
              with_case_flags({{"param-start", "first grid value of alpha or M"},
                               {"param-stop", "last grid value of alpha or M"},
                               {"param-steps", "number of grid points (>= 1)"},
                               {"m", "list, e.g. 1,2 (default 1)"},
                               {"N", "list or range, e.g. 1..6 (default 1)"},
                               {"mu", "list (default 0)"},
                               {"lambda", "list (default 0)"},
                               {"tol", "bisection tolerance in (0, 1e-3], default 1e-12"},
                               {"threads", "worker threads (default: hardware concurrency)"}}),
              true) {}

  int run(std::ostream& out, std::ostream& err) const {
    const Settings s = flags.resolve();
    const ClassKind kind = class_from(s);
    reject_foreign_param(s, kind);
    const std::vector<double> grid = param_grid(s, kind);
    const auto ms = s.integer_list_or("m", "1");
    const auto Ns = s.integer_list_or("N", "1");
    const auto mus = s.real_list_or("mu", "0");
    const auto lambdas = s.real_list_or("lambda", "0");
    const Convention conv = convention_from(s);
    const Format format = format_from(s);
    const double tol = solver_tol_from(s, 1e-12);
    const unsigned threads = threads_from(s);

    std::vector<SweepRow> rows;
    for (double p : grid) {
      for (auto m : ms) {
        for (auto N : Ns) {
          for (double mu : mus) {
            for (double lambda : lambdas) {
              params_from(m, N, mu, lambda);
              rows.push_back({kind, p, static_cast<int>(m), static_cast<int>(N), mu, lambda, {}, {}});
            }
          }
        }
      }
    }
    std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
      return a.key() < b.key();
    });
    rows.erase(std::unique(rows.begin(), rows.end(),
                           [](const SweepRow& a, const SweepRow& b) { return a.key() == b.key(); }),
               rows.end());

    parallel_for(rows.size(), threads, [&](std::size_t i) {
      SweepRow& row = rows[i];
      try {
        row.result = solve_radius(ClassSpec(row.kind, row.param),
                                  FunctionalParams(row.m, row.N, row.mu, row.lambda), conv, tol);
      } catch (const std::exception& e) {
        row.error = e.what();
      }
    });

    std::vector<Record> records;
    int failed = 0;
    for (const auto& row : rows) {
      const bool ok = row.result.has_value();
      failed += ok ? 0 : 1;
      Record r;
      r.add("class", std::string(to_string(row.kind)))
          .add("param", row.param)
          .add("m", std::int64_t{row.m})
          .add("N", std::int64_t{row.N})
          .add("mu", row.mu)
          .add("lambda", row.lambda)
          .add("t", std::int64_t{(row.N - 1) / 2})
          .add("radius", opt_real(ok, ok ? row.result->radius : 0.0))
          .add("d", distance_lower_bound(ClassSpec(row.kind, row.param)))
          .add("residual", opt_real(ok, ok ? row.result->residual : 0.0))
          .add("error", row.error);
      records.push_back(std::move(r));
    }
    emit(render(records, format, true), s, out);
    if (failed > 0) {
      err << failed << " of " << rows.size() << " sweep rows failed\n";
      return kExitSweepPartial;
    }
    return kExitOk;
  }
};

// ---------------------------------------------------------------- verify

struct VerifyRow {
  VerifyCase c;
  std::string case_id;
  std::optional<VerificationReport> sharp;
  std::optional<VerificationReport> fuzz;  // worst trial
  int trials = 0;
  std::string error;
};

Record verify_record(const std::string& case_id, std::string_view kind, Convention conv,
                     const VerificationReport* rep, int trials, const std::string& error) {
  const bool ok = rep != nullptr;
  Record r;
  r.add("case_id", case_id)
      .add("kind", std::string(kind))
      .add("convention", std::string(to_string(conv)))
      .add("radius", opt_real(ok, ok ? rep->radius : 0.0))
      .add("d", opt_real(ok, ok ? rep->d : 0.0))
      .add("eval_radius", opt_real(ok, ok ? rep->eval_radius : 0.0))
      .add("s_at_root", opt_real(ok, ok ? rep->s_at_root : 0.0))
      .add("s_above_root", opt_real(ok && !std::isnan(rep->s_above_root), ok ? rep->s_above_root : 0.0))
      .add("delta", opt_real(ok, ok ? rep->delta : 0.0))
      .add("gap", opt_real(ok, ok ? rep->gap : 0.0))
      .add("tolerance", opt_real(ok, ok ? rep->tolerance : 0.0))
      .add("tail_budget", opt_real(ok, ok ? rep->tail_budget : 0.0))
      .add("trials", std::int64_t{trials})
      .add("passed", ok && rep->passed)
      .add("audit_only", ok && rep->audit_only)
      .add("error", error);
  return r;
}

struct VerifyCommand {
  CLI::App* app;
  FlagSet flags;

  explicit VerifyCommand(CLI::App& root)
      : app(root.add_subcommand("verify", "root identity, sharpness and fuzz checks")),
        flags(app,
              with_case_flags({{"m", "restrict m (list; default 1,2)"},
                               {"N", "restrict N (list or range; default 1..8)"},
                               {"mu", "restrict mu (list; default 0,1)"},
                               {"lambda", "restrict lambda (list; default 0,1)"},
                               {"tol", "identity tolerance |S(R) - d| (default 1e-8)"},
                               {"delta", "offset for the sharpness probe R + delta (default 1e-3)"},
                               {"trials", "fuzz trials per case, 0 disables (default 100)"},
                               {"seed", "fuzz seed (default 42)"},
                               {"r-fraction", "fuzz evaluation radius as a fraction of R (default 0.99)"},
                               {"threads", "worker threads (default: hardware concurrency)"}}),
              true) {}

  std::vector<VerifyCase> select_cases(const Settings& s) const {
    std::vector<ClassKind> kinds = {ClassKind::ph0_alpha, ClassKind::ph0_m, ClassKind::wh0_alpha};
    if (s.has("class")) {
      const ClassKind kind = class_from(s);
      reject_foreign_param(s, kind);
      kinds = {kind};
    } else if (s.has("alpha") || s.has("M")) {
      std::erase_if(kinds, [&](ClassKind k) { return !s.has(param_key(k)); });
    }
    const auto ms = s.integer_list_or("m", "1,2");
    const auto Ns = s.integer_list_or("N", "1..8");
    const auto mus = s.real_list_or("mu", "0,1");
    const auto lambdas = s.real_list_or("lambda", "0,1");

    std::vector<VerifyCase> cases;
    for (ClassKind kind : kinds) {
      std::vector<double> params = lattice_params(kind);
      if (s.has(param_key(kind))) params = s.real_list_or(param_key(kind), "");
      for (double p : params) {
        const ClassSpec spec = spec_from(kind, p);
        for (auto m : ms) {
          for (auto N : Ns) {
            for (double mu : mus) {
              for (double lambda : lambdas) {
                cases.push_back({spec, params_from(m, N, mu, lambda)});
              }
            }
          }
        }
      }
    }
    return cases;
  }

  int run(std::ostream& out, std::ostream& err) const {
    const Settings s = flags.resolve();
    const std::vector<VerifyCase> cases = select_cases(s);
    const Convention conv = convention_from(s);
    const Format format = format_from(s);
    const double tol = s.real_or("tol", 1e-8);
    if (!(tol > 0.0)) throw UsageError("tol must be positive");
    const double delta = s.real_or("delta", 1e-3);
    if (!(delta > 0.0 && delta < 1.0)) throw UsageError("delta must lie in (0, 1)");
    const std::int64_t trials = s.integer_or("trials", 100);
    if (trials < 0 || trials > 1000000) throw UsageError("trials must be in [0, 1000000]");
    const std::int64_t seed_raw = s.integer_or("seed", 42);
    if (seed_raw < 0) throw UsageError("seed must be >= 0");
    const double r_fraction = s.real_or("r-fraction", 0.99);
    if (!(r_fraction > 0.0 && r_fraction < 1.0)) throw UsageError("r-fraction must lie in (0, 1)");
    const unsigned threads = threads_from(s);

    std::vector<VerifyRow> rows;
    for (const auto& c : cases) {
      try {
        require_convention(c.spec, c.params, conv);
      } catch (const ConventionError& e) {
        throw UsageError(make_case_id(c.spec, c.params) + ": " + e.what());
      }
      rows.push_back({c, make_case_id(c.spec, c.params), {}, {}, static_cast<int>(trials), {}});
    }
    std::sort(rows.begin(), rows.end(),
              [](const VerifyRow& a, const VerifyRow& b) { return a.case_id < b.case_id; });
    rows.erase(std::unique(rows.begin(), rows.end(),
                           [](const VerifyRow& a, const VerifyRow& b) {
                             return a.case_id == b.case_id;
                           }),
               rows.end());

    parallel_for(rows.size(), threads, [&](std::size_t i) {
      VerifyRow& row = rows[i];
      try {
        row.sharp = check_root_and_sharpness(row.c.spec, row.c.params, conv, tol, delta);
        if (trials > 0) {
          try {
            const auto reps = fuzz_admissible(row.c.spec, row.c.params, conv,
                                              static_cast<int>(trials),
                                              static_cast<std::uint64_t>(seed_raw), r_fraction);
            const auto worst = std::max_element(
                reps.begin(), reps.end(),
                [](const VerificationReport& a, const VerificationReport& b) { return a.gap < b.gap; });
            row.fuzz = *worst;
          } catch (const CounterexampleFound& e) {
            row.fuzz = e.report();
          }
        }
      } catch (const std::exception& e) {
        row.error = e.what();
      }
    });

    std::vector<Record> records;
    std::vector<std::string> failures;
    for (const auto& row : rows) {
      const VerificationReport* sharp = row.sharp ? &*row.sharp : nullptr;
      records.push_back(verify_record(row.case_id, to_string(ReportKind::sharpness), conv, sharp, 1,
                                      row.error));
      if (!sharp || (!sharp->passed && !sharp->audit_only)) {
        failures.push_back(row.case_id + " (sharpness)");
      }
      if (trials > 0) {
        const VerificationReport* fz = row.fuzz ? &*row.fuzz : nullptr;
        records.push_back(verify_record(row.case_id, to_string(ReportKind::fuzz), conv, fz,
                                        row.trials, row.error));
        if (!fz || (!fz->passed && !fz->audit_only)) failures.push_back(row.case_id + " (fuzz)");
      }
    }
    emit(render(records, format, true), s, out);
    if (!failures.empty()) {
      for (const auto& f : failures) err << "verification failed: " << f << '\n';
      return kExitVerifyFailed;
    }
    return kExitOk;
  }
};

// ---------------------------------------------------------------- analytic

struct AnalyticCommand {
  CLI::App* app;
  FlagSet flags;

  explicit AnalyticCommand(CLI::App& root)
      : app(root.add_subcommand("analytic", "reference radii for bounded analytic functions")),
        flags(app,
              {{"variant", "rn | rn-prime | ra0 | ra0-prime"},
               {"N", "index for rn / rn-prime (integer >= 1)"},
               {"a0", "|a_0| in [0, 1) for ra0 / ra0-prime"},
               {"tol", "bisection tolerance in (0, 1e-3], default 1e-14"},
               {"format", "json | csv | table"},
               {"out", "also write the output bytes to this file"}},
              true) {}

  int run(std::ostream& out, std::ostream& err) const {
    const Settings s = flags.resolve();
    const std::string name = s.text("variant");
    const auto variant = parse_analytic_variant(name);
    if (!variant) throw UsageError("unknown variant '" + name + "' (rn | rn-prime | ra0 | ra0-prime)");
    const Format format = format_from(s);
    const double tol = solver_tol_from(s, 1e-14);
    const bool by_N = *variant == AnalyticVariant::r_n || *variant == AnalyticVariant::r_n_prime;
    if (by_N && s.has("a0")) throw UsageError("--a0 does not apply to variant " + name);
    if (!by_N && s.has("N")) throw UsageError("--N does not apply to variant " + name);

    Record r;
    r.add("variant", name);
    try {
      if (by_N) {
        const std::int64_t N = s.integer("N");
        if (N < 1 || N > 1000000) throw UsageError("N must be an integer in [1, 1000000]");
        const int n = static_cast<int>(N);
        const bool prime = *variant == AnalyticVariant::r_n_prime;
        const double radius = prime ? rogosinski_RN_prime(n, tol) : rogosinski_RN(n, tol);
        const double residual =
            prime ? rogosinski_RN_prime_equation(n, radius) : rogosinski_RN_equation(n, radius);
        r.add("N", N).add("a0", std::monostate{}).add("radius", radius).add("residual",
                                                                              std::abs(residual));
      } else {
        const double a0 = s.real("a0");
        if (!(a0 >= 0.0 && a0 < 1.0)) throw UsageError("a0 must lie in [0, 1)");
        const bool prime = *variant == AnalyticVariant::r_a0_prime;
        const double radius = prime ? refined_r_a0_prime(a0, tol) : refined_r_a0(a0);
        const Value residual =
            prime ? Value(std::abs(refined_r_a0_prime_equation(a0, radius))) : Value(std::monostate{});
        r.add("N", std::monostate{}).add("a0", a0).add("radius", radius).add("residual", residual);
      }
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    } catch (const SolverError& e) {
      err << "solver error: " << e.what() << '\n';
      return kExitSolver;
    }
    emit(render({r}, format, false), s, out);
    return kExitOk;
  }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Sharp Bohr-Rogosinski radii for harmonic mapping classes", "bohr-radius");
  app.require_subcommand(1);
  RadiusCommand radius(app);
  SweepCommand sweep(app);
  VerifyCommand verify(app);
  AnalyticCommand analytic(app);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (radius.app->parsed()) return radius.run(out, err);
    if (sweep.app->parsed()) return sweep.run(out, err);
    if (verify.app->parsed()) return verify.run(out, err);
    return analytic.run(out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConventionError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SolverError& e) {
    err << "solver error: " << e.what() << '\n';
    return kExitSolver;
  } catch (const ConvergenceError& e) {
    err << "solver error: " << e.what() << '\n';
    return kExitSolver;
  }
}

}  // namespace bohr::cli
