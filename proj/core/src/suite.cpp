#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <thread>

#include "json.hpp"

#include "poncelet/suite.hpp"

namespace poncelet {

const char* const kVersion = "0.1.0";

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(rng() % span);
}

/// n/d with d in [1, m] and n in [-k*d, k*d].
Rational random_fraction(std::mt19937_64& rng, int max_den, std::int64_t bound) {
  std::int64_t d = uniform_int(rng, 1, max_den);
  std::int64_t n = uniform_int(rng, -bound * d, bound * d);
  Rational q(static_cast<long>(n), static_cast<long>(d));
  q.canonicalize();
  return q;
}

/// Quarter-angle tangent n/d with n in [-m, m], d in [1, m].
Rational random_tangent(std::mt19937_64& rng, int max_param) {
  std::int64_t d = uniform_int(rng, 1, max_param);
  std::int64_t n = uniform_int(rng, -max_param, max_param);
  Rational q(static_cast<long>(n), static_cast<long>(d));
  q.canonicalize();
  return q;
}

std::string describe(const Rational& q) { return q.get_str(); }

Config<Rational> sample_exact(std::uint64_t stream, std::size_t check, const SamplerOptions& opts, Tolerance tol) {
  std::mt19937_64 rng(stream);
  const CheckInfo& info = check_registry()[check];
  for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
    Rational qa = random_tangent(rng, opts.max_param);
    Rational qb = random_tangent(rng, opts.max_param);
    Rational qc = random_tangent(rng, opts.max_param);
    Config<Rational> cfg;
    try {
      cfg.triangle = rational_triangle(qa, qb, qc).triangle;
    } catch (const GeometryError&) {
      continue;
    }
    cfg.provenance = "rational_triangle q=(" + describe(qa) + "," + describe(qb) + "," + describe(qc) + ")";
    if (!info.req.incenter) {
      cfg.P = Point<Rational>{random_fraction(rng, opts.max_param, 2), random_fraction(rng, opts.max_param, 2)};
      cfg.provenance += " P=(" + describe(cfg.P->x) + "," + describe(cfg.P->y) + ")";
    }
    if (!gate_violation(check, cfg, tol)) return cfg;
  }
  fail(ErrorCode::kExhaustedRejection, "no admissible exact configuration for " + std::string(info.id));
}

Config<double> sample_float(std::uint64_t stream, std::size_t check, const SamplerOptions& opts, Tolerance tol) {
  std::mt19937_64 rng(stream);
  const CheckInfo& info = check_registry()[check];
  const double b = opts.box;
  for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
    Config<double> cfg;
    auto pt = [&] { return Point<double>{uniform(rng, -b, b), uniform(rng, -b, b)}; };
    cfg.triangle = {pt(), pt(), pt()};
    if (!info.req.incenter) cfg.P = pt();
    const Triangle<double>& t = cfg.triangle;
    if (std::abs(orient(t.A, t.B, t.C)) / 2 <= opts.min_area) continue;
    if (gate_violation(check, cfg, tol)) continue;
    if (conditioning_margin(check, cfg) < opts.conditioning) continue;
    cfg.provenance = "uniform box=" + format_scalar(b) + " attempt=" + std::to_string(attempt);
    return cfg;
  }
  fail(ErrorCode::kExhaustedRejection, "no admissible float configuration for " + std::string(info.id));
}

template <class T, class S>
Config<T> convert_config(const Config<S>& c) {
  auto cv = [](const Point<S>& p) { return Point<T>{scalar_cast<T>(p.x), scalar_cast<T>(p.y)}; };
  Config<T> out;
  out.triangle = {cv(c.triangle.A), cv(c.triangle.B), cv(c.triangle.C)};
  if (c.P) out.P = cv(*c.P);
  out.provenance = c.provenance;
  return out;
}

/// One evaluated trial, before folding into the per-check report.
struct Outcome {
  bool passed = false;
  bool replayed = false;
  double residual = 0.0;
  std::string error;
  std::vector<std::string> flags;
  double elapsed = 0.0;
  SerializedConfig config;
};

/// Replays a failing float configuration at higher precision: exactly when
/// P is explicit (doubles are rationals), in 50 digits when P is the incenter,
/// whose coordinates are generally irrational.
bool replay(std::size_t check, const Config<double>& cfg) {
  try {
    if (cfg.P) {
      auto exact = convert_config<Rational>(cfg);
      if (gate_violation(check, exact)) return false;
      return run_check(check, exact).passed;
    }
    auto wide = convert_config<Float50>(cfg);
    Tolerance tight{1e-30};
    if (gate_violation(check, wide, tight)) return false;
    return run_check(check, wide, tight).passed;
  } catch (const GeometryError&) {
    return false;
  }
}

Outcome evaluate(const SuiteOptions& opts, std::size_t check, std::uint64_t trial) {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  std::uint64_t stream = stream_seed(opts.seed, check, trial);
  try {
    CheckResult r;
    if (opts.backend == Backend::kExact) {
      r = run_check(check, sample_exact(stream, check, opts.sampler, opts.tol), opts.tol);
    } else {
      Config<double> cfg = sample_float(stream, check, opts.sampler, opts.tol);
      r = run_check(check, cfg, opts.tol);
      if (!r.passed && r.error.empty() && replay(check, cfg)) {
        o.replayed = true;
        r.passed = true;
      }
    }
    o.passed = r.passed;
    o.residual = r.residual;
    o.error = r.error;
    o.flags = std::move(r.flags);
    o.config = std::move(r.config);
  } catch (const GeometryError& e) {
    o.passed = false;
    o.residual = std::numeric_limits<double>::infinity();
    o.error = e.what();
  }
  o.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return o;
}

nlohmann::ordered_json config_json(const SerializedConfig& c) {
  nlohmann::ordered_json j;
  j["backend"] = c.backend;
  j["vertices"] = c.vertices;
  if (c.P) {
    j["P"] = *c.P;
  } else {
    j["P"] = "incenter";
  }
  j["provenance"] = c.provenance;
  return j;
}

/// Residuals print as shortest round-trip decimals; infinity (an error) as null.
nlohmann::ordered_json residual_json(double r) {
  if (!std::isfinite(r)) return nullptr;
  return r;
}

}  // namespace

std::uint64_t stream_seed(std::uint64_t seed, std::size_t check, std::uint64_t trial) {
  return splitmix(splitmix(splitmix(seed) ^ static_cast<std::uint64_t>(check)) ^ trial);
}

template <class S>
Config<S> sample_config(std::uint64_t stream, std::size_t check, const SamplerOptions& opts, Tolerance tol) {
  if constexpr (kIsExact<S>) {
    return sample_exact(stream, check, opts, tol);
  } else if constexpr (std::is_same_v<S, double>) {
    return sample_float(stream, check, opts, tol);
  } else {
    return convert_config<S>(sample_float(stream, check, opts, tol));
  }
}

template Config<Rational> sample_config<Rational>(std::uint64_t, std::size_t, const SamplerOptions&, Tolerance);
template Config<double> sample_config<double>(std::uint64_t, std::size_t, const SamplerOptions&, Tolerance);
template Config<Float50> sample_config<Float50>(std::uint64_t, std::size_t, const SamplerOptions&, Tolerance);

Report verify_suite(const SuiteOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  const auto registry = check_registry();
  for (std::size_t c : opts.checks) {
    if (c >= registry.size()) fail(ErrorCode::kParse, "check index out of range");
  }

  const std::uint64_t per_check = opts.trials;
  const std::size_t total = opts.checks.size() * per_check;
  std::vector<Outcome> outcomes(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      outcomes[i] = evaluate(opts, opts.checks[i / per_check], i % per_check);
    }
  };
  unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1 || total < 2) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  Report report;
  report.backend = opts.backend;
  report.seed = opts.seed;
  report.trials = opts.trials;
  report.tolerance = opts.tol.eps;
  for (std::size_t k = 0; k < opts.checks.size(); ++k) {
    const CheckInfo& info = registry[opts.checks[k]];
    CheckReport cr;
    cr.id = std::string(info.id);
    cr.statement = std::string(info.statement);
    cr.trials = per_check;
    std::set<std::string> flags;
    for (std::uint64_t t = 0; t < per_check; ++t) {
      Outcome& o = outcomes[k * per_check + t];
      cr.elapsed_seconds += o.elapsed;
      flags.insert(o.flags.begin(), o.flags.end());
      if (o.replayed) ++cr.replayed;
      if (!std::isnan(o.residual)) cr.max_residual = std::max(cr.max_residual, o.residual);
      if (o.passed) {
        ++cr.passed;
      } else {
        cr.failures.push_back({t, o.residual, o.error, std::move(o.config)});
      }
    }
    cr.flags.assign(flags.begin(), flags.end());
    report.checks.push_back(std::move(cr));
  }
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string serialize_report(const Report& report, bool include_timings) {
  nlohmann::ordered_json j;
  j["version"] = kVersion;
  j["backend"] = std::string(to_string(report.backend));
  j["seed"] = report.seed;
  j["trials"] = report.trials;
  j["tolerance"] = report.tolerance;
  j["ok"] = report.ok();
  j["failure_count"] = report.failure_count();
  j["max_residual"] = residual_json(report.max_residual());
  if (include_timings) j["elapsed_seconds"] = report.elapsed_seconds;
  auto& checks = j["checks"] = nlohmann::ordered_json::array();
  for (const CheckReport& c : report.checks) {
    nlohmann::ordered_json cj;
    cj["id"] = c.id;
    cj["statement"] = c.statement;
    cj["trials"] = c.trials;
    cj["passed"] = c.passed;
    cj["replayed"] = c.replayed;
    cj["vacuous"] = c.vacuous();
    cj["max_residual"] = residual_json(c.max_residual);
    cj["flags"] = c.flags;
    auto& failures = cj["failures"] = nlohmann::ordered_json::array();
    for (const TrialFailure& f : c.failures) {
      nlohmann::ordered_json fj;
      fj["trial"] = f.trial;
      fj["residual"] = residual_json(f.residual);
      fj["error"] = f.error;
      fj["config"] = config_json(f.config);
      failures.push_back(std::move(fj));
    }
    if (include_timings) cj["elapsed_seconds"] = c.elapsed_seconds;
    checks.push_back(std::move(cj));
  }
  return j.dump(2) + "\n";
}

NavneelExperiment run_navneel_experiment(std::uint64_t trials, std::uint64_t seed, double tolerance) {
  Tolerance tol{tolerance};
  std::size_t check = *find_check("T06");
  NavneelExperiment out;
  out.best_midpoint_residual = std::numeric_limits<double>::infinity();
  SamplerOptions opts;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    Config<double> cfg = sample_float(stream_seed(seed, check, trial), check, opts, tol);
    const Triangle<double>& t = cfg.triangle;
    QuadrangleDerived<double> q = derive_quadrangle(t.A, t.B, t.C, *cfg.P, tol);
    Point<double> m = *q.M;
    Point<double> conj = to_point(isogonal_conjugate(t, m, tol), tol);
    const std::array<Circle<double>, 3> circles{circle_through(t.A, q.HB, q.HC, tol),
                                                circle_through(t.B, q.HC, q.HA, tol),
                                                circle_through(t.C, q.HA, q.HB, tol)};
    double worst_m = 0.0, worst_c = 0.0;
    bool m_all = true, c_all = true;
    for (const auto& circ : circles) {
      auto dm = on_circle_defect(m, circ);
      auto dc = on_circle_defect(conj, circ);
      worst_m = std::max(worst_m, normalized(dm));
      worst_c = std::max(worst_c, normalized(dc));
      m_all = m_all && holds(dm, tol);
      c_all = c_all && holds(dc, tol);
    }
    ++out.trials;
    if (m_all) ++out.midpoint_on_all;
    if (c_all) ++out.conjugate_on_all;
    out.worst_conjugate_residual = std::max(out.worst_conjugate_residual, worst_c);
    out.best_midpoint_residual = std::min(out.best_midpoint_residual, worst_m);
  }
  return out;
}

}  // namespace poncelet
