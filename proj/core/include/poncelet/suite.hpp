#pragma once

// Named theorem checks, randomized configuration sampling and reporting.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "poncelet/quadrangle.hpp"

namespace poncelet {

/// Preconditions a configuration must meet before a check may run on it.
struct Requirements {
  bool incenter = false;          // P is the incenter (otherwise an explicit P)
  bool conic = false;             // non-right ABC, P != H, P off the altitudes
  bool subtriangles = false;      // A HB HC, B HC HA, C HA HB nondegenerate
  bool off_circumcircle = false;  // P not on the circumcircle
  bool navneel = false;           // midpoint of Q Q* finite and off the sidelines
  bool isogonal_line = false;     // P', H' and the direction of OQ off the sidelines
};

struct CheckInfo {
  std::string_view id;
  std::string_view statement;
  Requirements req;
};

/// All checks, ordered T01..T26.
std::span<const CheckInfo> check_registry();

/// Index into check_registry() for an id such as "T09".
std::optional<std::size_t> find_check(std::string_view id);

template <class S>
struct Config {
  Triangle<S> triangle;
  std::optional<Point<S>> P;  // empty: P is the incenter
  std::string provenance;
};

/// Coordinates as strings ("p/q" on the exact backend, %.17g otherwise).
struct SerializedConfig {
  std::string backend;
  std::array<std::array<std::string, 2>, 3> vertices;
  std::optional<std::array<std::string, 2>> P;
  std::string provenance;
};

template <class S>
SerializedConfig serialize_config(const Config<S>& c);

struct CheckResult {
  std::string id;
  bool passed = false;
  double residual = 0.0;
  std::vector<std::string> flags;
  std::string error;
  double elapsed_seconds = 0.0;
  SerializedConfig config;
};

/// Reason the configuration fails the check's preconditions, if any.
template <class S>
std::optional<std::string> gate_violation(std::size_t check, const Config<S>& config,
                                          Tolerance tol = kDefaultTolerance);

/// Smallest dimensionless conditioning margin relevant to the check (sines
/// of angles, relative distances). Floating samplers reject below a floor.
template <class S>
double conditioning_margin(std::size_t check, const Config<S>& config);

/// Evaluates one check. Throws GateViolation when the configuration fails
/// the check's preconditions. Geometric failures inside a gated run are
/// reported as a failed result carrying the error text.
template <class S>
CheckResult run_check(std::size_t check, const Config<S>& config, Tolerance tol = kDefaultTolerance);

// ---------------------------------------------------------------------------
// Sampling.

struct SamplerOptions {
  double conditioning = 1e-3;   // float: minimum conditioning margin
  double min_area = 1.0;        // float: minimum triangle area
  double box = 10.0;            // float: vertices in [-box, box]^2
  int max_param = 20;           // exact: quarter-angle tangents n/d, |n|, d <= max_param
  int max_attempts = 20000;
};

/// Independent RNG seed for one (check, trial) pair; parallel execution
/// cannot reorder draws.
std::uint64_t stream_seed(std::uint64_t seed, std::size_t check, std::uint64_t trial);

/// Draws a configuration meeting the check's gate from the given stream.
/// Throws ExhaustedRejection after max_attempts rejected candidates.
template <class S>
Config<S> sample_config(std::uint64_t stream, std::size_t check, const SamplerOptions& opts = {},
                        Tolerance tol = kDefaultTolerance);

// ---------------------------------------------------------------------------
// Suite execution and reports.

struct SuiteOptions {
  std::vector<std::size_t> checks;  // indices into check_registry()
  std::uint64_t trials = 1;
  std::uint64_t seed = 1;
  Backend backend = Backend::kExact;
  Tolerance tol;
  unsigned jobs = 1;
  SamplerOptions sampler;
};

struct TrialFailure {
  std::uint64_t trial = 0;
  double residual = 0.0;
  std::string error;
  SerializedConfig config;
};

struct CheckReport {
  std::string id;
  std::string statement;
  std::uint64_t trials = 0;
  std::uint64_t passed = 0;
  std::uint64_t replayed = 0;  // float failures cleared by an exact or 50-digit replay
  double max_residual = 0.0;
  std::vector<std::string> flags;  // distinct flags raised, sorted
  std::vector<TrialFailure> failures;
  double elapsed_seconds = 0.0;

  bool ok() const { return failures.empty(); }
  bool vacuous() const { return trials == 0; }
};

struct Report {
  Backend backend = Backend::kExact;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  double tolerance = 0.0;
  std::vector<CheckReport> checks;
  double elapsed_seconds = 0.0;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok()) return false;
    return true;
  }
  double max_residual() const {
    double m = 0.0;
    for (const auto& c : checks) m = c.max_residual > m ? c.max_residual : m;
    return m;
  }
  std::size_t failure_count() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.failures.size();
    return n;
  }
};

Report verify_suite(const SuiteOptions& opts);

/// Stable JSON report. Timings are omitted unless requested so that
/// identical invocations produce identical bytes.
std::string serialize_report(const Report& report, bool include_timings = false);

extern const char* const kVersion;

// ---------------------------------------------------------------------------
// Which point do the circumcircles of A HB HC, B HC HA, C HA HB pass through:
// the midpoint M of Q Q*, or its isogonal conjugate?

struct NavneelExperiment {
  std::uint64_t trials = 0;
  std::uint64_t midpoint_on_all = 0;
  std::uint64_t conjugate_on_all = 0;
  double worst_conjugate_residual = 0.0;
  double best_midpoint_residual = 0.0;
};

NavneelExperiment run_navneel_experiment(std::uint64_t trials, std::uint64_t seed, double tolerance = 1e-9);

}  // namespace poncelet
