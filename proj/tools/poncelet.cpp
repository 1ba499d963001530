#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "poncelet/construct.hpp"
#include "poncelet/render.hpp"
#include "poncelet/suite.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

using poncelet::Backend;

Backend parse_backend(const std::string& s) {
  if (s == "exact") return Backend::kExact;
  if (s == "float") return Backend::kFloat;
  poncelet::fail(poncelet::ErrorCode::kParse, "backend must be exact or float");
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<std::size_t> parse_checks(const std::string& s) {
  std::vector<std::size_t> out;
  if (s == "all") {
    for (std::size_t i = 0; i < poncelet::check_registry().size(); ++i) out.push_back(i);
    return out;
  }
  for (const std::string& id : split_list(s)) {
    auto idx = poncelet::find_check(id);
    if (!idx) poncelet::fail(poncelet::ErrorCode::kParse, "unknown check id " + id);
    out.push_back(*idx);
  }
  if (out.empty()) poncelet::fail(poncelet::ErrorCode::kParse, "no checks selected");
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) poncelet::fail(poncelet::ErrorCode::kParse, "cannot write " + path);
  f << text;
}

struct SceneFlags {
  std::string fixture;
  std::string triangle;
  std::string point;
  std::string backend = "exact";

  void attach(CLI::App* cmd) {
    cmd->add_option("--fixture", fixture, "FIX1, FIX2 or FIX3");
    cmd->add_option("--triangle", triangle, "vertices \"x,y;x,y;x,y\" (p/q accepted)");
    cmd->add_option("--point", point, "P as \"x,y\"; defaults to the incenter");
    cmd->add_option("--backend", backend, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  }

  poncelet::SceneInput scene() const {
    if (!fixture.empty()) {
      if (!triangle.empty() || !point.empty()) {
        poncelet::fail(poncelet::ErrorCode::kParse, "--fixture excludes --triangle and --point");
      }
      auto fx = poncelet::fixture(fixture);
      if (!fx) poncelet::fail(poncelet::ErrorCode::kParse, "unknown fixture " + fixture);
      return *fx;
    }
    if (triangle.empty()) poncelet::fail(poncelet::ErrorCode::kParse, "need --fixture or --triangle");
    std::optional<std::string_view> p;
    if (!point.empty()) p = point;
    return poncelet::parse_scene(triangle, p);
  }
};

int run_verify(const std::string& checks, std::optional<std::uint64_t> trials, std::uint64_t seed,
               const std::string& backend, double tolerance, unsigned jobs, const std::string& report_path,
               bool timings) {
  poncelet::SuiteOptions opts;
  opts.checks = parse_checks(checks);
  opts.backend = parse_backend(backend);
  opts.trials = trials ? *trials : (opts.backend == Backend::kExact ? 300 : 10000);
  opts.seed = seed;
  opts.tol.eps = tolerance;
  opts.jobs = jobs;
  poncelet::Report report = poncelet::verify_suite(opts);
  for (const auto& c : report.checks) {
    const char* status = c.vacuous() ? "pass (vacuous)" : (c.ok() ? "pass" : "FAIL");
    std::printf("%s  %-14s %llu/%llu  max_residual %.3g  replayed %llu\n", c.id.c_str(), status,
                static_cast<unsigned long long>(c.passed), static_cast<unsigned long long>(c.trials), c.max_residual,
                static_cast<unsigned long long>(c.replayed));
    for (const auto& f : c.failures) {
      std::printf("    trial %llu: %s\n", static_cast<unsigned long long>(f.trial),
                  f.error.empty() ? "residual above tolerance" : f.error.c_str());
    }
  }
  std::printf("%zu checks, %zu failures, max residual %.3g, %s backend, seed %llu\n", report.checks.size(),
              report.failure_count(), report.max_residual(), std::string(poncelet::to_string(report.backend)).c_str(),
              static_cast<unsigned long long>(report.seed));
  if (!report_path.empty()) write_file(report_path, poncelet::serialize_report(report, timings));
  return report.ok() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadrangle and Fuhrmann geometry: verification, coordinates and figures"};
  app.set_version_flag("--version", std::string(poncelet::kVersion));
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run randomized theorem checks");
  std::string checks = "all", backend = "exact", report_path;
  std::optional<std::uint64_t> trials;
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
  unsigned jobs = 1;
  bool timings = false;
  verify->add_option("--checks", checks, "comma-separated ids (T01..T26) or all");
  verify->add_option("--trials", trials, "trials per check (default 300 exact, 10000 float)");
  verify->add_option("--seed", seed, "base seed");
  verify->add_option("--backend", backend, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  verify->add_option("--tolerance", tolerance, "relative tolerance of the float backend")
      ->check(CLI::PositiveNumber);
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 1024u));
  verify->add_option("--report", report_path, "write the JSON report here");
  verify->add_flag("--timings", timings, "include wall times in the report");

  auto* construct = app.add_subcommand("construct", "emit coordinates of named objects");
  SceneFlags construct_scene;
  construct_scene.attach(construct);
  std::string objects, emit = "json";
  construct->add_option("--objects", objects, "comma-separated symbols (default: all that are defined)");
  construct->add_option("--emit", emit, "output format")->check(CLI::IsMember({"json"}));

  auto* render = app.add_subcommand("render", "draw a figure as SVG");
  SceneFlags render_scene;
  render_scene.attach(render);
  std::string figure, out_path;
  int width = 800, height = 800;
  render->add_option("--figure", figure, "conc_circum, centroids, nagel or fuhrmann")->required();
  render->add_option("--out", out_path, "output SVG path")->required();
  render->add_option("--width", width, "pixels")->check(CLI::Range(16, 16384));
  render->add_option("--height", height, "pixels")->check(CLI::Range(16, 16384));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*verify) {
      return run_verify(checks, trials, seed, backend, tolerance, jobs, report_path, timings);
    }
    if (*construct) {
      std::vector<std::string> names;
      if (!objects.empty()) names = split_list(objects);
      std::cout << poncelet::construct_json(construct_scene.scene(), parse_backend(construct_scene.backend), names);
      return kPass;
    }
    if (*render) {
      auto fig = poncelet::parse_figure(figure);
      if (!fig) poncelet::fail(poncelet::ErrorCode::kParse, "unknown figure " + figure);
      poncelet::RenderOptions ro;
      ro.width = width;
      ro.height = height;
      ro.backend = parse_backend(render_scene.backend);
      write_file(out_path, poncelet::render_svg(render_scene.scene(), *fig, ro));
      return kPass;
    }
  } catch (const poncelet::GeometryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
