// Acceptance criteria. Prints one line per criterion and exits nonzero if any
// fails. Usage: poncelet_acceptance <path to poncelet CLI>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "json.hpp"
#include "oracle.hpp"
#include "poncelet/construct.hpp"
#include "poncelet/render.hpp"

using namespace poncelet;
using json = nlohmann::json;
using oracle::q;
using oracle::qp;
using QP = Point<Rational>;

namespace {

std::string g_cli;
std::filesystem::path g_tmp;

struct Run {
  int code = -1;
  std::string out;
  double seconds = 0.0;
};

Run run_cli(const std::string& args) {
  Run r;
  std::string cmd = g_cli + " " + args + " 2>&1";
  auto start = std::chrono::steady_clock::now();
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Collects failure notes for one criterion.
struct Verdict {
  std::vector<std::string> problems;
  std::string summary;

  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
  bool ok() const { return problems.empty(); }
};

// --- 1 and 2: suites through the CLI ----------------------------------------

Verdict exact_suite() {
  Verdict v;
  auto report = g_tmp / "exact.json";
  Run r = run_cli("verify --checks all --trials 300 --seed 1 --backend exact --report " + report.string());
  v.require(r.code == 0, "exit code " + std::to_string(r.code));
  v.require(r.seconds < 120.0, "took " + std::to_string(r.seconds) + " s");
  json j = json::parse(slurp(report), nullptr, false);
  if (j.is_discarded()) {
    v.require(false, "unreadable report");
    return v;
  }
  v.require(j["failure_count"] == 0, "failures reported");
  v.require(j["checks"].size() == 26, "expected 26 checks");
  for (const auto& c : j["checks"]) {
    v.require(c["passed"] == 300, c["id"].get<std::string>() + " passed " + c["passed"].dump());
    v.require(c["max_residual"] == 0, c["id"].get<std::string>() + " residual " + c["max_residual"].dump());
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "26 checks x 300 trials, all residuals 0, %.1f s", r.seconds);
  v.summary = buf;
  return v;
}

Verdict float_suite() {
  Verdict v;
  auto report = g_tmp / "float.json";
  Run r = run_cli("verify --checks all --trials 10000 --backend float --tolerance 1e-9 --report " + report.string());
  v.require(r.code == 0, "exit code " + std::to_string(r.code));
  v.require(r.seconds < 600.0, "took " + std::to_string(r.seconds) + " s");
  json j = json::parse(slurp(report), nullptr, false);
  if (j.is_discarded()) {
    v.require(false, "unreadable report");
    return v;
  }
  double worst = j["max_residual"].is_number() ? j["max_residual"].get<double>() : 1e300;
  v.require(j["failure_count"] == 0, "failures reported");
  v.require(worst < 1e-7, "max residual " + j["max_residual"].dump());
  std::uint64_t replayed = 0;
  for (const auto& c : j["checks"]) replayed += c["replayed"].get<std::uint64_t>();
  char buf[160];
  std::snprintf(buf, sizeof buf, "26 checks x 10000 trials, max residual %.3g, %llu replayed, %.1f s", worst,
                static_cast<unsigned long long>(replayed), r.seconds);
  v.summary = buf;
  return v;
}

// --- 3: fixtures -------------------------------------------------------------

Verdict fixtures() {
  Verdict v;
  auto pt = [](const json& j) { return qp(j[0].get<std::string>().c_str(), j[1].get<std::string>().c_str()); };
  auto sym = [](const char* fix, std::vector<std::string> names) {
    return json::parse(construct_json(*fixture(fix), Backend::kExact, names))["symbols"];
  };

  json s2 = sym("FIX2", {"HA", "HB", "HC", "X", "G", "GA", "GB", "GC"});
  v.require(pt(s2["HA"]) == qp("-3", "-9"), "FIX2 HA");
  v.require(pt(s2["HB"]) == qp("3/2", "3/2"), "FIX2 HB");
  v.require(pt(s2["HC"]) == qp("3", "9"), "FIX2 HC");
  v.require(pt(s2["X"]) == qp("15", "-3"), "FIX2 X");
  v.require(pt(s2["G"]) == qp("7/3", "1"), "FIX2 G");
  v.require(pt(s2["GA"]) == qp("3/2", "7/2"), "FIX2 GA");
  v.require(pt(s2["GB"]) == qp("2", "0"), "FIX2 GB");
  v.require(pt(s2["GC"]) == qp("-1/6", "-3/2"), "FIX2 GC");
  for (const char* name : {"G", "GA", "GB", "GC"}) {
    QP p = pt(s2[name]);
    v.require(p.x * p.x + p.y * p.y + q("7/6") * p.x - q("17/6") * p.y - q("19/3") == 0,
              std::string("FIX2 ") + name + " off the centroid circle");
  }

  json s1 = sym("FIX1", {"I", "Na", "Oa", "Of", "omega_f", "H", "Or", "OA", "Fe", "E"});
  v.require(pt(s1["I"]) == qp("1", "1"), "FIX1 I");
  v.require(pt(s1["Na"]) == qp("2", "1"), "FIX1 Na");
  v.require(pt(s1["Oa"]) == qp("1/2", "-1/2"), "FIX1 Oa");
  v.require(pt(s1["Of"]) == qp("1", "1/2"), "FIX1 Of");
  v.require(q(s1["omega_f"]["r2"].get<std::string>().c_str()) == q("5/4"), "FIX1 Fuhrmann r^2");
  v.require(dist2(pt(s1["H"]), pt(s1["Na"])) == 5, "FIX1 |H Na|^2");
  v.require(pt(s1["Or"]) == qp("0", "1/2"), "FIX1 Or");
  v.require(pt(s1["OA"]) == qp("1/2", "3/2"), "FIX1 OA");
  v.require(pt(s1["Fe"]) == qp("1", "2"), "FIX1 Fe");
  v.require(pt(s1["E"]) == qp("28/25", "-21/25"), "FIX1 E");

  json s3 = sym("FIX3", {"I", "r", "A0", "B0", "C0"});
  v.require(pt(s3["I"]) == qp("1/5", "0"), "FIX3 I");
  v.require(q(s3["r"].get<std::string>().c_str()) == q("12/25"), "FIX3 r");
  v.require(pt(s3["A0"]) == qp("-1", "0"), "FIX3 A0");
  v.require(pt(s3["B0"]) == qp("3/5", "-4/5"), "FIX3 B0");
  v.require(pt(s3["C0"]) == qp("3/5", "4/5"), "FIX3 C0");
  v.summary = "FIX1, FIX2, FIX3 coordinates reproduced exactly";
  return v;
}

// --- 4: oracle equivalences ----------------------------------------------------

Verdict oracles() {
  Verdict v;
  const std::size_t incenter_check = *find_check("T11");
  const std::size_t explicit_check = *find_check("T09");
  int fuhrmann_ok = 0, anti_ok = 0, involution_ok = 0, o_to_h_ok = 0, involution_n = 0;
  for (std::uint64_t trial = 0; trial < 1000; ++trial) {
    Config<Rational> c = sample_config<Rational>(stream_seed(101, incenter_check, trial), incenter_check);
    const Triangle<Rational>& t = c.triangle;
    CenterSet<Rational> cs = triangle_centers(t);
    auto h = partial_orthocenters(t.A, t.B, t.C, cs.I);
    ArcMidpoints<Rational> arcs = arc_midpoints(t, cs.I);
    // Fuhrmann vertices: oracle circumcenters against reflected arc midpoints.
    std::array<QP, 3> fv{oracle::circumcenter(h.HA, t.B, t.C), oracle::circumcenter(h.HB, t.C, t.A),
                         oracle::circumcenter(h.HC, t.A, t.B)};
    bool f = fv[0] == reflect(arcs.A0, t.side_a()) && fv[1] == reflect(arcs.B0, t.side_b()) &&
             fv[2] == reflect(arcs.C0, t.side_c());
    fuhrmann_ok += f;
    // Anti-Fuhrmann vertices equal H + I minus the Fuhrmann vertices.
    std::array<QP, 3> av{oracle::circumcenter(t.A, h.HB, h.HC), oracle::circumcenter(t.B, h.HC, h.HA),
                         oracle::circumcenter(t.C, h.HA, h.HB)};
    QP hi = cs.H + cs.I;
    anti_ok += av[0] == hi - fv[0] && av[1] == hi - fv[1] && av[2] == hi - fv[2];
    // Isogonal conjugation maps O to H.
    o_to_h_ok += same_hpoint(isogonal_conjugate(t, cs.O), HPoint<Rational>(oracle::orthocenter(t.A, t.B, t.C)));

    Config<Rational> e = sample_config<Rational>(stream_seed(202, explicit_check, trial), explicit_check);
    HPoint<Rational> qc = isogonal_conjugate(e.triangle, *e.P);
    if (!is_infinite(qc)) {
      ++involution_n;
      involution_ok += same_hpoint(isogonal_conjugate(e.triangle, to_point(qc)), HPoint<Rational>(*e.P));
    }
  }
  v.require(fuhrmann_ok == 1000, "Fuhrmann vertex mismatches: " + std::to_string(1000 - fuhrmann_ok));
  v.require(anti_ok == 1000, "anti-Fuhrmann mismatches: " + std::to_string(1000 - anti_ok));
  v.require(o_to_h_ok == 1000, "O -> H mismatches: " + std::to_string(1000 - o_to_h_ok));
  v.require(involution_ok == involution_n && involution_n > 900,
            "involution " + std::to_string(involution_ok) + "/" + std::to_string(involution_n));

  // Nagel point: 3G - 2I against the barycentric splitting (s-a : s-b : s-c).
  double worst = 0.0;
  for (std::uint64_t trial = 0; trial < 1000; ++trial) {
    Config<double> c = sample_config<double>(stream_seed(303, incenter_check, trial), incenter_check);
    const Triangle<double>& t = c.triangle;
    Point<double> na = nagel_point(incenter(t), centroid(t.A, t.B, t.C));
    Point<double> want = oracle::nagel_barycentric(t.A, t.B, t.C);
    double scale = std::max({1.0, std::abs(want.x), std::abs(want.y)});
    worst = std::max(worst, oracle::dist(na, want) / scale);
  }
  v.require(worst < 1e-9, "Nagel relative deviation " + std::to_string(worst));
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "1000 exact configs: Fuhrmann, anti-Fuhrmann, O->H, involution (%d); Nagel float deviation %.2g",
                involution_n, worst);
  v.summary = buf;
  return v;
}

// --- 5: which point do the three circles share --------------------------------

Verdict concurrence_point_experiment() {
  Verdict v;
  NavneelExperiment e = run_navneel_experiment(1000, 1, 1e-7);
  v.require(e.trials == 1000, "ran " + std::to_string(e.trials) + " trials");
  v.require(e.midpoint_on_all == 0, "midpoint M on all circles in " + std::to_string(e.midpoint_on_all) + " trials");
  v.require(e.conjugate_on_all == e.trials,
            "conjugate on all circles in only " + std::to_string(e.conjugate_on_all) + " trials");
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "isogonal conjugate of M on all circles %llu/%llu (worst %.2g); M itself %llu/%llu (closest %.2g)",
                static_cast<unsigned long long>(e.conjugate_on_all), static_cast<unsigned long long>(e.trials),
                e.worst_conjugate_residual, static_cast<unsigned long long>(e.midpoint_on_all),
                static_cast<unsigned long long>(e.trials), e.best_midpoint_residual);
  v.summary = buf;
  return v;
}

// --- 6: degenerate inputs ------------------------------------------------------

std::optional<std::string> gate_message(std::size_t check, const Config<Rational>& c) {
  try {
    run_check(check, c);
  } catch (const GeometryError& e) {
    if (e.code() == ErrorCode::kGateViolation) return std::string(e.what());
  }
  return std::nullopt;
}

Verdict degenerate() {
  Verdict v;
  const Triangle<Rational> scalene{qp("0", "0"), qp("6", "0"), qp("1", "3")};
  const Triangle<Rational> right{qp("0", "0"), qp("4", "0"), qp("0", "3")};
  const QP h = qp("1", "5/3");
  auto contains = [](const std::optional<std::string>& m, const char* s) {
    return m && m->find(s) != std::string::npos;
  };
  int conic_checks = 0;
  for (std::size_t i = 0; i < check_registry().size(); ++i) {
    const CheckInfo& info = check_registry()[i];
    std::string id(info.id);
    if (info.req.incenter) continue;
    v.require(contains(gate_message(i, {scalene, qp("2", "0"), "sideline"}), "P on a sideline"), id + " sideline");
    if (info.req.conic) {
      ++conic_checks;
      auto m = gate_message(i, {scalene, h, "P=H"});
      v.require(contains(m, "P equals H") || contains(m, "sub-triangle"), id + " P=H");
      v.require(contains(gate_message(i, {right, qp("1", "2"), "right"}), "right triangle"), id + " right triangle");
    } else {
      CheckResult r = run_check(i, Config<Rational>{right, qp("1", "2"), "right"});
      v.require(r.passed, id + " should run on right triangles: " + r.error);
    }
  }
  v.require(conic_checks >= 8, "too few conic checks");

  try {
    partial_orthocenters(scalene.A, scalene.B, scalene.C, qp("2", "0"));
    v.require(false, "partial orthocenters accepted a sideline point");
  } catch (const GeometryError& e) {
    v.require(e.code() == ErrorCode::kPOnSideline, "sideline error code");
  }
  Run cli = run_cli("construct --triangle '0,0;6,0;1,3' --point 3,0");
  v.require(cli.code == 2 && cli.out.find("POnSideline") != std::string::npos, "CLI sideline exit code");

  double s = std::sqrt(3.0) / 2;
  Triangle<double> eq{{1, 0}, {-0.5, s}, {-0.5, -s}};
  CenterSet<double> cs = triangle_centers(eq);
  v.require(fuhrmann(eq, cs).point_circle, "equilateral Fuhrmann circle not flagged");
  v.require(anti_fuhrmann(eq, cs).point_circle, "equilateral anti-Fuhrmann circle not flagged");
  for (std::size_t i = 0; i < check_registry().size(); ++i) {
    if (!check_registry()[i].req.incenter) continue;
    auto why = gate_violation(i, Config<double>{eq, std::nullopt, "equilateral"});
    v.require(why && *why == "equilateral triangle", std::string(check_registry()[i].id) + " equilateral gate");
  }
  v.summary = "sideline P, P = H, right triangles and equilateral point circles give typed errors or flags";
  return v;
}

// --- 7: determinism ------------------------------------------------------------

Verdict determinism() {
  Verdict v;
  auto twice = [&](const std::string& args, const std::filesystem::path& a, const std::filesystem::path& b,
                   const std::string& label) {
    Run r1 = run_cli(args + " " + a.string());
    Run r2 = run_cli(args + " " + b.string());
    v.require(r1.code == 0 && r2.code == 0, label + " exit codes");
    v.require(r1.out == r2.out, label + " stdout differs");
    std::string x = slurp(a), y = slurp(b);
    v.require(!x.empty() && x == y, label + " output differs");
  };
  twice("verify --checks all --trials 25 --backend exact --report", g_tmp / "d1.json", g_tmp / "d2.json",
        "exact verify");
  twice("verify --checks all --trials 500 --backend float --report", g_tmp / "d3.json", g_tmp / "d4.json",
        "float verify");
  // Thread count must not change the report.
  Run j1 = run_cli("verify --checks all --trials 200 --backend float --jobs 1 --report " + (g_tmp / "j1.json").string());
  Run j4 = run_cli("verify --checks all --trials 200 --backend float --jobs 4 --report " + (g_tmp / "j4.json").string());
  v.require(j1.code == 0 && j4.code == 0 && slurp(g_tmp / "j1.json") == slurp(g_tmp / "j4.json"),
            "report depends on --jobs");
  int figures = 0;
  for (const char* spec : {"--fixture FIX2 --figure conc_circum", "--fixture FIX2 --figure centroids",
                           "--fixture FIX1 --figure nagel", "--fixture FIX1 --figure fuhrmann",
                           "--fixture FIX3 --figure fuhrmann", "--fixture FIX3 --figure centroids --backend float"}) {
    twice(std::string("render ") + spec + " --out", g_tmp / "r1.svg", g_tmp / "r2.svg", spec);
    ++figures;
  }
  v.summary = "verify (exact, float, 1 vs 4 jobs) and " + std::to_string(figures) + " renders byte-identical";
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: poncelet_acceptance <poncelet CLI>\n";
    return 2;
  }
  g_cli = argv[1];
  g_tmp = std::filesystem::temp_directory_path() / ("poncelet_acceptance_" + std::to_string(getpid()));
  std::filesystem::create_directories(g_tmp);

  struct Criterion {
    const char* name;
    std::function<Verdict()> run;
  };
  const Criterion criteria[] = {
      {"1 exact suite", exact_suite},
      {"2 float suite", float_suite},
      {"3 fixtures", fixtures},
      {"4 oracle equivalences", oracles},
      {"5 circle concurrence point", concurrence_point_experiment},
      {"6 degenerate handling", degenerate},
      {"7 determinism", determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (v.ok() ? "PASS" : "FAIL") << "  " << c.name << ": ";
    if (v.ok()) {
      std::cout << v.summary << "\n";
    } else {
      ++failed;
      for (std::size_t i = 0; i < v.problems.size() && i < 5; ++i) std::cout << (i ? "; " : "") << v.problems[i];
      if (v.problems.size() > 5) std::cout << "; ... " << v.problems.size() - 5 << " more";
      std::cout << "\n";
    }
    std::cout.flush();
  }
  std::filesystem::remove_all(g_tmp);
  std::cout << (failed ? "FAIL" : "PASS") << "  " << (7 - failed) << "/7 criteria\n";
  return failed ? 1 : 0;
}
