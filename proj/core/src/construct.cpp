#include "poncelet/construct.hpp"

#include <cstdlib>
#include <functional>
#include <map>

#include "json.hpp"

namespace poncelet {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::array<std::string_view, 47> kSymbols{
    "A",  "B",  "C",  "P",  "G",  "O",  "H",  "N",  "R2", "I",  "r",  "Na", "Fe", "E",  "HA", "HB",
    "HC", "conic", "Z", "Hp", "Pp", "X",  "Xp", "Q",  "Qs", "M",  "GA", "GB", "GC", "Gp", "Ga", "Gb",
    "Gc", "T",  "A0", "B0", "C0", "Oa", "Ob", "Oc", "Of", "omega_f", "OA", "OB", "OC", "Or", "omega_r"};

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string trim(std::string s) {
  auto is_space = [](char c) { return c == ' ' || c == '\t'; };
  while (!s.empty() && is_space(s.front())) s.erase(s.begin());
  while (!s.empty() && is_space(s.back())) s.pop_back();
  return s;
}

std::array<std::string, 2> parse_pair(std::string_view text) {
  auto parts = split(text, ',');
  if (parts.size() != 2) fail(ErrorCode::kParse, "expected \"x,y\", got \"" + std::string(text) + "\"");
  std::array<std::string, 2> out{trim(parts[0]), trim(parts[1])};
  for (const auto& c : out) parse_rational(c);  // validates
  return out;
}

template <class S>
S parse_scalar(const std::string& text) {
  Rational q = parse_rational(text);
  if constexpr (std::is_same_v<S, Rational>) {
    return q;
  } else if constexpr (std::is_same_v<S, double>) {
    // strtod rounds correctly; mpq_get_d truncates.
    if (text.find('/') == std::string::npos) return std::strtod(text.c_str(), nullptr);
    return q.get_num().get_d() / q.get_den().get_d();
  } else {
    return scalar_cast<S>(q);
  }
}

template <class S>
Json scalar_json(const S& v) {
  if constexpr (kIsExact<S>) {
    return format_scalar(v);
  } else {
    return to_double(v);
  }
}

template <class S>
Json point_json(const Point<S>& p) {
  return Json::array({scalar_json(p.x), scalar_json(p.y)});
}

template <class S>
Json hpoint_json(const HPoint<S>& p) {
  if (p.W == 0) {
    Json j;
    j["direction"] = Json::array({scalar_json(p.X), scalar_json(p.Y)});
    return j;
  }
  return point_json(Point<S>{S(p.X / p.W), S(p.Y / p.W)});
}

template <class S>
Json circle_json(const Circle<S>& c) {
  Json j;
  j["center"] = point_json(c.center);
  j["r2"] = scalar_json(c.r2);
  return j;
}

template <class S>
Json conic_json(const Conic<S>& k) {
  std::array<S, 6> v{k.a, k.b, k.c, k.d, k.e, k.f};
  S lead(0);
  for (const S& x : v) {
    if (x != 0) {
      lead = x;
      break;
    }
  }
  Json j = Json::array();
  for (const S& x : v) j.push_back(scalar_json(lead == 0 ? x : S(x / lead)));
  return j;
}

/// Lazily built objects of one configuration; each group is computed once.
template <class S>
class Scene {
 public:
  explicit Scene(Config<S> cfg) : cfg_(std::move(cfg)), t_(cfg_.triangle) { require_nondegenerate(t_); }

  Json value(std::string_view name) {
    static const std::map<std::string_view, std::function<Json(Scene&)>> table{
        {"A", [](Scene& s) { return point_json(s.t_.A); }},
        {"B", [](Scene& s) { return point_json(s.t_.B); }},
        {"C", [](Scene& s) { return point_json(s.t_.C); }},
        {"P", [](Scene& s) { return point_json(s.P()); }},
        {"G", [](Scene& s) { return point_json(s.euler().G); }},
        {"O", [](Scene& s) { return point_json(s.euler().O); }},
        {"H", [](Scene& s) { return point_json(s.euler().H); }},
        {"N", [](Scene& s) { return point_json(s.euler().N); }},
        {"R2", [](Scene& s) { return scalar_json(s.euler().R2); }},
        {"I", [](Scene& s) { return point_json(s.centers().I); }},
        {"r", [](Scene& s) { return scalar_json(s.centers().r); }},
        {"Na", [](Scene& s) { return point_json(s.centers().Na); }},
        {"Fe", [](Scene& s) { return point_json(s.require_scalene(s.centers().Fe)); }},
        {"E", [](Scene& s) { return point_json(s.require_scalene(s.centers().E)); }},
        {"HA", [](Scene& s) { return point_json(s.partial().HA); }},
        {"HB", [](Scene& s) { return point_json(s.partial().HB); }},
        {"HC", [](Scene& s) { return point_json(s.partial().HC); }},
        {"conic", [](Scene& s) { return conic_json(s.quad().conic); }},
        {"Z", [](Scene& s) { return point_json(s.quad().Z); }},
        {"Hp", [](Scene& s) { return point_json(s.quad().Hp); }},
        {"Pp", [](Scene& s) { return point_json(s.quad().Pp); }},
        {"X", [](Scene& s) { return point_json(s.X()); }},
        {"Xp", [](Scene& s) { return point_json(s.Xp()); }},
        {"Q", [](Scene& s) { return hpoint_json(s.Q()); }},
        {"Qs", [](Scene& s) { return hpoint_json(invert(s.circum(), s.Q())); }},
        {"M", [](Scene& s) { return point_json(s.M()); }},
        {"GA", [](Scene& s) { return point_json(s.centroids().GA); }},
        {"GB", [](Scene& s) { return point_json(s.centroids().GB); }},
        {"GC", [](Scene& s) { return point_json(s.centroids().GC); }},
        {"Gp", [](Scene& s) { return point_json(s.centroids().Gp); }},
        {"Ga", [](Scene& s) { return point_json(s.centroids().Ga); }},
        {"Gb", [](Scene& s) { return point_json(s.centroids().Gb); }},
        {"Gc", [](Scene& s) { return point_json(s.centroids().Gc); }},
        {"T", [](Scene& s) { return point_json(s.centroids().T); }},
        {"A0", [](Scene& s) { return point_json(s.arcs().A0); }},
        {"B0", [](Scene& s) { return point_json(s.arcs().B0); }},
        {"C0", [](Scene& s) { return point_json(s.arcs().C0); }},
        {"Oa", [](Scene& s) { return point_json(s.fuhrmann().Oa); }},
        {"Ob", [](Scene& s) { return point_json(s.fuhrmann().Ob); }},
        {"Oc", [](Scene& s) { return point_json(s.fuhrmann().Oc); }},
        {"Of", [](Scene& s) { return point_json(s.fuhrmann().Of); }},
        {"omega_f", [](Scene& s) { return circle_json(s.fuhrmann().omega); }},
        {"OA", [](Scene& s) { return point_json(s.anti().OA); }},
        {"OB", [](Scene& s) { return point_json(s.anti().OB); }},
        {"OC", [](Scene& s) { return point_json(s.anti().OC); }},
        {"Or", [](Scene& s) { return point_json(s.anti().Or); }},
        {"omega_r", [](Scene& s) { return circle_json(s.anti().omega); }},
    };
    auto it = table.find(name);
    if (it == table.end()) fail(ErrorCode::kParse, "unknown object \"" + std::string(name) + "\"");
    return it->second(*this);
  }

 private:
  bool p_is_incenter() const { return !cfg_.P.has_value(); }

  const Point<S>& P() {
    if (!P_) P_ = cfg_.P ? *cfg_.P : centers().I;
    return *P_;
  }

  const EulerCenters<S>& euler() {
    if (!euler_) euler_ = classic_centers(t_);
    return *euler_;
  }

  Circle<S> circum() { return {euler().O, euler().R2}; }

  const CenterSet<S>& centers() {
    if (!centers_) centers_ = triangle_centers(t_);
    return *centers_;
  }

  const Point<S>& require_scalene(const std::optional<Point<S>>& p) {
    if (!p) fail(ErrorCode::kEquilateralDegenerate, "undefined for an equilateral triangle");
    return *p;
  }

  const PartialOrthocenters<S>& partial() {
    if (!partial_) partial_ = partial_orthocenters(t_.A, t_.B, t_.C, P());
    return *partial_;
  }

  const QuadrangleDerived<S>& quad() {
    if (!quad_) quad_ = derive_quadrangle(t_.A, t_.B, t_.C, P());
    return *quad_;
  }

  Point<S> X() { return common_orthocenter(t_.A, t_.B, t_.C, P()); }

  /// Second common point of the circumcircles of A HB HC and B HC HA: the
  /// reflection of HC in their line of centers.
  Point<S> Xp() {
    const auto& h = partial();
    for (const auto& [u, v, w] : {std::array{t_.A, h.HB, h.HC}, std::array{t_.B, h.HC, h.HA},
                                  std::array{t_.C, h.HA, h.HB}}) {
      if (collinear(u, v, w)) fail(ErrorCode::kDegenerateSubTriangle, "sub-triangle is degenerate");
    }
    Point<S> oa = circumcenter(t_.A, h.HB, h.HC);
    Point<S> ob = circumcenter(t_.B, h.HC, h.HA);
    if (same_point(oa, ob)) fail(ErrorCode::kCoincidentPoints, "circumcircles of A HB HC and B HC HA coincide");
    return reflect(h.HC, line_through(oa, ob));
  }

  const HPoint<S>& Q() {
    if (!Q_) {
      require_off_sidelines(t_.A, t_.B, t_.C, P());
      Q_ = isogonal_conjugate(t_, P());
    }
    return *Q_;
  }

  Point<S> M() {
    HPoint<S> q = Q();
    HPoint<S> qs = invert(circum(), q);
    if (is_infinite(q) || is_infinite(qs)) fail(ErrorCode::kAtInfinity, "Q or Q* is at infinity");
    return midpoint(to_point(q), to_point(qs));
  }

  const CentroidSet<S>& centroids() {
    if (!centroids_) centroids_ = centroid_quadruples(t_.A, t_.B, t_.C, partial());
    return *centroids_;
  }

  const ArcMidpoints<S>& arcs() {
    if (!arcs_) arcs_ = arc_midpoints(t_, centers().I);
    return *arcs_;
  }

  /// For P = I the validated Fuhrmann construction; otherwise the same
  /// circumcenter definition with the given P.
  const FuhrmannSet<S>& fuhrmann() {
    if (!fuhrmann_) {
      if (p_is_incenter()) {
        fuhrmann_ = poncelet::fuhrmann(t_, centers());
      } else {
        const auto& h = partial();
        FuhrmannSet<S> f;
        f.Oa = circumcenter(h.HA, t_.B, t_.C);
        f.Ob = circumcenter(h.HB, t_.C, t_.A);
        f.Oc = circumcenter(h.HC, t_.A, t_.B);
        f.omega = detail::circle_or_point(t_, f.Oa, f.Ob, f.Oc, f.point_circle, kDefaultTolerance);
        f.Of = f.omega.center;
        fuhrmann_ = f;
      }
    }
    return *fuhrmann_;
  }

  const AntiFuhrmannSet<S>& anti() {
    if (!anti_) {
      if (p_is_incenter()) {
        anti_ = anti_fuhrmann(t_, centers());
      } else {
        const auto& h = partial();
        AntiFuhrmannSet<S> r;
        r.OA = circumcenter(t_.A, h.HB, h.HC);
        r.OB = circumcenter(t_.B, h.HC, h.HA);
        r.OC = circumcenter(t_.C, h.HA, h.HB);
        r.omega = detail::circle_or_point(t_, r.OA, r.OB, r.OC, r.point_circle, kDefaultTolerance);
        r.Or = r.omega.center;
        anti_ = r;
      }
    }
    return *anti_;
  }

  Config<S> cfg_;
  Triangle<S> t_;
  std::optional<Point<S>> P_;
  std::optional<EulerCenters<S>> euler_;
  std::optional<CenterSet<S>> centers_;
  std::optional<PartialOrthocenters<S>> partial_;
  std::optional<QuadrangleDerived<S>> quad_;
  std::optional<HPoint<S>> Q_;
  std::optional<CentroidSet<S>> centroids_;
  std::optional<ArcMidpoints<S>> arcs_;
  std::optional<FuhrmannSet<S>> fuhrmann_;
  std::optional<AntiFuhrmannSet<S>> anti_;
};

template <class S>
std::string construct_impl(const SceneInput& in, const std::vector<std::string>& objects) {
  Config<S> cfg = to_config<S>(in);
  Scene<S> scene(cfg);
  if (cfg.P) require_off_sidelines(cfg.triangle.A, cfg.triangle.B, cfg.triangle.C, *cfg.P, kDefaultTolerance);
  Json out;
  out["backend"] = kIsExact<S> ? "exact" : "float";
  Json& symbols = out["symbols"] = Json::object();
  if (!objects.empty()) {
    for (const std::string& name : objects) symbols[name] = scene.value(name);
    return out.dump(2) + "\n";
  }
  for (std::string_view name : kSymbols) {
    try {
      symbols[std::string(name)] = scene.value(std::string(name));
    } catch (const GeometryError&) {
    }
  }
  return out.dump(2) + "\n";
}

}  // namespace

std::optional<SceneInput> fixture(std::string_view name) {
  if (name == "FIX1") return SceneInput{{{{"0", "0"}, {"4", "0"}, {"0", "3"}}}, std::nullopt, "FIX1"};
  if (name == "FIX2") return SceneInput{{{{"0", "0"}, {"6", "0"}, {"1", "3"}}}, std::array<std::string, 2>{"3", "1"}, "FIX2"};
  if (name == "FIX3") {
    return SceneInput{{{{"1", "0"}, {"-7/25", "24/25"}, {"-7/25", "-24/25"}}}, std::nullopt, "FIX3"};
  }
  return std::nullopt;
}

SceneInput parse_scene(std::string_view triangle, std::optional<std::string_view> point) {
  auto parts = split(triangle, ';');
  if (parts.size() != 3) fail(ErrorCode::kParse, "expected \"x,y;x,y;x,y\" for the triangle");
  SceneInput in;
  for (int i = 0; i < 3; ++i) in.vertices[i] = parse_pair(parts[i]);
  if (point) in.P = parse_pair(*point);
  in.name = "explicit";
  return in;
}

template <class S>
Config<S> to_config(const SceneInput& in) {
  auto pt = [](const std::array<std::string, 2>& c) { return Point<S>{parse_scalar<S>(c[0]), parse_scalar<S>(c[1])}; };
  Config<S> cfg;
  cfg.triangle = {pt(in.vertices[0]), pt(in.vertices[1]), pt(in.vertices[2])};
  if (in.P) cfg.P = pt(*in.P);
  cfg.provenance = in.name;
  return cfg;
}

template Config<Rational> to_config<Rational>(const SceneInput&);
template Config<double> to_config<double>(const SceneInput&);
template Config<Float50> to_config<Float50>(const SceneInput&);

std::span<const std::string_view> construct_symbols() { return kSymbols; }

std::string construct_json(const SceneInput& in, Backend backend, const std::vector<std::string>& objects) {
  if (backend == Backend::kExact) return construct_impl<Rational>(in, objects);
  return construct_impl<double>(in, objects);
}

}  // namespace poncelet
