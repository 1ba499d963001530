#include "poncelet/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace poncelet {

namespace {

using DPoint = Point<double>;

struct Mark {
  DPoint p;
  std::string label;
  std::string cls;
};

struct Segment {
  DPoint a, b;
  std::string cls;
};

struct Polygon {
  std::vector<DPoint> pts;
  std::string cls;
};

struct Round {
  DPoint c;
  double r;
  std::string cls;
};

/// Everything a figure draws, in world coordinates.
struct Drawing {
  std::string title;
  std::vector<Round> circles;
  std::vector<Polygon> polygons;
  std::vector<Segment> segments;
  std::vector<Mark> marks;
  std::optional<Conic<double>> conic;
  DPoint conic_center;
};

template <class S>
DPoint dbl(const Point<S>& p) {
  return {to_double(p.x), to_double(p.y)};
}

template <class S>
Round round_of(const Circle<S>& c, std::string cls) {
  return {dbl(c.center), std::sqrt(to_double(c.r2)), std::move(cls)};
}

template <class S>
Polygon tri(const Point<S>& a, const Point<S>& b, const Point<S>& c, std::string cls) {
  return {{dbl(a), dbl(b), dbl(c)}, std::move(cls)};
}

template <class S>
void mark(Drawing& d, const Point<S>& p, std::string label, std::string cls = "pt") {
  d.marks.push_back({dbl(p), std::move(label), std::move(cls)});
}

template <class S>
Point<S> incenter_p(const Config<S>& cfg, const char* figure) {
  Point<S> I = incenter(cfg.triangle);
  if (cfg.P && !same_point(*cfg.P, I)) {
    fail(ErrorCode::kBadP, std::string("the ") + figure + " figure requires P = incenter; omit --point");
  }
  return I;
}

template <class S>
Drawing conc_circum(const Config<S>& cfg) {
  const Triangle<S>& t = cfg.triangle;
  Point<S> P = cfg.P ? *cfg.P : incenter(t);
  QuadrangleDerived<S> q = derive_quadrangle(t.A, t.B, t.C, P);
  Point<S> xp = concurrence_point(q, t.A, t.B, t.C);
  Drawing d;
  d.title = "Concurrent circumcircles";
  d.circles.push_back(round_of(circle_through(t.A, q.HB, q.HC), "c1"));
  d.circles.push_back(round_of(circle_through(t.B, q.HC, q.HA), "c2"));
  d.circles.push_back(round_of(circle_through(t.C, q.HA, q.HB), "c3"));
  d.conic = Conic<double>{to_double(q.conic.a), to_double(q.conic.b), to_double(q.conic.c),
                          to_double(q.conic.d), to_double(q.conic.e), to_double(q.conic.f)};
  d.conic_center = dbl(q.Z);
  d.polygons.push_back(tri(t.A, t.B, t.C, "main"));
  d.polygons.push_back(tri(t.A, q.HB, q.HC, "sub"));
  d.polygons.push_back(tri(t.B, q.HC, q.HA, "sub"));
  d.polygons.push_back(tri(t.C, q.HA, q.HB, "sub"));
  mark(d, t.A, "A");
  mark(d, t.B, "B");
  mark(d, t.C, "C");
  mark(d, P, "P");
  mark(d, q.HA, "H_A");
  mark(d, q.HB, "H_B");
  mark(d, q.HC, "H_C");
  mark(d, q.H, "H");
  mark(d, q.Z, "Z", "aux");
  mark(d, xp, "X'", "key");
  return d;
}

template <class S>
Drawing centroids(const Config<S>& cfg) {
  const Triangle<S>& t = cfg.triangle;
  Point<S> P = cfg.P ? *cfg.P : incenter(t);
  auto h = partial_orthocenters(t.A, t.B, t.C, P);
  CentroidSet<S> g = centroid_quadruples(t.A, t.B, t.C, h);
  Drawing d;
  d.title = "Concyclic centroids";
  if (collinear(g.G, g.GA, g.GB) && collinear(g.G, g.GA, g.GC)) {
    // Symmetric configurations put the four centroids on one line.
    std::array<DPoint, 4> pts{dbl(g.G), dbl(g.GA), dbl(g.GB), dbl(g.GC)};
    auto [lo, hi] = std::minmax_element(pts.begin(), pts.end(), [](const DPoint& a, const DPoint& b) {
      return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    d.segments.push_back({*lo, *hi, "c1"});
  } else {
    const std::array<Point<S>, 3> three = collinear(g.G, g.GA, g.GB) ? std::array{g.G, g.GA, g.GC}
                                                                      : std::array{g.G, g.GA, g.GB};
    d.circles.push_back(round_of(circle_through(three[0], three[1], three[2]), "c1"));
  }
  d.polygons.push_back(tri(t.A, t.B, t.C, "main"));
  d.polygons.push_back(tri(t.A, h.HB, h.HC, "sub"));
  d.polygons.push_back(tri(t.B, h.HC, h.HA, "sub"));
  d.polygons.push_back(tri(t.C, h.HA, h.HB, "sub"));
  mark(d, t.A, "A");
  mark(d, t.B, "B");
  mark(d, t.C, "C");
  mark(d, P, "P");
  mark(d, h.HA, "H_A");
  mark(d, h.HB, "H_B");
  mark(d, h.HC, "H_C");
  mark(d, g.G, "G", "key");
  mark(d, g.GA, "G_A", "key");
  mark(d, g.GB, "G_B", "key");
  mark(d, g.GC, "G_C", "key");
  return d;
}

template <class S>
Drawing nagel(const Config<S>& cfg) {
  const Triangle<S>& t = cfg.triangle;
  Point<S> I = incenter_p(cfg, "nagel");
  Incircle<S> in = incircle(t);
  auto h = partial_orthocenters(t.A, t.B, t.C, I);
  Point<S> x = common_orthocenter(t.A, t.B, t.C, I);
  Drawing d;
  d.title = "Nagel point as common orthocenter";
  d.circles.push_back(round_of(in.circle(), "c1"));
  d.polygons.push_back(tri(t.A, t.B, t.C, "main"));
  d.polygons.push_back(tri(t.A, h.HB, h.HC, "sub"));
  d.polygons.push_back(tri(t.B, h.HC, h.HA, "sub"));
  d.polygons.push_back(tri(t.C, h.HA, h.HB, "sub"));
  for (const auto& v : {t.A, t.B, t.C}) d.segments.push_back({dbl(v), dbl(x), "alt"});
  mark(d, t.A, "A");
  mark(d, t.B, "B");
  mark(d, t.C, "C");
  mark(d, I, "I");
  mark(d, h.HA, "H_A");
  mark(d, h.HB, "H_B");
  mark(d, h.HC, "H_C");
  mark(d, x, "N_a", "key");
  return d;
}

template <class S>
Drawing fuhrmann_figure(const Config<S>& cfg) {
  const Triangle<S>& t = cfg.triangle;
  incenter_p(cfg, "fuhrmann");
  CenterSet<S> cs = triangle_centers(t);
  FuhrmannSet<S> f = fuhrmann(t, cs);
  AntiFuhrmannSet<S> r = anti_fuhrmann(t, cs);
  Drawing d;
  d.title = "Fuhrmann and anti-Fuhrmann triangles";
  if (!f.point_circle) d.circles.push_back(round_of(f.omega, "c1"));
  if (!r.point_circle) d.circles.push_back(round_of(r.omega, "c2"));
  d.polygons.push_back(tri(t.A, t.B, t.C, "main"));
  d.polygons.push_back(tri(f.Oa, f.Ob, f.Oc, "tf"));
  d.polygons.push_back(tri(r.OA, r.OB, r.OC, "tr"));
  d.segments.push_back({dbl(cs.H), dbl(cs.I), "alt"});
  mark(d, t.A, "A");
  mark(d, t.B, "B");
  mark(d, t.C, "C");
  mark(d, f.Oa, "O_a");
  mark(d, f.Ob, "O_b");
  mark(d, f.Oc, "O_c");
  mark(d, r.OA, "O_A");
  mark(d, r.OB, "O_B");
  mark(d, r.OC, "O_C");
  mark(d, cs.H, "H", "key");
  mark(d, cs.I, "I", "key");
  mark(d, midpoint(cs.H, cs.I), "", "aux");
  mark(d, f.Of, "O_f");
  mark(d, r.Or, "O_r");
  return d;
}

template <class S>
Drawing build(const SceneInput& in, Figure figure) {
  Config<S> cfg = to_config<S>(in);
  require_nondegenerate(cfg.triangle);
  switch (figure) {
    case Figure::kConcurrentCircles:
      return conc_circum(cfg);
    case Figure::kCentroids:
      return centroids(cfg);
    case Figure::kNagel:
      return nagel(cfg);
    case Figure::kFuhrmann:
      return fuhrmann_figure(cfg);
  }
  fail(ErrorCode::kParse, "unknown figure");
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  std::string s = buf;
  if (s == "-0") s = "0";
  return s;
}

struct Box {
  double xmin, xmax, ymin, ymax;

  bool contains(const DPoint& p) const { return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax; }
};

/// Maps world coordinates into the viewBox with y pointing up.
struct Mapping {
  double s, ox, oy;

  DPoint operator()(const DPoint& p) const { return {ox + s * p.x, oy - s * p.y}; }
};

/// Directions (angles in [0, pi)) along which a*x^2 + b*xy + c*y^2 vanishes.
std::vector<double> null_directions(const Conic<double>& k) {
  std::vector<double> out;
  double disc = k.b * k.b - 4 * k.a * k.c;
  if (disc < 0) return out;
  double scale = std::max({std::abs(k.a), std::abs(k.b), std::abs(k.c)});
  auto push = [&](double th) {
    th = std::fmod(th, std::numbers::pi);
    if (th < 0) th += std::numbers::pi;
    out.push_back(th);
  };
  if (std::abs(k.c) > 1e-12 * scale) {
    double sq = std::sqrt(disc);
    push(std::atan((-k.b + sq) / (2 * k.c)));
    push(std::atan((-k.b - sq) / (2 * k.c)));
  } else {
    push(std::numbers::pi / 2);
    if (std::abs(k.b) > 1e-12 * scale) push(std::atan(-k.a / k.b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Parameter interval of the line p + t*u inside the box (Liang-Barsky).
std::optional<std::pair<double, double>> clip(const DPoint& p, const DPoint& u, const Box& b) {
  double lo = -1e300, hi = 1e300;
  auto edge = [&](double pu, double pv, double vmin, double vmax) {
    if (pu == 0) return pv >= vmin && pv <= vmax;
    double t1 = (vmin - pv) / pu, t2 = (vmax - pv) / pu;
    if (t1 > t2) std::swap(t1, t2);
    lo = std::max(lo, t1);
    hi = std::min(hi, t2);
    return true;
  };
  if (!edge(u.x, p.x, b.xmin, b.xmax) || !edge(u.y, p.y, b.ymin, b.ymax) || lo >= hi) return std::nullopt;
  return std::pair{lo, hi};
}

/// Polylines (world coordinates) tracing the conic inside `view`.
std::vector<std::vector<DPoint>> trace_conic(const Conic<double>& k, const DPoint& z, const Box& view) {
  std::vector<std::vector<DPoint>> out;
  std::vector<double> dirs = null_directions(k);
  if (dirs.size() != 2) return out;
  double qz = k.eval(z);
  double scale = k.scale() * std::max(1.0, norm2(z));
  if (std::abs(qz) <= 1e-12 * scale) {
    // Line pair through the singular point.
    for (double th : dirs) {
      DPoint u{std::cos(th), std::sin(th)};
      if (auto r = clip(z, u, view)) out.push_back({z + u * r->first, z + u * r->second});
    }
    return out;
  }
  auto q2 = [&](double th) {
    double c = std::cos(th), s = std::sin(th);
    return k.a * c * c + k.b * c * s + k.c * s * s;
  };
  double lo = dirs[0], hi = dirs[1];
  if (-qz / q2((lo + hi) / 2) <= 0) {
    lo = dirs[1];
    hi = dirs[0] + std::numbers::pi;
  }
  // Points beyond a generous margin are dropped; the SVG viewport clips the rest.
  double w = view.xmax - view.xmin, h = view.ymax - view.ymin;
  Box keep{view.xmin - w, view.xmax + w, view.ymin - h, view.ymax + h};
  constexpr int kSamples = 256;
  for (int sign : {1, -1}) {
    std::vector<DPoint> run;
    for (int i = 0; i < kSamples; ++i) {
      double th = lo + (hi - lo) * (i + 0.5) / kSamples;
      double t = sign * std::sqrt(-qz / q2(th));
      DPoint p = z + DPoint{std::cos(th), std::sin(th)} * t;
      if (keep.contains(p)) {
        run.push_back(p);
      } else if (!run.empty()) {
        if (run.size() > 1) out.push_back(std::move(run));
        run.clear();
      }
    }
    if (run.size() > 1) out.push_back(std::move(run));
  }
  return out;
}

std::string to_svg(const Drawing& d, const RenderOptions& opts) {
  Box bb{1e300, -1e300, 1e300, -1e300};
  auto extend = [&](const DPoint& p, double r = 0) {
    bb.xmin = std::min(bb.xmin, p.x - r);
    bb.xmax = std::max(bb.xmax, p.x + r);
    bb.ymin = std::min(bb.ymin, p.y - r);
    bb.ymax = std::max(bb.ymax, p.y + r);
  };
  for (const auto& m : d.marks) extend(m.p);
  for (const auto& c : d.circles) extend(c.c, c.r);
  for (const auto& p : d.polygons)
    for (const auto& v : p.pts) extend(v);
  double bw = std::max(bb.xmax - bb.xmin, 1e-9), bh = std::max(bb.ymax - bb.ymin, 1e-9);
  const double W = opts.width, H = opts.height, margin = 0.08;
  double s = std::min(W * (1 - 2 * margin) / bw, H * (1 - 2 * margin) / bh);
  double cx = (bb.xmin + bb.xmax) / 2, cy = (bb.ymin + bb.ymax) / 2;
  Mapping map{s, W / 2 - s * cx, H / 2 + s * cy};
  Box view{-map.ox / s, (W - map.ox) / s, (map.oy - H) / s, map.oy / s};

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opts.width << "\" height=\""
    << opts.height << "\" viewBox=\"0 0 " << opts.width << ' ' << opts.height << "\">\n";
  o << "<title>" << d.title << "</title>\n";
  o << "<desc>x' = " << num(map.ox) << " + " << num(s) << "*x; y' = " << num(map.oy) << " - " << num(s)
    << "*y</desc>\n";
  o << "<style>\n"
       "  .main { fill: none; stroke: #000; stroke-width: 1.6 }\n"
       "  .sub { fill: none; stroke: #777; stroke-width: 0.8; stroke-dasharray: 4 3 }\n"
       "  .tf { fill: #1f77b4; fill-opacity: 0.08; stroke: #1f77b4; stroke-width: 1.2 }\n"
       "  .tr { fill: #d62728; fill-opacity: 0.08; stroke: #d62728; stroke-width: 1.2 }\n"
       "  .c1 { fill: none; stroke: #1f77b4; stroke-width: 1 }\n"
       "  .c2 { fill: none; stroke: #d62728; stroke-width: 1 }\n"
       "  .c3 { fill: none; stroke: #2ca02c; stroke-width: 1 }\n"
       "  .conic { fill: none; stroke: #9467bd; stroke-width: 1.2 }\n"
       "  .alt { stroke: #555; stroke-width: 0.8; stroke-dasharray: 2 2 }\n"
       "  .pt { fill: #000 }\n"
       "  .key { fill: #d62728 }\n"
       "  .aux { fill: #9467bd }\n"
       "  text { font-family: sans-serif; font-size: 12px }\n"
       "</style>\n";
  o << "<rect x=\"0\" y=\"0\" width=\"" << opts.width << "\" height=\"" << opts.height << "\" fill=\"#fff\"/>\n";

  o << "<g id=\"circles\">\n";
  for (const auto& c : d.circles) {
    DPoint p = map(c.c);
    o << "  <circle class=\"" << c.cls << "\" cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\""
      << num(c.r * s) << "\"/>\n";
  }
  o << "</g>\n";

  o << "<g id=\"conic\">\n";
  if (d.conic) {
    for (const auto& run : trace_conic(*d.conic, d.conic_center, view)) {
      o << "  <polyline class=\"conic\" points=\"";
      for (std::size_t i = 0; i < run.size(); ++i) {
        DPoint p = map(run[i]);
        o << (i ? " " : "") << num(p.x) << ',' << num(p.y);
      }
      o << "\"/>\n";
    }
  }
  o << "</g>\n";

  o << "<g id=\"polygons\">\n";
  for (const auto& poly : d.polygons) {
    o << "  <polygon class=\"" << poly.cls << "\" points=\"";
    for (std::size_t i = 0; i < poly.pts.size(); ++i) {
      DPoint p = map(poly.pts[i]);
      o << (i ? " " : "") << num(p.x) << ',' << num(p.y);
    }
    o << "\"/>\n";
  }
  o << "</g>\n";

  o << "<g id=\"segments\">\n";
  for (const auto& seg : d.segments) {
    DPoint a = map(seg.a), b = map(seg.b);
    o << "  <line class=\"" << seg.cls << "\" x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x)
      << "\" y2=\"" << num(b.y) << "\"/>\n";
  }
  o << "</g>\n";

  o << "<g id=\"points\">\n";
  for (const auto& m : d.marks) {
    DPoint p = map(m.p);
    o << "  <circle class=\"" << m.cls << "\" cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"3\"/>\n";
    if (!m.label.empty()) {
      o << "  <text x=\"" << num(p.x + 5) << "\" y=\"" << num(p.y - 5) << "\">" << m.label << "</text>\n";
    }
  }
  o << "</g>\n";
  o << "</svg>\n";
  return o.str();
}

}  // namespace

std::optional<Figure> parse_figure(std::string_view name) {
  if (name == "conc_circum") return Figure::kConcurrentCircles;
  if (name == "centroids") return Figure::kCentroids;
  if (name == "nagel") return Figure::kNagel;
  if (name == "fuhrmann") return Figure::kFuhrmann;
  return std::nullopt;
}

std::string_view to_string(Figure f) {
  switch (f) {
    case Figure::kConcurrentCircles:
      return "conc_circum";
    case Figure::kCentroids:
      return "centroids";
    case Figure::kNagel:
      return "nagel";
    case Figure::kFuhrmann:
      return "fuhrmann";
  }
  return "unknown";
}

std::string render_svg(const SceneInput& in, Figure figure, const RenderOptions& opts) {
  if (opts.width <= 0 || opts.height <= 0) fail(ErrorCode::kParse, "width and height must be positive");
  Drawing d = opts.backend == Backend::kExact ? build<Rational>(in, figure) : build<double>(in, figure);
  return to_svg(d, opts);
}

}  // namespace poncelet
