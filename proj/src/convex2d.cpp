#include "cusco/convex2d.hpp"

#include <algorithm>

namespace cusco {

Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
Point2 operator*(const Rat& s, const Point2& p) { return {s * p.x, s * p.y}; }

Rat cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Rat dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }

namespace {

bool lex_less(const Point2& a, const Point2& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

std::vector<std::pair<Point2, Point2>> edges_of(const Polygon& p) {
  const auto& v = p.vertices();
  std::vector<std::pair<Point2, Point2>> out;
  if (v.size() == 2) out.push_back({v[0], v[1]});
  if (v.size() >= 3)
    for (size_t i = 0; i < v.size(); ++i) out.push_back({v[i], v[(i + 1) % v.size()]});
  return out;
}

bool on_segment(const Point2& a, const Point2& b, const Point2& p) {
  if (cross(a, b, p).sign() != 0) return false;
  return min(a.x, b.x) <= p.x && p.x <= max(a.x, b.x) &&
         min(a.y, b.y) <= p.y && p.y <= max(a.y, b.y);
}

bool segments_intersect(const Point2& p1, const Point2& p2, const Point2& q1,
                        const Point2& q2) {
  int d1 = cross(q1, q2, p1).sign();
  int d2 = cross(q1, q2, p2).sign();
  int d3 = cross(p1, p2, q1).sign();
  int d4 = cross(p1, p2, q2).sign();
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && on_segment(q1, q2, p1)) return true;
  if (d2 == 0 && on_segment(q1, q2, p2)) return true;
  if (d3 == 0 && on_segment(p1, p2, q1)) return true;
  if (d4 == 0 && on_segment(p1, p2, q2)) return true;
  return false;
}

Point2 closest_on_segment(const Point2& p, const Point2& a, const Point2& b) {
  if (a == b) return a;
  Point2 ab = b - a;
  Rat t = dot(p - a, ab) / dot(ab, ab);
  t = max(Rat(0), min(Rat(1), t));
  return a + t * ab;
}

Rat dist2(const Point2& a, const Point2& b) { return dot(a - b, a - b); }

}  // namespace

Polygon Polygon::hull(const std::vector<Point2>& points) {
  if (points.empty()) throw std::invalid_argument("hull of an empty point set");
  std::vector<Point2> pts = points;
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  Polygon poly;
  if (pts.size() == 1) {
    poly.verts_ = pts;
    return poly;
  }
  // Andrew monotone chain; popping on cross <= 0 drops collinear points,
  // so the result keeps extreme vertices only, CCW from the least vertex.
  std::vector<Point2> h(2 * pts.size());
  size_t k = 0;
  for (const Point2& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p).sign() <= 0) --k;
    h[k++] = p;
  }
  for (size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]).sign() <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);  // last point repeats the first
  poly.verts_ = std::move(h);
  return poly;
}

bool Polygon::contains(const Point2& p) const {
  if (verts_.size() == 1) return verts_[0] == p;
  if (verts_.size() == 2) return on_segment(verts_[0], verts_[1], p);
  for (size_t i = 0; i < verts_.size(); ++i)
    if (cross(verts_[i], verts_[(i + 1) % verts_.size()], p).sign() < 0) return false;
  return true;
}

std::string Polygon::str() const {
  std::string s = "{";
  for (size_t i = 0; i < verts_.size(); ++i) s += (i ? " " : "") + verts_[i].str();
  return s + "}";
}

std::vector<Point2> extreme_points(const Polygon& p) { return p.vertices(); }

Verdict milman_check(const std::vector<Point2>& k) {
  if (k.empty()) throw std::invalid_argument("milman_check on an empty set");
  Verdict v;
  for (const Point2& e : extreme_points(Polygon::hull(k)))
    if (std::find(k.begin(), k.end(), e) == k.end())
      v.fail({e.x, "extreme point " + e.str() + " of the hull not in the set", std::nullopt});
  return v;
}

bool polygons_intersect(const Polygon& p, const Polygon& q) {
  for (const Point2& v : p.vertices())
    if (q.contains(v)) return true;
  for (const Point2& v : q.vertices())
    if (p.contains(v)) return true;
  for (const auto& [a, b] : edges_of(p))
    for (const auto& [c, d] : edges_of(q))
      if (segments_intersect(a, b, c, d)) return true;
  return false;
}

LinFunc2 separate(const Polygon& p, const Polygon& q) {
  if (polygons_intersect(p, q))
    throw separation_error("polygons intersect; no separating functional exists");

  // Closest feature pair; for disjoint convex polygons the minimum
  // distance is attained at a vertex-vertex or vertex-edge pair.
  std::optional<Rat> best;
  Point2 bp{}, bq{};
  auto consider = [&](const Point2& a, const Point2& b) {
    Rat d = dist2(a, b);
    if (!best || d < *best) {
      best = d;
      bp = a;
      bq = b;
    }
  };
  for (const Point2& a : p.vertices())
    for (const Point2& b : q.vertices()) consider(a, b);
  for (const Point2& a : p.vertices())
    for (const auto& [c, d] : edges_of(q)) consider(a, closest_on_segment(a, c, d));
  for (const Point2& b : q.vertices())
    for (const auto& [c, d] : edges_of(p)) consider(closest_on_segment(b, c, d), b);

  Point2 h = bq - bp;
  // Scale to a primitive integer normal.
  mpz_class l = lcm(h.x.den(), h.y.den());
  Rat scale{mpq_class(l)};
  Point2 hi = scale * h;
  mpz_class g = gcd(hi.x.num(), hi.y.num());
  if (g != 0) hi = Rat{mpq_class(mpz_class(1), g)} * hi;
  Rat lambda = (dot(hi, bp) + dot(hi, bq)) / Rat(2);
  return LinFunc2{hi.x, hi.y, lambda};
}

Curve2::Curve2(std::vector<Rat> breakpoints, std::vector<Piece> pieces,
               std::vector<std::optional<Point2>> bp_values)
    : breaks_(std::move(breakpoints)),
      pieces_(std::move(pieces)),
      values_(std::move(bp_values)) {
  if (breaks_.size() < 2 || pieces_.size() + 1 != breaks_.size() ||
      values_.size() != breaks_.size())
    throw std::invalid_argument("curve shape mismatch");
  for (size_t i = 0; i + 1 < breaks_.size(); ++i)
    if (!(breaks_[i] < breaks_[i + 1]))
      throw std::invalid_argument("curve breakpoints not strictly increasing");
}

Point2 Curve2::piece_point(size_t piece, const Rat& x) const {
  return pieces_[piece].base + x * pieces_[piece].dir;
}

std::vector<Point2> Curve2::limit_points(size_t i) const {
  std::vector<Point2> out;
  if (i > 0) out.push_back(piece_point(i - 1, breaks_[i]));
  if (i < pieces_.size()) {
    Point2 r = piece_point(i, breaks_[i]);
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  return out;
}

std::vector<Point2> Curve2::cluster_points(size_t i) const {
  std::vector<Point2> out = limit_points(i);
  if (values_[i] && std::find(out.begin(), out.end(), *values_[i]) == out.end())
    out.push_back(*values_[i]);
  return out;
}

Verdict is_planar_quasicontinuous(const Curve2& c) {
  Verdict v;
  for (size_t i = 0; i < c.breakpoints().size(); ++i) {
    const auto& val = c.bp_values()[i];
    if (!val) continue;
    auto lims = c.limit_points(i);
    if (std::find(lims.begin(), lims.end(), *val) == lims.end())
      v.fail({c.breakpoints()[i],
              "value " + val->str() + " is not a one-sided limit point", std::nullopt});
  }
  return v;
}

Verdict is_planar_hyperplane_minimal(const Curve2& c) {
  Verdict v;
  for (size_t i = 0; i < c.breakpoints().size(); ++i) {
    const auto& val = c.bp_values()[i];
    if (!val) continue;
    Polygon hull = Polygon::hull(c.limit_points(i));
    if (!hull.contains(*val))
      v.fail({c.breakpoints()[i],
              "value " + val->str() + " outside the hull of the limit points " + hull.str(),
              std::nullopt});
  }
  return v;
}

PlanarMap planar_minimal_cusco_from(const Curve2& c) {
  Verdict qc = is_planar_quasicontinuous(c);
  if (!qc.holds)
    throw precondition_error("planar_minimal_cusco_from requires a quasicontinuous curve", qc);
  PlanarMap out;
  out.breaks = c.breakpoints();
  out.pieces = c.pieces();
  for (size_t i = 0; i < c.breakpoints().size(); ++i)
    out.bp_hulls.push_back(Polygon::hull(c.cluster_points(i)));
  return out;
}

}  // namespace cusco
