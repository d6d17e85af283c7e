#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cusco/rat.hpp"
#include "cusco/verdict.hpp"

namespace cusco {

struct Point2 {
  Rat x, y;
  std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
  friend bool operator==(const Point2&, const Point2&) = default;
};

Point2 operator+(const Point2& a, const Point2& b);
Point2 operator-(const Point2& a, const Point2& b);
Point2 operator*(const Rat& s, const Point2& p);

// Exact orientation test: > 0 iff o->a->b is a counterclockwise turn.
Rat cross(const Point2& o, const Point2& a, const Point2& b);
Rat dot(const Point2& a, const Point2& b);

// Convex polygon in canonical form: counterclockwise vertex list starting
// at the lexicographically least vertex, no three collinear vertices kept.
// A point and a segment are valid degenerate polygons.
class Polygon {
public:
  static Polygon hull(const std::vector<Point2>& points);

  const std::vector<Point2>& vertices() const { return verts_; }
  bool is_point() const { return verts_.size() == 1; }
  bool is_segment() const { return verts_.size() == 2; }

  bool contains(const Point2& p) const;  // boundary inclusive

  std::string str() const;
  friend bool operator==(const Polygon&, const Polygon&) = default;

private:
  std::vector<Point2> verts_;
};

std::vector<Point2> extreme_points(const Polygon& p);

// Executable witness of the Milman step: the extreme points of the hull
// of a finite set always belong to the set.
Verdict milman_check(const std::vector<Point2>& k);

// Open half-plane {p : normal . p > threshold}.
struct LinFunc2 {
  Rat nx, ny, threshold;
  Rat eval(const Point2& p) const { return nx * p.x + ny * p.y; }
  std::string str() const {
    return "h = (" + nx.str() + ", " + ny.str() + "), lambda = " + threshold.str();
  }
};

struct separation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool polygons_intersect(const Polygon& p, const Polygon& q);

// Strictly separating functional from the closest-feature pair:
// h.p < lambda for p in P and h.q > lambda for q in Q. Throws
// separation_error when the polygons intersect.
LinFunc2 separate(const Polygon& p, const Polygon& q);

// Planar selection: per piece an affine parametrization p(x) = base + x*dir,
// per breakpoint a defined point or undefined.
class Curve2 {
public:
  struct Piece {
    Point2 base, dir;
    friend bool operator==(const Piece&, const Piece&) = default;
  };

  Curve2(std::vector<Rat> breakpoints, std::vector<Piece> pieces,
         std::vector<std::optional<Point2>> bp_values);

  const std::vector<Rat>& breakpoints() const { return breaks_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  const std::vector<std::optional<Point2>>& bp_values() const { return values_; }

  Point2 piece_point(size_t piece, const Rat& x) const;
  // One-sided limit points at breakpoint index i (always finite).
  std::vector<Point2> limit_points(size_t i) const;
  // Limit points plus the defined value, deduplicated.
  std::vector<Point2> cluster_points(size_t i) const;

private:
  std::vector<Rat> breaks_;
  std::vector<Piece> pieces_;
  std::vector<std::optional<Point2>> values_;
};

// Every defined breakpoint value equals one of its one-sided limit
// points (limits exist automatically for affine pieces).
Verdict is_planar_quasicontinuous(const Curve2& c);

// Derived criterion: every defined breakpoint value lies in the convex
// hull of its one-sided limit points.
Verdict is_planar_hyperplane_minimal(const Curve2& c);

// Pointwise hulls of the planar cluster sets of a quasicontinuous curve:
// singletons on pieces, point/segment/triangle hulls at breakpoints.
struct PlanarMap {
  std::vector<Rat> breaks;
  std::vector<Curve2::Piece> pieces;
  std::vector<Polygon> bp_hulls;
};

PlanarMap planar_minimal_cusco_from(const Curve2& c);

}  // namespace cusco
