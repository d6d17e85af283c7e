#include "cusco/piece_expr.hpp"

#include <algorithm>

namespace cusco {

namespace {

// a x^2 + b x + c with exact rational coefficients.
struct Quad {
  Rat a, b, c;
  Rat operator()(const Rat& x) const { return (a * x + b) * x + c; }
  bool is_zero() const { return a.sign() == 0 && b.sign() == 0 && c.sign() == 0; }
};

Quad neg(const Quad& q) { return {-q.a, -q.b, -q.c}; }

// S >= 0 on the open interval (u, v). Endpoint values bound the infimum
// except when an upward parabola has its vertex inside.
bool nonneg_on_open(const Quad& s, const Rat& u, const Rat& v) {
  if (s(u).sign() < 0 || s(v).sign() < 0) return false;
  if (s.a.sign() > 0) {
    Rat vertex = -s.b / (Rat(2) * s.a);
    if (u < vertex && vertex < v && s(vertex).sign() < 0) return false;
  }
  return true;
}

// S > 0 everywhere on (u, v).
bool positive_on_open(const Quad& s, const Rat& u, const Rat& v) {
  if (s.is_zero()) return false;
  if (s.a.sign() == 0 && s.b.sign() == 0) return s.c.sign() > 0;
  if (s(u).sign() < 0 || s(v).sign() < 0) return false;
  if (s.a.sign() > 0) {
    Rat vertex = -s.b / (Rat(2) * s.a);
    if (u < vertex && vertex < v && s(vertex).sign() <= 0) return false;
  }
  return true;
}

// Rational roots of S inside (u, v); throws if an irrational root lies there.
std::vector<Rat> roots_in_open(const Quad& s, const Rat& u, const Rat& v) {
  std::vector<Rat> out;
  if (s.is_zero()) throw std::logic_error("roots of identically zero polynomial");
  if (s.a.sign() == 0) {
    if (s.b.sign() == 0) return out;
    Rat r = -s.c / s.b;
    if (u < r && r < v) out.push_back(r);
    return out;
  }
  Rat disc = s.b * s.b - Rat(4) * s.a * s.c;
  if (disc.sign() < 0) return out;
  auto sq = exact_sqrt(disc);
  if (sq) {
    Rat two_a = Rat(2) * s.a;
    for (const Rat& r : {(-s.b - *sq) / two_a, (-s.b + *sq) / two_a})
      if (u < r && r < v) out.push_back(r);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  // Irrational pair; locate them against (u, v) by sign counting.
  Rat vertex = -s.b / (Rat(2) * s.a);
  int su = s(u).sign(), sv = s(v).sign(), sa = s.a.sign();
  // su, sv are nonzero here: a rational endpoint root would force a
  // rational conjugate and hence a square discriminant.
  bool inside = su * sv < 0;
  if (u < vertex && vertex < v && s(vertex).sign() * sa < 0 &&
      su * sa > 0 && sv * sa > 0)
    inside = true;  // both roots strictly between u and v
  if (inside)
    throw representability_error("irrational crossing point inside interval");
  return out;
}

// e2 - e1 as R(x) / D(x) with D of constant sign on (u, v); returns
// (R, sign of D). Poles of either expression must avoid the open interval.
std::pair<Quad, int> difference_fraction(const PieceExpr& e1, const PieceExpr& e2,
                                         const Rat& u, const Rat& v) {
  auto factor_sign = [&](const Rat& pole) -> int {
    if (pole <= u) return 1;
    if (pole >= v) return -1;
    throw std::logic_error("pole inside open interval");
  };
  const auto* a1 = std::get_if<AffineExpr>(&e1);
  const auto* a2 = std::get_if<AffineExpr>(&e2);
  const auto* r1 = std::get_if<RecipExpr>(&e1);
  const auto* r2 = std::get_if<RecipExpr>(&e2);

  if (a1 && a2)
    return {Quad{Rat(0), a2->slope - a1->slope, a2->intercept - a1->intercept}, 1};

  if (r1 && r2 && r1->pole == r2->pole) {
    // (s2 - s1)/(x - p) + (o2 - o1)
    Rat p = r1->pole;
    Quad r{Rat(0), r2->offset - r1->offset,
           (r2->scale - r1->scale) - (r2->offset - r1->offset) * p};
    return {r, factor_sign(p)};
  }
  if (r1 && r2) {
    // [s2 (x-p1) - s1 (x-p2) + (o2-o1)(x-p1)(x-p2)] / [(x-p1)(x-p2)]
    Rat d = r2->offset - r1->offset;
    Quad r{d,
           r2->scale - r1->scale - d * (r1->pole + r2->pole),
           -r2->scale * r1->pole + r1->scale * r2->pole + d * r1->pole * r2->pole};
    return {r, factor_sign(r1->pole) * factor_sign(r2->pole)};
  }
  if (a1 && r2) {
    // [s2 + (o2 - a1(x))(x - p2)] / (x - p2)
    Rat p = r2->pole;
    Quad r{-a1->slope,
           r2->offset - a1->intercept + a1->slope * p,
           r2->scale - (r2->offset - a1->intercept) * p};
    return {r, factor_sign(p)};
  }
  // r1 && a2: negate the symmetric case
  auto [q, s] = difference_fraction(e2, e1, u, v);
  return {neg(q), s};
}

}  // namespace

Rat eval(const PieceExpr& e, const Rat& x) {
  if (const auto* a = std::get_if<AffineExpr>(&e)) return a->slope * x + a->intercept;
  const auto& r = std::get<RecipExpr>(e);
  if (x == r.pole) throw std::domain_error("evaluation at pole");
  return r.scale / (x - r.pole) + r.offset;
}

bool has_pole_at(const PieceExpr& e, const Rat& x) {
  const auto* r = std::get_if<RecipExpr>(&e);
  return r && r->scale.sign() != 0 && r->pole == x;
}

bool pole_inside(const PieceExpr& e, const Rat& u, const Rat& v) {
  const auto* r = std::get_if<RecipExpr>(&e);
  return r && u < r->pole && r->pole < v;
}

ExtReal one_sided_limit(const PieceExpr& e, const Rat& t, Approach from) {
  if (const auto* a = std::get_if<AffineExpr>(&e)) return ExtReal(a->slope * t + a->intercept);
  const auto& r = std::get<RecipExpr>(e);
  if (t != r.pole || r.scale.sign() == 0) return ExtReal(eval(normal_form(e), t));
  // scale/(x - pole): sign of (x - pole) is fixed by the approach side.
  bool positive_side = (from == Approach::FromRight);
  bool up = (r.scale.sign() > 0) == positive_side;
  return up ? ExtReal::plus_inf() : ExtReal::minus_inf();
}

PieceExpr normal_form(const PieceExpr& e) {
  if (const auto* r = std::get_if<RecipExpr>(&e); r && r->scale.sign() == 0)
    return AffineExpr{Rat(0), r->offset};
  return e;
}

bool same_function(const PieceExpr& a, const PieceExpr& b) {
  return normal_form(a) == normal_form(b);
}

std::string expr_str(const PieceExpr& e) {
  if (const auto* a = std::get_if<AffineExpr>(&e))
    return "affine " + a->slope.str() + " " + a->intercept.str();
  const auto& r = std::get<RecipExpr>(e);
  return "recip " + r.pole.str() + " " + r.scale.str() + " " + r.offset.str();
}

bool ExprImage::meets_open(const ExtReal& a, const ExtReal& b) const {
  if (point) return a < lo && lo < b;
  return lo < b && a < hi;
}

bool ExprImage::meets_ray_up(const Rat& threshold) const {
  ExtReal t{threshold};
  return point ? lo > t : hi > t;
}

bool ExprImage::meets_ray_down(const Rat& threshold) const {
  return lo < ExtReal{threshold};
}

ExprImage image_on(const PieceExpr& e, const Rat& u, const Rat& v) {
  PieceExpr n = normal_form(e);
  if (const auto* a = std::get_if<AffineExpr>(&n); a && a->slope.sign() == 0) {
    ExtReal c{a->intercept};
    return {c, c, true};
  }
  ExtReal at_u = one_sided_limit(n, u, Approach::FromRight);
  ExtReal at_v = one_sided_limit(n, v, Approach::FromLeft);
  return {min(at_u, at_v), max(at_u, at_v), false};
}

OrderOnInterval compare_on(const PieceExpr& e1, const PieceExpr& e2,
                           const Rat& u, const Rat& v) {
  auto [r, s] = difference_fraction(e1, e2, u, v);
  Quad d = s > 0 ? r : neg(r);  // sign of e2 - e1
  OrderOnInterval o;
  o.eq = d.is_zero();
  o.le = o.eq || nonneg_on_open(d, u, v);
  o.lt = positive_on_open(d, u, v);
  o.ge = o.eq || nonneg_on_open(neg(d), u, v);
  o.gt = positive_on_open(neg(d), u, v);
  return o;
}

std::vector<Rat> equal_points(const PieceExpr& e1, const PieceExpr& e2,
                              const Rat& u, const Rat& v) {
  auto [r, s] = difference_fraction(e1, e2, u, v);
  (void)s;
  if (r.is_zero()) throw std::logic_error("equal_points of identical expressions");
  return roots_in_open(r, u, v);
}

}  // namespace cusco
