#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cusco/rat.hpp"

namespace cusco {

// Raised when an exact construction would need an irrational point
// (e.g. a band crossing at a quadratic root that is not rational).
struct representability_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// slope * x + intercept
struct AffineExpr {
  Rat slope, intercept;
  friend bool operator==(const AffineExpr&, const AffineExpr&) = default;
};

// scale / (x - pole) + offset; attached only to open intervals whose
// interior avoids the pole (the closure may touch it).
struct RecipExpr {
  Rat pole, scale, offset;
  friend bool operator==(const RecipExpr&, const RecipExpr&) = default;
};

using PieceExpr = std::variant<AffineExpr, RecipExpr>;

enum class Approach { FromLeft, FromRight };  // direction x tends to the point

Rat eval(const PieceExpr& e, const Rat& x);
bool has_pole_at(const PieceExpr& e, const Rat& x);
bool pole_inside(const PieceExpr& e, const Rat& u, const Rat& v);

// Exact limit of e(x) as x -> t from the given side. Infinite only when
// the pole sits at t.
ExtReal one_sided_limit(const PieceExpr& e, const Rat& t, Approach from);

// RecipExpr with scale 0 collapses to a constant AffineExpr; two
// normal forms are structurally equal iff they are the same function.
PieceExpr normal_form(const PieceExpr& e);
bool same_function(const PieceExpr& a, const PieceExpr& b);

std::string expr_str(const PieceExpr& e);

// Image of the open interval (u, v): a single attained value for a
// constant expression, otherwise the open interval between the one-sided
// limits at u+ and v- (pieces are monotone there).
struct ExprImage {
  ExtReal lo, hi;
  bool point = false;  // image is the single attained value lo (== hi)

  bool meets_open(const ExtReal& a, const ExtReal& b) const;  // (a, b)
  bool meets_ray_up(const Rat& threshold) const;              // (threshold, +inf)
  bool meets_ray_down(const Rat& threshold) const;            // (-inf, threshold)
};

ExprImage image_on(const PieceExpr& e, const Rat& u, const Rat& v);

// Pointwise order of e1 vs e2 over the whole open interval (u, v),
// decided exactly via the sign of a degree <= 2 polynomial.
struct OrderOnInterval {
  bool le = false, lt = false, ge = false, gt = false, eq = false;
};

OrderOnInterval compare_on(const PieceExpr& e1, const PieceExpr& e2,
                           const Rat& u, const Rat& v);

// Rational solutions of e1 = e2 inside (u, v). Throws
// representability_error when an irrational crossing lies inside.
std::vector<Rat> equal_points(const PieceExpr& e1, const PieceExpr& e2,
                              const Rat& u, const Rat& v);

}  // namespace cusco
