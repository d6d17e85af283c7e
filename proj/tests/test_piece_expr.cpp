#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cusco/piece_expr.hpp"
#include "support/corpus.hpp"

using namespace cusco;

namespace {
const PieceExpr id = AffineExpr{Rat(1), Rat(0)};
const PieceExpr inv = RecipExpr{Rat(0), Rat(1), Rat(0)};  // 1/x
}  // namespace

TEST_CASE("evaluation") {
  CHECK(eval(AffineExpr{Rat(2), Rat(-1)}, Rat(3, 2)) == Rat(2));
  CHECK(eval(inv, Rat(1, 4)) == Rat(4));
  CHECK(eval(RecipExpr{Rat(1), Rat(-2), Rat(3)}, Rat(2)) == Rat(1));
  CHECK_THROWS_AS(eval(inv, Rat(0)), std::domain_error);
}

TEST_CASE("one-sided limits") {
  CHECK(one_sided_limit(id, Rat(2), Approach::FromLeft) == ExtReal{Rat(2)});
  CHECK(one_sided_limit(inv, Rat(0), Approach::FromRight) == ExtReal::plus_inf());
  CHECK(one_sided_limit(inv, Rat(0), Approach::FromLeft) == ExtReal::minus_inf());
  PieceExpr neg = RecipExpr{Rat(0), Rat(-1), Rat(0)};
  CHECK(one_sided_limit(neg, Rat(0), Approach::FromRight) == ExtReal::minus_inf());
  CHECK(one_sided_limit(neg, Rat(0), Approach::FromLeft) == ExtReal::plus_inf());
  CHECK(one_sided_limit(inv, Rat(2), Approach::FromLeft) == ExtReal{Rat(1, 2)});
}

TEST_CASE("normal form collapses zero-scale reciprocals") {
  PieceExpr flat = RecipExpr{Rat(5), Rat(0), Rat(3)};
  CHECK(same_function(flat, PieceExpr{AffineExpr{Rat(0), Rat(3)}}));
  CHECK(!same_function(inv, id));
  CHECK(same_function(inv, inv));
}

TEST_CASE("images of open intervals") {
  ExprImage i1 = image_on(id, Rat(0), Rat(1));
  CHECK(i1.lo == ExtReal{Rat(0)});
  CHECK(i1.hi == ExtReal{Rat(1)});
  CHECK(!i1.point);

  ExprImage i2 = image_on(inv, Rat(0), Rat(1));  // 1/x on (0,1) -> (1, +inf)
  CHECK(i2.lo == ExtReal{Rat(1)});
  CHECK(i2.hi == ExtReal::plus_inf());
  CHECK(i2.meets_ray_up(Rat(100)));
  CHECK(!i2.meets_ray_down(Rat(1)));

  ExprImage c = image_on(AffineExpr{Rat(0), Rat(7)}, Rat(0), Rat(1));
  CHECK(c.point);
  CHECK(c.meets_open(ExtReal{Rat(6)}, ExtReal{Rat(8)}));
  CHECK(!c.meets_open(ExtReal{Rat(7)}, ExtReal{Rat(8)}));  // open interval excludes 7
}

TEST_CASE("pointwise comparison, affine vs affine") {
  OrderOnInterval o = compare_on(AffineExpr{Rat(1), Rat(0)}, AffineExpr{Rat(1), Rat(1)},
                                 Rat(0), Rat(1));
  CHECK(o.lt);
  CHECK(o.le);
  CHECK(!o.eq);
  // crossing inside: x vs 1-x on (0,1)
  o = compare_on(AffineExpr{Rat(1), Rat(0)}, AffineExpr{Rat(-1), Rat(1)}, Rat(0), Rat(1));
  CHECK(!o.le);
  CHECK(!o.ge);
  // touching at the open end still counts as <= and < inside
  o = compare_on(AffineExpr{Rat(1), Rat(0)}, AffineExpr{Rat(2), Rat(0)}, Rat(0), Rat(1));
  CHECK(o.lt);
}

TEST_CASE("pointwise comparison, mixed kinds") {
  // 1/x > x on (0,1), equal at 1, crossing beyond
  CHECK(compare_on(id, inv, Rat(0), Rat(1)).lt);
  CHECK(compare_on(id, inv, Rat(0), Rat(1)).le);
  OrderOnInterval o = compare_on(id, inv, Rat(1, 2), Rat(2));
  CHECK(!o.le);
  CHECK(!o.ge);
  CHECK(!o.eq);
  // identical reciprocal expressions
  CHECK(compare_on(inv, inv, Rat(1), Rat(2)).eq);
  CHECK(compare_on(inv, inv, Rat(1), Rat(2)).le);
  CHECK(!compare_on(inv, inv, Rat(1), Rat(2)).lt);
  // x <= 1/x on (0, 1] boundary case: equality exactly at endpoint 1
  CHECK(compare_on(id, inv, Rat(0), Rat(1)).lt);
  CHECK(compare_on(inv, id, Rat(1), Rat(3)).lt);  // 1/x < x beyond 1
}

TEST_CASE("rational crossings") {
  auto pts = equal_points(id, AffineExpr{Rat(-1), Rat(1)}, Rat(0), Rat(1));
  REQUIRE(pts.size() == 1);
  CHECK(pts[0] == Rat(1, 2));

  // x = 1/x at x = 1 inside (1/2, 2)
  pts = equal_points(id, inv, Rat(1, 2), Rat(2));
  REQUIRE(pts.size() == 1);
  CHECK(pts[0] == Rat(1));

  // no crossing inside: disjoint on (2, 3)
  CHECK(equal_points(id, inv, Rat(2), Rat(3)).empty());
}

TEST_CASE("irrational crossings are rejected") {
  // x = 2/x crosses at sqrt(2) inside (1, 3/2)
  PieceExpr two_over_x = RecipExpr{Rat(0), Rat(2), Rat(0)};
  CHECK_THROWS_AS(equal_points(id, two_over_x, Rat(1), Rat(3, 2)), representability_error);
  // same expressions away from sqrt(2): fine
  CHECK(equal_points(id, two_over_x, Rat(3, 2), Rat(2)).empty());
}

TEST_CASE("comparison agrees with dense sampling") {
  testing::Corpus corpus(411);
  for (int trial = 0; trial < 200; ++trial) {
    testing::Corpus::FnOptions opt;
    PWFun f = corpus.random_pwfun(opt), g = corpus.random_pwfun(opt);
    const PieceExpr &e1 = f.pieces()[0], &e2 = g.pieces()[0];
    Rat u(-1), v(1);
    if (pole_inside(e1, u, v) || pole_inside(e2, u, v)) continue;
    if (has_pole_at(e1, u) || has_pole_at(e2, u) || has_pole_at(e1, v) || has_pole_at(e2, v))
      continue;
    OrderOnInterval o = compare_on(e1, e2, u, v);
    bool saw_lt = false, saw_gt = false, saw_eq = false;
    for (int k = 1; k < 64; ++k) {
      Rat x = u + (v - u) * Rat(k, 64);
      int s = (eval(e2, x) - eval(e1, x)).sign();
      saw_lt |= s > 0;
      saw_gt |= s < 0;
      saw_eq |= s == 0;
    }
    if (o.lt) CHECK(!saw_gt);
    if (o.lt) CHECK(!saw_eq);
    if (o.gt) CHECK(!saw_lt);
    if (o.eq) CHECK((!saw_lt && !saw_gt));
    if (saw_lt && saw_gt) CHECK((!o.le && !o.ge));
  }
}
