// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria with a stated time budget fail when they exceed it.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cusco/analysis.hpp"
#include "cusco/commands.hpp"
#include "cusco/minimal.hpp"
#include "cusco/oracle.hpp"
#include "support/corpus.hpp"

using namespace cusco;
using namespace cusco::testing;

namespace {

struct Check {
  int id;
  std::string label;
  double budget_seconds;  // 0 = unbounded
  std::function<bool(std::string&)> run;
};

SpecDoc load_fixture(const std::string& name) {
  std::ifstream in(std::string(FIXTURES_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

bool expect(bool ok, const std::string& what, std::string& note) {
  if (!ok && note.empty()) note = what;
  return ok;
}

// ---- criterion 1 ----------------------------------------------------------

bool criterion_example_2_1(std::string& note) {
  SpecDoc doc = load_fixture("example2_1.sv");
  const PWFun* f = doc.find_function("f");
  if (!expect(f != nullptr, "fixture function missing", note)) return false;
  Verdict hm = is_hyperplane_minimal(*f);
  Verdict qc = is_quasicontinuous(*f);
  bool ok = expect(hm.holds, "hyperplane minimality expected", note);
  ok = expect(!qc.holds, "quasicontinuity should fail", note) && ok;
  ok = expect(qc.witnesses.size() == 1 && qc.witnesses[0].point == Rat(0),
              "witness at 0 expected", note) && ok;
  return ok;
}

// ---- criterion 2 ----------------------------------------------------------

bool criterion_example_2_2(std::string& note) {
  SpecDoc doc = load_fixture("example2_2.sv");
  const PWFun& f = *doc.find_function("f");
  bool ok = expect(csc_at(f, Rat(0)) == ExtInterval{ExtReal{Rat(0)}, ExtReal::plus_inf()},
                   "CSC at 0 should be [0, +inf)", note);
  for (const Rat& x : {Rat(-2), Rat(-1), Rat(-1, 4), Rat(1, 4), Rat(1), Rat(3, 2), Rat(2)}) {
    Rat v = *f.eval(x);
    ok = expect(csc_at(f, x) == ExtInterval{ExtReal{v}, ExtReal{v}},
                "CSC should be {f(x)} at " + x.str(), note) && ok;
  }
  ok = expect(f.cluster_set(Rat(0)).finite_members() == std::vector<Rat>{Rat(0)},
              "co(cl f)(0) should be {0}", note) && ok;
  Verdict sc = is_subcontinuous(f);
  ok = expect(!sc.holds && sc.witnesses.size() == 1 && sc.witnesses[0].point == Rat(0),
              "subcontinuity should fail exactly at 0", note) && ok;
  return ok;
}

// ---- criterion 3 ----------------------------------------------------------

bool criterion_envelope_equivalence(std::string& note) {
  Corpus corpus(33301);
  int agreements = 0;
  for (int trial = 0; trial < 500; ++trial) {
    MultiMap f = corpus.random_convex_valued();

    bool path_a = is_minimal_cusco(f).holds;

    bool path_b = true;  // clause (3): envelope closures reproduce the map
    auto [lo, hi] = envelopes(f);
    for (const PWFun* env : {&lo, &hi}) {
      if (!is_quasicontinuous(*env).holds || !is_subcontinuous(*env).holds) {
        path_b = false;
        break;
      }
      if (!(convexify(graph_closure(*env)) == f)) path_b = false;
    }

    bool path_c = is_cusco(f).holds;  // construction roundtrip via a selection
    if (path_c) {
      PWFun sel = extreme_selection(f, corpus.random_switches(f, 3));
      path_c = is_quasicontinuous(sel).holds && is_subcontinuous(sel).holds &&
               convexify(graph_closure(sel)) == f;
    }

    if (path_a == path_b && path_b == path_c)
      ++agreements;
    else if (note.empty())
      note = "disagreement on trial " + std::to_string(trial) + ": clause2=" +
             std::to_string(path_a) + " clause3=" + std::to_string(path_b) +
             " roundtrip=" + std::to_string(path_c);
  }
  return expect(agreements == 500,
                std::to_string(agreements) + "/500 agreements (" + note + ")", note);
}

// ---- criterion 4 ----------------------------------------------------------

bool criterion_construction_roundtrip(std::string& note) {
  Corpus corpus(33401);
  for (int trial = 0; trial < 500; ++trial) {
    PWFun f = corpus.random_qc_subcont();
    MultiMap m = minimal_cusco_from(f);
    if (!expect(is_minimal_cusco(m).holds, "constructed map not minimal cusco", note))
      return false;
    if (!expect(unique_minimal_usco(m) == graph_closure(f),
                "unique minimal usco differs from cl f", note))
      return false;
  }
  return true;
}

// ---- criterion 5 ----------------------------------------------------------

bool criterion_extraction(std::string& note) {
  Corpus corpus(33501);
  for (int trial = 0; trial < 200; ++trial) {
    Corpus::MapOptions opt;
    opt.multiband = corpus.chance(35);
    opt.extra_components = corpus.chance(35);
    MultiMap f = corpus.random_usco(opt);
    GraphMap g = minimal_usco_within(f);
    if (!expect(contained_in(g, f), "extracted usco not contained", note)) return false;
    if (!expect(is_minimal_usco(g).holds, "extracted usco not minimal", note)) return false;
  }
  for (int trial = 0; trial < 200; ++trial) {
    MultiMap f = corpus.random_cusco(corpus.chance(70));
    for (EnvelopeVariant v : {EnvelopeVariant::Inf, EnvelopeVariant::Sup}) {
      MultiMap c = minimal_cusco_within(f, v);
      if (!expect(contained_in(c, f), "extracted cusco not contained", note)) return false;
      if (!expect(is_minimal_cusco(c).holds, "extracted cusco not minimal", note)) return false;
    }
  }
  MultiMap box = constant_map(0, 1);
  bool ok = expect(minimal_cusco_within(box, EnvelopeVariant::Inf) == constant_map(0, 0),
                   "inf variant of [0,1] should be {0}", note);
  ok = expect(minimal_cusco_within(box, EnvelopeVariant::Sup) == constant_map(1, 1),
              "sup variant of [0,1] should be {1}", note) && ok;
  return ok;
}

// ---- criterion 6 ----------------------------------------------------------

bool criterion_uniqueness(std::string& note) {
  Corpus corpus(33601);
  for (int trial = 0; trial < 200; ++trial) {
    MultiMap f = corpus.random_minimal_cusco();
    GraphMap via_inf = minimal_usco_within(f, EnvelopeVariant::Inf);
    GraphMap via_sup = minimal_usco_within(f, EnvelopeVariant::Sup);
    GraphMap unique = unique_minimal_usco(f);
    if (!expect(via_inf == unique && via_sup == unique,
                "envelope extraction paths disagree", note))
      return false;
    for (int s = 0; s < 5; ++s) {
      PWFun sel = extreme_selection(f, corpus.random_switches(f, 4));
      if (!expect(graph_closure(sel) == unique, "extreme selection closure differs", note))
        return false;
    }
  }
  return true;
}

// ---- criterion 7 ----------------------------------------------------------

bool criterion_extreme_functions(std::string& note) {
  Corpus corpus(33701);
  for (int trial = 0; trial < 200; ++trial) {
    MultiMap f = corpus.random_minimal_cusco();
    GraphMap common = unique_minimal_usco(f);
    for (int s = 0; s < 5; ++s) {
      PWFun sel = extreme_selection(f, corpus.random_switches(f, 4));
      if (!expect(is_quasicontinuous(sel).holds, "extreme selection not quasicontinuous", note))
        return false;
      if (!expect(is_subcontinuous(sel).holds, "extreme selection not subcontinuous", note))
        return false;
      if (!expect(graph_closure(sel) == common, "closures differ across selections", note))
        return false;
    }
  }
  return true;
}

// ---- criterion 8 ----------------------------------------------------------

bool criterion_subdifferential(std::string& note) {
  Corpus corpus(33801);
  for (int trial = 0; trial < 100; ++trial) {
    ConvexPWAffine g = corpus.random_convex_pwaffine();
    MultiMap d = subdifferential(g);
    if (!expect(is_minimal_cusco(d).holds, "subdifferential not minimal cusco", note))
      return false;
    auto [lo, hi] = envelopes(d);
    (void)lo;
    if (!expect(differentiability_points(g) == hi.continuity_points(),
                "differentiability points differ from sup-envelope continuity points", note))
      return false;
  }
  ConvexPWAffine abs_fn({Rat(-1), Rat(0), Rat(1)}, {Rat(-1), Rat(1)}, Rat(1));
  return expect(subdifferential(abs_fn).value_at(Rat(0)) ==
                    std::vector<IntervalValue>{IntervalValue{Rat(-1), Rat(1)}},
                "subdifferential of |x| at 0 should be [-1, 1]", note);
}

// ---- criterion 9 (O1) -----------------------------------------------------

std::vector<Rat> witness_points(const Verdict& v) {
  std::vector<Rat> pts;
  for (const Witness& w : v.witnesses) pts.push_back(w.point);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

bool criterion_oracle_line(std::string& note) {
  Corpus corpus(33901);
  int functions = 0, maps = 0;
  while (functions < 300) {
    Corpus::FnOptions opt;
    opt.undefined_percent = corpus.chance(30) ? 20 : 0;
    opt.quasicontinuous = corpus.chance(40);
    opt.subcontinuous = corpus.chance(50);
    opt.margin_checked = true;
    PWFun f = corpus.random_pwfun(opt);
    if (!expect(witness_points(is_quasicontinuous(f)) ==
                    witness_points(oracle_quasicontinuous(f)),
                "quasicontinuity disagreement", note))
      return false;
    if (!expect(witness_points(is_hyperplane_minimal(f)) ==
                    witness_points(oracle_hyperplane_minimal(f)),
                "hyperplane minimality disagreement", note))
      return false;
    ++functions;
  }
  while (maps < 200) {
    Corpus::MapOptions opt;
    opt.multiband = corpus.chance(40);
    opt.pad_values = corpus.chance(70);
    opt.extra_components = corpus.chance(30);
    opt.margin_checked = true;
    MultiMap m = corpus.random_usco(opt);
    if (!expect(witness_points(is_usco(m)) == witness_points(oracle_usc(m)),
                "usc disagreement", note))
      return false;
    if (!expect(is_minimal_usco(m).holds == submap_search(m).holds,
                "minimality disagreement", note))
      return false;
    ++maps;
  }

  // the two named example functions at depth 10
  for (const PWFun& f : {example_2_1(), example_2_2()}) {
    if (!expect(is_quasicontinuous(f).holds == oracle_quasicontinuous(f, 10).holds,
                "depth-10 quasicontinuity disagreement", note))
      return false;
    if (!expect(is_hyperplane_minimal(f).holds == oracle_hyperplane_minimal(f, 10).holds,
                "depth-10 hyperplane minimality disagreement", note))
      return false;
  }
  return true;
}

// ---- criterion 10 (O2) ----------------------------------------------------

bool criterion_oracle_plane(std::string& note) {
  Corpus corpus(34001);
  for (int trial = 0; trial < 200; ++trial) {
    Curve2 c = corpus.random_curve(corpus.chance(50));
    if (!expect(is_planar_hyperplane_minimal(c).holds ==
                    oracle_planar_hyperplane_minimal(c).holds,
                "planar hyperplane minimality disagreement", note))
      return false;
  }
  for (int trial = 0; trial < 500; ++trial)
    if (!expect(milman_check(corpus.random_points(corpus.uniform(1, 20))).holds,
                "milman check failed", note))
      return false;
  for (int trial = 0; trial < 100; ++trial) {
    Polygon p = Polygon::hull(corpus.random_points(corpus.uniform(1, 8)));
    Polygon base = Polygon::hull(corpus.random_points(corpus.uniform(1, 8)));
    std::vector<Point2> shifted;
    for (const Point2& v : base.vertices())
      shifted.push_back(v + Point2{Rat(10), Rat(0)});
    Polygon q = Polygon::hull(shifted);
    LinFunc2 h = separate(p, q);
    for (const Point2& v : p.vertices())
      if (!expect(h.eval(v) < h.threshold, "certificate fails on the left polygon", note))
        return false;
    for (const Point2& v : q.vertices())
      if (!expect(h.eval(v) > h.threshold, "certificate fails on the right polygon", note))
        return false;
  }
  return true;
}

// ---- criterion 11 ---------------------------------------------------------

bool criterion_densely_defined(std::string& note) {
  Corpus corpus(34101);
  for (int trial = 0; trial < 200; ++trial) {
    PWFun f = corpus.random_qc_subcont();
    std::vector<Rat> drop;
    for (const Rat& t : f.breakpoints())
      if (corpus.chance(50)) drop.push_back(t);
    PWFun d = f.restrict(drop);
    if (!expect(graph_closure(d) == graph_closure(f),
                "densely defined closure differs", note))
      return false;
    if (!expect(minimal_cusco_from(d) == minimal_cusco_from(f),
                "densely defined construction differs", note))
      return false;
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Check> checks{
      {1, "Example 2.1: hyperplane minimal, not quasicontinuous (witness at 0)", 1.0,
       criterion_example_2_1},
      {2, "Example 2.2: CSC gap, singleton CSC off 0, not subcontinuous at 0", 1.0,
       criterion_example_2_2},
      {3, "envelope characterization: three verdict paths agree on 500 maps", 60.0,
       criterion_envelope_equivalence},
      {4, "construction roundtrip on 500 selections", 60.0, criterion_construction_roundtrip},
      {5, "extraction inside 200 usco / 200 cusco maps, both variants", 0,
       criterion_extraction},
      {6, "uniqueness: inf/sup/extreme paths give one minimal usco, 200 maps", 0,
       criterion_uniqueness},
      {7, "extreme functions: quasicontinuous, subcontinuous, common closure", 0,
       criterion_extreme_functions},
      {8, "subdifferential application on 100 convex piecewise-affine functions", 0,
       criterion_subdifferential},
      {9, "O1 oracle agreement on the line corpus (depth 6; examples at 10)", 0,
       criterion_oracle_line},
      {10, "O2 oracle agreement in the plane; milman sweep; certified separations", 0,
       criterion_oracle_plane},
      {11, "densely defined constructions reproduce the total ones, 200 functions", 0,
       criterion_densely_defined},
  };

  int failures = 0;
  for (const Check& c : checks) {
    std::string note;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.budget_seconds > 0 && secs > c.budget_seconds) {
      ok = false;
      note = "over time budget";
    }
    if (!ok) ++failures;
    std::printf("criterion %2d  %s  (%.2fs)  %s%s%s\n", c.id, ok ? "PASS" : "FAIL", secs,
                c.label.c_str(), note.empty() ? "" : " -- ", note.c_str());
  }
  if (failures)
    std::printf("%d criterion(s) FAILED\n", failures);
  else
    std::printf("all %zu criteria passed\n", checks.size());
  return failures == 0 ? 0 : 1;
}
