#include "cusco/minimal.hpp"

#include <algorithm>

namespace cusco {

namespace {

std::string points_str(const std::vector<Rat>& ps) {
  std::string s = "{";
  for (size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + ps[i].str();
  return s + "}";
}

// First point where two graph maps differ, for witness reporting.
std::optional<Rat> first_difference(const GraphMap& a, const GraphMap& b) {
  GraphMap ra = a.refined(b.breakpoints()), rb = b.refined(a.breakpoints());
  const auto& breaks = ra.breakpoints();
  for (size_t i = 0; i < breaks.size(); ++i) {
    if (ra.bp_points()[i] != rb.bp_points()[i]) return breaks[i];
    if (i < ra.curves().size() && !same_function(ra.curves()[i], rb.curves()[i]))
      return (breaks[i] + breaks[i + 1]) / Rat(2);
  }
  return std::nullopt;
}

}  // namespace

MultiMap minimal_cusco_from(const PWFun& f) {
  Verdict qc = is_quasicontinuous(f);
  if (!qc.holds)
    throw precondition_error("minimal_cusco_from requires a quasicontinuous selection", qc);
  Verdict sc = is_subcontinuous(f);
  if (!sc.holds)
    throw precondition_error("minimal_cusco_from requires a subcontinuous selection", sc);
  return convexify(graph_closure(f));
}

Verdict is_minimal_usco(const MultiMap& m) {
  Verdict v = is_usco(m);
  if (!v.holds) return v;
  const auto& breaks = m.breakpoints();
  for (size_t i = 0; i < m.piece_count(); ++i) {
    const auto& bl = m.piece_bands()[i];
    const Rat &u = breaks[i], &w = breaks[i + 1];
    if (bl.size() != 1 || !compare_on(bl[0].lower, bl[0].upper, u, w).eq) {
      v.fail({(u + w) / Rat(2), "value not a singleton on the open piece", std::nullopt});
      continue;
    }
  }
  if (!v.holds) return v;
  for (size_t i = 0; i < breaks.size(); ++i) {
    std::vector<Rat> limits;
    if (i > 0) {
      ExtReal l = one_sided_limit(m.piece_bands()[i - 1][0].lower, breaks[i], Approach::FromLeft);
      limits.push_back(l.finite());  // finite by the usco check above
    }
    if (i < m.piece_count()) {
      ExtReal r = one_sided_limit(m.piece_bands()[i][0].lower, breaks[i], Approach::FromRight);
      limits.push_back(r.finite());
    }
    std::sort(limits.begin(), limits.end());
    limits.erase(std::unique(limits.begin(), limits.end()), limits.end());
    std::vector<Rat> actual;
    bool all_points = true;
    for (const IntervalValue& iv : m.bp_values()[i]) {
      all_points = all_points && iv.is_point();
      actual.push_back(iv.lo);
    }
    if (!all_points || actual != limits)
      v.fail({breaks[i],
              "value set differs from the one-sided limit set " + points_str(limits),
              std::nullopt});
  }
  return v;
}

Verdict is_minimal_usco(const GraphMap& g) { return is_minimal_usco(g.as_multimap()); }

Verdict is_minimal_cusco(const MultiMap& m) {
  Verdict v;
  const auto& breaks = m.breakpoints();
  for (size_t i = 0; i < m.piece_count(); ++i)
    if (m.piece_bands()[i].size() != 1)
      v.fail({(breaks[i] + breaks[i + 1]) / Rat(2), "piece value not convex", std::nullopt});
  for (size_t i = 0; i < breaks.size(); ++i)
    if (m.bp_values()[i].size() != 1)
      v.fail({breaks[i], "breakpoint value not convex", std::nullopt});
  v.absorb(has_closed_graph(m));

  auto [inf_f, sup_f] = envelopes(m);
  auto prefixed = [](Verdict w, const std::string& p) {
    for (Witness& wit : w.witnesses) wit.detail = p + wit.detail;
    return w;
  };
  Verdict sup_sc = is_subcontinuous(sup_f), inf_sc = is_subcontinuous(inf_f);
  v.absorb(prefixed(is_quasicontinuous(sup_f), "sup envelope not quasicontinuous: "));
  v.absorb(prefixed(is_quasicontinuous(inf_f), "inf envelope not quasicontinuous: "));
  v.absorb(prefixed(sup_sc, "sup envelope not subcontinuous: "));
  v.absorb(prefixed(inf_sc, "inf envelope not subcontinuous: "));
  if (!sup_sc.holds || !inf_sc.holds) return v;

  GraphMap cl_sup = graph_closure(sup_f), cl_inf = graph_closure(inf_f);
  if (!(cl_sup == cl_inf)) {
    auto at = first_difference(cl_sup, cl_inf);
    v.fail({at.value_or(m.domain_lo()),
            "closures of the sup and inf envelopes differ", std::nullopt});
  }
  return v;
}

GraphMap minimal_usco_within(const MultiMap& m, EnvelopeVariant variant) {
  Verdict u = is_usco(m);
  if (!u.holds) throw precondition_error("minimal_usco_within requires a usco map", u);
  auto [inf_f, sup_f] = envelopes(m);
  const PWFun& f = variant == EnvelopeVariant::Inf ? inf_f : sup_f;
  return graph_closure(f.restrict(f.continuity_points().excluded));
}

MultiMap minimal_cusco_within(const MultiMap& m, EnvelopeVariant variant) {
  Verdict c = is_cusco(m);
  if (!c.holds) throw precondition_error("minimal_cusco_within requires a cusco map", c);
  return convexify(minimal_usco_within(m, variant));
}

GraphMap unique_minimal_usco(const MultiMap& m) {
  Verdict mc = is_minimal_cusco(m);
  if (!mc.holds)
    throw precondition_error("unique_minimal_usco requires a minimal cusco map", mc);
  auto [inf_f, sup_f] = envelopes(m);
  GraphMap cl_sup = graph_closure(sup_f);
  if (!(cl_sup == graph_closure(inf_f)))
    throw std::logic_error("envelope closures differ inside a minimal cusco map");
  return cl_sup;
}

PWFun extreme_selection(const MultiMap& m, std::vector<Rat> switches) {
  Verdict c = is_cusco(m);
  if (!c.holds) throw precondition_error("extreme_selection requires a cusco map", c);
  for (const Rat& s : switches)
    if (s < m.domain_lo() || s > m.domain_hi())
      throw std::invalid_argument("switch point " + s.str() + " outside the domain");
  std::sort(switches.begin(), switches.end());
  switches.erase(std::unique(switches.begin(), switches.end()), switches.end());

  auto [inf_f, sup_f] = envelopes(m);
  PWFun lo = inf_f.refined(switches), hi = sup_f.refined(switches);
  const auto& breaks = lo.breakpoints();

  std::vector<PieceExpr> pieces;
  std::vector<std::optional<Rat>> values;
  bool use_sup = false;
  size_t si = 0;
  for (size_t i = 0; i < breaks.size(); ++i) {
    if (si < switches.size() && switches[si] == breaks[i]) {
      use_sup = !use_sup;
      ++si;
    }
    values.push_back(use_sup ? hi.bp_values()[i] : lo.bp_values()[i]);
    if (i < lo.piece_count())
      pieces.push_back(use_sup ? hi.pieces()[i] : lo.pieces()[i]);
  }
  return PWFun(breaks, std::move(pieces), std::move(values));
}

}  // namespace cusco
