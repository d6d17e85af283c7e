#include "cusco/svmap.hpp"

#include <algorithm>

#include "cusco/analysis.hpp"

namespace cusco {

namespace {

std::vector<IntervalValue> normalize_intervals(std::vector<IntervalValue> xs) {
  for (const auto& iv : xs)
    if (iv.hi < iv.lo)
      throw std::invalid_argument("interval with hi < lo: " + iv.str());
  std::sort(xs.begin(), xs.end(),
            [](const IntervalValue& a, const IntervalValue& b) {
              return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
            });
  std::vector<IntervalValue> out;
  for (auto& iv : xs) {
    if (!out.empty() && iv.lo <= out.back().hi) {
      out.back().hi = max(out.back().hi, iv.hi);
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

// Limit of a band at breakpoint t from one side, as an interval of
// extended reals (ordered since lower <= upper pointwise).
std::pair<ExtReal, ExtReal> band_limit(const Band& b, const Rat& t, Approach from) {
  return {one_sided_limit(b.lower, t, from), one_sided_limit(b.upper, t, from)};
}

struct SideRef {
  size_t piece;     // adjacent piece index
  Approach from;    // approach direction toward the breakpoint
  const char* name; // "left" / "right"
};

std::vector<SideRef> sides_of(size_t bp_index, size_t piece_count) {
  std::vector<SideRef> out;
  if (bp_index > 0) out.push_back({bp_index - 1, Approach::FromLeft, "left"});
  if (bp_index < piece_count) out.push_back({bp_index, Approach::FromRight, "right"});
  return out;
}

bool fits_in_union(const Rat& lo, const Rat& hi, const std::vector<IntervalValue>& u) {
  // A connected interval inside a disjoint union must fit one component.
  return std::any_of(u.begin(), u.end(), [&](const IntervalValue& iv) {
    return iv.lo <= lo && hi <= iv.hi;
  });
}

}  // namespace

std::string ExtInterval::str() const {
  // Both bounds at the same infinity: every finite value escapes, the
  // set of reals described is empty.
  if (lo.is_plus_inf() || hi.is_minus_inf()) return "empty";
  if (lo.is_finite() && lo == hi) return "{" + lo.finite().str() + "}";
  std::string s = lo.is_finite() ? "[" + lo.finite().str() + ", " : "(-inf, ";
  s += hi.is_finite() ? hi.finite().str() + "]" : "+inf)";
  return s;
}

MultiMap::MultiMap(std::vector<Rat> breakpoints, std::vector<std::vector<Band>> piece_bands,
                   std::vector<std::vector<IntervalValue>> bp_values)
    : breaks_(std::move(breakpoints)),
      bands_(std::move(piece_bands)),
      values_(std::move(bp_values)) {
  if (breaks_.size() < 2) throw std::invalid_argument("map domain needs two breakpoints");
  if (bands_.size() + 1 != breaks_.size())
    throw std::invalid_argument("map piece count must be breakpoint count - 1");
  if (values_.size() != breaks_.size())
    throw std::invalid_argument("map needs one value set per breakpoint");
  for (size_t i = 0; i + 1 < breaks_.size(); ++i)
    if (!(breaks_[i] < breaks_[i + 1]))
      throw std::invalid_argument("map breakpoints not strictly increasing");

  for (auto& vs : values_) {
    vs = normalize_intervals(std::move(vs));
    if (vs.empty()) throw std::invalid_argument("empty breakpoint value set");
  }

  for (size_t i = 0; i < bands_.size(); ++i) {
    const Rat &u = breaks_[i], &v = breaks_[i + 1];
    auto& bl = bands_[i];
    if (bl.empty()) throw std::invalid_argument("piece " + std::to_string(i) + " has no bands");
    for (const Band& b : bl) {
      if (pole_inside(b.lower, u, v) || pole_inside(b.upper, u, v))
        throw std::invalid_argument("reciprocal pole inside open piece " + std::to_string(i));
      if (!compare_on(b.lower, b.upper, u, v).le)
        throw std::invalid_argument("band lower > upper somewhere on piece " +
                                    std::to_string(i));
    }
    // Sort bands by value at the midpoint, then require strict pointwise
    // disjointness of neighbors (disjoint bands keep one order throughout).
    Rat mid = (u + v) / Rat(2);
    std::stable_sort(bl.begin(), bl.end(), [&](const Band& a, const Band& b) {
      return eval(a.lower, mid) < eval(b.lower, mid);
    });
    for (size_t k = 0; k + 1 < bl.size(); ++k)
      if (!compare_on(bl[k].upper, bl[k + 1].lower, u, v).lt) {
        std::string where;
        if (!same_function(bl[k].upper, bl[k + 1].lower)) {
          auto crossings = equal_points(bl[k].upper, bl[k + 1].lower, u, v);
          if (!crossings.empty()) where = " near x = " + crossings.front().str();
        }
        throw std::invalid_argument("bands overlap or cross on piece " + std::to_string(i) +
                                    where);
      }
  }
}

std::optional<size_t> MultiMap::breakpoint_index(const Rat& t) const {
  auto it = std::lower_bound(breaks_.begin(), breaks_.end(), t);
  if (it != breaks_.end() && *it == t)
    return static_cast<size_t>(it - breaks_.begin());
  return std::nullopt;
}

std::vector<IntervalValue> MultiMap::value_at(const Rat& x) const {
  if (x < domain_lo() || x > domain_hi())
    throw std::domain_error("point " + x.str() + " outside map domain");
  if (auto bi = breakpoint_index(x)) return values_[*bi];
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
  size_t pi = static_cast<size_t>(it - breaks_.begin()) - 1;
  std::vector<IntervalValue> out;
  for (const Band& b : bands_[pi]) out.push_back({eval(b.lower, x), eval(b.upper, x)});
  return out;
}

MultiMap MultiMap::refined(const std::vector<Rat>& extra) const {
  std::vector<Rat> add;
  for (const Rat& x : extra)
    if (domain_lo() < x && x < domain_hi() && !breakpoint_index(x)) add.push_back(x);
  if (add.empty()) return *this;
  std::sort(add.begin(), add.end());
  add.erase(std::unique(add.begin(), add.end()), add.end());

  std::vector<Rat> breaks;
  std::vector<std::vector<Band>> bands;
  std::vector<std::vector<IntervalValue>> values;
  size_t ai = 0;
  for (size_t i = 0; i < bands_.size(); ++i) {
    breaks.push_back(breaks_[i]);
    values.push_back(values_[i]);
    while (ai < add.size() && add[ai] < breaks_[i + 1]) {
      bands.push_back(bands_[i]);
      breaks.push_back(add[ai]);
      values.push_back(value_at(add[ai]));
      ++ai;
    }
    bands.push_back(bands_[i]);
  }
  breaks.push_back(breaks_.back());
  values.push_back(values_.back());
  return MultiMap(std::move(breaks), std::move(bands), std::move(values));
}

MultiMap MultiMap::canonical() const {
  std::vector<Rat> breaks{breaks_.front()};
  std::vector<std::vector<Band>> bands;
  std::vector<std::vector<IntervalValue>> values{values_.front()};
  auto normalized = [](std::vector<Band> bl) {
    for (Band& b : bl) {
      b.lower = normal_form(b.lower);
      b.upper = normal_form(b.upper);
    }
    return bl;
  };
  bands.push_back(normalized(bands_.front()));
  for (size_t i = 1; i < breaks_.size(); ++i) {
    if (i < bands_.size()) {
      auto next = normalized(bands_[i]);
      bool mergeable = next.size() == bands.back().size();
      if (mergeable)
        for (size_t k = 0; k < next.size(); ++k)
          mergeable = mergeable && next[k].lower == bands.back()[k].lower &&
                      next[k].upper == bands.back()[k].upper &&
                      !has_pole_at(next[k].lower, breaks_[i]) &&
                      !has_pole_at(next[k].upper, breaks_[i]);
      if (mergeable) {
        std::vector<IntervalValue> at_t;
        for (const Band& b : next) at_t.push_back({eval(b.lower, breaks_[i]), eval(b.upper, breaks_[i])});
        mergeable = normalize_intervals(at_t) == values_[i];
      }
      if (mergeable) continue;
      breaks.push_back(breaks_[i]);
      values.push_back(values_[i]);
      bands.push_back(std::move(next));
    } else {
      breaks.push_back(breaks_[i]);
      values.push_back(values_[i]);
    }
  }
  return MultiMap(std::move(breaks), std::move(bands), std::move(values));
}

bool operator==(const MultiMap& a, const MultiMap& b) {
  if (a.domain_lo() != b.domain_lo() || a.domain_hi() != b.domain_hi()) return false;
  MultiMap ra = a.refined(b.breaks_), rb = b.refined(a.breaks_);
  if (ra.breaks_ != rb.breaks_ || ra.values_ != rb.values_) return false;
  for (size_t i = 0; i < ra.bands_.size(); ++i) {
    if (ra.bands_[i].size() != rb.bands_[i].size()) return false;
    for (size_t k = 0; k < ra.bands_[i].size(); ++k)
      if (!same_function(ra.bands_[i][k].lower, rb.bands_[i][k].lower) ||
          !same_function(ra.bands_[i][k].upper, rb.bands_[i][k].upper))
        return false;
  }
  return true;
}

GraphMap::GraphMap(std::vector<Rat> breakpoints, std::vector<PieceExpr> curves,
                   std::vector<std::vector<Rat>> bp_points)
    : breaks_(std::move(breakpoints)),
      curves_(std::move(curves)),
      points_(std::move(bp_points)) {
  if (breaks_.size() < 2 || curves_.size() + 1 != breaks_.size() ||
      points_.size() != breaks_.size())
    throw std::invalid_argument("graph map shape mismatch");
  for (size_t i = 0; i + 1 < breaks_.size(); ++i) {
    if (!(breaks_[i] < breaks_[i + 1]))
      throw std::invalid_argument("graph map breakpoints not strictly increasing");
    if (pole_inside(curves_[i], breaks_[i], breaks_[i + 1]))
      throw std::invalid_argument("reciprocal pole inside open piece");
  }
  for (auto& ps : points_) {
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    if (ps.empty()) throw std::invalid_argument("empty breakpoint value set in graph map");
  }
}

MultiMap GraphMap::as_multimap() const {
  std::vector<std::vector<Band>> bands;
  for (const PieceExpr& c : curves_) bands.push_back({Band{c, c}});
  std::vector<std::vector<IntervalValue>> values;
  for (const auto& ps : points_) {
    std::vector<IntervalValue> vs;
    for (const Rat& p : ps) vs.push_back({p, p});
    values.push_back(std::move(vs));
  }
  return MultiMap(breaks_, std::move(bands), std::move(values));
}

GraphMap GraphMap::refined(const std::vector<Rat>& extra) const {
  std::vector<Rat> add;
  for (const Rat& x : extra)
    if (breaks_.front() < x && x < breaks_.back() &&
        !std::binary_search(breaks_.begin(), breaks_.end(), x))
      add.push_back(x);
  if (add.empty()) return *this;
  std::sort(add.begin(), add.end());
  add.erase(std::unique(add.begin(), add.end()), add.end());

  std::vector<Rat> breaks;
  std::vector<PieceExpr> curves;
  std::vector<std::vector<Rat>> points;
  size_t ai = 0;
  for (size_t i = 0; i < curves_.size(); ++i) {
    breaks.push_back(breaks_[i]);
    points.push_back(points_[i]);
    while (ai < add.size() && add[ai] < breaks_[i + 1]) {
      curves.push_back(curves_[i]);
      breaks.push_back(add[ai]);
      points.push_back({eval(curves_[i], add[ai])});
      ++ai;
    }
    curves.push_back(curves_[i]);
  }
  breaks.push_back(breaks_.back());
  points.push_back(points_.back());
  return GraphMap(std::move(breaks), std::move(curves), std::move(points));
}

GraphMap GraphMap::canonical() const {
  std::vector<Rat> breaks{breaks_.front()};
  std::vector<PieceExpr> curves{normal_form(curves_.front())};
  std::vector<std::vector<Rat>> points{points_.front()};
  for (size_t i = 1; i < breaks_.size(); ++i) {
    if (i < curves_.size()) {
      PieceExpr next = normal_form(curves_[i]);
      bool mergeable = same_function(curves.back(), next) && !has_pole_at(next, breaks_[i]) &&
                       points_[i] == std::vector<Rat>{eval(next, breaks_[i])};
      if (mergeable) continue;
      breaks.push_back(breaks_[i]);
      points.push_back(points_[i]);
      curves.push_back(std::move(next));
    } else {
      breaks.push_back(breaks_[i]);
      points.push_back(points_[i]);
    }
  }
  return GraphMap(std::move(breaks), std::move(curves), std::move(points));
}

bool operator==(const GraphMap& a, const GraphMap& b) {
  if (a.breaks_.front() != b.breaks_.front() || a.breaks_.back() != b.breaks_.back())
    return false;
  GraphMap ra = a.refined(b.breaks_), rb = b.refined(a.breaks_);
  if (ra.breaks_ != rb.breaks_ || ra.points_ != rb.points_) return false;
  for (size_t i = 0; i < ra.curves_.size(); ++i)
    if (!same_function(ra.curves_[i], rb.curves_[i])) return false;
  return true;
}

GraphMap graph_closure(const PWFun& f) {
  Verdict sc = is_subcontinuous(f);
  if (!sc.holds)
    throw precondition_error("graph_closure requires a subcontinuous function", sc);
  std::vector<std::vector<Rat>> points;
  for (const Rat& t : f.breakpoints())
    points.push_back(f.cluster_set(t).finite_members());
  return GraphMap(f.breakpoints(), f.pieces(), std::move(points));
}

MultiMap convexify(const MultiMap& m) {
  std::vector<std::vector<Band>> bands;
  for (const auto& bl : m.piece_bands())
    bands.push_back({Band{bl.front().lower, bl.back().upper}});
  std::vector<std::vector<IntervalValue>> values;
  for (const auto& vs : m.bp_values())
    values.push_back({IntervalValue{vs.front().lo, vs.back().hi}});
  return MultiMap(m.breakpoints(), std::move(bands), std::move(values));
}

MultiMap convexify(const GraphMap& g) { return convexify(g.as_multimap()); }

ExtInterval csc_at(const PWFun& f, const Rat& x) {
  ClusterSet cs = f.cluster_set(x);
  std::vector<ExtReal> members;
  if (cs.left_limit) members.push_back(*cs.left_limit);
  if (cs.right_limit) members.push_back(*cs.right_limit);
  if (cs.point_value) members.push_back(ExtReal(*cs.point_value));
  ExtInterval out{members.front(), members.front()};
  for (const ExtReal& e : members) {
    out.lo = min(out.lo, e);
    out.hi = max(out.hi, e);
  }
  return out;
}

Verdict is_usco(const MultiMap& m) {
  Verdict v;
  const auto& breaks = m.breakpoints();
  for (size_t i = 0; i < breaks.size(); ++i) {
    for (const SideRef& s : sides_of(i, m.piece_count())) {
      for (const Band& b : m.piece_bands()[s.piece]) {
        auto [llo, lhi] = band_limit(b, breaks[i], s.from);
        if (!llo.is_finite() || !lhi.is_finite()) {
          v.fail({breaks[i],
                  std::string(s.name) + " values escape every bounded neighborhood (limit " +
                      (llo.is_finite() ? lhi.str() : llo.str()) + ")",
                  std::nullopt});
        } else if (!fits_in_union(llo.finite(), lhi.finite(), m.bp_values()[i])) {
          v.fail({breaks[i],
                  std::string(s.name) + " limit interval [" + llo.str() + ", " + lhi.str() +
                      "] not contained in the value set",
                  std::nullopt});
        }
      }
    }
  }
  return v;
}

Verdict is_cusco(const MultiMap& m) {
  Verdict v = is_usco(m);
  const auto& breaks = m.breakpoints();
  for (size_t i = 0; i < m.piece_count(); ++i)
    if (m.piece_bands()[i].size() != 1)
      v.fail({(breaks[i] + breaks[i + 1]) / Rat(2),
              "piece value is a union of " + std::to_string(m.piece_bands()[i].size()) +
                  " bands (not convex)",
              std::nullopt});
  for (size_t i = 0; i < breaks.size(); ++i)
    if (m.bp_values()[i].size() != 1)
      v.fail({breaks[i],
              "value has " + std::to_string(m.bp_values()[i].size()) +
                  " components (not convex)",
              std::nullopt});
  return v;
}

Verdict has_closed_graph(const MultiMap& m) {
  Verdict v;
  const auto& breaks = m.breakpoints();
  for (size_t i = 0; i < breaks.size(); ++i) {
    for (const SideRef& s : sides_of(i, m.piece_count())) {
      for (const Band& b : m.piece_bands()[s.piece]) {
        auto [llo, lhi] = band_limit(b, breaks[i], s.from);
        if (llo == lhi && !llo.is_finite()) continue;  // escapes; no finite limit points
        if (llo.is_finite() && lhi.is_finite()) {
          if (!fits_in_union(llo.finite(), lhi.finite(), m.bp_values()[i]))
            v.fail({breaks[i],
                    std::string(s.name) + " limit points [" + llo.str() + ", " + lhi.str() +
                        "] not all in the value set",
                    std::nullopt});
        } else {
          v.fail({breaks[i],
                  std::string(s.name) + " limit point set unbounded (band limits " + llo.str() +
                      ", " + lhi.str() + ")",
                  std::nullopt});
        }
      }
    }
  }
  return v;
}

std::pair<PWFun, PWFun> envelopes(const MultiMap& m) {
  std::vector<PieceExpr> lo_pieces, hi_pieces;
  for (const auto& bl : m.piece_bands()) {
    lo_pieces.push_back(bl.front().lower);
    hi_pieces.push_back(bl.back().upper);
  }
  std::vector<std::optional<Rat>> lo_vals, hi_vals;
  for (const auto& vs : m.bp_values()) {
    lo_vals.emplace_back(vs.front().lo);
    hi_vals.emplace_back(vs.back().hi);
  }
  return {PWFun(m.breakpoints(), std::move(lo_pieces), std::move(lo_vals)),
          PWFun(m.breakpoints(), std::move(hi_pieces), std::move(hi_vals))};
}

bool contained_in(const MultiMap& a, const MultiMap& b) {
  if (a.domain_lo() != b.domain_lo() || a.domain_hi() != b.domain_hi()) return false;
  MultiMap ra = a.refined(b.breakpoints()), rb = b.refined(a.breakpoints());
  for (size_t i = 0; i < ra.piece_count(); ++i) {
    const Rat &u = ra.breakpoints()[i], &v = ra.breakpoints()[i + 1];
    for (const Band& ba : ra.piece_bands()[i]) {
      bool ok = std::any_of(
          rb.piece_bands()[i].begin(), rb.piece_bands()[i].end(), [&](const Band& bb) {
            return compare_on(bb.lower, ba.lower, u, v).le &&
                   compare_on(ba.upper, bb.upper, u, v).le;
          });
      if (!ok) return false;
    }
  }
  for (size_t i = 0; i < ra.breakpoints().size(); ++i)
    for (const IntervalValue& iv : ra.bp_values()[i])
      if (!fits_in_union(iv.lo, iv.hi, rb.bp_values()[i])) return false;
  return true;
}

bool contained_in(const GraphMap& a, const MultiMap& b) {
  return contained_in(a.as_multimap(), b);
}

}  // namespace cusco
