#include "cusco/oracle.hpp"

#include <algorithm>

namespace cusco {

namespace {

std::vector<Rat> sorted_unique(std::vector<Rat> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

// Candidate neighborhood radii of f(t) in value space, derived from the
// positive distances to the critical values.
std::vector<Rat> epsilon_family(const Rat& center, const std::vector<ExtReal>& critical) {
  std::vector<Rat> eps;
  for (const ExtReal& c : critical)
    if (c.is_finite() && c.finite() != center) {
      Rat g = abs(c.finite() - center);
      eps.push_back(g / Rat(2));
      eps.push_back(g / Rat(4));
    }
  eps.push_back(Rat(1));
  return sorted_unique(std::move(eps));
}

struct SideInterval {
  size_t piece;
  Rat lo, hi;  // open interval adjacent to the breakpoint
};

std::vector<SideInterval> side_intervals(const std::vector<Rat>& breaks, size_t bp,
                                         size_t piece_count, const Rat& radius) {
  std::vector<SideInterval> out;
  const Rat& t = breaks[bp];
  if (bp > 0) out.push_back({bp - 1, t - radius, t});
  if (bp < piece_count) out.push_back({bp, t, t + radius});
  return out;
}

}  // namespace

NbhdBasis NbhdBasis::standard(const std::vector<Rat>& breakpoints, size_t bp_index, int depth) {
  NbhdBasis b;
  b.center = breakpoints[bp_index];
  std::optional<Rat> gap;
  if (bp_index > 0) gap = b.center - breakpoints[bp_index - 1];
  if (bp_index + 1 < breakpoints.size()) {
    Rat g = breakpoints[bp_index + 1] - b.center;
    gap = gap ? min(*gap, g) : g;
  }
  Rat r = *gap;
  for (int k = 0; k < depth; ++k) {
    r = r / Rat(2);
    b.radii.push_back(r);
  }
  return b;
}

RaySet RaySet::standard(const std::vector<Rat>& critical_values) {
  std::vector<Rat> thresholds = sorted_unique(critical_values);
  std::vector<Rat> all = thresholds;
  for (size_t i = 0; i + 1 < thresholds.size(); ++i)
    all.push_back((thresholds[i] + thresholds[i + 1]) / Rat(2));
  if (!thresholds.empty()) {
    all.push_back(thresholds.front() - Rat(1));
    all.push_back(thresholds.back() + Rat(1));
  }
  RaySet rs;
  for (const Rat& l : sorted_unique(std::move(all))) {
    rs.rays.push_back(Ray{Ray::Up, l});
    rs.rays.push_back(Ray{Ray::Down, l});
  }
  return rs;
}

Verdict oracle_quasicontinuous(const PWFun& f, int depth) {
  Verdict v;
  const auto& breaks = f.breakpoints();
  for (size_t i = 0; i < breaks.size(); ++i) {
    const auto& val = f.bp_values()[i];
    if (!val) continue;
    auto [l, r] = f.one_sided_limits(breaks[i]);
    std::vector<ExtReal> critical;
    if (l) critical.push_back(*l);
    if (r) critical.push_back(*r);
    NbhdBasis basis = NbhdBasis::standard(breaks, i, depth);
    bool failed = false;
    for (const Rat& eps : epsilon_family(*val, critical)) {
      ExtReal vlo{*val - eps}, vhi{*val + eps};
      for (const Rat& radius : basis.radii) {
        bool exists = false;
        for (const SideInterval& s : side_intervals(breaks, i, f.piece_count(), radius))
          exists = exists || image_on(f.pieces()[s.piece], s.lo, s.hi).meets_open(vlo, vhi);
        if (!exists) {
          v.fail({breaks[i],
                  "no nonempty open subset of (" + (breaks[i] - radius).str() + ", " +
                      (breaks[i] + radius).str() + ") maps into (" + vlo.str() + ", " +
                      vhi.str() + ")",
                  std::nullopt});
          failed = true;
          break;
        }
      }
      if (failed) break;
    }
  }
  return v;
}

Verdict oracle_hyperplane_minimal(const PWFun& f, int depth) {
  Verdict v;
  const auto& breaks = f.breakpoints();
  for (size_t i = 0; i < breaks.size(); ++i) {
    const auto& val = f.bp_values()[i];
    if (!val) continue;
    auto [l, r] = f.one_sided_limits(breaks[i]);
    std::vector<Rat> critical{*val};
    if (l && l->is_finite()) critical.push_back(l->finite());
    if (r && r->is_finite()) critical.push_back(r->finite());
    RaySet rays = RaySet::standard(critical);
    NbhdBasis basis = NbhdBasis::standard(breaks, i, depth);
    bool failed = false;
    for (const Ray& w : rays.rays) {
      // If f(t) is outside W, every point of F(U) inside W sits on an open
      // piece and continuity provides the required V; only f(t) in W can fail.
      bool member = w.dir == Ray::Up ? *val > w.threshold : *val < w.threshold;
      if (!member) continue;
      for (const Rat& radius : basis.radii) {
        bool enters = false;
        for (const SideInterval& s : side_intervals(breaks, i, f.piece_count(), radius)) {
          ExprImage img = image_on(f.pieces()[s.piece], s.lo, s.hi);
          enters = enters || (w.dir == Ray::Up ? img.meets_ray_up(w.threshold)
                                               : img.meets_ray_down(w.threshold));
        }
        if (!enters) {
          v.fail({breaks[i],
                  "value " + val->str() + " lies in the half-space but no nearby open set maps into it",
                  w});
          failed = true;
          break;
        }
      }
      if (failed) break;
    }
  }
  return v;
}

Verdict oracle_usc(const MultiMap& m, int depth) {
  Verdict v;
  const auto& breaks = m.breakpoints();
  for (size_t i = 0; i < breaks.size(); ++i) {
    const Rat& t = breaks[i];
    const auto& ft = m.bp_values()[i];

    // Critical gaps: distances from finite band limits to the value set
    // endpoints at t.
    std::vector<Rat> eps_list{Rat(1)};
    auto sides = side_intervals(breaks, i, m.piece_count(), Rat(1));
    for (const SideInterval& s : sides) {
      Approach from = s.piece < i ? Approach::FromLeft : Approach::FromRight;
      for (const Band& b : m.piece_bands()[s.piece]) {
        for (const PieceExpr* e : {&b.lower, &b.upper}) {
          ExtReal lim = one_sided_limit(*e, t, from);
          if (!lim.is_finite()) continue;
          for (const IntervalValue& iv : ft)
            for (const Rat* c : {&iv.lo, &iv.hi})
              if (*c != lim.finite()) {
                Rat g = abs(*c - lim.finite());
                eps_list.push_back(g / Rat(2));
                eps_list.push_back(g / Rat(4));
              }
        }
      }
    }

    NbhdBasis basis = NbhdBasis::standard(breaks, i, depth);
    for (const Rat& eps : sorted_unique(std::move(eps_list))) {
      // Open fattening of F(t), merged into disjoint components.
      std::vector<std::pair<Rat, Rat>> vopen;
      for (const IntervalValue& iv : ft) {
        if (!vopen.empty() && iv.lo - eps <= vopen.back().second)
          vopen.back().second = iv.hi + eps;
        else
          vopen.push_back({iv.lo - eps, iv.hi + eps});
      }
      bool exists_u = false;
      for (const Rat& radius : basis.radii) {
        bool contained = true;
        for (const SideInterval& s : side_intervals(breaks, i, m.piece_count(), radius)) {
          for (const Band& b : m.piece_bands()[s.piece]) {
            ExtReal lo = image_on(b.lower, s.lo, s.hi).lo;
            ExtReal hi = image_on(b.upper, s.lo, s.hi).hi;
            bool ok = lo.is_finite() && hi.is_finite() &&
                      std::any_of(vopen.begin(), vopen.end(), [&](const auto& c) {
                        return c.first < lo.finite() && hi.finite() < c.second;
                      });
            contained = contained && ok;
          }
        }
        if (contained) {
          exists_u = true;
          break;
        }
      }
      if (!exists_u) {
        v.fail({t, "no sampled neighborhood keeps the values inside the " + eps.str() +
                       "-fattening of the value set",
                std::nullopt});
        break;
      }
    }
  }
  return v;
}

Verdict submap_search(const MultiMap& m) {
  Verdict pre = is_usco(m);
  if (!pre.holds) throw precondition_error("submap_search requires a usco map", pre);

  const auto& breaks = m.breakpoints();
  auto try_candidate = [&](const MultiMap& cand) { return is_usco(cand).holds; };

  // Breakpoint-site shrinks: candidate value sets assembled from critical
  // points (band limits and value-set endpoints).
  for (size_t i = 0; i < breaks.size(); ++i) {
    std::vector<Rat> s;
    for (const SideInterval& si : side_intervals(breaks, i, m.piece_count(), Rat(1))) {
      Approach from = si.piece < i ? Approach::FromLeft : Approach::FromRight;
      for (const Band& b : m.piece_bands()[si.piece]) {
        s.push_back(one_sided_limit(b.lower, breaks[i], from).finite());
        s.push_back(one_sided_limit(b.upper, breaks[i], from).finite());
      }
    }
    for (const IntervalValue& iv : m.bp_values()[i]) {
      s.push_back(iv.lo);
      s.push_back(iv.hi);
    }
    s = sorted_unique(std::move(s));

    std::vector<std::vector<IntervalValue>> candidates;
    for (size_t a = 0; a < s.size(); ++a)
      for (size_t b = a; b < s.size(); ++b) {
        candidates.push_back({IntervalValue{s[a], s[b]}});
        for (size_t c = b + 1; c < s.size(); ++c)
          for (size_t d = c; d < s.size(); ++d)
            candidates.push_back({IntervalValue{s[a], s[b]}, IntervalValue{s[c], s[d]}});
      }

    auto inside = [&](const IntervalValue& iv) {
      return std::any_of(m.bp_values()[i].begin(), m.bp_values()[i].end(),
                         [&](const IntervalValue& w) { return w.lo <= iv.lo && iv.hi <= w.hi; });
    };
    for (auto& cand : candidates) {
      if (cand == m.bp_values()[i]) continue;
      if (!std::all_of(cand.begin(), cand.end(), inside)) continue;
      auto values = m.bp_values();
      values[i] = cand;
      MultiMap shrunk(breaks, m.piece_bands(), std::move(values));
      if (shrunk.bp_values()[i] == m.bp_values()[i]) continue;  // normalized back to F(t)
      if (try_candidate(shrunk))
        return Verdict::no({breaks[i],
                            "proper usco submap: value shrinks to " + cand.front().str() +
                                (cand.size() > 1 ? " and " + cand.back().str() : ""),
                            std::nullopt});
    }
  }

  // Piece-site shrinks: drop bands or degenerate one band to a boundary curve.
  for (size_t i = 0; i < m.piece_count(); ++i) {
    const auto& bl = m.piece_bands()[i];
    std::vector<std::vector<Band>> variants;
    if (bl.size() > 1)
      for (size_t mask = 1; mask + 1 < (size_t{1} << bl.size()); ++mask) {
        std::vector<Band> keep;
        for (size_t k = 0; k < bl.size(); ++k)
          if (mask & (size_t{1} << k)) keep.push_back(bl[k]);
        variants.push_back(std::move(keep));
      }
    for (size_t k = 0; k < bl.size(); ++k) {
      if (compare_on(bl[k].lower, bl[k].upper, breaks[i], breaks[i + 1]).eq) continue;
      for (const PieceExpr* curve : {&bl[k].lower, &bl[k].upper}) {
        auto bands = bl;
        bands[k] = Band{*curve, *curve};
        variants.push_back(std::move(bands));
      }
    }
    for (auto& cand : variants) {
      auto bands = m.piece_bands();
      bands[i] = cand;
      MultiMap shrunk(breaks, std::move(bands), m.bp_values());
      if (try_candidate(shrunk))
        return Verdict::no({(breaks[i] + breaks[i + 1]) / Rat(2),
                            "proper usco submap: piece value shrinks", std::nullopt});
    }
  }
  return Verdict::yes();
}

Verdict oracle_planar_hyperplane_minimal(const Curve2& c) {
  Verdict v;
  static const int lattice[16][2] = {{1, 0},  {0, 1},  {-1, 0}, {0, -1}, {1, 1},   {1, -1},
                                     {-1, 1}, {-1, -1}, {2, 1},  {1, 2},  {-2, 1},  {-1, 2},
                                     {2, -1}, {1, -2}, {-2, -1}, {-1, -2}};
  for (size_t i = 0; i < c.breakpoints().size(); ++i) {
    const auto& val = c.bp_values()[i];
    if (!val) continue;
    std::vector<Point2> cluster = c.cluster_points(i);
    std::vector<Point2> dirs;
    for (const auto& d : lattice) dirs.push_back({Rat(d[0]), Rat(d[1])});
    for (size_t a = 0; a < cluster.size(); ++a)
      for (size_t b = 0; b < cluster.size(); ++b) {
        if (a == b) continue;
        Point2 d = cluster[b] - cluster[a];
        if (d.x.sign() == 0 && d.y.sign() == 0) continue;
        dirs.push_back(d);
        dirs.push_back({-d.y, d.x});
      }

    std::vector<Point2> limits = c.limit_points(i);
    bool failed = false;
    for (const Point2& h : dirs) {
      std::vector<Rat> dots{dot(h, *val)};
      for (const Point2& p : limits) dots.push_back(dot(h, p));
      std::vector<Rat> thresholds = sorted_unique(dots);
      std::vector<Rat> all = thresholds;
      for (size_t a = 0; a + 1 < thresholds.size(); ++a)
        all.push_back((thresholds[a] + thresholds[a + 1]) / Rat(2));
      all.push_back(thresholds.front() - Rat(1));

      for (const Rat& lambda : sorted_unique(std::move(all))) {
        if (!(dot(h, *val) > lambda)) continue;
        // One side's curve must eventually enter {h.y > lambda}.
        bool ok = false;
        const Rat& t = c.breakpoints()[i];
        if (i > 0) {
          Rat g = dot(h, c.piece_point(i - 1, t));
          Rat slope = dot(h, c.pieces()[i - 1].dir);
          ok = ok || g > lambda || (g == lambda && slope.sign() < 0);
        }
        if (i < c.pieces().size()) {
          Rat g = dot(h, c.piece_point(i, t));
          Rat slope = dot(h, c.pieces()[i].dir);
          ok = ok || g > lambda || (g == lambda && slope.sign() > 0);
        }
        if (!ok) {
          v.fail({c.breakpoints()[i],
                  "value " + val->str() + " enters a half-plane the curve never enters nearby " +
                      "(normal " + h.str() + ", threshold " + lambda.str() + ")",
                  std::nullopt});
          failed = true;
          break;
        }
      }
      if (failed) break;
    }
  }
  return v;
}

}  // namespace cusco
