#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cusco/pwfun.hpp"
#include "cusco/verdict.hpp"

namespace cusco {

// Nonempty compact interval value; degenerate (lo == hi) allowed.
struct IntervalValue {
  Rat lo, hi;
  bool is_point() const { return lo == hi; }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  std::string str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }
  friend bool operator==(const IntervalValue&, const IntervalValue&) = default;
};

// Closed convex subset of the line with possibly infinite bounds; the
// value space of the CSC operator.
struct ExtInterval {
  ExtReal lo, hi;
  std::string str() const;
  friend bool operator==(const ExtInterval&, const ExtInterval&) = default;
};

// One band of a set-valued map on an open piece: all points between two
// piece expressions with lower <= upper pointwise.
struct Band {
  PieceExpr lower, upper;
};

// Set-valued map on [a, b]: per open piece a sorted list of pointwise
// disjoint bands, per breakpoint a finite union of closed intervals.
// Every point has a nonempty compact value by construction.
class MultiMap {
public:
  MultiMap(std::vector<Rat> breakpoints, std::vector<std::vector<Band>> piece_bands,
           std::vector<std::vector<IntervalValue>> bp_values);

  const std::vector<Rat>& breakpoints() const { return breaks_; }
  const std::vector<std::vector<Band>>& piece_bands() const { return bands_; }
  const std::vector<std::vector<IntervalValue>>& bp_values() const { return values_; }

  const Rat& domain_lo() const { return breaks_.front(); }
  const Rat& domain_hi() const { return breaks_.back(); }
  size_t piece_count() const { return bands_.size(); }
  std::optional<size_t> breakpoint_index(const Rat& t) const;

  // F(x) as a sorted disjoint union of closed intervals.
  std::vector<IntervalValue> value_at(const Rat& x) const;

  MultiMap refined(const std::vector<Rat>& extra) const;
  MultiMap canonical() const;

  // Pointwise equality as set-valued maps (compared on a common grid).
  friend bool operator==(const MultiMap& a, const MultiMap& b);

private:
  std::vector<Rat> breaks_;
  std::vector<std::vector<Band>> bands_;
  std::vector<std::vector<IntervalValue>> values_;
};

// Closure of the graph of a piecewise function: one curve per piece,
// a finite nonempty value set per breakpoint.
class GraphMap {
public:
  GraphMap(std::vector<Rat> breakpoints, std::vector<PieceExpr> curves,
           std::vector<std::vector<Rat>> bp_points);

  const std::vector<Rat>& breakpoints() const { return breaks_; }
  const std::vector<PieceExpr>& curves() const { return curves_; }
  const std::vector<std::vector<Rat>>& bp_points() const { return points_; }

  MultiMap as_multimap() const;
  GraphMap refined(const std::vector<Rat>& extra) const;
  // Merge breakpoints whose value is the singleton value of one curve
  // spanning both sides; normalizes piece expressions.
  GraphMap canonical() const;

  friend bool operator==(const GraphMap& a, const GraphMap& b);

private:
  std::vector<Rat> breaks_;
  std::vector<PieceExpr> curves_;
  std::vector<std::vector<Rat>> points_;
};

// cl f as a map; requires a subcontinuous f (otherwise some section of
// the closure is empty or non-compact) and rejects with the witness.
GraphMap graph_closure(const PWFun& f);

// Pointwise closed convex hull. Band lists collapse to one band,
// breakpoint unions to a single interval; usco input yields cusco output.
MultiMap convexify(const MultiMap& m);
MultiMap convexify(const GraphMap& g);

// CSC(f)(x): intersection over neighborhoods V of x of the closed convex
// hulls of f(V); here the hull of {f(x)} and the one-sided limits at x.
ExtInterval csc_at(const PWFun& f, const Rat& x);

// Upper semicontinuity with nonempty compact values: all band limits at
// every breakpoint are finite and their limit intervals land inside F(t).
Verdict is_usco(const MultiMap& m);

// usco with convex values (single band per piece, single interval per
// breakpoint).
Verdict is_cusco(const MultiMap& m);

// Closed graph: every finite one-sided limit point of the bands belongs
// to F(t); limits escaping to infinity do not violate closedness.
Verdict has_closed_graph(const MultiMap& m);

// (inf F, sup F) as piecewise functions; total by construction.
std::pair<PWFun, PWFun> envelopes(const MultiMap& m);

// a(x) subset of b(x) for every x (false when the domains differ).
bool contained_in(const MultiMap& a, const MultiMap& b);
bool contained_in(const GraphMap& a, const MultiMap& b);

}  // namespace cusco
