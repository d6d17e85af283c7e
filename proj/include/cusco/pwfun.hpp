#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cusco/piece_expr.hpp"
#include "cusco/rat.hpp"

namespace cusco {

// Pointwise description of the graph closure of a piecewise function at
// one point: the one-sided limits that exist plus the point value.
struct ClusterSet {
  std::optional<ExtReal> left_limit, right_limit;
  std::optional<Rat> point_value;

  // Finite members, sorted and deduplicated; exactly cl f(x) as a set.
  std::vector<Rat> finite_members() const;
};

// Complement of a finite excluded set inside a closed interval.
struct CofiniteSet {
  std::vector<Rat> excluded;  // sorted, unique

  bool contains(const Rat& x) const;
  friend bool operator==(const CofiniteSet&, const CofiniteSet&) = default;
};

// Piecewise single-valued function on a compact rational interval:
// affine/reciprocal pieces on the open subintervals, one value (or
// undefined) per breakpoint. Immutable after construction.
class PWFun {
public:
  PWFun(std::vector<Rat> breakpoints, std::vector<PieceExpr> pieces,
        std::vector<std::optional<Rat>> bp_values);

  const std::vector<Rat>& breakpoints() const { return breaks_; }
  const std::vector<PieceExpr>& pieces() const { return pieces_; }
  const std::vector<std::optional<Rat>>& bp_values() const { return values_; }

  const Rat& domain_lo() const { return breaks_.front(); }
  const Rat& domain_hi() const { return breaks_.back(); }
  size_t piece_count() const { return pieces_.size(); }

  bool in_domain(const Rat& x) const;
  std::optional<size_t> breakpoint_index(const Rat& t) const;
  // Piece index whose open interval contains x (x not a breakpoint).
  size_t piece_index(const Rat& x) const;

  bool is_total() const;

  // Piece value on open pieces, breakpoint value at breakpoints
  // (nullopt exactly at undefined breakpoints).
  std::optional<Rat> eval(const Rat& x) const;

  // Limits of the adjacent pieces at a breakpoint; a side is nullopt
  // only when it does not exist (domain endpoints).
  std::pair<std::optional<ExtReal>, std::optional<ExtReal>>
  one_sided_limits(const Rat& t) const;

  ClusterSet cluster_set(const Rat& x) const;

  // Points of continuity of f on its domain, as a cofinite set.
  CofiniteSet continuity_points() const;

  // Same pieces, breakpoint values in `drop` become undefined.
  PWFun restrict(const std::vector<Rat>& drop) const;

  // Split pieces at the given interior points; new breakpoints take the
  // piece value there. Existing breakpoints are ignored.
  PWFun refined(const std::vector<Rat>& extra) const;

  // Merge redundant breakpoints (identical adjacent expressions through a
  // defined, continuous breakpoint) and normalize piece expressions.
  PWFun canonical() const;

  // Equality of canonical forms (i.e. pointwise equality as functions).
  friend bool operator==(const PWFun& a, const PWFun& b);

private:
  std::vector<Rat> breaks_;
  std::vector<PieceExpr> pieces_;
  std::vector<std::optional<Rat>> values_;
};

}  // namespace cusco
