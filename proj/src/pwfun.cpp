#include "cusco/pwfun.hpp"

#include <algorithm>

namespace cusco {

std::vector<Rat> ClusterSet::finite_members() const {
  std::vector<Rat> out;
  if (left_limit && left_limit->is_finite()) out.push_back(left_limit->finite());
  if (right_limit && right_limit->is_finite()) out.push_back(right_limit->finite());
  if (point_value) out.push_back(*point_value);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool CofiniteSet::contains(const Rat& x) const {
  return !std::binary_search(excluded.begin(), excluded.end(), x);
}

PWFun::PWFun(std::vector<Rat> breakpoints, std::vector<PieceExpr> pieces,
             std::vector<std::optional<Rat>> bp_values)
    : breaks_(std::move(breakpoints)),
      pieces_(std::move(pieces)),
      values_(std::move(bp_values)) {
  if (breaks_.size() < 2) throw std::invalid_argument("domain needs at least two breakpoints");
  if (pieces_.size() + 1 != breaks_.size())
    throw std::invalid_argument("piece count must be breakpoint count - 1");
  if (values_.size() != breaks_.size())
    throw std::invalid_argument("one value slot per breakpoint required");
  for (size_t i = 0; i + 1 < breaks_.size(); ++i) {
    if (!(breaks_[i] < breaks_[i + 1]))
      throw std::invalid_argument("breakpoints not strictly increasing at index " +
                                  std::to_string(i + 1));
    if (pole_inside(pieces_[i], breaks_[i], breaks_[i + 1]))
      throw std::invalid_argument("reciprocal pole inside open piece " + std::to_string(i));
  }
}

bool PWFun::in_domain(const Rat& x) const {
  return domain_lo() <= x && x <= domain_hi();
}

std::optional<size_t> PWFun::breakpoint_index(const Rat& t) const {
  auto it = std::lower_bound(breaks_.begin(), breaks_.end(), t);
  if (it != breaks_.end() && *it == t)
    return static_cast<size_t>(it - breaks_.begin());
  return std::nullopt;
}

size_t PWFun::piece_index(const Rat& x) const {
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
  if (it == breaks_.begin() || it == breaks_.end())
    throw std::domain_error("point " + x.str() + " outside domain");
  return static_cast<size_t>(it - breaks_.begin()) - 1;
}

bool PWFun::is_total() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const auto& v) { return v.has_value(); });
}

std::optional<Rat> PWFun::eval(const Rat& x) const {
  if (!in_domain(x))
    throw std::domain_error("point " + x.str() + " outside domain [" +
                            domain_lo().str() + ", " + domain_hi().str() + "]");
  if (auto bi = breakpoint_index(x)) return values_[*bi];
  return cusco::eval(pieces_[piece_index(x)], x);
}

std::pair<std::optional<ExtReal>, std::optional<ExtReal>>
PWFun::one_sided_limits(const Rat& t) const {
  auto bi = breakpoint_index(t);
  if (!bi) throw std::invalid_argument(t.str() + " is not a breakpoint");
  std::optional<ExtReal> left, right;
  if (*bi > 0) left = one_sided_limit(pieces_[*bi - 1], t, Approach::FromLeft);
  if (*bi < pieces_.size()) right = one_sided_limit(pieces_[*bi], t, Approach::FromRight);
  return {left, right};
}

ClusterSet PWFun::cluster_set(const Rat& x) const {
  if (!in_domain(x)) throw std::domain_error("point " + x.str() + " outside domain");
  ClusterSet cs;
  if (auto bi = breakpoint_index(x)) {
    auto [l, r] = one_sided_limits(x);
    cs.left_limit = l;
    cs.right_limit = r;
    cs.point_value = values_[*bi];
  } else {
    Rat v = cusco::eval(pieces_[piece_index(x)], x);
    cs.left_limit = ExtReal(v);
    cs.right_limit = ExtReal(v);
    cs.point_value = v;
  }
  return cs;
}

CofiniteSet PWFun::continuity_points() const {
  CofiniteSet out;
  for (size_t i = 0; i < breaks_.size(); ++i) {
    const Rat& t = breaks_[i];
    if (!values_[i]) {
      out.excluded.push_back(t);
      continue;
    }
    ExtReal v{*values_[i]};
    auto [l, r] = one_sided_limits(t);
    bool cont = (!l || *l == v) && (!r || *r == v);
    if (!cont) out.excluded.push_back(t);
  }
  return out;
}

PWFun PWFun::restrict(const std::vector<Rat>& drop) const {
  auto values = values_;
  for (const Rat& t : drop) {
    auto bi = breakpoint_index(t);
    if (!bi) throw std::invalid_argument("restrict: " + t.str() + " is not a breakpoint");
    values[*bi] = std::nullopt;
  }
  return PWFun(breaks_, pieces_, std::move(values));
}

PWFun PWFun::refined(const std::vector<Rat>& extra) const {
  std::vector<Rat> add;
  for (const Rat& x : extra)
    if (in_domain(x) && !breakpoint_index(x)) add.push_back(x);
  if (add.empty()) return *this;
  std::sort(add.begin(), add.end());
  add.erase(std::unique(add.begin(), add.end()), add.end());

  std::vector<Rat> breaks;
  std::vector<PieceExpr> pieces;
  std::vector<std::optional<Rat>> values;
  size_t ai = 0;
  for (size_t i = 0; i < pieces_.size(); ++i) {
    breaks.push_back(breaks_[i]);
    values.push_back(values_[i]);
    while (ai < add.size() && add[ai] < breaks_[i + 1]) {
      pieces.push_back(pieces_[i]);
      breaks.push_back(add[ai]);
      values.push_back(cusco::eval(pieces_[i], add[ai]));
      ++ai;
    }
    pieces.push_back(pieces_[i]);
  }
  breaks.push_back(breaks_.back());
  values.push_back(values_.back());
  return PWFun(std::move(breaks), std::move(pieces), std::move(values));
}

PWFun PWFun::canonical() const {
  std::vector<Rat> breaks{breaks_.front()};
  std::vector<PieceExpr> pieces{normal_form(pieces_.front())};
  std::vector<std::optional<Rat>> values{values_.front()};
  for (size_t i = 1; i < breaks_.size(); ++i) {
    if (i < pieces_.size()) {
      PieceExpr next = normal_form(pieces_[i]);
      bool mergeable = same_function(pieces.back(), next) &&
                       !has_pole_at(next, breaks_[i]) && values_[i] &&
                       *values_[i] == cusco::eval(next, breaks_[i]);
      if (mergeable) continue;
      breaks.push_back(breaks_[i]);
      values.push_back(values_[i]);
      pieces.push_back(std::move(next));
    } else {
      breaks.push_back(breaks_[i]);
      values.push_back(values_[i]);
    }
  }
  return PWFun(std::move(breaks), std::move(pieces), std::move(values));
}

bool operator==(const PWFun& a, const PWFun& b) {
  PWFun ca = a.canonical(), cb = b.canonical();
  if (ca.breaks_ != cb.breaks_ || ca.values_ != cb.values_) return false;
  for (size_t i = 0; i < ca.pieces_.size(); ++i)
    if (!(ca.pieces_[i] == cb.pieces_[i])) return false;
  return true;
}

}  // namespace cusco
