#include "cusco/subdiff.hpp"

namespace cusco {

ConvexPWAffine::ConvexPWAffine(std::vector<Rat> breaks_in, std::vector<Rat> slopes_in,
                               Rat anchor_in)
    : breaks(std::move(breaks_in)), slopes(std::move(slopes_in)), anchor(std::move(anchor_in)) {
  if (breaks.size() < 2) throw std::invalid_argument("convex function needs two breakpoints");
  if (slopes.size() + 1 != breaks.size())
    throw std::invalid_argument("slope count must be breakpoint count - 1");
  for (size_t i = 0; i + 1 < breaks.size(); ++i)
    if (!(breaks[i] < breaks[i + 1]))
      throw std::invalid_argument("breakpoints not strictly increasing");
  for (size_t i = 0; i + 1 < slopes.size(); ++i)
    if (!(slopes[i] < slopes[i + 1]))
      throw std::invalid_argument("slopes not strictly increasing (not convex)");
}

Rat ConvexPWAffine::eval(const Rat& x) const {
  if (x < breaks.front() || x > breaks.back())
    throw std::domain_error("point " + x.str() + " outside domain");
  Rat v = anchor;
  for (size_t i = 0; i < slopes.size(); ++i) {
    if (x <= breaks[i + 1]) return v + slopes[i] * (x - breaks[i]);
    v += slopes[i] * (breaks[i + 1] - breaks[i]);
  }
  return v;
}

MultiMap subdifferential(const ConvexPWAffine& g) {
  std::vector<std::vector<Band>> bands;
  for (const Rat& s : g.slopes) {
    PieceExpr c = AffineExpr{Rat(0), s};
    bands.push_back({Band{c, c}});
  }
  std::vector<std::vector<IntervalValue>> values;
  for (size_t i = 0; i < g.breaks.size(); ++i) {
    Rat lo = i == 0 ? g.slopes.front() : g.slopes[i - 1];
    Rat hi = i == g.slopes.size() ? g.slopes.back() : g.slopes[i];
    values.push_back({IntervalValue{lo, hi}});
  }
  return MultiMap(g.breaks, std::move(bands), std::move(values));
}

CofiniteSet differentiability_points(const ConvexPWAffine& g) {
  CofiniteSet out;
  for (size_t i = 1; i + 1 < g.breaks.size(); ++i)
    if (g.slopes[i - 1] != g.slopes[i]) out.excluded.push_back(g.breaks[i]);
  return out;
}

}  // namespace cusco
