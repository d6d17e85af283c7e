#pragma once

#include "cusco/pwfun.hpp"
#include "cusco/svmap.hpp"

namespace cusco {

// Convex piecewise-affine function on [a, b]: strictly increasing slopes
// per piece, continuous values determined by the anchor g(a).
struct ConvexPWAffine {
  std::vector<Rat> breaks;
  std::vector<Rat> slopes;
  Rat anchor;  // g(breaks.front())

  ConvexPWAffine(std::vector<Rat> breaks, std::vector<Rat> slopes, Rat anchor);

  Rat eval(const Rat& x) const;
  friend bool operator==(const ConvexPWAffine&, const ConvexPWAffine&) = default;
};

// The subdifferential map x -> dg(x): the slope on open pieces, the slope
// interval at interior breakpoints, one-sided at the domain endpoints.
// Always a minimal cusco map.
MultiMap subdifferential(const ConvexPWAffine& g);

// Points where g is differentiable: everything except the interior
// breakpoints carrying a slope jump.
CofiniteSet differentiability_points(const ConvexPWAffine& g);

}  // namespace cusco
