#pragma once

#include "cusco/convex2d.hpp"
#include "cusco/pwfun.hpp"
#include "cusco/svmap.hpp"
#include "cusco/verdict.hpp"

namespace cusco {

// Finite base of open neighborhoods of a breakpoint: the gap to the
// adjacent breakpoints halved `depth` times. From the first element on,
// every interval avoids all other breakpoints.
struct NbhdBasis {
  Rat center;
  std::vector<Rat> radii;  // strictly decreasing, positive

  static NbhdBasis standard(const std::vector<Rat>& breakpoints, size_t bp_index, int depth);
};

// Finite ray family whose thresholds cover all critical values
// (breakpoint value, one-sided limits) and their midpoints.
struct RaySet {
  std::vector<Ray> rays;

  static RaySet standard(const std::vector<Rat>& critical_values);
};

// Brute-force evaluation of the quasicontinuity definition over sampled
// value neighborhoods and the basis; the inner existential (an open set
// mapping into V) is decided exactly from piece monotonicity.
Verdict oracle_quasicontinuous(const PWFun& f, int depth = 6);

// Brute-force evaluation of the hyperplane-minimality definition over a
// ray family and the basis.
Verdict oracle_hyperplane_minimal(const PWFun& f, int depth = 6);

// Brute-force upper semicontinuity: for every sampled fattening V of
// F(t), some basis neighborhood U must satisfy F(U) inside V.
Verdict oracle_usc(const MultiMap& m, int depth = 6);

// Independent minimality check: enumerate shrink candidates (smaller
// breakpoint value sets built from critical points, dropped bands, bands
// degenerated to a boundary curve) and report any proper usco submap.
Verdict submap_search(const MultiMap& m);

// Sampled-direction evaluation of the planar hyperplane-minimality
// definition (vertex-difference directions and normals plus fixed
// lattice directions).
Verdict oracle_planar_hyperplane_minimal(const Curve2& c);

}  // namespace cusco
