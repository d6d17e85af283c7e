#pragma once

#include "cusco/pwfun.hpp"
#include "cusco/verdict.hpp"

namespace cusco {

// Quasicontinuity of f on its domain (induced topology for densely
// defined f): every defined breakpoint value must equal a finite
// one-sided limit there. Open-piece points always pass.
Verdict is_quasicontinuous(const PWFun& f);

// Subcontinuity at every point of [a, b]: all one-sided limits at all
// breakpoints are finite, defined or not.
Verdict is_subcontinuous(const PWFun& f);

// Hyperplane minimality of the graph of f: at a defined interior
// breakpoint the value must lie between the one-sided limits (in the
// extended order); at a defined domain endpoint it must equal the single
// finite limit. Undefined breakpoints impose no condition. Witnesses of
// failure carry a separating ray.
Verdict is_hyperplane_minimal(const PWFun& f);

}  // namespace cusco
