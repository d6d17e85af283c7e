#pragma once

#include "cusco/analysis.hpp"
#include "cusco/svmap.hpp"

namespace cusco {

enum class EnvelopeVariant { Inf, Sup };

// co(cl f) for a quasicontinuous subcontinuous selection f (possibly
// densely defined); the result is a minimal cusco map. Rejects with the
// failing analysis verdict otherwise.
MultiMap minimal_cusco_from(const PWFun& f);

// Minimal usco: usco, singleton-valued on open pieces, and every
// breakpoint value set equal to the set of one-sided curve limits.
Verdict is_minimal_usco(const MultiMap& m);
Verdict is_minimal_usco(const GraphMap& g);

// Minimal cusco, decided by the envelope characterization: nonempty
// compact convex values, closed graph, quasicontinuous subcontinuous
// envelopes, and equal envelope graph closures.
Verdict is_minimal_cusco(const MultiMap& m);

// cl(e restricted to its continuity points) for the chosen envelope e of
// a usco map: a minimal usco map contained in the input.
GraphMap minimal_usco_within(const MultiMap& m, EnvelopeVariant variant = EnvelopeVariant::Inf);

// Convexified extraction for a cusco map; inf and sup variants may
// differ inside non-minimal inputs.
MultiMap minimal_cusco_within(const MultiMap& m, EnvelopeVariant variant = EnvelopeVariant::Inf);

// The unique minimal usco inside a minimal cusco map (the common graph
// closure of both envelopes).
GraphMap unique_minimal_usco(const MultiMap& m);

// Selection through extreme points of the values: inf envelope left of
// the first switch, alternating envelopes across each switch point (a
// switch takes the post-switch envelope's value).
PWFun extreme_selection(const MultiMap& m, std::vector<Rat> switches);

}  // namespace cusco
