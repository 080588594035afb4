#pragma once
#include <vector>

#include "core/graph.hpp"

namespace fas {

// Weight-preserving reduction to an essential minor: repeatedly
//  - contract any vertex with in- and out-degree one, replacing its arc
//    pair by a single arc weighing the lighter of the two (skipped when
//    the pair closes on itself, which would create a loop - a pure ring
//    therefore stabilizes as a 2-ring rather than vanishing), and
//  - merge each parallel class into one arc weighing the class total,
// until neither applies. The input is taken as-is; callers wanting the
// minor of the cyclic part compose with cycle_closure first.
//
// kappa maps every minor arc to the source arcs a solution deletes when
// that minor arc is picked: the lighter contraction partner (ties to the
// lower id) or the whole parallel class. Minor weights always equal the
// summed source weights, so lifted solutions keep their value.
struct MinorReduction {
  Digraph minor;              // fresh dense arc ids, source vertex ids
  std::vector<ArcSet> kappa;  // minor arc id -> source arc ids
};

MinorReduction essential_minor(const Digraph& g);

// Source-arc deletion set realizing a minor solution.
ArcSet lift(const MinorReduction& r, const ArcSet& minor_arcs);

} // namespace fas
