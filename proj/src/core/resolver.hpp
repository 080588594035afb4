#pragma once
#include "core/graph.hpp"

namespace fas {

// Staged commitment of isolated cycle clusters. Each stage reduces the
// working graph's cyclic part to its essential minor and scans its arcs in
// ascending id order; an arc e is committed when
//   - its isolated world is nonempty (some cycle through e shares no arc
//     with any cycle avoiding e), and
//   - deleting e is optimal inside that world (its weight does not exceed
//     the world's head->tail cut), and
//   - no arc with the same elementary world was already committed this
//     stage (one representative per cluster).
// Committed minor arcs are lifted through the reduction trace, deleted
// from the working graph, and the loop repeats until a stage commits
// nothing. The instance is resolvable when the leftover is acyclic; then
// the commits form an optimal solution by construction - every stage's
// clusters are arc-disjoint from all other cycles, so their local optima
// add up.
struct ResolveOutcome {
  bool resolvable = false;
  ArcSet commits;   // input arc ids, all stages united
  Weight weight = 0;
  int stages = 0;   // stages that committed at least one arc
};

ResolveOutcome resolve(const Digraph& g);

} // namespace fas
