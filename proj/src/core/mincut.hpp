#pragma once
#include <vector>

#include "core/graph.hpp"

namespace fas {

// Max-flow value and a minimum s-t cut over the live arcs (Dinic).
// Capacities default to arc weights; caps, when given, overrides them per
// arc id (entries must be >= 0; zero-capacity arcs still appear in the
// cut certificate so that deleting cut_arcs always severs s from t).
struct CutResult {
  Weight value = 0;
  ArcSet cut_arcs;
};
CutResult min_cut(const Digraph& g, int s, int t,
                  const std::vector<Weight>* caps = nullptr);

// Cheapest way to break every cycle through e's parallel class: either
// delete the class (weight class_weight) or keep it and cut every
// head(e)->tail(e) path inside the class world with the class removed
// (antiparallel arcs stay in the network). Every elementary head->tail
// path lies inside the class world, so the restricted cut is globally
// valid. On worlds whose every cycle crosses the class - isolated worlds
// in particular - this equals the optimum of the world itself.
struct LocalCut {
  Weight value = 0;
  Weight class_weight = 0;
  Weight cut_weight = 0;
  ArcSet arcs; // a realizing deletion set: the class, or the cut arcs
};
LocalCut local_fas(const Digraph& g, ArcId e);

} // namespace fas
