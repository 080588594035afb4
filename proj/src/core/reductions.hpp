#pragma once

#include <vector>

#include "graph.hpp"

namespace fas {

enum class ReductionKind { fas_to_fvs, fvs_to_fas };

// Record of a problem translation between the arc and vertex flavours.
// `transformed` carries the rebuilt instance; `pullback[i]` maps element i
// of the transformed instance back to the original element it stands for.
// For fas_to_fvs the elements are the transformed vertices (each an input
// arc, weighted in `vertex_weight`); for fvs_to_fas they are the
// transformed arcs (each mapping to its gadget's input vertex), so the map
// is total in both directions and pulling back any feasible solution stays
// feasible.
struct ReductionTrace {
  ReductionKind direction;
  Digraph transformed;
  std::vector<int> pullback;
  std::vector<Weight> vertex_weight;
};

// Arc problem to vertex problem: the line graph has one vertex per live
// arc, inheriting its weight, and an arc wherever two input arcs are
// consecutive. A feedback vertex set of the image is exactly a feedback
// arc set of the input at identical weight.
ReductionTrace fasp_to_fvsp(const Digraph& g);

// Vertex problem to arc problem: every vertex v becomes a two-node gadget
// whose connecting arc v_in -> v_out carries gamma(v); every input arc
// e = (u, v) becomes a relay vertex x_e wired u_out -> x_e -> v_in, so
// directed cycles of the image correspond one to one to vertex-elementary
// cycles of the input. Rim arcs weigh 1 + sum(gamma), hence optimal cuts
// select gadget arcs only and the pulled-back optimum is unambiguous;
// `literal_weights` instead gives every arc of v's gadget weight gamma(v),
// which preserves the optimum value but admits rim-arc optima. gamma is
// indexed by vertex, must be positive, and empty means unit weights.
// Shape: |V*| = |E| + 2|V| and |E*| = |V| + 2|E| exactly; gadget arc ids
// are 0..|V|-1 in vertex order.
ReductionTrace fvsp_to_fasp(const Digraph& g, const std::vector<Weight>& gamma = {},
                            bool literal_weights = false);

// Map a solution on the transformed instance back to the original problem:
// line-graph vertices become arcs, gadget arcs become vertices. The result
// is sorted and deduplicated. Throws std::invalid_argument on ids outside
// the transformed instance.
std::vector<int> pull_back(const ReductionTrace& t, const std::vector<int>& solution);

} // namespace fas
