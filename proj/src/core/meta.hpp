#pragma once
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "core/graph.hpp"

namespace fas {

// f is arc sensitive to e when f lies in e's elementary world and still
// lies on a cycle once e is deleted. Arcs of cycles isolated at e never
// qualify: their cycles die with e.
bool arc_sensitive(const Digraph& g, ArcId f, ArcId e);
ArcSet sensitive_set(const Digraph& g, ArcId e);

// Undirected sensitivity-propagation graph grown from a seed cycle.
// Layer 0 holds the seed arcs; each stage tests sensitivity in the graph
// with all previously collected arcs deleted except the probe itself, so
// a node only appears when its cycles survive independently of the layers
// above it. Layers are disjoint by construction.
struct MetaGraph {
  ArcSet nodes;                                  // sorted arc ids
  std::vector<std::pair<ArcId, ArcId>> edges;    // lo < hi, sorted, unique
  ArcSet seed;                                   // the seed cycle
  std::map<ArcId, int> layer;                    // node -> construction layer
};

MetaGraph meta_graph(const Digraph& g, const ArcSet& seed_cycle);

// Cycle-space dimension |edges| - |nodes| + #components of the whole meta
// graph; zero exactly when it is a forest.
int meta_dim(const MetaGraph& m);

// Same formula on the component of m minus node f that contains the
// lowest surviving seed arc (one component, so the formula reads
// |edges| - |nodes| + 1). Throws std::invalid_argument if f is no node.
int meta_cycle_dim(const MetaGraph& m, ArcId f);

// Max meta_dim over a seed decomposition of the cycle closure: repeatedly
// seed the lowest-arc cycle, build its meta graph, delete the collected
// nodes, re-close. Zero on acyclic graphs and whenever every meta graph
// is a forest.
int global_m(const Digraph& g);

// Relative weight of the world H_{e,f} = closure(G_el(e) minus f): arcs
// sensitive to e in G minus f get their weight discounted by the credit
// the outside world (closure of G minus {e,f}) grants for breaking their
// cycles anyway; all other world arcs keep omega. 0 <= sigma(h) <= omega(h).
struct RelativeWeight {
  std::map<ArcId, Weight> sigma;  // complete over the arcs of H_{e,f}
  ArcId anchor = -1;
  ArcId excluded = -1;
};

RelativeWeight relative_weight(const Digraph& g, ArcId e, ArcId f);

// Same map, but requires the component of m minus f containing e to be a
// tree (std::invalid_argument otherwise); the general variant accepts any
// meta graph. Both also require e and f to be nodes of m.
RelativeWeight relative_weight_tree(const Digraph& g, const MetaGraph& m,
                                    ArcId e, ArcId f);
RelativeWeight relative_weight_general(const Digraph& g, const MetaGraph& m,
                                       ArcId e, ArcId f);

// Feedback weight of h under a sigma map: non-positive arcs are deleted
// for free, the rest is solved exactly with sigma as weights. Arcs absent
// from the map keep their stored weight.
Weight sigma_feedback_weight(const Digraph& h,
                             const std::map<ArcId, Weight>& sigma);

// Exact feedback weights via strongly-connected decomposition, a min-cut
// fast path for components whose cycles all share one arc, and branching
// over a shortest cycle otherwise; memoized across queries so repeated
// marginals on overlapping subgraphs stay cheap. Deliberately a different
// construction from the enumeration-driven brute force used for testing.
// The memo identifies subgraphs by their live arc set, so every query on
// one engine must come from the same arc table with the same weights;
// only liveness may vary between queries.
class MarginalEngine {
 public:
  // Omega(g, omega), exact.
  Weight feedback_weight(const Digraph& g);

  // Omega(g) - Omega(g minus e): the cost attributable to e's presence.
  Weight marginal(const Digraph& g, ArcId e);

  // Omega(H_{e,f}, sigma_e) of the Bellman identity: the marginal cost of
  // e inside g minus f. Equals feedback_weight(g minus f) minus
  // feedback_weight(g minus {e,f}).
  Weight relative_feedback_weight(const Digraph& g, ArcId e, ArcId f);

  // Number of component solves performed (cache misses).
  std::uint64_t evaluations() const { return evals_; }

 private:
  Weight solve_closed(const Digraph& closed);
  Weight solve_component(const Digraph& comp);

  std::map<std::vector<std::uint64_t>, Weight> memo_;
  std::uint64_t evals_ = 0;
};

}  // namespace fas
