#pragma once
#include <cstdint>
#include <string>

#include "core/graph.hpp"

namespace fas {

// Result of one solver or heuristic run. `solution` lists deleted input
// arc ids and `weight` their total; `certified` marks results proven
// optimal (exact methods) as opposed to heuristic ones. `m_param` is the
// meta cyclomatic parameter measured before solving, -1 when the method
// does not consult it; `sigma_evals` counts engine component evaluations;
// `mu`/`upsilon` carry certified lower bounds when a method computes them,
// -1 otherwise.
struct FeedbackReport {
  ArcSet solution;
  Weight weight = 0;
  std::string method;
  bool certified = false;
  int m_param = -1;
  std::uint64_t sigma_evals = 0;
  double wall_ms = 0.0;
  Weight mu = -1;
  Weight upsilon = -1;
};

// Pairwise deletion score of e against h on a common cycle:
//   s(e,h) = (omega(e) - Omega(H_{e,h})) - (omega(h) - Omega(H_{h,e}))
// where Omega(H_{e,f}) is the relative feedback weight of e once f is
// excluded. Positive means h is the strictly better deletion; the score
// differences telescope, so a minimum of the induced preorder exists on
// every cycle. Both arcs must lie on `cycle` (throws invalid_argument).
Weight pairwise_score(const Digraph& g, const ArcSet& cycle, ArcId e,
                      ArcId h);

// Exact solver: repeatedly takes a witness cycle through the lowest
// still-cyclic arc of the current elementary world and deletes the
// preorder-minimum arc of that cycle, until acyclic. Every deletion k
// satisfies omega(k) + Omega(G\k) = Omega(G), so the result is optimal.
// Throws GuardError when the meta parameter exceeds m_budget.
FeedbackReport cut(const Digraph& g, int m_budget = 20);

// Exact solver: commits isolated cycle clusters to exhaustion, then makes
// one cut-style deletion, and repeats. Resolvable inputs never reach the
// scoring engine. Throws GuardError when the meta parameter exceeds
// m_budget.
FeedbackReport cut_resolve(const Digraph& g, int m_budget = 20);

// Resolution alone. Throws StateError when the graph is not resolvable.
FeedbackReport solve_resolvable(const Digraph& g);

}  // namespace fas
