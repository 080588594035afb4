#pragma once
#include "core/graph.hpp"

namespace fas {

// Arcs of every elementary cycle through e, e included; empty when e lies
// on no cycle. Exact: a necessary-condition sieve (prefix must avoid the
// arc's head, suffix its tail) iterated to fixpoint, then a witness pass
// that enumerates elementary head(e)->tail(e) paths until every surviving
// arc is covered. If the step budget runs out the sieve set is returned
// and *exact is set false.
ArcSet elementary_arcs(const Digraph& g, ArcId e,
                       long long budget = 2000000, bool* exact = nullptr);
Digraph elementary_subgraph(const Digraph& g, ArcId e);

// Arcs of every simple cycle through e (arc-repetition-free closed walks):
// elementary cycles through the split anchor vertex of the line graph.
ArcSet simple_arcs(const Digraph& g, ArcId e);
Digraph simple_subgraph(const Digraph& g, ArcId e);

// Union of the elementary worlds of e's whole parallel class.
ArcSet class_world(const Digraph& g, ArcId e);

// Isolated-cycle world: e's class world minus every arc that still lies
// on a cycle once the class is removed, re-anchored at e. Nonempty iff
// some cycle through e shares no arc with any cycle avoiding the class.
ArcSet isolated_arcs(const Digraph& g, ArcId e);
Digraph isolated_subgraph(const Digraph& g, ArcId e);

// First elementary cycle through e in ascending-arc-id DFS order (the
// deterministic "lowest" cycle); sorted, empty if none.
ArcSet find_cycle_through(const Digraph& g, ArcId e);

} // namespace fas
