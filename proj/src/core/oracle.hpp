#pragma once
#include <vector>

#include "core/errors.hpp"
#include "core/graph.hpp"

namespace fas {

// Every elementary cycle as a sorted arc set. Cycles are found by DFS
// anchored at each cycle's smallest vertex, so parallel arcs yield distinct
// cycles. `complete` drops to false if the step budget ran out first.
struct CycleEnumeration {
  std::vector<ArcSet> cycles;
  bool complete = true;
};
CycleEnumeration elementary_cycles(const Digraph& g,
                                   long long budget = 1000000);

// Number of elementary cycles through arc e = number of elementary paths
// head(e) -> tail(e). Counts found so far are returned even when the budget
// runs out (then *complete is set false).
long long cycles_through(const Digraph& g, ArcId e,
                         long long budget = 1000000,
                         bool* complete = nullptr);

struct OracleResult {
  Weight weight = 0;
  ArcSet arcs;                // lexicographically least optimum
  std::vector<ArcSet> optima; // every optimal solution, sorted
};

// Exact minimum-weight feedback arc set by best-first subset search over
// the weight-sorted arc lattice. Throws GuardError above max_arcs live arcs.
OracleResult brute_force_fasp(const Digraph& g, int max_arcs = 20);

// Exact minimum-weight feedback vertex set (ids in `arcs` are vertices).
// Empty vw means unit weights. Throws GuardError above max_vertices.
OracleResult brute_force_fvsp(const Digraph& g, const std::vector<Weight>& vw,
                              int max_vertices = 16);

} // namespace fas
