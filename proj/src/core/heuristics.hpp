#pragma once
#include "core/graph.hpp"
#include "core/solver.hpp"

namespace fas {

// Exact nonnegative rational, normalized with den > 0; num = -1/den = 1
// encodes "unbounded" (an enumeration budget ran out below the true value).
struct Ratio {
  long long num = 0;
  long long den = 1;
};
Ratio make_ratio(long long num, long long den);
bool ratio_less(const Ratio& a, const Ratio& b);
inline bool ratio_eq(const Ratio& a, const Ratio& b) {
  return a.num == b.num && a.den == b.den;
}

// Number of elementary cycles through e (theta). Exponential worst case:
// returns -1 once the enumeration exceeds `budget` steps.
long long theta(const Digraph& g, ArcId e, long long budget = 1000000);

// Arc count of e's elementary subgraph (phi). Polynomial.
long long phi(const Digraph& g, ArcId e);

// Certified lower and upper bounds for the feedback weight. All values
// are computed on the cycle closure (the bounds presume it); acyclic
// inputs get all-zero bounds. mu = ceil(#cycles / xi_max) with
// xi(e) = theta(e)/omega(e); upsilon = ceil(#closure arcs / eta_max) with
// eta(e) = phi(e)/omega(e); upper = ceil(#closure arcs / 2) * omega_max.
// When cycle enumeration exhausts the budget, complete turns false and
// mu = -1 (theta_max/xi_max unbounded); upsilon and upper are always
// reported.
struct BoundReport {
  Ratio theta_max;
  Ratio phi_max;
  Ratio xi_max;
  Ratio eta_max;
  Weight mu = 0;
  Weight upsilon = 0;
  Weight upper = 0;
  bool complete = true;
};
BoundReport lower_bounds(const Digraph& g, long long budget = 1000000);

enum class Effective { xi, eta };

// Repeatedly deletes the arc maximizing the chosen effective weight on
// the current closure until acyclic (ties: lowest id; arcs whose theta
// enumeration blew the budget count as unbounded and win). The report
// carries the input's lower bounds; certified turns true only when the
// greedy weight meets one of them.
FeedbackReport greedy_cut(const Digraph& g, Effective eff = Effective::xi,
                          long long budget = 1000000);

// As greedy_cut, but commits all resolvable cycle clusters before every
// greedy deletion; committed arcs join the solution.
FeedbackReport greedy_cut_resolve(const Digraph& g,
                                  Effective eff = Effective::xi,
                                  long long budget = 1000000);

// Quality indicators of one hybrid run: how much of the instance was
// withheld from exact treatment, and how the withheld arcs' weights
// compare to the instance average (the strategy's quality test).
struct HybridIndicators {
  int forbidden_edges = 0;  // non-tree meta edges over all rounds
  int banned_arcs = 0;      // arcs withheld from exact subproblems
  double banned_avg_weight = 0.0;
  double global_avg_weight = 0.0;
};

// Meta-spanning-tree strategy: resolve; if cycles remain, build the meta
// graph of a witness cycle, keep a maximum spanning forest under edge
// value 1/(omega(e)+omega(f)) (so heavy pairs are forbidden first), ban
// the deeper endpoint of every non-tree edge, and run the exact cut on
// the closure of the remaining meta nodes; repeat. Heuristic-grade:
// certified only when resolution alone empties the graph, in which case
// the result equals solve_resolvable's.
FeedbackReport hybrid_strategy(const Digraph& g,
                               HybridIndicators* indicators = nullptr);

}  // namespace fas
