#include "core/solver.hpp"

#include <chrono>
#include <stdexcept>
#include <string>

#include "core/errors.hpp"
#include "core/meta.hpp"
#include "core/resolver.hpp"
#include "core/subgraphs.hpp"

namespace fas {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0)
      .count();
}

int guard_m(const Digraph& g, int m_budget) {
  int m = global_m(g);
  if (m > m_budget)
    throw GuardError("meta parameter m=" + std::to_string(m) +
                     " exceeds the budget " + std::to_string(m_budget) +
                     "; raise it or fall back to the greedy heuristic "
                     "with certified bounds");
  return m;
}

Weight score(const Digraph& g, MarginalEngine& engine, ArcId e, ArcId h) {
  return (g.weight(e) - engine.relative_feedback_weight(g, e, h)) -
         (g.weight(h) - engine.relative_feedback_weight(g, h, e));
}

// Preorder minimum of the cycle: one ascending pass replacing the
// candidate only on a strictly positive score keeps the lowest id among
// ties, and the telescoping of s makes the scan order irrelevant to the
// deletion cost omega(k) + Omega(G\k).
ArcId select_deletion(const Digraph& g, const ArcSet& cycle,
                      MarginalEngine& engine) {
  ArcId cand = cycle.front();
  for (std::size_t i = 1; i < cycle.size(); ++i)
    if (score(g, engine, cand, cycle[i]) > 0) cand = cycle[i];
  return cand;
}

void apply_deletion(Digraph& work, FeedbackReport& r, ArcId k) {
  r.solution = set_union(r.solution, {k});
  r.weight += work.weight(k);
  work.remove_arc(k);
}

}  // namespace

Weight pairwise_score(const Digraph& g, const ArcSet& cycle, ArcId e,
                      ArcId h) {
  if (!set_contains(cycle, e) || !set_contains(cycle, h))
    throw std::invalid_argument(
        "pairwise_score: both arcs must lie on the given cycle");
  if (e == h) return 0;
  MarginalEngine engine;
  return score(g, engine, e, h);
}

FeedbackReport cut(const Digraph& g, int m_budget) {
  auto t0 = Clock::now();
  FeedbackReport r;
  r.method = "cut";
  r.m_param = guard_m(g, m_budget);
  MarginalEngine engine;
  Digraph work = g;
  while (true) {
    ArcSet cyc = cycle_arcs(work);
    if (cyc.empty()) break;
    // Work through the elementary world of the lowest cyclic arc before
    // reanchoring.
    ArcSet front = elementary_arcs(work, cyc.front());
    while (true) {
      ArcId e = -1;
      for (ArcId a : front)
        if (work.alive(a) && set_contains(cyc, a)) {
          e = a;
          break;
        }
      if (e < 0) break;
      ArcId k = select_deletion(work, find_cycle_through(work, e), engine);
      apply_deletion(work, r, k);
      cyc = cycle_arcs(work);
    }
  }
  r.certified = true;
  r.sigma_evals = engine.evaluations();
  r.wall_ms = ms_since(t0);
  return r;
}

FeedbackReport cut_resolve(const Digraph& g, int m_budget) {
  auto t0 = Clock::now();
  FeedbackReport r;
  r.method = "cut-resolve";
  r.m_param = guard_m(g, m_budget);
  MarginalEngine engine;
  Digraph work = g;
  while (true) {
    // Commit isolated clusters as far as they go; the commits preserve
    // the optimum, so only the leftover needs scoring.
    ResolveOutcome res = resolve(work);
    r.weight += res.weight;
    r.solution = set_union(r.solution, res.commits);
    work.remove_arcs(res.commits);
    if (res.resolvable) break;
    ArcSet cyc = cycle_arcs(work);
    if (cyc.empty()) break;
    ArcId k =
        select_deletion(work, find_cycle_through(work, cyc.front()), engine);
    apply_deletion(work, r, k);
  }
  r.certified = true;
  r.sigma_evals = engine.evaluations();
  r.wall_ms = ms_since(t0);
  return r;
}

FeedbackReport solve_resolvable(const Digraph& g) {
  auto t0 = Clock::now();
  ResolveOutcome res = resolve(g);
  if (!res.resolvable)
    throw StateError(
        "graph is not resolvable; use cut or cut_resolve instead");
  FeedbackReport r;
  r.method = "resolve";
  r.solution = res.commits;
  r.weight = res.weight;
  r.certified = true;
  r.wall_ms = ms_since(t0);
  return r;
}

}  // namespace fas
