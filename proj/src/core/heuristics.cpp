#include "core/heuristics.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <numeric>
#include <vector>

#include "core/meta.hpp"
#include "core/oracle.hpp"
#include "core/resolver.hpp"
#include "core/subgraphs.hpp"

namespace fas {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0)
      .count();
}

bool unbounded(const Ratio& r) { return r.num < 0; }

// ceil(count / (num/den)) for a positive finite ratio.
Weight ceil_over(long long count, const Ratio& r) {
  return (count * r.den + r.num - 1) / r.num;
}

}  // namespace

Ratio make_ratio(long long num, long long den) {
  if (num < 0) return {-1, 1};  // unbounded marker
  if (num == 0) return {0, 1};
  long long g = std::gcd(num, den);
  return {num / g, den / g};
}

bool ratio_less(const Ratio& a, const Ratio& b) {
  if (unbounded(a)) return false;
  if (unbounded(b)) return true;
  return a.num * b.den < b.num * a.den;
}

long long theta(const Digraph& g, ArcId e, long long budget) {
  Digraph c = cycle_closure(g);
  if (!c.alive(e)) return 0;
  bool complete = true;
  long long n = cycles_through(c, e, budget, &complete);
  return complete ? n : -1;
}

long long phi(const Digraph& g, ArcId e) {
  return (long long)elementary_arcs(g, e).size();
}

BoundReport lower_bounds(const Digraph& g, long long budget) {
  BoundReport b;
  Digraph c = cycle_closure(g);
  ArcSet live = c.live_arcs();
  if (live.empty()) return b;

  Weight wmax = 0;
  for (ArcId a : live) wmax = std::max(wmax, c.weight(a));
  long long arcs = (long long)live.size();
  b.upper = (arcs + 1) / 2 * wmax;

  // eta path: polynomial per arc, always available.
  for (ArcId a : live) {
    Ratio p = make_ratio(phi(c, a), 1);
    if (ratio_less(b.phi_max, p)) b.phi_max = p;
    Ratio eta = make_ratio(p.num, c.weight(a));
    if (ratio_less(b.eta_max, eta)) b.eta_max = eta;
  }
  b.upsilon = ceil_over(arcs, b.eta_max);

  // xi path: needs the full cycle enumeration; one pass yields every
  // theta at once.
  CycleEnumeration en = elementary_cycles(c, budget);
  if (!en.complete) {
    b.complete = false;
    b.mu = -1;
    b.theta_max = b.xi_max = {-1, 1};
    return b;
  }
  std::map<ArcId, long long> th;
  for (const ArcSet& cyc : en.cycles)
    for (ArcId a : cyc) ++th[a];
  for (ArcId a : live) {
    Ratio t = make_ratio(th[a], 1);
    if (ratio_less(b.theta_max, t)) b.theta_max = t;
    Ratio xi = make_ratio(t.num, c.weight(a));
    if (ratio_less(b.xi_max, xi)) b.xi_max = xi;
  }
  b.mu = ceil_over((long long)en.cycles.size(), b.xi_max);
  return b;
}

namespace {

// Argmax of the effective weight over the closure's live arcs; ties keep
// the lowest id, arcs with exhausted theta budgets count as unbounded.
ArcId pick_greedy(const Digraph& closed, Effective eff, long long budget) {
  ArcId best = -1;
  Ratio best_val{0, 1};
  for (ArcId a : closed.live_arcs()) {
    long long count = eff == Effective::xi
                          ? theta(closed, a, budget)
                          : phi(closed, a);
    Ratio val = make_ratio(count, closed.weight(a));
    if (best < 0 || ratio_less(best_val, val)) {
      best = a;
      best_val = val;
    }
  }
  return best;
}

void attach_bounds(FeedbackReport& r, const BoundReport& b) {
  r.mu = b.mu;
  r.upsilon = b.upsilon;
  Weight floor = std::max(b.mu, b.upsilon);
  r.certified = r.weight == std::max<Weight>(floor, 0);
}

}  // namespace

FeedbackReport greedy_cut(const Digraph& g, Effective eff,
                          long long budget) {
  auto t0 = Clock::now();
  FeedbackReport r;
  r.method = "greedy";
  Digraph work = cycle_closure(g);
  while (!work.live_arcs().empty()) {
    ArcId k = pick_greedy(work, eff, budget);
    r.solution = set_union(r.solution, {k});
    r.weight += work.weight(k);
    work.remove_arc(k);
    work = cycle_closure(work);
  }
  attach_bounds(r, lower_bounds(g, budget));
  r.wall_ms = ms_since(t0);
  return r;
}

FeedbackReport greedy_cut_resolve(const Digraph& g, Effective eff,
                                  long long budget) {
  auto t0 = Clock::now();
  FeedbackReport r;
  r.method = "greedy";
  Digraph work = g;
  while (true) {
    ResolveOutcome res = resolve(work);
    r.weight += res.weight;
    r.solution = set_union(r.solution, res.commits);
    work.remove_arcs(res.commits);
    if (res.resolvable) break;
    Digraph closed = cycle_closure(work);
    if (closed.live_arcs().empty()) break;
    ArcId k = pick_greedy(closed, eff, budget);
    r.solution = set_union(r.solution, {k});
    r.weight += work.weight(k);
    work.remove_arc(k);
  }
  attach_bounds(r, lower_bounds(g, budget));
  r.wall_ms = ms_since(t0);
  return r;
}

FeedbackReport hybrid_strategy(const Digraph& g,
                               HybridIndicators* indicators) {
  auto t0 = Clock::now();
  FeedbackReport r;
  r.method = "hybrid";
  r.m_param = global_m(g);
  HybridIndicators ind;
  {
    Digraph c = cycle_closure(g);
    Weight sum = 0;
    for (ArcId a : c.live_arcs()) sum += c.weight(a);
    ind.global_avg_weight =
        c.live_arcs().empty()
            ? 0.0
            : (double)sum / (double)c.live_arcs().size();
  }

  Digraph work = g;
  bool pure_resolve = true;
  Weight banned_weight = 0;
  while (true) {
    ResolveOutcome res = resolve(work);
    r.weight += res.weight;
    r.solution = set_union(r.solution, res.commits);
    work.remove_arcs(res.commits);
    if (res.resolvable) break;
    ArcSet cyc = cycle_arcs(work);
    if (cyc.empty()) break;
    pure_resolve = false;

    MetaGraph m = meta_graph(work, find_cycle_through(work, cyc.front()));
    ArcSet banned;
    if (meta_dim(m) > 0) {
      // Maximum spanning forest under 1/(w(e)+w(f)): Kruskal on pair
      // weight ascending keeps the light pairs; every rejected edge
      // forbids its deeper endpoint from the exact subproblem.
      struct MetaEdge {
        Weight pair_weight;
        ArcId a, b;
      };
      std::vector<MetaEdge> edges;
      for (const auto& [a, b] : m.edges)
        edges.push_back({work.weight(a) + work.weight(b), a, b});
      std::sort(edges.begin(), edges.end(), [](const MetaEdge& x,
                                               const MetaEdge& y) {
        return std::tie(x.pair_weight, x.a, x.b) <
               std::tie(y.pair_weight, y.a, y.b);
      });
      std::map<ArcId, ArcId> parent;
      for (ArcId a : m.nodes) parent[a] = a;
      auto find = [&](ArcId a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
      };
      for (const MetaEdge& e : edges) {
        ArcId ra = find(e.a), rb = find(e.b);
        if (ra != rb) {
          parent[ra] = rb;
          continue;
        }
        ++ind.forbidden_edges;
        int la = m.layer.at(e.a), lb = m.layer.at(e.b);
        ArcId deep = la != lb ? (la > lb ? e.a : e.b) : std::max(e.a, e.b);
        banned = set_union(banned, {deep});
      }
      ind.banned_arcs += (int)banned.size();
      for (ArcId a : banned) banned_weight += work.weight(a);
    }

    // The seed cycle sits at layer zero and is never banned, so the
    // restriction always keeps a cycle and the exact cut makes progress.
    Digraph restricted =
        cycle_closure(work.restricted(set_minus(m.nodes, banned)));
    FeedbackReport sub =
        cut(restricted, std::numeric_limits<int>::max());
    r.weight += sub.weight;
    r.solution = set_union(r.solution, sub.solution);
    r.sigma_evals += sub.sigma_evals;
    work.remove_arcs(sub.solution);
  }

  r.certified = pure_resolve;
  ind.banned_avg_weight =
      ind.banned_arcs ? (double)banned_weight / ind.banned_arcs : 0.0;
  if (indicators) *indicators = ind;
  r.wall_ms = ms_since(t0);
  return r;
}

}  // namespace fas
