#include "core/subgraphs.hpp"

#include <algorithm>

namespace fas {

namespace {

// Arcs with any live arc touching vertex x banned.
std::vector<char> incident_ban(const Digraph& g, int x) {
  std::vector<char> ban(g.arc_span(), 0);
  for (ArcId a = 0; a < g.arc_span(); ++a)
    if (g.alive(a) && (g.tail(a) == x || g.head(a) == x)) ban[a] = 1;
  return ban;
}

} // namespace

ArcSet elementary_arcs(const Digraph& g, ArcId e, long long budget,
                       bool* exact) {
  if (exact) *exact = true;
  if (!g.alive(e)) return {};
  int s = g.head(e), t = g.tail(e);
  Digraph w = g;
  w.remove_arc(e); // no elementary path head->tail can reuse e

  // Walk world: arcs on some s->t walk at all.
  auto fwd = reachable_from(w, s);
  auto bwd = co_reachable(w, t);
  if (!fwd[t]) return {};
  {
    ArcSet keep;
    for (ArcId a : w.live_arcs())
      if (fwd[w.tail(a)] && bwd[w.head(a)]) keep.push_back(a);
    w.keep_only(keep);
  }

  // Sieve to fixpoint: an arc u->v on an elementary s->t path needs a
  // prefix s->u that never touches v and a suffix v->t that never touches
  // u. Both are necessary, so no true member is ever dropped.
  for (bool changed = true; changed;) {
    changed = false;
    for (ArcId f : w.live_arcs()) {
      int u = w.tail(f), v = w.head(f);
      if (!reachable_from(w, s, incident_ban(w, v))[u] ||
          !reachable_from(w, v, incident_ban(w, u))[t]) {
        w.remove_arc(f);
        changed = true;
      }
    }
  }

  // Witness pass: enumerate elementary s->t paths, marking their arcs,
  // until every sieve survivor is witnessed or the budget is spent.
  ArcSet sieved = w.live_arcs();
  std::vector<char> marked(w.arc_span(), 0);
  size_t unmarked = sieved.size();
  auto out = w.out_adjacency();
  auto to_t = co_reachable(w, t);
  std::vector<char> on_path(w.vertex_count(), 0);
  struct Frame {
    int v;
    size_t next = 0;
  };
  std::vector<Frame> stack{{s}};
  std::vector<ArcId> path;
  on_path[s] = 1;
  bool complete = true;
  while (!stack.empty() && unmarked > 0) {
    Frame& f = stack.back();
    if (f.next == out[f.v].size()) {
      on_path[f.v] = 0;
      stack.pop_back();
      if (!path.empty()) path.pop_back();
      continue;
    }
    ArcId a = out[f.v][f.next++];
    if (--budget < 0) {
      complete = false;
      break;
    }
    int v = w.head(a);
    if (!to_t[v]) continue;
    if (v == t) {
      for (ArcId p : path)
        if (!marked[p]) {
          marked[p] = 1;
          --unmarked;
        }
      if (!marked[a]) {
        marked[a] = 1;
        --unmarked;
      }
    } else if (!on_path[v]) {
      on_path[v] = 1;
      path.push_back(a);
      stack.push_back({v});
    }
  }

  ArcSet res;
  if (complete) {
    for (ArcId a : sieved)
      if (marked[a]) res.push_back(a);
  } else {
    if (exact) *exact = false;
    res = sieved;
  }
  res = set_union(res, {e});
  return res;
}

Digraph elementary_subgraph(const Digraph& g, ArcId e) {
  return g.restricted(elementary_arcs(g, e));
}

ArcSet simple_arcs(const Digraph& g, ArcId e) {
  if (!g.alive(e)) return {};
  // Line graph with the anchor's vertex split so that an anchor bridge arc
  // stands for "the walk traverses e": elementary cycles through the
  // bridge are exactly the simple cycles of g through e.
  std::vector<ArcId> va = g.live_arcs();
  std::vector<int> vert_of(g.arc_span(), -1);
  for (int i = 0; i < (int)va.size(); ++i) vert_of[va[i]] = i;
  int x_out = vert_of[e];
  int x_in = (int)va.size(); // receives what used to enter the anchor
  Digraph l((int)va.size() + 1);
  auto out = g.out_adjacency();
  for (ArcId f : va)
    for (ArcId h : out[g.head(f)])
      l.add_arc(vert_of[f], h == e ? x_in : vert_of[h], 1);
  ArcId bridge = l.add_arc(x_in, x_out, 1);
  ArcSet world = elementary_arcs(l, bridge);
  if (world.empty()) return {};
  ArcSet res{e};
  for (ArcId la : world) {
    if (la == bridge) continue;
    for (int endpoint : {l.tail(la), l.head(la)}) {
      ArcId orig = endpoint == x_in ? e : va[endpoint];
      res.push_back(orig);
    }
  }
  std::sort(res.begin(), res.end());
  res.erase(std::unique(res.begin(), res.end()), res.end());
  return res;
}

Digraph simple_subgraph(const Digraph& g, ArcId e) {
  return g.restricted(simple_arcs(g, e));
}

ArcSet class_world(const Digraph& g, ArcId e) {
  ArcSet world;
  for (ArcId f : g.parallel_class(e))
    world = set_union(world, elementary_arcs(g, f));
  return world;
}

ArcSet isolated_arcs(const Digraph& g, ArcId e) {
  if (!g.alive(e)) return {};
  ArcSet world = class_world(g, e);
  if (world.empty()) return {};
  ArcSet tainted = cycle_arcs(g.without(g.parallel_class(e)));
  Digraph h = g.restricted(set_minus(world, tainted));
  return elementary_arcs(h, e);
}

Digraph isolated_subgraph(const Digraph& g, ArcId e) {
  return g.restricted(isolated_arcs(g, e));
}

ArcSet find_cycle_through(const Digraph& g, ArcId e) {
  if (!g.alive(e)) return {};
  int s = g.head(e), t = g.tail(e);
  auto out = g.out_adjacency();
  auto to_t = co_reachable(g, t);
  if (!to_t[s]) return {};
  std::vector<char> on_path(g.vertex_count(), 0);
  struct Frame {
    int v;
    size_t next = 0;
  };
  std::vector<Frame> stack{{s}};
  std::vector<ArcId> path;
  on_path[s] = 1;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next == out[f.v].size()) {
      on_path[f.v] = 0;
      stack.pop_back();
      if (!path.empty()) path.pop_back();
      continue;
    }
    ArcId a = out[f.v][f.next++];
    if (a == e) continue;
    int v = g.head(a);
    if (v == t) {
      ArcSet cyc = path;
      cyc.push_back(a);
      cyc.push_back(e);
      std::sort(cyc.begin(), cyc.end());
      return cyc;
    }
    if (!on_path[v] && to_t[v]) {
      on_path[v] = 1;
      path.push_back(a);
      stack.push_back({v});
    }
  }
  return {};
}

} // namespace fas
