#include "core/meta.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

#include "core/mincut.hpp"
#include "core/subgraphs.hpp"

namespace fas {

namespace {

// N(h) within `stage`: arcs of h's elementary world that still lie on a
// cycle once h is gone.
ArcSet stage_sensitive(const Digraph& stage, ArcId h) {
  ArcSet world = elementary_arcs(stage, h);
  if (world.empty()) return {};
  ArcSet rest = cycle_arcs(stage.without({h}));
  return set_intersect(set_minus(world, {h}), rest);
}

}  // namespace

bool arc_sensitive(const Digraph& g, ArcId f, ArcId e) {
  if (e == f || !g.alive(e) || !g.alive(f)) return false;
  if (!set_contains(elementary_arcs(g, e), f)) return false;
  return set_contains(cycle_arcs(g.without({e})), f);
}

ArcSet sensitive_set(const Digraph& g, ArcId e) {
  if (!g.alive(e)) return {};
  return stage_sensitive(g, e);
}

MetaGraph meta_graph(const Digraph& g, const ArcSet& seed_cycle) {
  if (seed_cycle.empty()) throw std::invalid_argument("empty seed cycle");
  for (ArcId a : seed_cycle)
    if (!g.alive(a)) throw std::invalid_argument("dead seed arc");

  MetaGraph m;
  m.seed = seed_cycle;
  std::set<std::pair<ArcId, ArcId>> edges;
  auto add_edge = [&](ArcId a, ArcId b) {
    edges.insert({std::min(a, b), std::max(a, b)});
  };

  ArcSet collected = seed_cycle;  // W_{k-1} during stage k
  for (ArcId a : seed_cycle) m.layer[a] = 0;
  ArcSet frontier = seed_cycle;
  int k = 1;
  while (!frontier.empty()) {
    // New nodes: sensitivity of each frontier arc h, tested with every
    // other collected arc deleted.
    ArcSet next;
    for (ArcId h : frontier) {
      Digraph stage = g.without(set_minus(collected, {h}));
      for (ArcId f : stage_sensitive(stage, h)) {
        add_edge(h, f);
        if (!set_contains(collected, f) && !set_contains(next, f))
          next = set_union(next, {f});
      }
    }
    // Sibling edges inside the new layer: sensitivity in the graph with
    // all previously collected arcs deleted.
    if (!next.empty()) {
      Digraph stage = g.without(collected);
      for (ArcId h : next) {
        ArcSet n = set_intersect(stage_sensitive(stage, h), next);
        for (ArcId f : n) add_edge(h, f);
      }
    }
    for (ArcId a : next) m.layer[a] = k;
    collected = set_union(collected, next);
    frontier = next;
    ++k;
  }
  m.nodes = collected;
  m.edges.assign(edges.begin(), edges.end());
  return m;
}

namespace {

// Component count of the meta graph restricted to `keep` (all nodes when
// empty exclusion is wanted, pass m.nodes).
int meta_components(const MetaGraph& m, const ArcSet& keep) {
  std::map<ArcId, std::vector<ArcId>> adj;
  for (ArcId a : keep) adj[a];
  for (const auto& [a, b] : m.edges) {
    if (!adj.count(a) || !adj.count(b)) continue;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::set<ArcId> seen;
  int comps = 0;
  for (ArcId a : keep) {
    if (seen.count(a)) continue;
    ++comps;
    std::queue<ArcId> q;
    q.push(a);
    seen.insert(a);
    while (!q.empty()) {
      ArcId x = q.front();
      q.pop();
      for (ArcId y : adj[x])
        if (seen.insert(y).second) q.push(y);
    }
  }
  return comps;
}

}  // namespace

int meta_dim(const MetaGraph& m) {
  if (m.nodes.empty()) return 0;
  return (int)m.edges.size() - (int)m.nodes.size() +
         meta_components(m, m.nodes);
}

int meta_cycle_dim(const MetaGraph& m, ArcId f) {
  if (!set_contains(m.nodes, f)) throw std::invalid_argument("f not a node");
  ArcId anchor = -1;
  for (ArcId a : m.seed)
    if (a != f) { anchor = a; break; }
  if (anchor < 0) return 0;

  std::map<ArcId, std::vector<ArcId>> adj;
  for (ArcId a : m.nodes)
    if (a != f) adj[a];
  for (const auto& [a, b] : m.edges) {
    if (a == f || b == f) continue;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::set<ArcId> comp;
  std::queue<ArcId> q;
  q.push(anchor);
  comp.insert(anchor);
  while (!q.empty()) {
    ArcId x = q.front();
    q.pop();
    for (ArcId y : adj[x])
      if (comp.insert(y).second) q.push(y);
  }
  int ec = 0;
  for (const auto& [a, b] : m.edges)
    if (comp.count(a) && comp.count(b)) ++ec;
  return ec - (int)comp.size() + 1;
}

int global_m(const Digraph& g) {
  Digraph work = cycle_closure(g);
  int best = 0;
  while (work.arc_count() > 0) {
    ArcId seed_arc = work.live_arcs().front();
    ArcSet c = find_cycle_through(work, seed_arc);
    MetaGraph m = meta_graph(work, c);
    best = std::max(best, meta_dim(m));
    work = cycle_closure(work.without(m.nodes));
  }
  return best;
}

namespace {

// Credit the outside world D grants for arc h: the drop in the local cost
// of breaking every cycle through h's parallel class when h leaves the
// class. Deeper worlds are credited recursively, so a cut that the rest
// of D pays for anyway is not charged twice along one chain of worlds.
using CreditMemo = std::map<std::pair<std::vector<std::uint64_t>, ArcId>, Weight>;

Weight credit(const Digraph& d, ArcId h, CreditMemo& memo) {
  if (!d.alive(h) || !set_contains(cycle_arcs(d), h)) return 0;
  auto key = std::make_pair(d.live_key(), h);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  ArcSet cls = d.parallel_class(h);
  ArcSet world = class_world(d, h);
  Digraph deep = cycle_closure(d.without(cls));
  Digraph net = d.restricted(set_minus(world, cls));
  std::vector<Weight> caps(d.arc_span(), 0);
  for (ArcId a : net.live_arcs()) {
    Weight s = d.weight(a);
    if (deep.alive(a)) s -= credit(deep, a, memo);
    caps[a] = std::max<Weight>(s, 0);
  }
  Weight w = 0;
  for (ArcId a : cls) w += d.weight(a);
  Weight p = min_cut(net, d.head(h), d.tail(h), &caps).value;
  Weight value = std::min(w, p) - std::min(w - d.weight(h), p);
  memo[key] = value;
  return value;
}

}  // namespace

RelativeWeight relative_weight(const Digraph& g, ArcId e, ArcId f) {
  if (e == f) throw std::invalid_argument("anchor equals excluded arc");
  if (!g.alive(e) || !g.alive(f)) throw std::invalid_argument("dead arc");

  RelativeWeight rw;
  rw.anchor = e;
  rw.excluded = f;

  ArcSet world = elementary_arcs(g, e);
  ArcSet h_arcs = cycle_arcs(g.restricted(world).without({f}));
  for (ArcId a : h_arcs) rw.sigma[a] = g.weight(a);

  Digraph gp = g.without({f});
  ArcSet sens = sensitive_set(gp, e);
  if (!sens.empty()) {
    Digraph rest = cycle_closure(gp.without({e}));
    CreditMemo memo;
    for (ArcId h : sens)
      rw.sigma[h] = g.weight(h) - credit(rest, h, memo);
  }
  return rw;
}

namespace {

void require_nodes(const MetaGraph& m, ArcId e, ArcId f) {
  if (!set_contains(m.nodes, e) || !set_contains(m.nodes, f))
    throw std::invalid_argument("arc not a meta node");
}

}  // namespace

RelativeWeight relative_weight_tree(const Digraph& g, const MetaGraph& m,
                                    ArcId e, ArcId f) {
  require_nodes(m, e, f);
  // Component of m minus f containing e must be a tree.
  std::map<ArcId, std::vector<ArcId>> adj;
  for (ArcId a : m.nodes)
    if (a != f) adj[a];
  for (const auto& [a, b] : m.edges) {
    if (a == f || b == f) continue;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::set<ArcId> comp;
  std::queue<ArcId> q;
  q.push(e);
  comp.insert(e);
  while (!q.empty()) {
    ArcId x = q.front();
    q.pop();
    for (ArcId y : adj[x])
      if (comp.insert(y).second) q.push(y);
  }
  int ec = 0;
  for (const auto& [a, b] : m.edges)
    if (comp.count(a) && comp.count(b)) ++ec;
  if (ec != (int)comp.size() - 1)
    throw std::invalid_argument("meta component is not a tree");
  return relative_weight(g, e, f);
}

RelativeWeight relative_weight_general(const Digraph& g, const MetaGraph& m,
                                       ArcId e, ArcId f) {
  require_nodes(m, e, f);
  return relative_weight(g, e, f);
}

Weight sigma_feedback_weight(const Digraph& h,
                             const std::map<ArcId, Weight>& sigma) {
  Digraph work = cycle_closure(h);
  ArcSet free;
  for (ArcId a : work.live_arcs()) {
    auto it = sigma.find(a);
    Weight s = it == sigma.end() ? work.weight(a) : it->second;
    if (s <= 0) free.push_back(a);
    else work.set_weight(a, s);
  }
  work.remove_arcs(free);
  MarginalEngine engine;
  return engine.feedback_weight(work);
}

Weight MarginalEngine::feedback_weight(const Digraph& g) {
  return solve_closed(cycle_closure(g));
}

Weight MarginalEngine::marginal(const Digraph& g, ArcId e) {
  return feedback_weight(g) - feedback_weight(g.without({e}));
}

Weight MarginalEngine::relative_feedback_weight(const Digraph& g, ArcId e,
                                                ArcId f) {
  return marginal(g.without({f}), e);
}

Weight MarginalEngine::solve_closed(const Digraph& closed) {
  if (closed.arc_count() == 0) return 0;
  // Every closure arc joins vertices of one strong component; components
  // break no cycles of each other, so their optima add up.
  std::vector<int> scc = strong_components(closed);
  std::map<int, ArcSet> parts;
  for (ArcId a : closed.live_arcs()) parts[scc[closed.tail(a)]].push_back(a);
  Weight total = 0;
  for (auto& [id, arcs] : parts) total += solve_component(closed.restricted(arcs));
  return total;
}

Weight MarginalEngine::solve_component(const Digraph& comp) {
  auto key = comp.live_key();
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  ++evals_;

  ArcSet live = comp.live_arcs();

  // Fast path: a component whose cycles all pass one arc a is solved by
  // min(omega(a), min head->tail cut without a). Such an arc never has a
  // live parallel twin, so the class adds nothing.
  for (ArcId a : live) {
    Digraph rest = comp.without({a});
    if (!is_acyclic(rest)) continue;
    Weight best = std::min(comp.weight(a),
                           min_cut(rest, comp.head(a), comp.tail(a)).value);
    memo_[key] = best;
    return best;
  }

  // Branch over a shortest cycle: some arc of every cycle is in any
  // feasible solution, and a shortest one bounds the fan-out.
  ArcSet cycle;
  size_t best_len = live.size() + 1;
  for (ArcId a : live) {
    // BFS head(a) -> tail(a); no head->tail path can use a itself.
    std::vector<int> via(comp.arc_span(), -1);
    std::vector<char> seen(comp.vertex_count(), 0);
    std::queue<int> q;
    q.push(comp.head(a));
    seen[comp.head(a)] = 1;
    auto out = comp.out_adjacency();
    bool found = false;
    while (!q.empty() && !found) {
      int v = q.front();
      q.pop();
      for (ArcId b : out[v]) {
        int to = comp.head(b);
        if (seen[to]) continue;
        seen[to] = 1;
        via[to] = b;
        if (to == comp.tail(a)) { found = true; break; }
        q.push(to);
      }
    }
    if (!found) continue;  // dead arc cannot happen in a closed component
    ArcSet c = {a};
    for (int v = comp.tail(a); v != comp.head(a); v = comp.tail(via[v]))
      c.push_back(via[v]);
    std::sort(c.begin(), c.end());
    if (c.size() < best_len) {
      best_len = c.size();
      cycle = c;
      if (best_len == 2) break;
    }
  }

  Weight best = -1;
  for (ArcId x : cycle) {
    Weight v = comp.weight(x) + solve_closed(cycle_closure(comp.without({x})));
    if (best < 0 || v < best) best = v;
  }
  memo_[key] = best;
  return best;
}

}  // namespace fas
