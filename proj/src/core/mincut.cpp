#include "core/mincut.hpp"

#include <algorithm>
#include <limits>

#include "core/subgraphs.hpp"

namespace fas {

namespace {

struct Dinic {
  struct Edge {
    int to;
    Weight cap;
    int rev;
    ArcId orig; // source arc id, -1 on reverse edges
  };
  std::vector<std::vector<Edge>> adj;
  std::vector<int> level, iter;

  explicit Dinic(int n) : adj(n), level(n), iter(n) {}

  void add(int u, int v, Weight cap, ArcId orig) {
    adj[u].push_back({v, cap, (int)adj[v].size(), orig});
    adj[v].push_back({u, 0, (int)adj[u].size() - 1, -1});
  }

  bool bfs(int s, int t) {
    std::fill(level.begin(), level.end(), -1);
    std::vector<int> q{s};
    level[s] = 0;
    for (size_t i = 0; i < q.size(); ++i) {
      int v = q[i];
      for (const Edge& e : adj[v])
        if (e.cap > 0 && level[e.to] < 0) {
          level[e.to] = level[v] + 1;
          q.push_back(e.to);
        }
    }
    return level[t] >= 0;
  }

  Weight dfs(int v, int t, Weight f) {
    if (v == t) return f;
    for (int& i = iter[v]; i < (int)adj[v].size(); ++i) {
      Edge& e = adj[v][i];
      if (e.cap > 0 && level[v] < level[e.to]) {
        Weight d = dfs(e.to, t, std::min(f, e.cap));
        if (d > 0) {
          e.cap -= d;
          adj[e.to][e.rev].cap += d;
          return d;
        }
      }
    }
    return 0;
  }

  Weight run(int s, int t) {
    Weight flow = 0;
    while (bfs(s, t)) {
      std::fill(iter.begin(), iter.end(), 0);
      for (Weight f; (f = dfs(s, t, std::numeric_limits<Weight>::max()));)
        flow += f;
    }
    return flow;
  }
};

} // namespace

CutResult min_cut(const Digraph& g, int s, int t,
                  const std::vector<Weight>* caps) {
  Dinic net(g.vertex_count());
  for (ArcId a : g.live_arcs()) {
    Weight c = caps ? (*caps)[a] : g.weight(a);
    net.add(g.tail(a), g.head(a), c, a);
  }
  CutResult res;
  res.value = net.run(s, t);
  // Residual reachability from s; arcs leaving that side form the cut.
  std::vector<char> side(g.vertex_count(), 0);
  std::vector<int> stack{s};
  side[s] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const Dinic::Edge& e : net.adj[v])
      if (e.cap > 0 && !side[e.to]) {
        side[e.to] = 1;
        stack.push_back(e.to);
      }
  }
  for (ArcId a : g.live_arcs())
    if (side[g.tail(a)] && !side[g.head(a)]) res.cut_arcs.push_back(a);
  return res;
}

LocalCut local_fas(const Digraph& g, ArcId e) {
  LocalCut res;
  ArcSet world = class_world(g, e);
  if (world.empty()) return res; // anchor on no cycle: nothing to break
  ArcSet cls = g.parallel_class(e);
  for (ArcId f : cls) res.class_weight += g.weight(f);
  Digraph network = g.restricted(set_minus(world, cls));
  CutResult cut = min_cut(network, g.head(e), g.tail(e));
  res.cut_weight = cut.value;
  if (res.class_weight <= res.cut_weight) {
    res.value = res.class_weight;
    res.arcs = cls;
  } else {
    res.value = res.cut_weight;
    res.arcs = cut.cut_arcs;
  }
  return res;
}

} // namespace fas
