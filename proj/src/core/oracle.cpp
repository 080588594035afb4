#include "core/oracle.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace fas {

CycleEnumeration elementary_cycles(const Digraph& g, long long budget) {
  CycleEnumeration res;
  auto out = g.out_adjacency();
  int n = g.vertex_count();
  std::vector<char> on_path(n, 0);
  // Anchor each cycle at its smallest vertex: from anchor s, walk only
  // vertices > s and close back at s.
  for (int s = 0; s < n && res.complete; ++s) {
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
      if (--budget < 0) {
        res.complete = false;
        break;
      }
      int w = g.head(a);
      if (w == s) {
        path.push_back(a);
        ArcSet cyc = path;
        std::sort(cyc.begin(), cyc.end());
        res.cycles.push_back(std::move(cyc));
        path.pop_back();
      } else if (w > s && !on_path[w]) {
        on_path[w] = 1;
        path.push_back(a);
        stack.push_back({w});
      }
    }
    for (Frame& f : stack) on_path[f.v] = 0; // budget bailout cleanup
  }
  return res;
}

long long cycles_through(const Digraph& g, ArcId e, long long budget,
                         bool* complete) {
  if (complete) *complete = true;
  if (!g.alive(e)) return 0;
  auto out = g.out_adjacency();
  int src = g.head(e), dst = g.tail(e);
  std::vector<char> on_path(g.vertex_count(), 0);
  struct Frame {
    int v;
    size_t next = 0;
  };
  std::vector<Frame> stack{{src}};
  on_path[src] = 1;
  long long count = 0;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next == out[f.v].size()) {
      on_path[f.v] = 0;
      stack.pop_back();
      continue;
    }
    ArcId a = out[f.v][f.next++];
    if (--budget < 0) {
      if (complete) *complete = false;
      break;
    }
    int w = g.head(a);
    if (w == dst) {
      ++count;
    } else if (!on_path[w]) {
      on_path[w] = 1;
      stack.push_back({w});
    }
  }
  return count;
}

namespace {

// Best-first walk of the subset lattice over items sorted by weight:
// a state's successors append the next item or swap the last item for the
// next, so every subset appears exactly once and weights never decrease.
OracleResult best_first(const std::vector<Weight>& w,
                        const std::function<bool(const std::vector<int>&)>&
                            feasible) {
  int m = (int)w.size();
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return w[a] < w[b]; });
  struct Node {
    Weight weight;
    std::vector<int> picks; // indices into `order`, ascending
  };
  auto cmp = [](const Node& a, const Node& b) { return a.weight > b.weight; };
  std::priority_queue<Node, std::vector<Node>, decltype(cmp)> heap(cmp);

  OracleResult res;
  auto to_items = [&](const std::vector<int>& picks) {
    ArcSet s;
    s.reserve(picks.size());
    for (int p : picks) s.push_back(order[p]);
    std::sort(s.begin(), s.end());
    return s;
  };

  bool found = false;
  Weight best = 0;
  if (feasible({})) {
    found = true;
    best = 0;
    res.optima.push_back({});
  }
  if (m > 0) heap.push({w[order[0]], {0}});
  while (!heap.empty()) {
    Node cur = heap.top();
    heap.pop();
    if (found && cur.weight > best) break;
    ArcSet items = to_items(cur.picks);
    if (feasible(items)) {
      if (!found) {
        found = true;
        best = cur.weight;
      }
      res.optima.push_back(items);
    }
    int last = cur.picks.back();
    if (last + 1 < m) {
      Node ext = cur;
      ext.weight += w[order[last + 1]];
      ext.picks.push_back(last + 1);
      Node swp = cur;
      swp.weight += w[order[last + 1]] - w[order[last]];
      swp.picks.back() = last + 1;
      if (!found || ext.weight <= best) heap.push(std::move(ext));
      if (!found || swp.weight <= best) heap.push(std::move(swp));
    }
  }
  res.weight = best;
  std::sort(res.optima.begin(), res.optima.end());
  res.optima.erase(std::unique(res.optima.begin(), res.optima.end()),
                   res.optima.end());
  res.arcs = res.optima.empty() ? ArcSet{} : res.optima.front();
  return res;
}

} // namespace

OracleResult brute_force_fasp(const Digraph& g, int max_arcs) {
  if (g.arc_count() > max_arcs)
    throw GuardError("exact search limited to " + std::to_string(max_arcs) +
                     " arcs, got " + std::to_string(g.arc_count()));
  ArcSet live = g.live_arcs();
  std::vector<Weight> w(live.size());
  for (size_t i = 0; i < live.size(); ++i) w[i] = g.weight(live[i]);
  OracleResult res = best_first(w, [&](const std::vector<int>& picks) {
    Digraph h = g;
    for (int p : picks) h.remove_arc(live[p]);
    return is_acyclic(h);
  });
  // Map item indices back to arc ids.
  auto remap = [&](ArcSet& s) {
    for (ArcId& a : s) a = live[a];
  };
  remap(res.arcs);
  for (ArcSet& s : res.optima) remap(s);
  return res;
}

OracleResult brute_force_fvsp(const Digraph& g, const std::vector<Weight>& vw,
                              int max_vertices) {
  if (g.vertex_count() > max_vertices)
    throw GuardError("exact search limited to " +
                     std::to_string(max_vertices) + " vertices, got " +
                     std::to_string(g.vertex_count()));
  int n = g.vertex_count();
  std::vector<Weight> w(n, 1);
  for (int v = 0; v < n && v < (int)vw.size(); ++v) w[v] = vw[v];
  return best_first(w, [&](const std::vector<int>& picks) {
    std::vector<char> dropped(n, 0);
    for (int v : picks) dropped[v] = 1;
    Digraph h = g;
    for (ArcId a = 0; a < g.arc_span(); ++a)
      if (g.alive(a) && (dropped[g.tail(a)] || dropped[g.head(a)]))
        h.remove_arc(a);
    return is_acyclic(h);
  });
}

} // namespace fas
