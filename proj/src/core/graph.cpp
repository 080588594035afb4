#include "core/graph.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace fas {

ArcSet set_union(const ArcSet& a, const ArcSet& b) {
  ArcSet r;
  r.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

ArcSet set_intersect(const ArcSet& a, const ArcSet& b) {
  ArcSet r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(r));
  return r;
}

ArcSet set_minus(const ArcSet& a, const ArcSet& b) {
  ArcSet r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(r));
  return r;
}

bool set_contains(const ArcSet& a, ArcId x) {
  return std::binary_search(a.begin(), a.end(), x);
}

ArcId Digraph::add_arc(int tail, int head, Weight w) {
  if (tail == head) throw std::invalid_argument("loop arcs are not allowed");
  if (tail < 0 || head < 0 || tail >= n_ || head >= n_)
    throw std::out_of_range("arc endpoint out of range");
  if (w <= 0) throw std::invalid_argument("arc weight must be positive");
  tail_.push_back(tail);
  head_.push_back(head);
  w_.push_back(w);
  alive_.push_back(1);
  ++live_;
  return (ArcId)tail_.size() - 1;
}

void Digraph::remove_arc(ArcId a) {
  if (alive_[a]) {
    alive_[a] = 0;
    --live_;
  }
}

void Digraph::remove_arcs(const ArcSet& s) {
  for (ArcId a : s) remove_arc(a);
}

void Digraph::keep_only(const ArcSet& s) {
  for (ArcId a = 0; a < arc_span(); ++a)
    if (alive_[a] && !set_contains(s, a)) remove_arc(a);
}

ArcSet Digraph::live_arcs() const {
  ArcSet r;
  r.reserve(live_);
  for (ArcId a = 0; a < arc_span(); ++a)
    if (alive_[a]) r.push_back(a);
  return r;
}

Digraph Digraph::restricted(const ArcSet& keep) const {
  Digraph g = *this;
  g.keep_only(keep);
  return g;
}

Digraph Digraph::without(const ArcSet& drop) const {
  Digraph g = *this;
  g.remove_arcs(drop);
  return g;
}

ArcSet Digraph::parallel_class(ArcId e) const {
  ArcSet r;
  for (ArcId a = 0; a < arc_span(); ++a)
    if (alive_[a] && tail_[a] == tail_[e] && head_[a] == head_[e])
      r.push_back(a);
  return r;
}

ArcSet Digraph::antiparallel_class(ArcId e) const {
  ArcSet r;
  for (ArcId a = 0; a < arc_span(); ++a)
    if (alive_[a] && tail_[a] == head_[e] && head_[a] == tail_[e])
      r.push_back(a);
  return r;
}

std::vector<std::vector<ArcId>> Digraph::out_adjacency() const {
  std::vector<std::vector<ArcId>> adj(n_);
  for (ArcId a = 0; a < arc_span(); ++a)
    if (alive_[a]) adj[tail_[a]].push_back(a);
  return adj;
}

std::vector<std::vector<ArcId>> Digraph::in_adjacency() const {
  std::vector<std::vector<ArcId>> adj(n_);
  for (ArcId a = 0; a < arc_span(); ++a)
    if (alive_[a]) adj[head_[a]].push_back(a);
  return adj;
}

Weight Digraph::total_weight() const {
  Weight s = 0;
  for (ArcId a = 0; a < arc_span(); ++a)
    if (alive_[a]) s += w_[a];
  return s;
}

std::vector<std::uint64_t> Digraph::live_key() const {
  std::vector<std::uint64_t> key((arc_span() + 63) / 64 + 1, 0);
  key[0] = (std::uint64_t)n_;
  for (ArcId a = 0; a < arc_span(); ++a)
    if (alive_[a]) key[1 + a / 64] |= std::uint64_t(1) << (a % 64);
  return key;
}

bool is_acyclic(const Digraph& g) {
  int n = g.vertex_count();
  std::vector<int> indeg(n, 0);
  auto out = g.out_adjacency();
  for (ArcId a = 0; a < g.arc_span(); ++a)
    if (g.alive(a)) ++indeg[g.head(a)];
  std::vector<int> stack;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (ArcId a : out[v])
      if (--indeg[g.head(a)] == 0) stack.push_back(g.head(a));
  }
  return seen == n;
}

std::vector<int> strong_components(const Digraph& g) {
  // Iterative Tarjan over live arcs.
  int n = g.vertex_count();
  auto out = g.out_adjacency();
  std::vector<int> comp(n, -1), low(n, 0), num(n, -1), stk;
  std::vector<char> on_stack(n, 0);
  int timer = 0, ncomp = 0;
  struct Frame {
    int v;
    size_t next;
  };
  std::vector<Frame> frames;
  for (int root = 0; root < n; ++root) {
    if (num[root] != -1) continue;
    frames.push_back({root, 0});
    num[root] = low[root] = timer++;
    stk.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next < out[f.v].size()) {
        int w = g.head(out[f.v][f.next++]);
        if (num[w] == -1) {
          num[w] = low[w] = timer++;
          stk.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], num[w]);
        }
      } else {
        int v = f.v;
        frames.pop_back();
        if (!frames.empty())
          low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        if (low[v] == num[v]) {
          for (;;) {
            int w = stk.back();
            stk.pop_back();
            on_stack[w] = 0;
            comp[w] = ncomp;
            if (w == v) break;
          }
          ++ncomp;
        }
      }
    }
  }
  return comp;
}

ArcSet cycle_arcs(const Digraph& g) {
  auto comp = strong_components(g);
  ArcSet r;
  for (ArcId a = 0; a < g.arc_span(); ++a)
    if (g.alive(a) && comp[g.tail(a)] == comp[g.head(a)]) r.push_back(a);
  return r;
}

Digraph cycle_closure(const Digraph& g) { return g.restricted(cycle_arcs(g)); }

int weak_component_count(const Digraph& g) {
  int n = g.vertex_count();
  std::vector<int> parent(n);
  for (int v = 0; v < n; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int comps = n;
  for (ArcId a = 0; a < g.arc_span(); ++a) {
    if (!g.alive(a)) continue;
    int x = find(g.tail(a)), y = find(g.head(a));
    if (x != y) {
      parent[x] = y;
      --comps;
    }
  }
  return comps;
}

int cycle_space_dim(const Digraph& g) {
  return g.arc_count() - g.vertex_count() + weak_component_count(g);
}

std::vector<char> reachable_from(const Digraph& g, int from) {
  return reachable_from(g, from, {});
}

std::vector<char> reachable_from(const Digraph& g, int from,
                                 const std::vector<char>& banned) {
  std::vector<char> seen(g.vertex_count(), 0);
  auto out = g.out_adjacency();
  std::vector<int> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (ArcId a : out[v]) {
      if (!banned.empty() && banned[a]) continue;
      int w = g.head(a);
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

std::vector<char> co_reachable(const Digraph& g, int to) {
  std::vector<char> seen(g.vertex_count(), 0);
  auto in = g.in_adjacency();
  std::vector<int> stack{to};
  seen[to] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (ArcId a : in[v]) {
      int w = g.tail(a);
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

Digraph line_graph(const Digraph& g, std::vector<ArcId>& vertex_arc) {
  vertex_arc = g.live_arcs();
  std::vector<int> vert_of(g.arc_span(), -1);
  for (int i = 0; i < (int)vertex_arc.size(); ++i) vert_of[vertex_arc[i]] = i;
  Digraph l((int)vertex_arc.size());
  auto out = g.out_adjacency();
  for (ArcId f : vertex_arc)
    for (ArcId h : out[g.head(f)]) l.add_arc(vert_of[f], vert_of[h], 1);
  return l;
}

} // namespace fas
