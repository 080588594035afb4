#pragma once
#include <cstdint>
#include <vector>

namespace fas {

using ArcId = int;
using Weight = long long;

// Sorted, duplicate-free set of arc ids.
using ArcSet = std::vector<ArcId>;

ArcSet set_union(const ArcSet& a, const ArcSet& b);
ArcSet set_intersect(const ArcSet& a, const ArcSet& b);
ArcSet set_minus(const ArcSet& a, const ArcSet& b);
bool set_contains(const ArcSet& a, ArcId x);

// Weighted multi-digraph without loops. Arc ids are dense and stable:
// removing an arc never renumbers the others, so ids computed by one
// analysis stay valid in every subgraph derived from the same table.
class Digraph {
public:
  Digraph() = default;
  explicit Digraph(int n) : n_(n) {}

  int add_vertex() { return n_++; }
  ArcId add_arc(int tail, int head, Weight w);

  int vertex_count() const { return n_; }
  int arc_count() const { return live_; }            // live arcs only
  int arc_span() const { return (int)tail_.size(); } // table size incl. dead

  bool alive(ArcId a) const { return alive_[a] != 0; }
  int tail(ArcId a) const { return tail_[a]; }
  int head(ArcId a) const { return head_[a]; }
  Weight weight(ArcId a) const { return w_[a]; }
  void set_weight(ArcId a, Weight w) { w_[a] = w; }

  void remove_arc(ArcId a);
  void remove_arcs(const ArcSet& s);
  void keep_only(const ArcSet& s);

  ArcSet live_arcs() const;
  Digraph restricted(const ArcSet& keep) const; // same table, alive = keep∩live
  Digraph without(const ArcSet& drop) const;

  // Parallel class F+(e): live arcs with e's endpoints and direction,
  // e included. Antiparallel class F-(e): live arcs running head->tail.
  ArcSet parallel_class(ArcId e) const;
  ArcSet antiparallel_class(ArcId e) const;

  std::vector<std::vector<ArcId>> out_adjacency() const;
  std::vector<std::vector<ArcId>> in_adjacency() const;

  Weight total_weight() const;

  // Identifies (vertex count, live arc set); weights excluded.
  std::vector<std::uint64_t> live_key() const;

private:
  int n_ = 0;
  int live_ = 0;
  std::vector<int> tail_, head_;
  std::vector<Weight> w_;
  std::vector<char> alive_;
};

bool is_acyclic(const Digraph& g);

// Arcs lying on at least one elementary cycle = arcs whose endpoints share
// a strongly connected component. This set is already closed: every cycle
// of g consists of such arcs, so restricting to them is a fixpoint.
ArcSet cycle_arcs(const Digraph& g);

// Restriction of g to cycle_arcs(g), the maximal cycle-union subgraph.
Digraph cycle_closure(const Digraph& g);

// m - n + c with c the number of weakly connected components; isolated
// vertices cancel between n and c, so all n vertices are counted.
int cycle_space_dim(const Digraph& g);

int weak_component_count(const Digraph& g);
std::vector<int> strong_components(const Digraph& g); // vertex -> scc id

std::vector<char> reachable_from(const Digraph& g, int from);
// Same, ignoring arcs marked banned (indexed by arc id).
std::vector<char> reachable_from(const Digraph& g, int from,
                                 const std::vector<char>& banned);
// Vertices that can reach `to` along live arcs.
std::vector<char> co_reachable(const Digraph& g, int to);

// Line graph: one vertex per live arc of g, in ascending arc id order
// (vertex_arc maps line vertex -> source arc id); an arc f->h whenever
// head(f) = tail(h). Line arcs carry weight 1.
Digraph line_graph(const Digraph& g, std::vector<ArcId>& vertex_arc);

} // namespace fas
