#include "reductions.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace fas {

ReductionTrace fasp_to_fvsp(const Digraph& g) {
  std::vector<ArcId> vertex_arc;
  Digraph l = line_graph(g, vertex_arc);
  std::vector<Weight> w;
  w.reserve(vertex_arc.size());
  for (ArcId e : vertex_arc) w.push_back(g.weight(e));
  return {ReductionKind::fas_to_fvs, std::move(l),
          std::vector<int>(vertex_arc.begin(), vertex_arc.end()), std::move(w)};
}

ReductionTrace fvsp_to_fasp(const Digraph& g, const std::vector<Weight>& gamma,
                            bool literal_weights) {
  const int n = g.vertex_count();
  std::vector<Weight> gv = gamma.empty() ? std::vector<Weight>(n, 1) : gamma;
  if ((int)gv.size() != n)
    throw std::invalid_argument("vertex weight vector does not match the vertex count");
  Weight big = 1;
  for (Weight w : gv) {
    if (w <= 0) throw std::invalid_argument("vertex weights must be positive");
    big += w;
  }

  const std::vector<ArcId> live = g.live_arcs();
  const int m = (int)live.size();
  // Relay x_e sits at the arc's position in live order; the gadget nodes of
  // vertex v are m + 2v (in side) and m + 2v + 1 (out side).
  Digraph star(m + 2 * n);
  std::vector<int> pullback;
  pullback.reserve(n + 2 * m);
  for (int v = 0; v < n; ++v) {
    star.add_arc(m + 2 * v, m + 2 * v + 1, gv[v]);
    pullback.push_back(v);
  }
  for (int i = 0; i < m; ++i) {
    const int u = g.tail(live[i]);
    const int v = g.head(live[i]);
    star.add_arc(m + 2 * u + 1, i, literal_weights ? gv[u] : big);
    pullback.push_back(u);
    star.add_arc(i, m + 2 * v, literal_weights ? gv[v] : big);
    pullback.push_back(v);
  }
  return {ReductionKind::fvs_to_fas, std::move(star), std::move(pullback), {}};
}

std::vector<int> pull_back(const ReductionTrace& t, const std::vector<int>& solution) {
  std::vector<int> out;
  out.reserve(solution.size());
  for (int id : solution) {
    if (id < 0 || id >= (int)t.pullback.size())
      throw std::invalid_argument("solution element is not part of the transformed instance");
    out.push_back(t.pullback[id]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace fas
