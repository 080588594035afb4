#include "core/minor.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace fas {

MinorReduction essential_minor(const Digraph& g) {
  Digraph w = g; // merged arcs are appended to the same table
  std::vector<ArcSet> kap(w.arc_span());
  for (ArcId a : w.live_arcs()) kap[a] = {a};

  for (bool changed = true; changed;) {
    changed = false;

    // Contraction sweep: vertices in ascending order, degrees recomputed
    // per candidate since earlier contractions shift them.
    for (int v = 0; v < w.vertex_count(); ++v) {
      ArcId in = -1, out = -1;
      int indeg = 0, outdeg = 0;
      for (ArcId a = 0; a < w.arc_span() && indeg < 2 && outdeg < 2; ++a) {
        if (!w.alive(a)) continue;
        if (w.head(a) == v) {
          ++indeg;
          in = a;
        }
        if (w.tail(a) == v) {
          ++outdeg;
          out = a;
        }
      }
      if (indeg != 1 || outdeg != 1) continue;
      if (w.tail(in) == w.head(out)) continue; // would close into a loop
      Weight wi = w.weight(in), wo = w.weight(out);
      ArcId cheaper = (wi < wo || (wi == wo && in < out)) ? in : out;
      w.add_arc(w.tail(in), w.head(out), std::min(wi, wo));
      kap.push_back(kap[cheaper]);
      w.remove_arc(in);
      w.remove_arc(out);
      changed = true;
    }

    // Parallel merge sweep, classes keyed by endpoint pair in first-seen
    // order of their lowest arc id.
    std::map<std::pair<int, int>, ArcSet> classes;
    for (ArcId a : w.live_arcs())
      classes[{w.tail(a), w.head(a)}].push_back(a);
    for (const auto& [ends, cls] : classes) {
      if (cls.size() < 2) continue;
      Weight sum = 0;
      ArcSet sources;
      for (ArcId a : cls) {
        sum += w.weight(a);
        sources = set_union(sources, kap[a]);
      }
      w.add_arc(ends.first, ends.second, sum);
      kap.push_back(std::move(sources));
      w.remove_arcs(cls);
      changed = true;
    }
  }

  MinorReduction res;
  res.minor = Digraph(w.vertex_count());
  for (ArcId a : w.live_arcs()) {
    res.minor.add_arc(w.tail(a), w.head(a), w.weight(a));
    std::sort(kap[a].begin(), kap[a].end());
    res.kappa.push_back(kap[a]);
  }
  return res;
}

ArcSet lift(const MinorReduction& r, const ArcSet& minor_arcs) {
  ArcSet out;
  for (ArcId a : minor_arcs) out = set_union(out, r.kappa[a]);
  return out;
}

} // namespace fas
