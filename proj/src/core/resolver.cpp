#include "core/resolver.hpp"

#include <algorithm>

#include "core/mincut.hpp"
#include "core/minor.hpp"
#include "core/subgraphs.hpp"

namespace fas {

ResolveOutcome resolve(const Digraph& g) {
  ResolveOutcome out;
  Digraph work = g;
  for (;;) {
    Digraph cl = cycle_closure(work);
    if (cl.arc_count() == 0) {
      out.resolvable = true;
      break;
    }
    MinorReduction red = essential_minor(cl);
    ArcSet stage;                        // committed minor arcs
    std::vector<ArcSet> covered_worlds;  // one representative per cluster
    for (ArcId e : red.minor.live_arcs()) {
      ArcSet iso = isolated_arcs(red.minor, e);
      if (iso.empty()) continue;
      LocalCut lc = local_fas(red.minor.restricted(iso), e);
      if (lc.value != red.minor.weight(e)) continue;
      ArcSet world = elementary_arcs(red.minor, e);
      if (std::find(covered_worlds.begin(), covered_worlds.end(), world) !=
          covered_worlds.end())
        continue;
      covered_worlds.push_back(std::move(world));
      stage.push_back(e);
    }
    if (stage.empty()) break; // cycles remain but nothing is isolated
    ArcSet lifted = lift(red, stage);
    for (ArcId a : lifted) out.weight += work.weight(a);
    out.commits = set_union(out.commits, lifted);
    work.remove_arcs(lifted);
    ++out.stages;
  }
  return out;
}

} // namespace fas
