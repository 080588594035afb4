#pragma once
#include <iosfwd>
#include <string>
#include <vector>

#include "core/graph.hpp"

namespace fas {

// Instance text format, one directive per line:
//   c <comment>
//   p fas <n> <m>        problem line, exactly one, first directive
//   p fvs <n> <m>
//   a <tail> <head> [w]  arc, 1-indexed endpoints, default weight 1
//   v <id> <w>           vertex weight (fvs instances only, default 1)
// The i-th `a` line is arc position i (1-based); solutions are reported
// in these positions.

struct Loop {
  int pos;    // 1-based input position
  int vertex; // 1-based
  Weight w;
};

struct Instance {
  bool is_fvs = false;
  Digraph graph;
  std::vector<Weight> vertex_weight; // indexed by vertex, fvs only
  std::vector<int> arc_pos;          // arc id -> 1-based input position
  std::vector<Loop> loops;           // present only when parsed with strip_loops
};

// Throws std::runtime_error("line N: ...") on malformed input. Loop arcs
// (tail = head) are an error unless strip_loops is set, in which case they
// are recorded in `loops` and left out of the graph.
Instance parse_instance(std::istream& in, bool strip_loops = false);
Instance parse_instance_text(const std::string& text, bool strip_loops = false);
Instance parse_instance_file(const std::string& path, bool strip_loops = false);

// 1-based input position of arc id a (identity when inst.arc_pos is empty).
int arc_position(const Instance& inst, ArcId a);

// Serialize live arcs in ascending arc id order; positions restart at 1.
// out_pos, when given, receives each live arc's new 1-based position,
// indexed by arc id.
std::string emit_fas(const Digraph& g, std::vector<int>* out_pos = nullptr);
std::string emit_fvs(const Digraph& g, const std::vector<Weight>& vertex_weight,
                     std::vector<int>* out_pos = nullptr);

// Graphviz rendering; arcs labeled "pos:weight", highlighted arcs bold red.
std::string to_dot(const Digraph& g, const ArcSet& highlight,
                   const std::string& name);

} // namespace fas
