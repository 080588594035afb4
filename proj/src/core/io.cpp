#include "core/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fas {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw std::runtime_error("line " + std::to_string(line) + ": " + msg);
}

long long want_int(const std::string& tok, int line, const char* what,
                   long long lo, long long hi) {
  size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (...) {
    fail(line, std::string("expected ") + what + ", got '" + tok + "'");
  }
  if (used != tok.size())
    fail(line, std::string("expected ") + what + ", got '" + tok + "'");
  if (v < lo || v > hi)
    fail(line, std::string(what) + " out of range: " + tok);
  return v;
}

} // namespace

Instance parse_instance(std::istream& in, bool strip_loops) {
  Instance inst;
  bool have_p = false;
  long long want_n = 0, want_m = 0;
  int seen_arcs = 0;
  std::vector<char> vw_set;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string kind;
    if (!(ss >> kind)) continue; // blank line
    if (kind == "c") continue;
    std::vector<std::string> toks;
    for (std::string t; ss >> t;) toks.push_back(t);
    if (kind == "p") {
      if (have_p) fail(lineno, "duplicate problem line");
      if (toks.size() != 3) fail(lineno, "expected 'p fas|fvs <n> <m>'");
      if (toks[0] == "fas")
        inst.is_fvs = false;
      else if (toks[0] == "fvs")
        inst.is_fvs = true;
      else
        fail(lineno, "unknown problem type '" + toks[0] + "'");
      want_n = want_int(toks[1], lineno, "vertex count", 0, 1000000);
      want_m = want_int(toks[2], lineno, "arc count", 0, 10000000);
      inst.graph = Digraph((int)want_n);
      if (inst.is_fvs) {
        inst.vertex_weight.assign((size_t)want_n, 1);
        vw_set.assign((size_t)want_n, 0);
      }
      have_p = true;
    } else if (kind == "a") {
      if (!have_p) fail(lineno, "arc before problem line");
      if (toks.size() != 2 && toks.size() != 3)
        fail(lineno, "expected 'a <tail> <head> [weight]'");
      int t = (int)want_int(toks[0], lineno, "tail", 1, want_n);
      int h = (int)want_int(toks[1], lineno, "head", 1, want_n);
      Weight w = toks.size() == 3
                     ? want_int(toks[2], lineno, "weight", 1, (long long)1e15)
                     : 1;
      ++seen_arcs;
      if (seen_arcs > want_m) fail(lineno, "more arcs than declared");
      if (t == h) {
        if (!strip_loops) fail(lineno, "loop arc (tail = head)");
        inst.loops.push_back({seen_arcs, t, w});
      } else {
        inst.graph.add_arc(t - 1, h - 1, w);
        inst.arc_pos.push_back(seen_arcs);
      }
    } else if (kind == "v") {
      if (!have_p) fail(lineno, "vertex weight before problem line");
      if (!inst.is_fvs) fail(lineno, "vertex weights only apply to fvs");
      if (toks.size() != 2) fail(lineno, "expected 'v <id> <weight>'");
      int v = (int)want_int(toks[0], lineno, "vertex id", 1, want_n);
      Weight w = want_int(toks[1], lineno, "weight", 1, (long long)1e15);
      if (vw_set[v - 1]) fail(lineno, "duplicate vertex weight");
      vw_set[v - 1] = 1;
      inst.vertex_weight[v - 1] = w;
    } else {
      fail(lineno, "unknown directive '" + kind + "'");
    }
  }
  if (!have_p) fail(lineno ? lineno : 1, "missing problem line");
  if (seen_arcs != want_m)
    fail(lineno, "declared " + std::to_string(want_m) + " arcs, found " +
                     std::to_string(seen_arcs));
  return inst;
}

Instance parse_instance_text(const std::string& text, bool strip_loops) {
  std::istringstream ss(text);
  return parse_instance(ss, strip_loops);
}

Instance parse_instance_file(const std::string& path, bool strip_loops) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return parse_instance(f, strip_loops);
}

int arc_position(const Instance& inst, ArcId a) {
  if (a >= 0 && a < (int)inst.arc_pos.size()) return inst.arc_pos[a];
  return a + 1;
}

std::string emit_fas(const Digraph& g, std::vector<int>* out_pos) {
  std::ostringstream out;
  out << "p fas " << g.vertex_count() << ' ' << g.arc_count() << '\n';
  if (out_pos) out_pos->assign(g.arc_span(), 0);
  int pos = 0;
  for (ArcId a : g.live_arcs()) {
    out << "a " << g.tail(a) + 1 << ' ' << g.head(a) + 1 << ' ' << g.weight(a)
        << '\n';
    if (out_pos) (*out_pos)[a] = ++pos;
    else ++pos;
  }
  return out.str();
}

std::string emit_fvs(const Digraph& g, const std::vector<Weight>& vertex_weight,
                     std::vector<int>* out_pos) {
  std::ostringstream out;
  out << "p fvs " << g.vertex_count() << ' ' << g.arc_count() << '\n';
  for (int v = 0; v < g.vertex_count(); ++v)
    out << "v " << v + 1 << ' '
        << (v < (int)vertex_weight.size() ? vertex_weight[v] : 1) << '\n';
  if (out_pos) out_pos->assign(g.arc_span(), 0);
  int pos = 0;
  for (ArcId a : g.live_arcs()) {
    out << "a " << g.tail(a) + 1 << ' ' << g.head(a) + 1 << '\n';
    if (out_pos) (*out_pos)[a] = ++pos;
    else ++pos;
  }
  return out.str();
}

std::string to_dot(const Digraph& g, const ArcSet& highlight,
                   const std::string& name) {
  std::ostringstream out;
  out << "digraph " << (name.empty() ? "g" : name) << " {\n";
  std::vector<char> touched(g.vertex_count(), 0);
  for (ArcId a : g.live_arcs())
    touched[g.tail(a)] = touched[g.head(a)] = 1;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (touched[v]) out << "  v" << v + 1 << " [label=\"" << v + 1 << "\"];\n";
  for (ArcId a : g.live_arcs()) {
    out << "  v" << g.tail(a) + 1 << " -> v" << g.head(a) + 1 << " [label=\""
        << a + 1 << ':' << g.weight(a) << '"';
    if (set_contains(highlight, a)) out << ", color=red, penwidth=2.0";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

} // namespace fas
