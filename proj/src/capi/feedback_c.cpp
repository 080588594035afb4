#include "feedback/feedback.h"

#include <algorithm>
#include <cstdio>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "core/errors.hpp"
#include "core/graph.hpp"
#include "core/heuristics.hpp"
#include "core/io.hpp"
#include "core/meta.hpp"
#include "core/minor.hpp"
#include "core/oracle.hpp"
#include "core/reductions.hpp"
#include "core/resolver.hpp"
#include "core/solver.hpp"
#include "core/subgraphs.hpp"

struct FasGraph {
  fas::Instance inst;
};

struct FasReport {
  fas::FeedbackReport rep;
  std::vector<int> elements;  // 1-based arc positions or vertex ids
};

struct FasText {
  std::string text;
};

namespace {

void put_err(char* err, size_t cap, const char* msg) {
  if (err && cap) std::snprintf(err, cap, "%s", msg);
}

// Runs the body and maps thrown library errors onto C codes. Parse entry
// points pass FAS_ERR_PARSE as the runtime_error code; everything else
// treats a stray runtime_error as internal.
template <class F>
int guarded(char* err, size_t cap, int runtime_code, F&& body) {
  try {
    return body();
  } catch (const fas::GuardError& e) {
    put_err(err, cap, e.what());
    return FAS_ERR_GUARD;
  } catch (const fas::StateError& e) {
    put_err(err, cap, e.what());
    return FAS_ERR_STATE;
  } catch (const std::invalid_argument& e) {
    put_err(err, cap, e.what());
    return FAS_ERR_ARG;
  } catch (const std::runtime_error& e) {
    put_err(err, cap, e.what());
    return runtime_code;
  } catch (const std::exception& e) {
    put_err(err, cap, e.what());
    return FAS_ERR_INTERNAL;
  }
}

fas::ArcId id_of_position(const fas::Instance& inst, int pos) {
  const fas::Digraph& g = inst.graph;
  if (inst.arc_pos.empty()) {
    if (pos >= 1 && pos <= g.arc_span() && g.alive(pos - 1)) return pos - 1;
  } else {
    for (fas::ArcId a = 0; a < g.arc_span(); ++a)
      if (g.alive(a) && inst.arc_pos[a] == pos) return a;
  }
  throw std::invalid_argument("no arc at position " + std::to_string(pos));
}

void require_arc_problem(const FasGraph* g, const char* what) {
  if (g->inst.is_fvs)
    throw std::invalid_argument(std::string(what) +
                                " runs on arc problems; translate the "
                                "instance with reduce first");
}

fas::FeedbackReport run_method(const fas::Digraph& g, const std::string& method,
                               int m_budget) {
  using namespace fas;
  if (method == "cut") return cut(g, m_budget);
  if (method == "cut-resolve") return cut_resolve(g, m_budget);
  if (method == "resolve") return solve_resolvable(g);
  if (method == "greedy" || method == "greedy-xi")
    return greedy_cut(g, Effective::xi);
  if (method == "greedy-eta") return greedy_cut(g, Effective::eta);
  if (method == "greedy-resolve") return greedy_cut_resolve(g, Effective::xi);
  if (method == "greedy-resolve-eta")
    return greedy_cut_resolve(g, Effective::eta);
  if (method == "hybrid") return hybrid_strategy(g);
  if (method == "auto") {
    if (resolve(g).resolvable) return solve_resolvable(g);
    try {
      return cut_resolve(g, m_budget);
    } catch (const GuardError&) {
      return greedy_cut_resolve(g);
    }
  }
  throw std::invalid_argument("unknown method: " + method);
}

FasReport* make_report(const FasGraph* g, fas::FeedbackReport rep,
                       std::vector<int> vertex_elements = {}) {
  auto r = std::make_unique<FasReport>();
  if (g->inst.is_fvs) {
    r->elements = std::move(vertex_elements);
  } else {
    r->elements.reserve(rep.solution.size());
    for (fas::ArcId a : rep.solution)
      r->elements.push_back(fas::arc_position(g->inst, a));
  }
  r->rep = std::move(rep);
  return r.release();
}

FasText* make_text(std::string s) {
  auto t = std::make_unique<FasText>();
  t->text = std::move(s);
  return t.release();
}

}  // namespace

extern "C" {

int fas_graph_parse(const char* text, int strip_loops, FasGraph** out,
                    char* err, size_t errcap) {
  if (!text || !out) {
    put_err(err, errcap, "null argument");
    return FAS_ERR_ARG;
  }
  return guarded(err, errcap, FAS_ERR_PARSE, [&] {
    auto g = std::make_unique<FasGraph>();
    g->inst = fas::parse_instance_text(text, strip_loops != 0);
    *out = g.release();
    return FAS_OK;
  });
}

int fas_graph_from_file(const char* path, int strip_loops, FasGraph** out,
                        char* err, size_t errcap) {
  if (!path || !out) {
    put_err(err, errcap, "null argument");
    return FAS_ERR_ARG;
  }
  return guarded(err, errcap, FAS_ERR_PARSE, [&] {
    auto g = std::make_unique<FasGraph>();
    g->inst = fas::parse_instance_file(path, strip_loops != 0);
    *out = g.release();
    return FAS_OK;
  });
}

void fas_graph_free(FasGraph* g) { delete g; }

int fas_graph_vertex_count(const FasGraph* g) {
  return g ? g->inst.graph.vertex_count() : 0;
}

int fas_graph_arc_count(const FasGraph* g) {
  return g ? g->inst.graph.arc_count() : 0;
}

int fas_graph_is_vertex_problem(const FasGraph* g) {
  return g && g->inst.is_fvs ? 1 : 0;
}

int fas_graph_arc(const FasGraph* g, int index, int* tail, int* head,
                  long long* weight) {
  if (!g) return FAS_ERR_ARG;
  const std::vector<fas::ArcId> live = g->inst.graph.live_arcs();
  if (index < 0 || index >= (int)live.size()) return FAS_ERR_ARG;
  const fas::ArcId a = live[index];
  if (tail) *tail = g->inst.graph.tail(a) + 1;
  if (head) *head = g->inst.graph.head(a) + 1;
  if (weight) *weight = g->inst.graph.weight(a);
  return FAS_OK;
}

long long fas_graph_vertex_weight(const FasGraph* g, int v) {
  if (!g || v < 1 || v > g->inst.graph.vertex_count()) return -1;
  const auto& vw = g->inst.vertex_weight;
  return (int)vw.size() >= v ? vw[v - 1] : 1;
}

int fas_graph_loop_count(const FasGraph* g) {
  return g ? (int)g->inst.loops.size() : 0;
}

int fas_graph_loop(const FasGraph* g, int index, int* pos, int* vertex,
                   long long* weight) {
  if (!g || index < 0 || index >= (int)g->inst.loops.size()) return FAS_ERR_ARG;
  const fas::Loop& l = g->inst.loops[index];
  if (pos) *pos = l.pos;
  if (vertex) *vertex = l.vertex;
  if (weight) *weight = l.w;
  return FAS_OK;
}

int fas_solve(const FasGraph* g, const char* method, int m_budget,
              FasReport** out, char* err, size_t errcap) {
  if (!g || !method || !out) {
    put_err(err, errcap, "null argument");
    return FAS_ERR_ARG;
  }
  return guarded(err, errcap, FAS_ERR_INTERNAL, [&] {
    const int budget = m_budget < 0 ? 20 : m_budget;
    if (g->inst.is_fvs) {
      fas::ReductionTrace tr =
          fas::fvsp_to_fasp(g->inst.graph, g->inst.vertex_weight);
      fas::FeedbackReport rep = run_method(tr.transformed, method, budget);
      std::vector<int> vs = fas::pull_back(tr, rep.solution);
      for (int& v : vs) ++v;
      *out = make_report(g, std::move(rep), std::move(vs));
    } else {
      *out = make_report(g, run_method(g->inst.graph, method, budget));
    }
    return FAS_OK;
  });
}

int fas_oracle_solve(const FasGraph* g, FasReport** out, char* err,
                     size_t errcap) {
  if (!g || !out) {
    put_err(err, errcap, "null argument");
    return FAS_ERR_ARG;
  }
  return guarded(err, errcap, FAS_ERR_INTERNAL, [&] {
    fas::FeedbackReport rep;
    rep.method = "oracle";
    rep.certified = true;
    if (g->inst.is_fvs) {
      fas::OracleResult o =
          fas::brute_force_fvsp(g->inst.graph, g->inst.vertex_weight);
      rep.weight = o.weight;
      std::vector<int> vs(o.arcs.begin(), o.arcs.end());
      for (int& v : vs) ++v;
      rep.solution = o.arcs;
      *out = make_report(g, std::move(rep), std::move(vs));
    } else {
      fas::OracleResult o = fas::brute_force_fasp(g->inst.graph);
      rep.solution = o.arcs;
      rep.weight = o.weight;
      *out = make_report(g, std::move(rep));
    }
    return FAS_OK;
  });
}

int fas_oracle_text(const FasGraph* g, int all_optima, FasText** out,
                    char* err, size_t errcap) {
  if (!g || !out) {
    put_err(err, errcap, "null argument");
    return FAS_ERR_ARG;
  }
  return guarded(err, errcap, FAS_ERR_INTERNAL, [&] {
    fas::OracleResult o =
        g->inst.is_fvs
            ? fas::brute_force_fvsp(g->inst.graph, g->inst.vertex_weight)
            : fas::brute_force_fasp(g->inst.graph);
    std::ostringstream os;
    os << "s " << o.weight << "\n";
    const size_t shown = all_optima ? o.optima.size() : std::min<size_t>(1, o.optima.size());
    for (size_t i = 0; i < shown; ++i) {
      os << "e";
      for (int el : o.optima[i])
        os << " " << (g->inst.is_fvs ? el + 1 : fas::arc_position(g->inst, el));
      os << "\n";
    }
    *out = make_text(os.str());
    return FAS_OK;
  });
}

int fas_resolve(const FasGraph* g, int* resolvable, FasReport** out,
                FasText** residual, char* err, size_t errcap) {
  if (!g || !resolvable || !out) {
    put_err(err, errcap, "null argument");
    return FAS_ERR_ARG;
  }
  return guarded(err, errcap, FAS_ERR_INTERNAL, [&] {
    require_arc_problem(g, "resolution");
    fas::ResolveOutcome ro = fas::resolve(g->inst.graph);
    fas::FeedbackReport rep;
    rep.solution = ro.commits;
    rep.weight = ro.weight;
    rep.method = "resolve";
    rep.certified = ro.resolvable;
    std::string res_text;
    if (residual)
      res_text =
          fas::emit_fas(fas::cycle_closure(g->inst.graph.without(ro.commits)));
    *resolvable = ro.resolvable ? 1 : 0;
    *out = make_report(g, std::move(rep));
    if (residual) *residual = make_text(std::move(res_text));
    return FAS_OK;
  });
}

int fas_bounds(const FasGraph* g, long long cycle_budget, long long* mu,
               long long* upsilon, long long* upper, int* complete, char* err,
               size_t errcap) {
  if (!g || !mu || !upsilon || !upper || !complete) {
    put_err(err, errcap, "null argument");
    return FAS_ERR_ARG;
  }
  return guarded(err, errcap, FAS_ERR_INTERNAL, [&] {
    require_arc_problem(g, "bound computation");
    fas::BoundReport b = fas::lower_bounds(
        g->inst.graph, cycle_budget <= 0 ? 1000000 : cycle_budget);
    *mu = b.mu;
    *upsilon = b.upsilon;
    *upper = b.upper;
    *complete = b.complete ? 1 : 0;
    return FAS_OK;
  });
}

int fas_global_m(const FasGraph* g, int* out, char* err, size_t errcap) {
  if (!g || !out) {
    put_err(err, errcap, "null argument");
    return FAS_ERR_ARG;
  }
  return guarded(err, errcap, FAS_ERR_INTERNAL, [&] {
    if (g->inst.is_fvs) {
      fas::ReductionTrace tr =
          fas::fvsp_to_fasp(g->inst.graph, g->inst.vertex_weight);
      *out = fas::global_m(tr.transformed);
    } else {
      *out = fas::global_m(g->inst.graph);
    }
    return FAS_OK;
  });
}

void fas_report_free(FasReport* r) { delete r; }

long long fas_report_weight(const FasReport* r) { return r ? r->rep.weight : -1; }

int fas_report_certified(const FasReport* r) {
  return r && r->rep.certified ? 1 : 0;
}

const char* fas_report_method(const FasReport* r) {
  return r ? r->rep.method.c_str() : "";
}

int fas_report_size(const FasReport* r) {
  return r ? (int)r->elements.size() : 0;
}

int fas_report_element(const FasReport* r, int i) {
  if (!r || i < 0 || i >= (int)r->elements.size()) return -1;
  return r->elements[i];
}

long long fas_report_mu(const FasReport* r) { return r ? r->rep.mu : -1; }

long long fas_report_upsilon(const FasReport* r) {
  return r ? r->rep.upsilon : -1;
}

int fas_report_m_param(const FasReport* r) { return r ? r->rep.m_param : -1; }

long long fas_report_sigma_evals(const FasReport* r) {
  return r ? (long long)r->rep.sigma_evals : 0;
}

double fas_report_wall_ms(const FasReport* r) { return r ? r->rep.wall_ms : 0; }

int fas_analyze(const FasGraph* g, int anchor, const char* kind, FasText** out,
                char* err, size_t errcap) {
  if (!g || !kind || !out) {
    put_err(err, errcap, "null argument");
    return FAS_ERR_ARG;
  }
  return guarded(err, errcap, FAS_ERR_INTERNAL, [&] {
    require_arc_problem(g, "subgraph analysis");
    const std::string k = kind;
    if (k != "el" && k != "si")
      throw std::invalid_argument("kind must be el or si");
    const fas::ArcId a = id_of_position(g->inst, anchor);
    fas::Digraph sub = k == "el" ? fas::elementary_subgraph(g->inst.graph, a)
                                 : fas::simple_subgraph(g->inst.graph, a);
    std::ostringstream os;
    os << "c anchor " << anchor << "\nc members";
    for (fas::ArcId m : sub.live_arcs())
      os << " " << fas::arc_position(g->inst, m);
    os << "\n"
       << fas::emit_fas(sub)
       << fas::to_dot(sub, {a}, k == "el" ? "elementary" : "simple");
    *out = make_text(os.str());
    return FAS_OK;
  });
}

int fas_analyze_meta(const FasGraph* g, const int* seed, int seed_len,
                     FasText** out, char* err, size_t errcap) {
  if (!g || !seed || seed_len <= 0 || !out) {
    put_err(err, errcap, "null argument");
    return FAS_ERR_ARG;
  }
  return guarded(err, errcap, FAS_ERR_INTERNAL, [&] {
    require_arc_problem(g, "meta analysis");
    fas::ArcSet cycle;
    for (int i = 0; i < seed_len; ++i)
      cycle.push_back(id_of_position(g->inst, seed[i]));
    std::sort(cycle.begin(), cycle.end());
    cycle.erase(std::unique(cycle.begin(), cycle.end()), cycle.end());
    fas::MetaGraph m = fas::meta_graph(g->inst.graph, cycle);
    std::ostringstream os;
    os << "graph meta {\n";
    for (fas::ArcId n : m.nodes)
      os << "  \"" << fas::arc_position(g->inst, n) << "\" [layer="
         << m.layer.at(n) << "];\n";
    for (const auto& [lo, hi] : m.edges)
      os << "  \"" << fas::arc_position(g->inst, lo) << "\" -- \""
         << fas::arc_position(g->inst, hi) << "\";\n";
    os << "}\n";
    os << "c dim " << fas::meta_dim(m) << "\n";
    for (fas::ArcId f : cycle)
      os << "m " << fas::arc_position(g->inst, f) << " "
         << fas::meta_cycle_dim(m, f) << "\n";
    *out = make_text(os.str());
    return FAS_OK;
  });
}

int fas_reduce_minor(const FasGraph* g, FasText** out, char* err,
                     size_t errcap) {
  if (!g || !out) {
    put_err(err, errcap, "null argument");
    return FAS_ERR_ARG;
  }
  return guarded(err, errcap, FAS_ERR_INTERNAL, [&] {
    require_arc_problem(g, "minor reduction");
    fas::MinorReduction r = fas::essential_minor(g->inst.graph);
    std::vector<int> pos;
    std::ostringstream os;
    os << fas::emit_fas(r.minor, &pos);
    for (fas::ArcId a : r.minor.live_arcs()) {
      os << "k " << pos[a];
      for (fas::ArcId src : r.kappa[a])
        os << " " << fas::arc_position(g->inst, src);
      os << "\n";
    }
    *out = make_text(os.str());
    return FAS_OK;
  });
}

int fas_reduce_to(const FasGraph* g, const char* target, int literal_weights,
                  FasText** out, char* err, size_t errcap) {
  if (!g || !target || !out) {
    put_err(err, errcap, "null argument");
    return FAS_ERR_ARG;
  }
  return guarded(err, errcap, FAS_ERR_INTERNAL, [&] {
    const std::string t = target;
    std::ostringstream os;
    if (t == "fvs") {
      require_arc_problem(g, "the line-graph translation");
      fas::ReductionTrace tr = fas::fasp_to_fvsp(g->inst.graph);
      os << fas::emit_fvs(tr.transformed, tr.vertex_weight);
      for (int i = 0; i < (int)tr.pullback.size(); ++i)
        os << "k " << i + 1 << " "
           << fas::arc_position(g->inst, tr.pullback[i]) << "\n";
    } else if (t == "fas") {
      if (!g->inst.is_fvs)
        throw std::invalid_argument(
            "the gadget expansion runs on vertex problems");
      fas::ReductionTrace tr = fas::fvsp_to_fasp(
          g->inst.graph, g->inst.vertex_weight, literal_weights != 0);
      std::vector<int> pos;
      os << fas::emit_fas(tr.transformed, &pos);
      for (fas::ArcId a : tr.transformed.live_arcs())
        os << "k " << pos[a] << " " << tr.pullback[a] + 1 << "\n";
    } else {
      throw std::invalid_argument("target must be fas or fvs");
    }
    *out = make_text(os.str());
    return FAS_OK;
  });
}

const char* fas_text_get(const FasText* t) { return t ? t->text.c_str() : ""; }

void fas_text_free(FasText* t) { delete t; }

const char* fas_version(void) { return "1.0.0"; }

}  // extern "C"
