#ifndef FEEDBACK_H
#define FEEDBACK_H

/* C interface to the feedback arc / vertex set solver.
 *
 * All functions returning int yield an error code: FAS_OK on success,
 * otherwise one of the FAS_ERR_* values with a diagnostic copied into the
 * caller's err buffer (when given). Out-parameters are written only on
 * FAS_OK. Objects are created by the library and released with their
 * matching *_free function; passing NULL to a free is a no-op.
 *
 * Instance text, one directive per line ('c' lines are comments):
 *   p fas <n> <m>        arc-weighted problem over n vertices, m arcs
 *   p fvs <n> <m>        vertex-weighted problem
 *   a <tail> <head> [w]  arc, 1-based endpoints, weight defaults to 1
 *   v <id> <w>           vertex weight (fvs instances)
 * The i-th 'a' line is element position i; solutions on arc problems are
 * reported in these positions, solutions on vertex problems as 1-based
 * vertex ids.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
  FAS_OK = 0,
  FAS_ERR_PARSE = 1,    /* malformed instance text */
  FAS_ERR_GUARD = 2,    /* a size or budget guard refused the input */
  FAS_ERR_ARG = 3,      /* invalid argument or unsupported combination */
  FAS_ERR_STATE = 4,    /* precondition on the input graph does not hold */
  FAS_ERR_INTERNAL = 5  /* unexpected failure */
};

typedef struct FasGraph FasGraph;   /* parsed instance */
typedef struct FasReport FasReport; /* solver result */
typedef struct FasText FasText;     /* rendered text output */

/* ------------------------------------------------------------ instances */

/* Parse instance text or a file. strip_loops nonzero removes self-loop
 * arcs and records them (a loop is trivially in every solution); with it
 * zero, loops are a parse error. */
int fas_graph_parse(const char* text, int strip_loops, FasGraph** out,
                    char* err, size_t errcap);
int fas_graph_from_file(const char* path, int strip_loops, FasGraph** out,
                        char* err, size_t errcap);
void fas_graph_free(FasGraph* g);

int fas_graph_vertex_count(const FasGraph* g);
int fas_graph_arc_count(const FasGraph* g);
/* 1 when the instance is a vertex problem (p fvs), else 0. */
int fas_graph_is_vertex_problem(const FasGraph* g);
/* Arc by 0-based index in input order: 1-based endpoints and the weight.
 * Returns FAS_ERR_ARG when the index is out of range. */
int fas_graph_arc(const FasGraph* g, int index, int* tail, int* head,
                  long long* weight);
/* Weight of 1-based vertex v (1 unless the instance set it). */
long long fas_graph_vertex_weight(const FasGraph* g, int v);
/* Self-loops stripped at parse: count and per-loop details (input line
 * position, 1-based vertex, weight). */
int fas_graph_loop_count(const FasGraph* g);
int fas_graph_loop(const FasGraph* g, int index, int* pos, int* vertex,
                   long long* weight);

/* --------------------------------------------------------------- solving */

/* Solve the instance. Methods:
 *   "cut"                exact pairwise-score deletion
 *   "cut-resolve"        exact; commits isolated cycle clusters first
 *   "resolve"            resolution only; FAS_ERR_STATE when the instance
 *                        is not resolvable
 *   "greedy"             greedy by cycles per unit weight, bounds attached
 *   "greedy-eta"         greedy by subgraph arcs per unit weight
 *   "greedy-resolve"     greedy with cluster resolution between deletions
 *   "greedy-resolve-eta" the same under the eta effective weight
 *   "hybrid"             meta-graph ban strategy around exact subproblems
 *   "auto"               resolve if resolvable, else cut-resolve when the
 *                        meta parameter fits m_budget, else greedy-resolve
 * m_budget guards the exact methods: when the instance's meta parameter
 * exceeds it, "cut" and "cut-resolve" fail with FAS_ERR_GUARD. Pass a
 * negative m_budget for the default (20). Vertex problems are translated
 * to arc problems, solved, and pulled back automatically. */
int fas_solve(const FasGraph* g, const char* method, int m_budget,
              FasReport** out, char* err, size_t errcap);

/* Exhaustive optimum. Fails with FAS_ERR_GUARD above 20 arcs (vertex
 * problems: 16 vertices). */
int fas_oracle_solve(const FasGraph* g, FasReport** out, char* err,
                     size_t errcap);
/* Oracle as text: "s <weight>" then one "e <element...>" line per optimal
 * solution (only the first unless all_optima). */
int fas_oracle_text(const FasGraph* g, int all_optima, FasText** out,
                    char* err, size_t errcap);

/* Resolution on an arc problem: *resolvable tells whether commitment alone
 * solved it; the report carries the committed arcs (an optimal solution
 * exactly when resolvable). residual, when non-NULL, receives the
 * unresolved remainder with its weights as instance text. */
int fas_resolve(const FasGraph* g, int* resolvable, FasReport** out,
                FasText** residual, char* err, size_t errcap);

/* Certified bounds of an arc problem: mu (cycle-count bound), upsilon
 * (covering bound), and a worst-case upper bound. complete reports whether
 * the cycle enumeration finished within budget (mu is -1 otherwise); pass
 * a nonpositive budget for the default (1e6). */
int fas_bounds(const FasGraph* g, long long cycle_budget, long long* mu,
               long long* upsilon, long long* upper, int* complete,
               char* err, size_t errcap);

/* Meta parameter m of the instance (its arc translation for vertex
 * problems): 0 exactly when every meta graph in the deletion sequence is
 * a forest. */
int fas_global_m(const FasGraph* g, int* out, char* err, size_t errcap);

/* ------------------------------------------------------------- reports */

void fas_report_free(FasReport* r);
long long fas_report_weight(const FasReport* r);
int fas_report_certified(const FasReport* r);
/* The method that actually ran ("resolve", "cut-resolve", ...). */
const char* fas_report_method(const FasReport* r);
int fas_report_size(const FasReport* r);
/* i-th solution element (0-based i): arc position or vertex id, 1-based.
 * Returns -1 when out of range. */
int fas_report_element(const FasReport* r, int i);
/* Lower bounds when the method computed them, else -1. */
long long fas_report_mu(const FasReport* r);
long long fas_report_upsilon(const FasReport* r);
/* Meta parameter consulted by the run, -1 when none was. */
int fas_report_m_param(const FasReport* r);
long long fas_report_sigma_evals(const FasReport* r);
double fas_report_wall_ms(const FasReport* r);

/* ------------------------------------------------------- analysis text */

/* Anchored cycle subgraph of an arc problem: kind "el" (elementary, the
 * union of all cycles through the anchor) or "si" (simple, arcs of cycles
 * on which the anchor is deletion-equivalent). anchor is a 1-based arc
 * position. Output: a comment naming the member positions, the subgraph
 * as instance text, and a DOT rendering. */
int fas_analyze(const FasGraph* g, int anchor, const char* kind,
                FasText** out, char* err, size_t errcap);

/* Meta graph of an arc problem over a seed cycle (1-based arc positions):
 * DOT rendering plus "m <position> <dim>" cycle-dimension lines, one per
 * seed arc exclusion. */
int fas_analyze_meta(const FasGraph* g, const int* seed, int seed_len,
                     FasText** out, char* err, size_t errcap);

/* Essential minor of an arc problem: the minor as instance text plus
 * sidecar lines "k <minor-position> <source-position...>". */
int fas_reduce_minor(const FasGraph* g, FasText** out, char* err,
                     size_t errcap);

/* Translate between problem flavours: target "fvs" (line graph of an arc
 * problem) or "fas" (gadget expansion of a vertex problem). Nonzero
 * literal_weights gives every gadget arc its vertex's weight instead of
 * the default unambiguous large rim weight. Output: the transformed
 * instance plus sidecar lines "k <element> <source-element>". */
int fas_reduce_to(const FasGraph* g, const char* target, int literal_weights,
                  FasText** out, char* err, size_t errcap);

const char* fas_text_get(const FasText* t);
void fas_text_free(FasText* t);

const char* fas_version(void);

#ifdef __cplusplus
}
#endif

#endif /* FEEDBACK_H */
