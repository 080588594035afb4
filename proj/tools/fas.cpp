#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <feedback/feedback.h>

// Command-line front end over the C interface. Exit codes: 0 success,
// 1 infeasible input (parse failures, unsupported combinations, missing
// preconditions), 2 guard refusal (instance exceeds a size or meta
// budget).

namespace {

struct GraphHandle {
  FasGraph* g = nullptr;
  ~GraphHandle() { fas_graph_free(g); }
};

struct ReportHandle {
  FasReport* r = nullptr;
  ~ReportHandle() { fas_report_free(r); }
};

struct TextHandle {
  FasText* t = nullptr;
  ~TextHandle() { fas_text_free(t); }
};

int exit_code(int rc) { return rc == FAS_ERR_GUARD ? 2 : 1; }

int complain(int rc, const char* err) {
  std::fprintf(stderr, "error: %s\n", err);
  return exit_code(rc);
}

int load(const std::string& path, bool strip_loops, GraphHandle& out) {
  char err[512] = {0};
  const int rc =
      fas_graph_from_file(path.c_str(), strip_loops ? 1 : 0, &out.g, err, sizeof err);
  if (rc != FAS_OK) return complain(rc, err);
  for (int i = 0; i < fas_graph_loop_count(out.g); ++i) {
    int pos = 0, v = 0;
    long long w = 0;
    fas_graph_loop(out.g, i, &pos, &v, &w);
    std::printf("c loop %d %d %lld\n", pos, v, w);
  }
  return 0;
}

void print_solution(const FasReport* r) {
  std::printf("s %lld %d\n", fas_report_weight(r), fas_report_certified(r));
  for (int i = 0; i < fas_report_size(r); ++i)
    std::printf("e %d\n", fas_report_element(r, i));
}

int cmd_solve(const std::string& file, bool strip, const std::string& method,
              int m_budget) {
  GraphHandle g;
  if (int rc = load(file, strip, g)) return rc;
  char err[512] = {0};
  ReportHandle r;
  const int rc = fas_solve(g.g, method.c_str(), m_budget, &r.r, err, sizeof err);
  if (rc != FAS_OK) return complain(rc, err);
  print_solution(r.r);
  return 0;
}

int cmd_resolve(const std::string& file, bool strip) {
  GraphHandle g;
  if (int rc = load(file, strip, g)) return rc;
  char err[512] = {0};
  int resolvable = 0;
  ReportHandle r;
  TextHandle residual;
  const int rc =
      fas_resolve(g.g, &resolvable, &r.r, &residual.t, err, sizeof err);
  if (rc != FAS_OK) return complain(rc, err);
  std::printf("resolvable %s\n", resolvable ? "yes" : "no");
  print_solution(r.r);
  std::printf("c residual\n%s", fas_text_get(residual.t));
  return 0;
}

int cmd_bounds(const std::string& file, bool strip, long long budget) {
  GraphHandle g;
  if (int rc = load(file, strip, g)) return rc;
  char err[512] = {0};
  long long mu = 0, upsilon = 0, upper = 0;
  int complete = 0;
  const int rc = fas_bounds(g.g, budget, &mu, &upsilon, &upper, &complete, err,
                            sizeof err);
  if (rc != FAS_OK) return complain(rc, err);
  if (!complete) std::printf("c cycle enumeration budget exhausted\n");
  std::printf("b mu %lld upsilon %lld upper %lld\n", mu, upsilon, upper);
  return 0;
}

int cmd_oracle(const std::string& file, bool strip, bool all) {
  GraphHandle g;
  if (int rc = load(file, strip, g)) return rc;
  char err[512] = {0};
  TextHandle t;
  const int rc = fas_oracle_text(g.g, all ? 1 : 0, &t.t, err, sizeof err);
  if (rc != FAS_OK) return complain(rc, err);
  std::fputs(fas_text_get(t.t), stdout);
  return 0;
}

int cmd_analyze(const std::string& file, bool strip, int anchor,
                const std::string& kind, bool meta, const std::string& seed) {
  GraphHandle g;
  if (int rc = load(file, strip, g)) return rc;
  char err[512] = {0};
  TextHandle t;
  int rc;
  if (meta) {
    std::vector<int> positions;
    std::string tok;
    for (std::istringstream is(seed); std::getline(is, tok, ',');)
      positions.push_back(std::atoi(tok.c_str()));
    if (positions.empty()) {
      std::fprintf(stderr, "error: --meta needs --seed <arc,arc,...>\n");
      return 1;
    }
    rc = fas_analyze_meta(g.g, positions.data(), (int)positions.size(), &t.t,
                          err, sizeof err);
  } else {
    rc = fas_analyze(g.g, anchor, kind.c_str(), &t.t, err, sizeof err);
  }
  if (rc != FAS_OK) return complain(rc, err);
  std::fputs(fas_text_get(t.t), stdout);
  return 0;
}

int cmd_reduce(const std::string& file, bool strip, bool minor,
               const std::string& target, bool literal) {
  GraphHandle g;
  if (int rc = load(file, strip, g)) return rc;
  char err[512] = {0};
  TextHandle t;
  const int rc = minor
                     ? fas_reduce_minor(g.g, &t.t, err, sizeof err)
                     : fas_reduce_to(g.g, target.c_str(), literal ? 1 : 0, &t.t,
                                     err, sizeof err);
  if (rc != FAS_OK) return complain(rc, err);
  std::fputs(fas_text_get(t.t), stdout);
  return 0;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

int cmd_bench(const std::string& dir, bool strip,
              const std::string& method_list, int m_budget) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) {
    std::fprintf(stderr, "error: %s is not a directory\n", dir.c_str());
    return 1;
  }
  std::vector<std::string> methods;
  std::string tok;
  for (std::istringstream is(method_list); std::getline(is, tok, ',');)
    if (!tok.empty()) methods.push_back(tok);

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const std::string ext = entry.path().extension().string();
    if (ext == ".fas" || ext == ".fvs") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::printf(
      "instance,vertices,arcs,method,status,weight,certified,mu,upsilon,"
      "global_m,wall_ms,matches_oracle\n");
  for (const fs::path& f : files) {
    char err[512] = {0};
    GraphHandle g;
    const std::string name = f.filename().string();
    if (fas_graph_from_file(f.string().c_str(), strip ? 1 : 0, &g.g, err,
                            sizeof err) != FAS_OK) {
      std::printf("%s,,,,%s,,,,,,,\n", csv_escape(name).c_str(),
                  csv_escape(err).c_str());
      continue;
    }
    const int n = fas_graph_vertex_count(g.g);
    const int m = fas_graph_arc_count(g.g);
    int gm = -1;
    fas_global_m(g.g, &gm, err, sizeof err);
    long long oracle_weight = -1;
    {
      ReportHandle o;
      if (fas_oracle_solve(g.g, &o.r, err, sizeof err) == FAS_OK)
        oracle_weight = fas_report_weight(o.r);
    }
    for (const std::string& method : methods) {
      std::printf("%s,%d,%d,%s,", csv_escape(name).c_str(), n, m,
                  csv_escape(method).c_str());
      ReportHandle r;
      int rc;
      if (method == "oracle") {
        rc = fas_oracle_solve(g.g, &r.r, err, sizeof err);
      } else {
        rc = fas_solve(g.g, method.c_str(), m_budget, &r.r, err, sizeof err);
      }
      if (rc != FAS_OK) {
        std::printf("%s,,,,,%d,,\n",
                    rc == FAS_ERR_GUARD ? "guard" : "error", gm);
        continue;
      }
      const long long w = fas_report_weight(r.r);
      std::string match;
      if (oracle_weight >= 0) match = w == oracle_weight ? "yes" : "no";
      std::printf("ok,%lld,%d,%lld,%lld,%d,%.3f,%s\n", w,
                  fas_report_certified(r.r), fas_report_mu(r.r),
                  fas_report_upsilon(r.r), gm, fas_report_wall_ms(r.r),
                  match.c_str());
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"feedback arc / vertex set toolkit"};
  app.set_version_flag("--version", fas_version());
  app.require_subcommand(1);
  bool strip = false;
  app.add_flag("--strip-loops", strip,
               "drop self-loop arcs at parse and report them as comments");

  std::string file, method = "auto", kind = "el", seed, target;
  int m_budget = -1, anchor = 0;
  long long cycle_budget = 0;
  bool all = false, meta = false, minor = false, literal = false,
       use_resolve = false;
  std::string effective = "xi", bench_dir, bench_methods = "auto";

  CLI::App* solve = app.add_subcommand("solve", "solve an instance exactly");
  solve->add_option("file", file)->required();
  solve->add_option("--method", method,
                    "cut | cut-resolve | resolve | greedy | greedy-resolve | "
                    "hybrid | auto");
  solve->add_option("--m-budget", m_budget,
                    "meta-parameter guard for the exact methods");

  CLI::App* resolve = app.add_subcommand(
      "resolve", "commit isolated cycle clusters and report the remainder");
  resolve->add_option("file", file)->required();

  CLI::App* greedy =
      app.add_subcommand("greedy", "greedy deletion with certified bounds");
  greedy->add_option("file", file)->required();
  greedy->add_option("--effective", effective, "xi (cycles) | eta (arcs)");
  greedy->add_flag("--resolve", use_resolve,
                   "commit resolvable clusters between deletions");

  CLI::App* bounds =
      app.add_subcommand("bounds", "certified lower and upper bounds");
  bounds->add_option("file", file)->required();
  bounds->add_option("--cycle-budget", cycle_budget,
                     "cycle enumeration budget (default 1e6)");

  CLI::App* analyze =
      app.add_subcommand("analyze", "anchored subgraphs and the meta graph");
  analyze->add_option("file", file)->required();
  analyze->add_option("--anchor", anchor, "arc position to anchor at");
  analyze->add_option("--kind", kind, "el (elementary) | si (simple)");
  analyze->add_flag("--meta", meta, "build the meta graph over --seed");
  analyze->add_option("--seed", seed, "comma-separated seed cycle positions");

  CLI::App* reduce =
      app.add_subcommand("reduce", "minor and flavour translations");
  reduce->add_option("file", file)->required();
  reduce->add_flag("--minor", minor, "essential minor with its arc map");
  reduce->add_option("--to", target, "fas | fvs");
  reduce->add_flag("--literal", literal,
                   "weight every gadget arc by its vertex (fas target)");

  CLI::App* oracle =
      app.add_subcommand("oracle", "exhaustive optimum at desk scale");
  oracle->add_option("file", file)->required();
  oracle->add_flag("--all", all, "print every optimal solution");

  CLI::App* bench = app.add_subcommand(
      "bench", "run methods over an instance directory, CSV to stdout");
  bench->add_option("dir", bench_dir)->required();
  bench->add_option("--methods", bench_methods, "comma-separated methods");
  bench->add_option("--m-budget", m_budget,
                    "meta-parameter guard for the exact methods");

  // Let global flags like --strip-loops appear after the subcommand name.
  for (CLI::App* sc :
       {solve, resolve, greedy, bounds, analyze, reduce, oracle, bench})
    sc->fallthrough();

  CLI11_PARSE(app, argc, argv);

  if (solve->parsed()) return cmd_solve(file, strip, method, m_budget);
  if (resolve->parsed()) return cmd_resolve(file, strip);
  if (greedy->parsed()) {
    std::string m = use_resolve ? "greedy-resolve" : "greedy";
    if (effective == "eta") m += "-eta";
    else if (effective != "xi") {
      std::fprintf(stderr, "error: --effective must be xi or eta\n");
      return 1;
    }
    return cmd_solve(file, strip, m, m_budget);
  }
  if (bounds->parsed()) return cmd_bounds(file, strip, cycle_budget);
  if (analyze->parsed())
    return cmd_analyze(file, strip, anchor, kind, meta, seed);
  if (reduce->parsed()) {
    if (minor == !target.empty()) {
      std::fprintf(stderr, "error: pass exactly one of --minor or --to\n");
      return 1;
    }
    return cmd_reduce(file, strip, minor, target, literal);
  }
  if (oracle->parsed()) return cmd_oracle(file, strip, all);
  if (bench->parsed()) return cmd_bench(bench_dir, strip, bench_methods, m_budget);
  return 1;
}
