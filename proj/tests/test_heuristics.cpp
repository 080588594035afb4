#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "core/heuristics.hpp"
#include "core/io.hpp"
#include "core/oracle.hpp"
#include "core/solver.hpp"

using namespace fas;
using testutil::chain_family;
using testutil::complete;
using testutil::diamond_chain;
using testutil::fixture_path;
using testutil::random_graph;
using testutil::ring;

namespace {

Digraph load(const std::string& name) {
  return parse_instance_file(fixture_path(name)).graph;
}

}  // namespace

TEST_CASE("exact rationals: normalization and cross-multiplied order") {
  CHECK(ratio_eq(make_ratio(2, 4), make_ratio(1, 2)));
  CHECK(ratio_eq(make_ratio(0, 7), Ratio{0, 1}));
  CHECK(ratio_less(make_ratio(1, 3), make_ratio(2, 5)));
  CHECK_FALSE(ratio_less(make_ratio(2, 5), make_ratio(1, 3)));
  CHECK_FALSE(ratio_less(make_ratio(3, 6), make_ratio(1, 2)));
  // Unbounded beats every finite value and never compares below itself.
  CHECK(ratio_less(make_ratio(1000, 1), make_ratio(-1, 1)));
  CHECK_FALSE(ratio_less(make_ratio(-1, 1), make_ratio(1000, 1)));
  CHECK_FALSE(ratio_less(make_ratio(-1, 1), make_ratio(-1, 1)));
}

TEST_CASE("theta counts elementary cycles through an arc") {
  Digraph g = load("score-trap.fas");
  CHECK(theta(g, 0) == 3);
  CHECK(theta(g, 2) == 3);
  CHECK(theta(g, 4) == 2);
  CHECK(theta(g, 5) == 1);
  CHECK(theta(g, 7) == 1);

  for (ArcId a : load("triple-complete.fas").live_arcs())
    CHECK(theta(load("triple-complete.fas"), a) == 2);

  for (ArcId a : ring(5).live_arcs()) CHECK(theta(ring(5), a) == 1);

  // Diamond chains: every ring passes all links, one branch per diamond.
  Digraph d = diamond_chain(4);
  CHECK(theta(d, 4) == 16);
  CHECK(theta(d, 0) == 8);

  Digraph dag(3);
  dag.add_arc(0, 1, 1);
  dag.add_arc(1, 2, 1);
  CHECK(theta(dag, 0) == 0);

  CHECK(theta(diamond_chain(8), 4, 5) == -1);  // budget exhausted
}

TEST_CASE("phi measures the elementary subgraph") {
  Digraph g = load("score-trap.fas");
  CHECK(phi(g, 0) == 7);
  CHECK(phi(g, 1) == 6);
  CHECK(phi(g, 2) == 7);
  CHECK(phi(g, 3) == 5);
  CHECK(phi(g, 4) == 6);
  CHECK(phi(g, 5) == 2);

  // The opening 2-ring of the resolvable chain is its own world.
  Digraph chain = load("resolvable-chain.fas");
  CHECK(phi(chain, 0) == 2);
  CHECK(phi(chain, 1) == 2);

  Digraph dag(2);
  dag.add_arc(0, 1, 3);
  CHECK(phi(dag, 0) == 0);
}

TEST_CASE("lower bounds: frozen fixture values") {
  BoundReport t = lower_bounds(load("triple-complete.fas"));
  CHECK(t.complete);
  CHECK(ratio_eq(t.theta_max, make_ratio(2, 1)));
  CHECK(ratio_eq(t.phi_max, make_ratio(4, 1)));
  CHECK(ratio_eq(t.xi_max, make_ratio(2, 1)));
  CHECK(ratio_eq(t.eta_max, make_ratio(4, 1)));
  CHECK(t.mu == 3);
  CHECK(t.upsilon == 2);
  CHECK(t.upper == 3);

  BoundReport s = lower_bounds(load("score-trap.fas"));
  CHECK(ratio_eq(s.xi_max, make_ratio(1, 1)));   // arc 4: 2 cycles / weight 2
  CHECK(ratio_eq(s.eta_max, make_ratio(3, 1)));  // arc 4: 6 arcs / weight 2
  CHECK(s.mu == 4);
  CHECK(s.upsilon == 3);
  CHECK(s.upper == 24);

  BoundReport dag = lower_bounds(Digraph(3));
  CHECK(dag.mu == 0);
  CHECK(dag.upsilon == 0);
  CHECK(dag.upper == 0);

  // Budget exhaustion: mu omitted, the polynomial path still answers.
  BoundReport d8 = lower_bounds(diamond_chain(8), 10);
  CHECK_FALSE(d8.complete);
  CHECK(d8.mu == -1);
  CHECK(d8.upsilon == 1);
  CHECK(d8.upper == 20);
}

TEST_CASE("chain family: the cycle-count bound is tight at every length") {
  for (int k = 1; k <= 10; ++k) {
    Digraph g = chain_family(k);
    BoundReport b = lower_bounds(g);
    // 3k-3 arcs tops out at 27; raise the oracle guard accordingly.
    Weight omega = brute_force_fasp(g, 30).weight;
    CHECK(b.mu == (k + 1) / 2);
    CHECK(b.mu == omega);
    CHECK(b.upsilon <= omega);
  }
}

TEST_CASE("bounds are valid on random instances") {
  std::mt19937 rng(661);
  for (int t = 0; t < 120; ++t) {
    Digraph g = random_graph(rng, 3 + t % 4, 4 + t % 8, 9);
    BoundReport b = lower_bounds(g);
    REQUIRE(b.complete);
    Weight omega = brute_force_fasp(g).weight;
    CHECK(b.mu <= omega);
    CHECK(b.upsilon <= omega);
    CHECK(b.upper >= omega);
  }
}

TEST_CASE("greedy cut: frozen runs and the unit-weight cap") {
  // Complete digraph on three vertices: ties resolve to the lowest id
  // and the result happens to be optimal, certified by mu.
  Digraph d3 = complete(3);
  FeedbackReport r = greedy_cut(d3);
  CHECK(r.solution == ArcSet{0, 1, 3});
  CHECK(r.weight == 3);
  CHECK(r.method == "greedy");
  CHECK(r.mu == 3);
  CHECK(r.certified);
  CHECK((int)r.solution.size() == 3);  // exactly floor(|E|/2)
  CHECK(is_acyclic(d3.without(r.solution)));

  // The trap instance fools both effective weights the same way.
  Digraph trap = load("score-trap.fas");
  FeedbackReport xi = greedy_cut(trap, Effective::xi);
  CHECK(xi.solution == ArcSet{1, 4, 5});
  CHECK(xi.weight == 8);
  CHECK_FALSE(xi.certified);
  FeedbackReport eta = greedy_cut(trap, Effective::eta);
  CHECK(eta.solution == ArcSet{1, 4, 5});
  CHECK(eta.weight == 8);

  CHECK(greedy_cut(ring(4)).solution == ArcSet{0});
  CHECK(greedy_cut(Digraph(3)).solution.empty());
  CHECK(greedy_cut(Digraph(3)).certified);
}

TEST_CASE("greedy guarantees on random unit and weighted instances") {
  std::mt19937 rng(404);
  for (int t = 0; t < 100; ++t) {
    Digraph g = random_graph(rng, 3 + t % 4, 4 + t % 8, 1);  // unit
    Digraph closed = cycle_closure(g);
    FeedbackReport r = greedy_cut(g, t % 2 ? Effective::eta : Effective::xi);
    CHECK(is_acyclic(g.without(r.solution)));
    CHECK((long long)r.solution.size() <=
          (long long)closed.live_arcs().size() / 2);
  }
  for (int t = 0; t < 100; ++t) {
    Digraph g = random_graph(rng, 3 + t % 4, 4 + t % 8, 9);
    FeedbackReport r = greedy_cut(g);
    BoundReport b = lower_bounds(g);
    Weight omega = brute_force_fasp(g).weight;
    CHECK(is_acyclic(g.without(r.solution)));
    CHECK(r.weight >= omega);
    if (omega > 0) {
      // Prop ratio: greedy / Omega <= (w_max * theta_max) / w_min.
      Digraph closed = cycle_closure(g);
      Weight wmin = 0, wmax = 0;
      for (ArcId a : closed.live_arcs()) {
        Weight w = closed.weight(a);
        wmin = wmin == 0 ? w : std::min(wmin, w);
        wmax = std::max(wmax, w);
      }
      CHECK(r.weight * wmin <= omega * wmax * b.theta_max.num);
    }
  }
}

TEST_CASE("greedy cut-resolve commits clusters and closes easy gaps") {
  Digraph chain = load("resolvable-chain.fas");
  FeedbackReport r = greedy_cut_resolve(chain);
  CHECK(r.solution == ArcSet{0, 5, 8});
  CHECK(r.weight == 3);
  CHECK(is_acyclic(chain.without(r.solution)));

  // After the first greedy deletion the 2-ring {1,4} is isolated, so
  // resolution commits the rest: one greedy arc against greedy cut's three.
  FeedbackReport d3 = greedy_cut_resolve(complete(3));
  CHECK(d3.solution == ArcSet{0, 1, 5});
  CHECK(d3.weight == 3);
  CHECK(d3.certified);

  // Diamond chains resolve outright; greedy never fires.
  for (int d = 1; d <= 5; ++d) {
    FeedbackReport rd = greedy_cut_resolve(diamond_chain(d));
    CHECK(rd.weight == 1);
    CHECK((int)rd.solution.size() == 1);
  }

  std::mt19937 rng(505);
  for (int t = 0; t < 80; ++t) {
    Digraph g = random_graph(rng, 3 + t % 4, 4 + t % 8, 9);
    FeedbackReport rr = greedy_cut_resolve(g);
    CHECK(is_acyclic(g.without(rr.solution)));
    CHECK(rr.weight >= brute_force_fasp(g).weight);
    CHECK(rr.weight <= greedy_cut(g).weight);  // resolution never hurts
  }
}

TEST_CASE("hybrid strategy: resolvable inputs equal pure resolution") {
  Digraph chain = load("resolvable-chain.fas");
  FeedbackReport r = hybrid_strategy(chain);
  FeedbackReport want = solve_resolvable(chain);
  CHECK(r.solution == want.solution);
  CHECK(r.weight == want.weight);
  CHECK(r.certified);
  CHECK(r.method == "hybrid");

  HybridIndicators ind{};
  FeedbackReport d = hybrid_strategy(diamond_chain(4), &ind);
  CHECK(d.weight == 1);
  CHECK(d.certified);
  CHECK(ind.forbidden_edges == 0);
}

TEST_CASE("hybrid strategy: tree meta graphs get the exact cut") {
  // The complete digraph on three vertices is not resolvable, its meta
  // graph is a forest covering every arc, so the one exact subproblem is
  // the whole instance.
  Digraph d3 = complete(3);
  HybridIndicators ind{};
  FeedbackReport r = hybrid_strategy(d3, &ind);
  FeedbackReport exact = cut(d3);
  CHECK(r.solution == exact.solution);
  CHECK(r.weight == exact.weight);
  CHECK(r.weight == 3);
  CHECK_FALSE(r.certified);
  CHECK(ind.forbidden_edges == 0);
  CHECK(ind.banned_arcs == 0);
  CHECK(r.m_param == 0);
}

TEST_CASE("hybrid strategy: trap instance recovers the optimum") {
  // Round one restricts to the seed ring and cuts its cheapest arc (id 4).
  // Every surviving cycle then runs through arc 2, so its isolated world is
  // the whole remainder and resolution commits it: {2,4} is the optimum,
  // though the run is not certified because a cut round happened.
  Digraph trap = load("score-trap.fas");
  HybridIndicators ind{};
  FeedbackReport r = hybrid_strategy(trap, &ind);
  CHECK(r.solution == ArcSet{2, 4});
  CHECK(r.weight == 7);
  CHECK_FALSE(r.certified);
  CHECK(ind.forbidden_edges == 0);
  CHECK(is_acyclic(trap.without(r.solution)));
}

TEST_CASE("hybrid strategy: meta cycles are banned and reported") {
  // Dense hang instance with meta dimension 3 (see the meta suite).
  Digraph g(3);
  g.add_arc(0, 1, 1);
  g.add_arc(1, 2, 1);
  g.add_arc(2, 0, 1);
  g.add_arc(1, 0, 1);
  g.add_arc(2, 1, 1);
  g.add_arc(0, 2, 1);
  g.add_arc(1, 2, 1);
  g.add_arc(2, 0, 1);

  HybridIndicators ind{};
  FeedbackReport r = hybrid_strategy(g, &ind);
  CHECK(ind.forbidden_edges == 3);
  CHECK(ind.banned_arcs == 3);
  CHECK(ind.banned_avg_weight == 1.0);
  CHECK(ind.global_avg_weight == 1.0);
  CHECK(is_acyclic(g.without(r.solution)));
  CHECK(r.weight >= brute_force_fasp(g).weight);
  CHECK_FALSE(r.certified);
  CHECK(r.m_param == 3);
}

TEST_CASE("hybrid strategy stays feasible on random instances") {
  std::mt19937 rng(606);
  for (int t = 0; t < 80; ++t) {
    Digraph g = random_graph(rng, 3 + t % 4, 4 + t % 8, 9);
    FeedbackReport r = hybrid_strategy(g);
    CHECK(is_acyclic(g.without(r.solution)));
    CHECK(r.weight >= brute_force_fasp(g).weight);
    if (r.certified) CHECK(r.weight == brute_force_fasp(g).weight);
  }
}
