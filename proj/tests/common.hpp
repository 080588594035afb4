#pragma once
#include <cstdlib>
#include <random>
#include <string>
#include <sys/stat.h>

#include "core/graph.hpp"

namespace testutil {

using fas::ArcId;
using fas::ArcSet;
using fas::Digraph;
using fas::Weight;

// Directed k-ring 0 -> 1 -> ... -> k-1 -> 0.
inline Digraph ring(int k, Weight w = 1) {
  Digraph g(k);
  for (int i = 0; i < k; ++i) g.add_arc(i, (i + 1) % k, w);
  return g;
}

// Complete digraph on n vertices: every ordered pair once, unit weights.
inline Digraph complete(int n) {
  Digraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) g.add_arc(u, v, 1);
  return g;
}

// Random loop-free multi-digraph with m arcs and weights in [1, wmax].
inline Digraph random_graph(std::mt19937& rng, int n, int m, Weight wmax) {
  Digraph g(n);
  std::uniform_int_distribution<int> vert(0, n - 1);
  std::uniform_int_distribution<long long> wd(1, wmax);
  for (int i = 0; i < m; ++i) {
    int u = vert(rng), v = vert(rng);
    while (v == u) v = vert(rng);
    g.add_arc(u, v, wd(rng));
  }
  return g;
}

// Chain of D diamonds a_i -> {b_i, c_i} -> d_i, linked d_i -> a_(i+1 mod D);
// the closing link makes every path choice a distinct elementary cycle.
inline Digraph diamond_chain(int D) {
  Digraph g(4 * D);
  auto A = [&](int i) { return 4 * i; };
  auto B = [&](int i) { return 4 * i + 1; };
  auto C = [&](int i) { return 4 * i + 2; };
  auto Dv = [&](int i) { return 4 * i + 3; };
  for (int i = 0; i < D; ++i) {
    g.add_arc(A(i), B(i), 1);
    g.add_arc(A(i), C(i), 1);
    g.add_arc(B(i), Dv(i), 1);
    g.add_arc(C(i), Dv(i), 1);
    g.add_arc(Dv(i), A((i + 1) % D), 1);
  }
  return g;
}

// Path-like chain of k cycles where consecutive cycles share exactly one
// arc s_i and nothing else: C_1 = {s_1, r_1} is a 2-ring, interior
// C_i = {s_(i-1), m_i, s_i, n_i} is a 4-ring, C_k = {s_(k-1), r_k} is a
// 2-ring. Shared arcs have theta = 2, everything else theta = 1, so with
// unit weights mu = ceil(k/2) = Omega (pick every other shared arc).
inline Digraph chain_family(int k) {
  if (k == 1) return ring(2);
  Digraph g(2 * (k - 1));
  auto P = [&](int i) { return 2 * (i - 1); };      // p_i, i = 1..k-1
  auto Q = [&](int i) { return 2 * (i - 1) + 1; };  // q_i
  for (int i = 1; i < k; ++i) g.add_arc(P(i), Q(i), 1);  // s_i, ids 0..k-2
  g.add_arc(Q(1), P(1), 1);                              // r_1
  for (int i = 2; i < k; ++i) {
    g.add_arc(Q(i - 1), P(i), 1);  // m_i
    g.add_arc(Q(i), P(i - 1), 1);  // n_i
  }
  g.add_arc(Q(k - 1), P(k - 1), 1);  // r_k
  return g;
}

inline std::string fixture_path(const std::string& name) {
  const char* env = std::getenv("FAS_FIXTURES");
  std::string base = env ? env : "";
  if (base.empty()) {
    struct stat st{};
    if (stat("fixtures", &st) == 0) base = "fixtures";
    else if (stat("../fixtures", &st) == 0) base = "../fixtures";
    else base = "../../fixtures";
  }
  return base + "/" + name;
}

} // namespace testutil
