#pragma once

// Conversions between library types and the plain containers the oracles use.

#include <random>
#include <vector>

#include "opgraph/enumerate.hpp"
#include "opgraph/graph.hpp"
#include "oracles.hpp"

namespace bridge {

inline oracle::EdgeList edges_of(const opg::Graph& g) {
  auto e = g.edges();
  return oracle::EdgeList(e.begin(), e.end());
}

inline std::vector<std::pair<int, int>> chord_pairs(const std::vector<opg::Chord>& chords) {
  std::vector<std::pair<int, int>> out;
  for (const auto& c : chords) out.emplace_back(c.lo, c.hi);
  return out;
}

inline opg::Graph graph_of(int n, const oracle::EdgeList& edges) {
  std::vector<opg::Edge> e(edges.begin(), edges.end());
  return opg::build_graph(n, e);
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Connected random graph: a random spanning tree plus extra random edges.
inline opg::Graph random_connected_graph(int n, int extra, std::mt19937& rng) {
  std::vector<opg::Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < extra; ++i) {
    int a = pick(rng), b = pick(rng);
    if (a != b) e.emplace_back(a, b);
  }
  auto perm = random_permutation(n, rng);
  return opg::relabel(opg::build_graph(n, e), perm);
}

}  // namespace bridge
