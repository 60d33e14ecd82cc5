#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace opg {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
///
/// Instances are immutable once built; the only way to make one is through
/// Graph::from_edges (or build_graph), which validates ids, rejects self-loops
/// and collapses duplicate pairs.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Every edge once as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Validating constructor; see Graph::from_edges.
Graph build_graph(int n, std::span<const Edge> edges);

/// Graph with every vertex renamed through perm (vertex v becomes perm[v]).
Graph relabel(const Graph& g, std::span<const Vertex> perm);

bool is_connected(const Graph& g);

}  // namespace opg
