#pragma once

#include <cstdint>
#include <vector>

#include "opgraph/graph.hpp"
#include "opgraph/rational.hpp"

namespace opg {

/// Default largest order for which a full distance matrix is materialized.
inline constexpr int kDistanceMatrixCap = 4096;

/// Dense n x n hop-distance table.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, 0) {}

  int order() const noexcept { return n_; }
  int operator()(Vertex u, Vertex v) const { return d_[index(u, v)]; }
  int& operator()(Vertex u, Vertex v) { return d_[index(u, v)]; }

 private:
  std::size_t index(Vertex u, Vertex v) const { return static_cast<std::size_t>(u) * n_ + v; }

  int n_ = 0;
  std::vector<int> d_;
};

/// Hop distances from source; throws DisconnectedGraph if some vertex is unreachable.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// All-pairs distances by one BFS per vertex. Throws CapExceeded above `cap`.
DistanceMatrix all_distances(const Graph& g, int cap = kDistanceMatrixCap);

struct VertexMetrics {
  std::int64_t transmission = 0;
  Rational average_distance;
  int eccentricity = 0;
};

VertexMetrics vertex_metrics(const Graph& g, Vertex v);

struct MetricsReport {
  std::vector<std::int64_t> transmission;
  std::vector<int> eccentricity;
  Rational proximity;
  Rational remoteness;
  int radius = 0;
  int diameter = 0;
  std::vector<Vertex> medians;  // ascending
  std::vector<Vertex> centers;  // ascending
};

/// Every distance invariant at once. Uses streamed per-vertex BFS, so no
/// distance matrix is ever held. Requires a connected graph with n >= 2.
MetricsReport global_metrics(const Graph& g);

/// Classical order-only bounds: proximity/remoteness extremes for connected
/// graphs and the folklore rad <= n/2, with the equality characterizations.
struct ClassicalBoundsReport {
  int n = 0;
  Rational proximity;
  Rational remoteness;
  int radius = 0;

  Rational proximity_upper;  // (n+1)/4, plus 1/(4(n-1)) when n is even
  Rational remoteness_upper; // n/2
  Rational radius_upper;     // n/2

  bool proximity_lower_ok = false;
  bool proximity_upper_ok = false;
  bool remoteness_lower_ok = false;
  bool remoteness_upper_ok = false;
  bool radius_upper_ok = false;

  bool proximity_lower_equal = false;
  bool proximity_upper_equal = false;
  bool remoteness_lower_equal = false;
  bool remoteness_upper_equal = false;

  bool has_dominating_vertex = false;
  bool is_path = false;
  bool is_cycle = false;
  bool is_complete = false;

  /// Each equality flag agrees with its structural characterization.
  bool equality_cases_consistent = false;

  bool all_hold() const {
    return proximity_lower_ok && proximity_upper_ok && remoteness_lower_ok &&
           remoteness_upper_ok && radius_upper_ok;
  }
};

ClassicalBoundsReport check_classical_bounds(const Graph& g);
ClassicalBoundsReport check_classical_bounds(const Graph& g, const MetricsReport& metrics);

/// (n+1)/4 for odd n, (n+1)/4 + 1/(4(n-1)) for even n.
Rational proximity_order_bound(int n);

}  // namespace opg
