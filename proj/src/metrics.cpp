#include "opgraph/metrics.hpp"

#include <algorithm>
#include <string>

#include "opgraph/errors.hpp"

namespace opg {

namespace {

// BFS into a caller-owned buffer; returns (sum, max) of the distances.
std::pair<std::int64_t, int> bfs_into(const Graph& g, Vertex source, std::vector<int>& dist,
                                      std::vector<Vertex>& queue) {
  const int n = g.order();
  dist.assign(n, -1);
  queue.resize(n);
  std::size_t head = 0, tail = 0;
  dist[source] = 0;
  queue[tail++] = source;
  std::int64_t sum = 0;
  int far = 0;
  while (head < tail) {
    Vertex v = queue[head++];
    int dv = dist[v];
    sum += dv;
    far = std::max(far, dv);
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dv + 1;
        queue[tail++] = w;
      }
    }
  }
  if (static_cast<int>(tail) != n) throw DisconnectedGraph();
  return {sum, far};
}

void require_metric_domain(const Graph& g) {
  if (g.order() < 2) throw InvalidGraph("distance metrics need at least two vertices");
}

}  // namespace

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  if (source < 0 || source >= g.order()) throw InvalidGraph("source vertex out of range");
  std::vector<int> dist;
  std::vector<Vertex> queue;
  bfs_into(g, source, dist, queue);
  return dist;
}

DistanceMatrix all_distances(const Graph& g, int cap) {
  const int n = g.order();
  if (n > cap) {
    throw CapExceeded("distance matrix for n=" + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  }
  DistanceMatrix d(n);
  std::vector<int> dist;
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    bfs_into(g, s, dist, queue);
    for (Vertex t = 0; t < n; ++t) d(s, t) = dist[t];
  }
  return d;
}

VertexMetrics vertex_metrics(const Graph& g, Vertex v) {
  require_metric_domain(g);
  if (v < 0 || v >= g.order()) throw InvalidGraph("vertex out of range");
  std::vector<int> dist;
  std::vector<Vertex> queue;
  auto [sum, far] = bfs_into(g, v, dist, queue);
  return {sum, Rational(sum, g.order() - 1), far};
}

MetricsReport global_metrics(const Graph& g) {
  require_metric_domain(g);
  const int n = g.order();
  MetricsReport r;
  r.transmission.resize(n);
  r.eccentricity.resize(n);
  std::vector<int> dist;
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    auto [sum, far] = bfs_into(g, v, dist, queue);
    r.transmission[v] = sum;
    r.eccentricity[v] = far;
  }
  auto [tmin, tmax] = std::minmax_element(r.transmission.begin(), r.transmission.end());
  auto [emin, emax] = std::minmax_element(r.eccentricity.begin(), r.eccentricity.end());
  r.proximity = Rational(*tmin, n - 1);
  r.remoteness = Rational(*tmax, n - 1);
  r.radius = *emin;
  r.diameter = *emax;
  for (Vertex v = 0; v < n; ++v) {
    if (r.transmission[v] == *tmin) r.medians.push_back(v);
    if (r.eccentricity[v] == *emin) r.centers.push_back(v);
  }
  return r;
}

Rational proximity_order_bound(int n) {
  Rational b(n + 1, 4);
  if (n % 2 == 0) b += Rational(1, 4 * (n - 1));
  return b;
}

ClassicalBoundsReport check_classical_bounds(const Graph& g) {
  return check_classical_bounds(g, global_metrics(g));
}

ClassicalBoundsReport check_classical_bounds(const Graph& g, const MetricsReport& m) {
  const int n = g.order();
  ClassicalBoundsReport r;
  r.n = n;
  r.proximity = m.proximity;
  r.remoteness = m.remoteness;
  r.radius = m.radius;
  r.proximity_upper = proximity_order_bound(n);
  r.remoteness_upper = Rational(n, 2);
  r.radius_upper = Rational(n, 2);

  const Rational one(1);
  r.proximity_lower_ok = m.proximity >= one;
  r.proximity_upper_ok = m.proximity <= r.proximity_upper;
  r.remoteness_lower_ok = m.remoteness >= one;
  r.remoteness_upper_ok = m.remoteness <= r.remoteness_upper;
  r.radius_upper_ok = Rational(m.radius) <= r.radius_upper;

  r.proximity_lower_equal = m.proximity == one;
  r.proximity_upper_equal = m.proximity == r.proximity_upper;
  r.remoteness_lower_equal = m.remoteness == one;
  r.remoteness_upper_equal = m.remoteness == r.remoteness_upper;

  int max_degree = 0;
  bool all_degree_two = true;
  for (Vertex v = 0; v < n; ++v) {
    max_degree = std::max(max_degree, g.degree(v));
    if (g.degree(v) != 2) all_degree_two = false;
  }
  const auto m_edges = static_cast<std::int64_t>(g.size());
  r.has_dominating_vertex = max_degree == n - 1;
  r.is_path = m_edges == n - 1 && max_degree <= 2;  // connected is a precondition
  r.is_cycle = n >= 3 && m_edges == n && all_degree_two;
  r.is_complete = m_edges == std::int64_t(n) * (n - 1) / 2;

  r.equality_cases_consistent =
      r.proximity_lower_equal == r.has_dominating_vertex &&
      r.proximity_upper_equal == (r.is_path || r.is_cycle) &&
      r.remoteness_lower_equal == r.is_complete && r.remoteness_upper_equal == r.is_path;
  return r;
}

}  // namespace opg
