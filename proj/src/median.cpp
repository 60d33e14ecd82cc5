#include "opgraph/median.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "opgraph/errors.hpp"

namespace opg {

// ---------------------------------------------------------------------------
// Trees

std::vector<std::int64_t> branch_weights(const WeightedTree& t) {
  const int m = t.node_count;
  if (m <= 0) throw std::invalid_argument("tree has no nodes");
  if (static_cast<int>(t.weights.size()) != m) throw std::invalid_argument("weight count differs from node count");
  if (static_cast<int>(t.edges.size()) != m - 1) throw std::invalid_argument("a tree on m nodes has m-1 edges");
  for (auto w : t.weights) {
    if (w < 0) throw std::invalid_argument("negative node weight");
  }

  std::vector<std::vector<int>> adj(m);
  for (auto [a, b] : t.edges) {
    if (a < 0 || b < 0 || a >= m || b >= m || a == b) throw std::invalid_argument("bad tree edge");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> parent(m, -1), order;
  order.reserve(m);
  std::vector<char> seen(m, 0);
  seen[0] = 1;
  order.push_back(0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    int v = order[head];
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = v;
        order.push_back(w);
      }
    }
  }
  if (static_cast<int>(order.size()) != m) throw std::invalid_argument("edges do not form a tree");

  const std::int64_t total = t.total_weight();
  std::vector<std::int64_t> subtree(t.weights.begin(), t.weights.end());
  std::vector<std::int64_t> heaviest_child(m, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    if (parent[v] >= 0) {
      subtree[parent[v]] += subtree[v];
      heaviest_child[parent[v]] = std::max(heaviest_child[parent[v]], subtree[v]);
    }
  }
  std::vector<std::int64_t> bw(m);
  for (int v = 0; v < m; ++v) bw[v] = std::max(heaviest_child[v], total - subtree[v]);
  return bw;
}

TreeMedian tree_median(const WeightedTree& t) {
  auto bw = branch_weights(t);
  const std::int64_t total = t.total_weight();
  if (total == 0) throw ZeroTotalWeight();
  for (int v = 0; v < t.node_count; ++v) {
    if (2 * bw[v] <= total) return {v, bw[v]};
  }
  throw std::logic_error("no node with branch weight at most N/2");
}

// ---------------------------------------------------------------------------
// Central face

std::vector<int> components_outside_face(const OuterplaneEmbedding& emb, const Face& face) {
  const int n = emb.order();
  std::vector<std::vector<int>> adj(n);
  for (int p = 0; p < n; ++p) {
    adj[p].push_back((p + 1) % n);
    adj[(p + 1) % n].push_back(p);
  }
  for (const Chord& c : emb.chords) {
    adj[c.lo].push_back(c.hi);
    adj[c.hi].push_back(c.lo);
  }
  std::vector<char> removed(n, 0);
  for (int p : face.boundary) removed[p] = 1;

  std::vector<int> sizes;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (removed[s]) continue;
    int size = 0;
    removed[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++size;
      for (int w : adj[v]) {
        if (!removed[w]) {
          removed[w] = 1;
          stack.push_back(w);
        }
      }
    }
    sizes.push_back(size);
  }
  return sizes;
}

CentralFace central_face(const OuterplaneEmbedding& emb) { return central_face(emb, interior_faces(emb)); }

CentralFace central_face(const OuterplaneEmbedding& emb, const std::vector<Face>& faces) {
  WeakDualTree dual = weak_dual(emb, faces);
  TreeMedian med = tree_median(dual.tree);

  CentralFace out;
  out.index = med.node;
  out.face = faces[med.node];
  auto sizes = components_outside_face(emb, out.face);
  out.largest_component = sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
  if (2 * out.largest_component > emb.order() - 2) {
    throw std::logic_error("central face leaves a component with more than (n-2)/2 vertices");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cycles

std::int64_t WeightedCycle::doubled_total() const {
  return std::accumulate(doubled_weights.begin(), doubled_weights.end(), std::int64_t{0});
}

namespace {

void require_cycle(const WeightedCycle& wc) {
  if (wc.length() < 3) throw std::invalid_argument("weighted cycle needs length >= 3");
  for (auto w : wc.doubled_weights) {
    if (w < 0) throw std::invalid_argument("negative cycle weight");
  }
}

}  // namespace

std::int64_t cycle_weighted_transmission(const WeightedCycle& wc, int position) {
  require_cycle(wc);
  const int k = wc.length();
  if (position < 0 || position >= k) throw std::out_of_range("cycle position");
  std::int64_t sum = 0;
  for (int j = 0; j < k; ++j) {
    int d = std::abs(position - j);
    sum += wc.doubled_weights[j] * std::min(d, k - d);
  }
  return sum;
}

std::vector<std::int64_t> cycle_weighted_transmissions(const WeightedCycle& wc) {
  require_cycle(wc);
  const int k = wc.length();
  const int ahead = k / 2;          // positions reached going forward
  const int behind = k - 1 - ahead; // positions reached going backward

  // Prefix sums of w and s*w over three copies of the cycle.
  std::vector<std::int64_t> s(3 * k + 1, 0), t(3 * k + 1, 0);
  for (int i = 0; i < 3 * k; ++i) {
    std::int64_t w = wc.doubled_weights[i % k];
    s[i + 1] = s[i] + w;
    t[i + 1] = t[i] + w * i;
  }
  std::vector<std::int64_t> out(k);
  for (int i = 0; i < k; ++i) {
    const std::int64_t c = i + k;
    std::int64_t fwd = (t[c + ahead + 1] - t[c + 1]) - c * (s[c + ahead + 1] - s[c + 1]);
    std::int64_t back = c * (s[c] - s[c - behind]) - (t[c] - t[c - behind]);
    out[i] = fwd + back;
  }
  return out;
}

Rational cycle_median_bound_doubled(int k, const Rational& total_weight) {
  if (k % 2 == 0) return Rational(k, 2) * total_weight;
  return Rational(std::int64_t(k) * k - 1, 2 * k) * total_weight;
}

CycleMedian cycle_median(const WeightedCycle& wc) {
  auto all = cycle_weighted_transmissions(wc);
  const std::int64_t doubled_total = wc.doubled_total();
  if (doubled_total == 0) throw ZeroTotalWeight();
  auto best = std::min_element(all.begin(), all.end());

  CycleMedian out;
  out.position = static_cast<int>(best - all.begin());
  out.doubled_transmission = *best;
  out.doubled_bound = cycle_median_bound_doubled(wc.length(), Rational(doubled_total, 2));
  if (Rational(out.doubled_transmission) > out.doubled_bound) {
    throw std::logic_error("weighted cycle median exceeds its bound");
  }
  return out;
}

std::int64_t cycle_total_weighted_distance_times8(const WeightedCycle& wc) {
  require_cycle(wc);
  const int k = wc.length();
  std::int64_t sum = 0;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      int d = std::min(j - i, k - (j - i));
      sum += wc.doubled_weights[i] * wc.doubled_weights[j] * d;
    }
  }
  return 2 * sum;
}

}  // namespace opg
