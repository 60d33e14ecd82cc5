#include "opgraph/outerplanar.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "opgraph/errors.hpp"

namespace opg {

std::int64_t WeightedTree::total_weight() const {
  return std::accumulate(weights.begin(), weights.end(), std::int64_t{0});
}

// ---------------------------------------------------------------------------
// Biconnectivity

std::optional<Vertex> find_cut_vertex(const Graph& g) {
  const int n = g.order();
  if (n < 3 || !is_connected(g)) return -1;

  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::size_t> next_child(n, 0);
  int timer = 0;
  int root_children = 0;
  std::vector<Vertex> stack{0};
  disc[0] = low[0] = timer++;

  while (!stack.empty()) {
    Vertex v = stack.back();
    auto nbrs = g.neighbors(v);
    if (next_child[v] < nbrs.size()) {
      Vertex w = nbrs[next_child[v]++];
      if (disc[w] < 0) {
        parent[w] = v;
        disc[w] = low[w] = timer++;
        if (v == 0) ++root_children;
        stack.push_back(w);
      } else if (w != parent[v]) {
        low[v] = std::min(low[v], disc[w]);
      }
      continue;
    }
    stack.pop_back();
    Vertex p = parent[v];
    if (p < 0) continue;
    low[p] = std::min(low[p], low[v]);
    if (p != 0 && low[v] >= disc[p]) return p;
  }
  if (root_children > 1) return 0;
  return std::nullopt;
}

bool is_biconnected(const Graph& g) { return !find_cut_vertex(g).has_value(); }

// ---------------------------------------------------------------------------
// Embedding utilities

OuterplaneEmbedding canonicalize(const OuterplaneEmbedding& emb) {
  const int n = emb.order();
  if (n < 3) return emb;
  const auto& order = emb.outer_order;
  int p = static_cast<int>(std::find(order.begin(), order.end(), 0) - order.begin());
  if (p == n) return emb;
  const bool forward = order[(p + 1) % n] < order[(p + n - 1) % n];
  auto remap = [&](int old_pos) { return forward ? (old_pos - p + n) % n : (p - old_pos + n) % n; };

  OuterplaneEmbedding out;
  out.outer_order.resize(n);
  for (int i = 0; i < n; ++i) out.outer_order[remap(i)] = order[i];
  out.chords.reserve(emb.chords.size());
  for (const Chord& c : emb.chords) {
    int a = remap(c.lo), b = remap(c.hi);
    out.chords.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(out.chords.begin(), out.chords.end());
  return out;
}

Graph embedding_graph(const OuterplaneEmbedding& emb) {
  const int n = emb.order();
  std::vector<Edge> edges;
  edges.reserve(n + emb.chords.size());
  for (int i = 0; i < n; ++i) edges.emplace_back(emb.outer_order[i], emb.outer_order[(i + 1) % n]);
  for (const Chord& c : emb.chords) edges.emplace_back(emb.outer_order[c.lo], emb.outer_order[c.hi]);
  return Graph::from_edges(n, edges);
}

namespace {

std::string edge_str(Vertex u, Vertex v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

std::string chord_str(const Chord& c) {
  return "(" + std::to_string(c.lo) + "," + std::to_string(c.hi) + ")";
}

EmbeddingCheck reject(EmbeddingDefect d, std::string reason) {
  EmbeddingCheck r;
  r.defect = d;
  r.reason = std::move(reason);
  return r;
}

}  // namespace

EmbeddingCheck verify_embedding(const Graph& g, const OuterplaneEmbedding& emb) {
  const int n = g.order();
  if (emb.order() != n) return reject(EmbeddingDefect::kBadOrder, "outer order length differs from n");
  if (n < 3) return reject(EmbeddingDefect::kBadOrder, "fewer than three vertices");

  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = emb.outer_order[i];
    if (v < 0 || v >= n || pos[v] >= 0) {
      return reject(EmbeddingDefect::kBadOrder, "outer order is not a permutation");
    }
    pos[v] = i;
  }

  for (int i = 0; i < n; ++i) {
    Vertex u = emb.outer_order[i], v = emb.outer_order[(i + 1) % n];
    if (!g.adjacent(u, v)) {
      auto r = reject(EmbeddingDefect::kExtraEdge, "cycle edge " + edge_str(u, v) + " is not in the graph");
      r.edge = Edge{std::min(u, v), std::max(u, v)};
      return r;
    }
  }

  std::vector<Chord> chords = emb.chords;
  std::sort(chords.begin(), chords.end());
  for (std::size_t i = 0; i < chords.size(); ++i) {
    const Chord& c = chords[i];
    if (c.lo < 0 || c.hi >= n || c.hi - c.lo < 2 || (c.lo == 0 && c.hi == n - 1)) {
      return reject(EmbeddingDefect::kBadChord, "chord " + chord_str(c) + " is not a diagonal");
    }
    if (i > 0 && chords[i - 1] == c) {
      return reject(EmbeddingDefect::kBadChord, "chord " + chord_str(c) + " listed twice");
    }
    Vertex u = emb.outer_order[c.lo], v = emb.outer_order[c.hi];
    if (!g.adjacent(u, v)) {
      auto r = reject(EmbeddingDefect::kExtraEdge, "chord " + chord_str(c) + " is not an edge");
      r.edge = Edge{std::min(u, v), std::max(u, v)};
      return r;
    }
  }

  if (g.size() != static_cast<std::size_t>(n) + chords.size()) {
    for (auto [u, v] : g.edges()) {
      int a = std::min(pos[u], pos[v]), b = std::max(pos[u], pos[v]);
      bool on_cycle = b - a == 1 || (a == 0 && b == n - 1);
      if (!on_cycle && !std::binary_search(chords.begin(), chords.end(), Chord{a, b})) {
        auto r = reject(EmbeddingDefect::kMissingEdge, "edge " + edge_str(u, v) + " is not embedded");
        r.edge = Edge{u, v};
        return r;
      }
    }
  }

  // Chords are non-crossing iff they nest like parentheses along the polygon.
  std::vector<std::vector<Chord>> starts(n), ends(n);
  for (const Chord& c : chords) {
    starts[c.lo].push_back(c);
    ends[c.hi].push_back(c);
  }
  std::vector<Chord> open;
  for (int p = 0; p < n; ++p) {
    auto& closing = ends[p];
    std::sort(closing.begin(), closing.end(), [](const Chord& x, const Chord& y) { return x.lo > y.lo; });
    for (const Chord& c : closing) {
      if (open.back() != c) {
        auto r = reject(EmbeddingDefect::kCrossingPair,
                        "chords " + chord_str(c) + " and " + chord_str(open.back()) + " cross");
        r.crossing = std::pair{std::min(c, open.back()), std::max(c, open.back())};
        return r;
      }
      open.pop_back();
    }
    auto& opening = starts[p];
    std::sort(opening.begin(), opening.end(), [](const Chord& x, const Chord& y) { return x.hi > y.hi; });
    for (const Chord& c : opening) open.push_back(c);
  }
  return {};
}

// ---------------------------------------------------------------------------
// Recognition

namespace {

Recognition failure(RecognitionStatus s, std::string reason) {
  Recognition r;
  r.status = s;
  r.reason = std::move(reason);
  return r;
}

struct Removal {
  Vertex v, u, w;
};

}  // namespace

Recognition recognize(const Graph& g) {
  const int n = g.order();
  if (n < 3) return failure(RecognitionStatus::kNotBiconnected, "fewer than three vertices");
  if (!is_connected(g)) return failure(RecognitionStatus::kNotBiconnected, "graph is disconnected");
  if (auto cut = find_cut_vertex(g)) {
    return failure(RecognitionStatus::kNotBiconnected, "cut vertex " + std::to_string(*cut));
  }
  if (g.size() > static_cast<std::size_t>(2 * n - 3)) {
    return failure(RecognitionStatus::kNotOuterplanar, "more than 2n-3 edges");
  }

  // Peel degree-2 vertices. Removing v with neighbours u, w and joining u-w
  // (if not already adjacent) keeps the graph 2-connected, and the original is
  // outerplanar iff the reduced graph is and u-w lies on its Hamiltonian cycle.
  std::vector<std::set<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
  std::vector<char> alive(n, 1);
  std::vector<Vertex> work;
  for (Vertex v = n - 1; v >= 0; --v) {
    if (adj[v].size() == 2) work.push_back(v);
  }
  std::vector<Removal> removals;
  removals.reserve(n);
  int remaining = n;
  while (remaining > 3) {
    while (!work.empty() && (!alive[work.back()] || adj[work.back()].size() != 2)) work.pop_back();
    if (work.empty()) {
      return failure(RecognitionStatus::kNotOuterplanar, "reduction stalled: no vertex of degree two");
    }
    Vertex v = work.back();
    work.pop_back();
    Vertex u = *adj[v].begin(), w = *std::next(adj[v].begin());
    adj[u].erase(v);
    adj[w].erase(v);
    adj[v].clear();
    alive[v] = 0;
    --remaining;
    adj[u].insert(w);
    adj[w].insert(u);
    removals.push_back({v, u, w});
    for (Vertex x : {u, w}) {
      if (adj[x].size() < 2) return failure(RecognitionStatus::kNotOuterplanar, "reduction lost 2-connectivity");
      if (adj[x].size() == 2) work.push_back(x);
    }
  }

  std::vector<Vertex> base;
  for (Vertex v = 0; v < n; ++v) {
    if (alive[v]) base.push_back(v);
  }
  for (Vertex v : base) {
    if (adj[v].size() != 2) return failure(RecognitionStatus::kNotOuterplanar, "reduction did not end in a triangle");
  }

  std::vector<Vertex> next(n, -1);
  next[base[0]] = base[1];
  next[base[1]] = base[2];
  next[base[2]] = base[0];
  for (auto it = removals.rbegin(); it != removals.rend(); ++it) {
    auto [v, u, w] = *it;
    if (next[u] == w) {
      next[u] = v;
      next[v] = w;
    } else if (next[w] == u) {
      next[w] = v;
      next[v] = u;
    } else {
      return failure(RecognitionStatus::kNotOuterplanar,
                     "vertex " + std::to_string(v) + " attaches across chord " + edge_str(u, w));
    }
  }

  OuterplaneEmbedding emb;
  emb.outer_order.reserve(n);
  std::vector<int> pos(n, -1);
  for (Vertex v = 0; static_cast<int>(emb.outer_order.size()) < n; v = next[v]) {
    pos[v] = static_cast<int>(emb.outer_order.size());
    emb.outer_order.push_back(v);
  }
  for (auto [u, v] : g.edges()) {
    int a = std::min(pos[u], pos[v]), b = std::max(pos[u], pos[v]);
    if (b - a == 1 || (a == 0 && b == n - 1)) continue;
    emb.chords.push_back({a, b});
  }
  emb = canonicalize(emb);

  EmbeddingCheck check = verify_embedding(g, emb);
  if (!check.accepted()) return failure(RecognitionStatus::kNotOuterplanar, check.reason);

  Recognition r;
  r.status = RecognitionStatus::kOuterplanar;
  r.embedding = std::move(emb);
  return r;
}

OuterplaneEmbedding recognize_or_throw(const Graph& g) {
  Recognition r = recognize(g);
  if (r.status == RecognitionStatus::kNotBiconnected) throw NotBiconnected(r.reason);
  if (r.status == RecognitionStatus::kNotOuterplanar) throw NotOuterplanar(r.reason);
  return std::move(*r.embedding);
}

// ---------------------------------------------------------------------------
// Faces and weak dual

std::vector<Face> interior_faces(const OuterplaneEmbedding& emb) {
  const int n = emb.order();
  std::vector<std::vector<int>> partners(n);
  for (const Chord& c : emb.chords) partners[c.lo].push_back(c.hi);
  for (auto& p : partners) std::sort(p.begin(), p.end());

  std::vector<Face> faces;
  faces.reserve(emb.chords.size() + 1);
  std::vector<std::pair<int, int>> bases{{0, n - 1}};
  while (!bases.empty()) {
    auto [a, b] = bases.back();
    bases.pop_back();
    Face f;
    f.boundary.push_back(a);
    for (int x = a; x != b;) {
      int y = x + 1;
      const auto& ps = partners[x];
      auto it = std::upper_bound(ps.begin(), ps.end(), b);
      while (it != ps.begin()) {
        --it;
        if (x == a && *it == b) continue;
        y = *it;
        bases.emplace_back(x, y);
        break;
      }
      f.boundary.push_back(y);
      x = y;
    }
    faces.push_back(std::move(f));
  }
  std::sort(faces.begin(), faces.end(),
            [](const Face& l, const Face& r) { return l.boundary < r.boundary; });
  return faces;
}

WeakDualTree weak_dual(const OuterplaneEmbedding& emb) { return weak_dual(emb, interior_faces(emb)); }

WeakDualTree weak_dual(const OuterplaneEmbedding& emb, const std::vector<Face>& faces) {
  const int n = emb.order();
  std::map<Chord, std::vector<int>> sides;
  for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
    const auto& bd = faces[i].boundary;
    for (std::size_t t = 0; t < bd.size(); ++t) {
      int x = bd[t], y = bd[(t + 1) % bd.size()];
      Chord c{std::min(x, y), std::max(x, y)};
      if (c.hi - c.lo >= 2 && !(c.lo == 0 && c.hi == n - 1)) sides[c].push_back(i);
    }
  }
  WeakDualTree dual;
  dual.tree.node_count = static_cast<int>(faces.size());
  for (const Face& f : faces) dual.tree.weights.push_back(f.length() - 2);
  for (const auto& [chord, fs] : sides) {
    if (fs.size() != 2) throw NotOuterplanar("chord " + chord_str(chord) + " does not separate two faces");
    dual.tree.edges.emplace_back(std::min(fs[0], fs[1]), std::max(fs[0], fs[1]));
    dual.shared_chord.push_back(chord);
  }
  return dual;
}

int max_face_length(const OuterplaneEmbedding& emb) {
  int q = 0;
  for (const Face& f : interior_faces(emb)) q = std::max(q, f.length());
  return q;
}

std::vector<Vertex> face_vertices(const OuterplaneEmbedding& emb, const Face& f) {
  std::vector<Vertex> out;
  out.reserve(f.boundary.size());
  for (int p : f.boundary) out.push_back(emb.outer_order[p]);
  return out;
}

}  // namespace opg
