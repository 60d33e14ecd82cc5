#include "opgraph/generators.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "opgraph/errors.hpp"

namespace opg {

namespace {

std::string sub(const char* rail, int i) { return std::string(rail) + "_" + std::to_string(i); }

// Collects labelled vertices and edges, then assembles the graph together with
// the analytically known outer cycle.
class Builder {
 public:
  Vertex add(const std::string& label) {
    Vertex v = static_cast<Vertex>(labels_.size());
    labels_.push_back(label);
    ids_.emplace(label, v);
    return v;
  }
  Vertex operator[](const std::string& label) const {
    auto it = ids_.find(label);
    if (it == ids_.end()) throw std::logic_error("unknown vertex label " + label);
    return it->second;
  }
  void join(const std::string& a, const std::string& b) { edges_.emplace_back((*this)[a], (*this)[b]); }
  void cut(const std::string& a, const std::string& b) {
    Vertex u = (*this)[a], v = (*this)[b];
    std::erase_if(edges_, [&](const Edge& e) { return (e.first == u && e.second == v) || (e.first == v && e.second == u); });
  }

  GeneratedGraph finish(Family family, GeneratorParams params, const std::vector<std::string>& outer) const {
    GeneratedGraph out;
    out.family = family;
    out.params = params;
    out.labels = labels_;
    out.graph = Graph::from_edges(static_cast<int>(labels_.size()), edges_);
    if (outer.empty()) return out;

    const int n = out.graph.order();
    OuterplaneEmbedding emb;
    std::vector<int> pos(n, -1);
    for (const auto& label : outer) {
      pos[(*this)[label]] = static_cast<int>(emb.outer_order.size());
      emb.outer_order.push_back((*this)[label]);
    }
    for (auto [u, v] : out.graph.edges()) {
      int a = std::min(pos[u], pos[v]), b = std::max(pos[u], pos[v]);
      if (b - a == 1 || (a == 0 && b == n - 1)) continue;
      emb.chords.push_back({a, b});
    }
    std::sort(emb.chords.begin(), emb.chords.end());
    emb = canonicalize(emb);
    EmbeddingCheck check = verify_embedding(out.graph, emb);
    if (!check.accepted()) throw std::logic_error(to_string(family) + " generator: " + check.reason);
    out.embedding = std::move(emb);
    return out;
  }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, Vertex> ids_;
  std::vector<Edge> edges_;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

GeneratedGraph gen_path(int n) {
  require(n >= 2, "path needs n >= 2");
  Builder b;
  for (int i = 0; i < n; ++i) b.add(sub("v", i));
  for (int i = 0; i + 1 < n; ++i) b.join(sub("v", i), sub("v", i + 1));
  return b.finish(Family::kPath, {n}, {});
}

GeneratedGraph gen_cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  Builder b;
  std::vector<std::string> outer;
  for (int i = 0; i < n; ++i) {
    b.add(sub("v", i));
    outer.push_back(sub("v", i));
  }
  for (int i = 0; i < n; ++i) b.join(sub("v", i), sub("v", (i + 1) % n));
  return b.finish(Family::kCycle, {n}, outer);
}

GeneratedGraph gen_hnq(int n, int q) {
  require(q >= 4, "H_{n,q} needs q >= 4");
  require(n >= q, "H_{n,q} needs n >= q");
  require((n - q) % 4 == 0, "H_{n,q} needs n - q divisible by 4");

  Builder b;
  std::vector<std::string> outer;
  if (q % 2 == 0) {
    const int m = n / 2;
    for (int i = 0; i < m; ++i) b.add(sub("a", i));
    for (int i = 0; i < m; ++i) b.add(sub("b", i));
    for (int i = 0; i + 1 < m; ++i) {
      b.join(sub("a", i), sub("a", i + 1));
      b.join(sub("b", i), sub("b", i + 1));
    }
    for (int i = 0; i <= (n - q) / 4; ++i) b.join(sub("a", i), sub("b", i));
    for (int i = (n + q) / 4 - 1; i < m; ++i) b.join(sub("a", i), sub("b", i));
    for (int i = 0; i < m; ++i) outer.push_back(sub("a", i));
    for (int i = m - 1; i >= 0; --i) outer.push_back(sub("b", i));
  } else {
    const int na = (n - 1) / 2, nb = (n + 1) / 2;
    for (int i = 0; i < na; ++i) b.add(sub("a", i));
    for (int i = 0; i < nb; ++i) b.add(sub("b", i));
    for (int i = 0; i + 1 < na; ++i) b.join(sub("a", i), sub("a", i + 1));
    for (int i = 0; i + 1 < nb; ++i) b.join(sub("b", i), sub("b", i + 1));
    for (int i = 0; i <= (n - q) / 4; ++i) b.join(sub("a", i), sub("b", i));
    for (int i = (n + q - 2) / 4 - 1; i <= na - 1; ++i) b.join(sub("a", i), sub("b", i + 1));
    for (int i = 0; i < na; ++i) outer.push_back(sub("a", i));
    for (int i = nb - 1; i >= 0; --i) outer.push_back(sub("b", i));
  }
  return b.finish(Family::kHnq, {n, q}, outer);
}

GeneratedGraph gen_hn3(int n) {
  require(n >= 10, "H_{n,3} needs n >= 10");
  const int k = (n + 2) / 4;
  const int kp = n - 4 * k + 4;

  Builder b;
  b.add("a_0");
  for (int i = 1; i <= k - 2; ++i) {
    for (const char* r : {"a", "b", "c", "d"}) b.add(sub(r, i));
  }
  for (const char* r : {"a", "b", "c"}) b.add(sub(r, k - 1));
  for (int t = 1; t <= kp; ++t) b.add("x^" + std::to_string(t));
  auto x = [](int t) { return "x^" + std::to_string(t); };

  for (int i = 1; i <= k - 2; ++i) {
    b.join(sub("a", i), sub("b", i));
    b.join(sub("b", i), sub("c", i));
    b.join(sub("c", i), sub("d", i));
  }
  b.join(sub("a", k - 1), sub("b", k - 1));
  b.join(sub("b", k - 1), sub("c", k - 1));
  for (int t = 1; t < kp; ++t) b.join(x(t), x(t + 1));

  for (const char* r : {"a", "b", "c", "d"}) b.join("a_0", sub(r, 1));
  for (int i = 1; i <= k - 3; ++i) {
    for (const char* r : {"a", "b", "c", "d"}) b.join(sub(r, i), sub(r, i + 1));
  }
  for (int i = 1; i <= k - 2; ++i) b.join(sub("a", i), sub("b", i + 1));
  for (int i = 1; i <= k - 3; ++i) b.join(sub("d", i), sub("c", i + 1));
  b.join(sub("a", k - 2), sub("a", k - 1));
  b.join(sub("b", k - 2), sub("b", k - 1));
  b.join(sub("c", k - 2), sub("c", k - 1));
  b.join(sub("d", k - 2), sub("c", k - 1));
  b.join(sub("a", k - 1), x(1));
  b.join(sub("a", k - 1), x(2));
  for (int t = 2; t <= kp; ++t) b.join(sub("b", k - 1), x(t));
  for (int i = 2; i <= k - 1; ++i) b.cut(sub("b", i), sub("c", i));

  std::vector<std::string> outer{"a_0"};
  for (int i = 1; i <= k - 2; ++i) outer.push_back(sub("d", i));
  for (int i = k - 1; i >= 1; --i) outer.push_back(sub("c", i));
  for (int i = 1; i <= k - 1; ++i) outer.push_back(sub("b", i));
  for (int t = kp; t >= 1; --t) outer.push_back(x(t));
  for (int i = k - 1; i >= 1; --i) outer.push_back(sub("a", i));

  GeneratorParams params{n, 3, k, kp};
  return b.finish(Family::kHn3, params, outer);
}

GeneratedGraph gen_fan(int n) {
  require(n >= 3, "fan needs n >= 3");
  const int na = (n - 1) / 2;  // a_0 .. a_na
  const int nb = n - 1 - na;   // b_1 .. b_nb
  Builder b;
  for (int i = 0; i <= na; ++i) b.add(sub("a", i));
  for (int j = 1; j <= nb; ++j) b.add(sub("b", j));
  for (int i = 0; i < na; ++i) b.join(sub("a", i), sub("a", i + 1));
  for (int j = 1; j < nb; ++j) b.join(sub("b", j), sub("b", j + 1));
  for (int i = 0; i <= na; ++i) {
    for (int j : {i, i + 1}) {
      if (j >= 1 && j <= nb) b.join(sub("a", i), sub("b", j));
    }
  }
  std::vector<std::string> outer;
  for (int i = 0; i <= na; ++i) outer.push_back(sub("a", i));
  for (int j = nb; j >= 1; --j) outer.push_back(sub("b", j));
  return b.finish(Family::kFan, {n}, outer);
}

GeneratedGraph gen_ladder(int n) {
  require(n >= 4, "ladder needs n >= 4");
  const int m = n / 2;
  Builder b;
  for (int i = 1; i <= m; ++i) b.add(sub("a", i));
  for (int i = 1; i <= m; ++i) b.add(sub("b", i));
  for (int i = 1; i < m; ++i) {
    b.join(sub("a", i), sub("a", i + 1));
    b.join(sub("b", i), sub("b", i + 1));
  }
  for (int i = 1; i <= m; ++i) b.join(sub("a", i), sub("b", i));
  std::vector<std::string> outer;
  for (int i = 1; i <= m; ++i) outer.push_back(sub("a", i));
  for (int i = m; i >= 1; --i) outer.push_back(sub("b", i));
  if (n % 2 == 1) {
    b.add("x");
    b.join("x", "a_1");
    b.join("x", "b_1");
    outer.push_back("x");
  }
  return b.finish(Family::kLadder, {n}, outer);
}

std::optional<int> nearest_hnq_order(int n, int q) {
  if (q < 4 || n < q) return std::nullopt;
  return n - (n - q) % 4;
}

GeneratedGraph generate(Family family, int n, std::optional<int> q) {
  switch (family) {
    case Family::kPath: return gen_path(n);
    case Family::kCycle: return gen_cycle(n);
    case Family::kHnq:
      if (!q) throw DomainError("hnq needs --q");
      return gen_hnq(n, *q);
    case Family::kHn3: return gen_hn3(n);
    case Family::kFan: return gen_fan(n);
    case Family::kLadder: return gen_ladder(n);
  }
  throw std::logic_error("unknown family");
}

std::string to_string(Family f) {
  switch (f) {
    case Family::kPath: return "path";
    case Family::kCycle: return "cycle";
    case Family::kHnq: return "hnq";
    case Family::kHn3: return "hn3";
    case Family::kFan: return "fan";
    case Family::kLadder: return "ladder";
  }
  return "?";
}

std::optional<Family> parse_family(const std::string& name) {
  for (Family f : {Family::kPath, Family::kCycle, Family::kHnq, Family::kHn3, Family::kFan, Family::kLadder}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

}  // namespace opg
