#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "opgraph/graph.hpp"

namespace opg {

/// A diagonal of the outer polygon, given by polygon positions lo < hi.
struct Chord {
  int lo = 0;
  int hi = 0;
  friend auto operator<=>(const Chord&, const Chord&) = default;
};

/// Certified plane embedding of a 2-connected outerplanar graph: the
/// Hamiltonian (outer) cycle as a vertex order plus the remaining edges as
/// pairwise non-crossing chords between positions of that order.
struct OuterplaneEmbedding {
  std::vector<Vertex> outer_order;
  std::vector<Chord> chords;  // sorted

  int order() const noexcept { return static_cast<int>(outer_order.size()); }
  friend bool operator==(const OuterplaneEmbedding&, const OuterplaneEmbedding&) = default;
};

/// Interior face as increasing polygon positions; consecutive entries (and
/// the last/first pair) are joined by an outer edge or a chord.
struct Face {
  std::vector<int> boundary;
  int length() const noexcept { return static_cast<int>(boundary.size()); }
  friend bool operator==(const Face&, const Face&) = default;
};

struct WeightedTree {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::int64_t> weights;

  std::int64_t total_weight() const;
};

/// Weak dual: one node per interior face (indexed like interior_faces()),
/// adjacent when the faces share a chord, weighted by face length minus two.
struct WeakDualTree {
  WeightedTree tree;
  std::vector<Chord> shared_chord;  // parallel to tree.edges
};

enum class RecognitionStatus { kOuterplanar, kNotBiconnected, kNotOuterplanar };

struct Recognition {
  RecognitionStatus status = RecognitionStatus::kNotOuterplanar;
  std::optional<OuterplaneEmbedding> embedding;
  std::string reason;

  bool ok() const noexcept { return status == RecognitionStatus::kOuterplanar; }
};

/// Decides whether g is 2-connected outerplanar and, if so, returns its
/// embedding in canonical form (see canonicalize). The embedding is always
/// passed through verify_embedding before being returned.
Recognition recognize(const Graph& g);

/// Like recognize, but throws NotBiconnected / NotOuterplanar on failure.
OuterplaneEmbedding recognize_or_throw(const Graph& g);

/// First cut vertex found by a low-point DFS, or nullopt if g is 2-connected.
/// Disconnected graphs and graphs with fewer than three vertices report -1.
std::optional<Vertex> find_cut_vertex(const Graph& g);
bool is_biconnected(const Graph& g);

enum class EmbeddingDefect {
  kNone,
  kBadOrder,      // outer order is not a permutation of 0..n-1
  kMissingEdge,   // an edge of g is neither on the cycle nor a chord
  kExtraEdge,     // a cycle edge or chord is not an edge of g
  kBadChord,      // chord out of range, duplicated, or a polygon side
  kCrossingPair,  // two chords interleave
};

struct EmbeddingCheck {
  EmbeddingDefect defect = EmbeddingDefect::kNone;
  std::string reason;
  std::optional<Edge> edge;                        // offending edge (vertex ids)
  std::optional<std::pair<Chord, Chord>> crossing;  // offending chord pair

  bool accepted() const noexcept { return defect == EmbeddingDefect::kNone; }
};

EmbeddingCheck verify_embedding(const Graph& g, const OuterplaneEmbedding& emb);

/// Rotates/reflects the outer order so it starts at vertex 0 and continues to
/// the smaller-id of 0's two cycle neighbours; chords are re-expressed.
OuterplaneEmbedding canonicalize(const OuterplaneEmbedding& emb);

/// Graph whose edges are exactly the embedding's cycle edges and chords.
Graph embedding_graph(const OuterplaneEmbedding& emb);

/// Interior faces, ordered by their boundary (smallest position first).
std::vector<Face> interior_faces(const OuterplaneEmbedding& emb);

WeakDualTree weak_dual(const OuterplaneEmbedding& emb);
WeakDualTree weak_dual(const OuterplaneEmbedding& emb, const std::vector<Face>& faces);

int max_face_length(const OuterplaneEmbedding& emb);

/// Vertex ids on a face's boundary, in outer-cycle order.
std::vector<Vertex> face_vertices(const OuterplaneEmbedding& emb, const Face& f);

}  // namespace opg
