#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "opgraph/graph.hpp"
#include "opgraph/median.hpp"
#include "opgraph/outerplanar.hpp"

namespace opg {

/// floor((x+1)^2 / 4): the largest transmission contribution of a segment
/// with x internal vertices hanging between two face vertices.
std::int64_t f_cap(std::int64_t x);

/// A face F = v_0 .. v_{k-1} listed in outer-cycle order, together with the
/// number p_i of cycle vertices strictly between v_i and v_{i+1}.
struct SegmentDecomposition {
  Face face;
  int k = 0;
  std::vector<Vertex> face_vertices;  // v_0 .. v_{k-1}
  std::vector<int> face_positions;    // outer-cycle positions of the v_i
  std::vector<int> p;                 // sum = n - k
};

/// v_0 is the face vertex with the smallest id; the direction follows the
/// outer cycle. Throws std::invalid_argument if `face` is not an interior face.
SegmentDecomposition segment_decomposition(const OuterplaneEmbedding& emb, const Face& face);

/// Each non-face vertex splits its unit weight between the nearest face
/// vertices: c(v_i) = 1 + (p_i + p_{i-1}) / 2, stored doubled.
WeightedCycle boundary_weights(const SegmentDecomposition& sd);

/// n^2 + 4n + k^2 - 4k + 4, i.e. eight times the guaranteed transmission.
std::int64_t proximity_certificate_times8(int n, int k);

/// Eight times floor(n/4) + 1.
std::int64_t radius_certificate_times8(int n);

enum class WitnessKind { kProximity, kRadius };
enum class ProximityCase { kCase1, kCase2 };

struct RadiusChoice {
  int ell = 0;
  int j = 0;
  bool chose_v_ell = false;  // u = v_ell when ell <= j, otherwise u = v_j
  bool reversed = false;     // face orientation was flipped to get j <= k/2
};

/// A constructed low-transmission (or low-eccentricity) vertex with its exact
/// value, recomputed by BFS in G, and the guaranteed bound it must meet.
struct WitnessCertificate {
  WitnessKind kind = WitnessKind::kProximity;
  int n = 0;
  Vertex vertex = 0;
  std::int64_t exact_value = 0;             // transmission or eccentricity
  std::int64_t guaranteed_bound_times8 = 0;
  int k = 0;  // central face length
  int q = 0;  // max face length
  std::vector<int> p;
  std::vector<Vertex> face_vertices;  // in the orientation the construction used
  int central_face_index = 0;
  std::optional<ProximityCase> proximity_case;
  std::optional<RadiusChoice> radius;

  bool holds() const noexcept { return 8 * exact_value <= guaranteed_bound_times8; }
};

/// Low-proximity vertex: Case 1 (every p_i <= floor((n-k)/2)) takes the
/// weighted median of the central face under boundary_weights; Case 2 takes
/// the face vertex that starts the longest segment.
WitnessCertificate proximity_witness(const Graph& g);
WitnessCertificate proximity_witness(const Graph& g, const OuterplaneEmbedding& emb);

/// Low-eccentricity vertex for graphs whose faces have length <= (n+2)/4.
/// Throws FaceTooLong when that precondition fails.
WitnessCertificate radius_witness(const Graph& g);
WitnessCertificate radius_witness(const Graph& g, const OuterplaneEmbedding& emb);

std::string to_string(WitnessKind kind);
std::string to_string(ProximityCase c);

}  // namespace opg
