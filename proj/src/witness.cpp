#include "opgraph/witness.hpp"

#include <algorithm>
#include <stdexcept>

#include "opgraph/errors.hpp"
#include "opgraph/metrics.hpp"

namespace opg {

std::int64_t f_cap(std::int64_t x) {
  if (x < 0) throw std::invalid_argument("f_cap needs x >= 0");
  return (x + 1) * (x + 1) / 4;
}

std::int64_t proximity_certificate_times8(int n, int k) {
  const std::int64_t N = n, K = k;
  return N * N + 4 * N + K * K - 4 * K + 4;
}

std::int64_t radius_certificate_times8(int n) { return 8 * (n / 4 + 1); }

SegmentDecomposition segment_decomposition(const OuterplaneEmbedding& emb, const Face& face) {
  const int n = emb.order();
  const int k = face.length();
  auto faces = interior_faces(emb);
  if (std::find(faces.begin(), faces.end(), face) == faces.end()) {
    throw std::invalid_argument("face is not an interior face of the embedding");
  }

  int start = 0;
  for (int t = 1; t < k; ++t) {
    if (emb.outer_order[face.boundary[t]] < emb.outer_order[face.boundary[start]]) start = t;
  }
  SegmentDecomposition sd;
  sd.face = face;
  sd.k = k;
  for (int i = 0; i < k; ++i) {
    int pos = face.boundary[(start + i) % k];
    sd.face_positions.push_back(pos);
    sd.face_vertices.push_back(emb.outer_order[pos]);
  }
  for (int i = 0; i < k; ++i) {
    int gap = (sd.face_positions[(i + 1) % k] - sd.face_positions[i] + n) % n;
    sd.p.push_back(gap - 1);
  }
  return sd;
}

WeightedCycle boundary_weights(const SegmentDecomposition& sd) {
  WeightedCycle wc;
  wc.doubled_weights.resize(sd.k);
  for (int i = 0; i < sd.k; ++i) wc.doubled_weights[i] = 2 + sd.p[i] + sd.p[(i + sd.k - 1) % sd.k];
  return wc;
}

namespace {

int first_argmax(const std::vector<int>& v, int from) {
  int best = from;
  for (int i = from + 1; i < static_cast<int>(v.size()); ++i) {
    if (v[i] > v[best]) best = i;
  }
  return best;
}

}  // namespace

WitnessCertificate proximity_witness(const Graph& g) { return proximity_witness(g, recognize_or_throw(g)); }

WitnessCertificate proximity_witness(const Graph& g, const OuterplaneEmbedding& emb) {
  const int n = g.order();
  auto faces = interior_faces(emb);
  CentralFace cf = central_face(emb, faces);
  SegmentDecomposition sd = segment_decomposition(emb, cf.face);

  WitnessCertificate cert;
  cert.kind = WitnessKind::kProximity;
  cert.n = n;
  cert.k = sd.k;
  for (const Face& f : faces) cert.q = std::max(cert.q, f.length());
  cert.p = sd.p;
  cert.face_vertices = sd.face_vertices;
  cert.central_face_index = cf.index;

  const int half = (n - sd.k) / 2;
  const bool balanced = std::all_of(sd.p.begin(), sd.p.end(), [&](int pi) { return pi <= half; });
  if (balanced) {
    CycleMedian cm = cycle_median(boundary_weights(sd));
    cert.vertex = sd.face_vertices[cm.position];
    cert.proximity_case = ProximityCase::kCase1;
  } else {
    cert.vertex = sd.face_vertices[first_argmax(sd.p, 0)];
    cert.proximity_case = ProximityCase::kCase2;
  }
  cert.exact_value = vertex_metrics(g, cert.vertex).transmission;
  cert.guaranteed_bound_times8 = proximity_certificate_times8(n, sd.k);
  return cert;
}

WitnessCertificate radius_witness(const Graph& g) { return radius_witness(g, recognize_or_throw(g)); }

WitnessCertificate radius_witness(const Graph& g, const OuterplaneEmbedding& emb) {
  const int n = g.order();
  auto faces = interior_faces(emb);
  int q = 0;
  for (const Face& f : faces) q = std::max(q, f.length());
  if (4 * q > n + 2) throw FaceTooLong(q, n);

  CentralFace cf = central_face(emb, faces);
  SegmentDecomposition sd = segment_decomposition(emb, cf.face);
  const int k = sd.k;

  // Relabel so that P_0 is a longest segment.
  const int shift = first_argmax(sd.p, 0);
  std::vector<Vertex> v(k);
  std::vector<int> p(k);
  for (int i = 0; i < k; ++i) {
    v[i] = sd.face_vertices[(shift + i) % k];
    p[i] = sd.p[(shift + i) % k];
  }
  RadiusChoice choice;
  choice.j = first_argmax(p, 1);
  if (choice.j > k / 2) {
    // Walk the face the other way: v_0 and v_1 swap, so P_0 is kept.
    std::vector<Vertex> rv(k);
    std::vector<int> rp(k);
    for (int i = 0; i < k; ++i) {
      rv[i] = v[((1 - i) % k + k) % k];
      rp[i] = p[(k - i) % k];
    }
    v = std::move(rv);
    p = std::move(rp);
    choice.reversed = true;
    choice.j = first_argmax(p, 1);
  }

  choice.ell = (n + 4) / 4 - (p[0] + 2) / 2 + 1;
  if (choice.ell < 1) throw std::logic_error("radius construction produced ell < 1");
  choice.chose_v_ell = choice.ell <= choice.j;

  WitnessCertificate cert;
  cert.kind = WitnessKind::kRadius;
  cert.n = n;
  cert.k = k;
  cert.q = q;
  cert.p = p;
  cert.face_vertices = v;
  cert.central_face_index = cf.index;
  cert.vertex = choice.chose_v_ell ? v[choice.ell] : v[choice.j];
  cert.radius = choice;
  cert.exact_value = vertex_metrics(g, cert.vertex).eccentricity;
  cert.guaranteed_bound_times8 = radius_certificate_times8(n);
  return cert;
}

std::string to_string(WitnessKind kind) { return kind == WitnessKind::kProximity ? "proximity" : "radius"; }
std::string to_string(ProximityCase c) { return c == ProximityCase::kCase1 ? "case1" : "case2"; }

}  // namespace opg
