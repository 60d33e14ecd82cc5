#pragma once

#include <cstdint>
#include <vector>

#include "opgraph/outerplanar.hpp"
#include "opgraph/rational.hpp"

namespace opg {

struct TreeMedian {
  int node = 0;
  std::int64_t branch_weight = 0;  // heaviest component of T - node
};

/// Branch weight of every node: the heaviest component left after deleting it.
std::vector<std::int64_t> branch_weights(const WeightedTree& t);

/// Smallest-id node whose branch weight is at most half the total weight.
/// Such nodes are exactly the weighted medians of the tree. Throws
/// ZeroTotalWeight when all weights vanish and std::invalid_argument when the
/// edge list is not a tree.
TreeMedian tree_median(const WeightedTree& t);

struct CentralFace {
  int index = 0;  // position in interior_faces()
  Face face;
  int largest_component = 0;  // vertices in the largest component of G - V(face)
};

/// Face of a weighted median of the weak dual (weights: face length - 2).
/// Every component of G - V(F) has at most (n-2)/2 vertices; this is
/// re-checked on each call and a failure throws std::logic_error.
CentralFace central_face(const OuterplaneEmbedding& emb);
CentralFace central_face(const OuterplaneEmbedding& emb, const std::vector<Face>& faces);

/// Component sizes of G - V(face), G being the embedding's graph.
std::vector<int> components_outside_face(const OuterplaneEmbedding& emb, const Face& face);

/// Cycle with vertex weights stored doubled, so the half-integer weights of
/// the proximity construction stay integral.
struct WeightedCycle {
  std::vector<std::int64_t> doubled_weights;

  int length() const noexcept { return static_cast<int>(doubled_weights.size()); }
  std::int64_t doubled_total() const;
};

/// 2 * sum_w c(w) d(v, w) on the cycle, v = position.
std::int64_t cycle_weighted_transmission(const WeightedCycle& wc, int position);

/// The doubled weighted transmission of every position, O(k) via prefix sums.
std::vector<std::int64_t> cycle_weighted_transmissions(const WeightedCycle& wc);

/// Upper bound on the smallest weighted transmission of a cycle with total
/// weight N: kN/4 for even k, (k^2-1)N/(4k) for odd k. Returned doubled.
Rational cycle_median_bound_doubled(int k, const Rational& total_weight);

struct CycleMedian {
  int position = 0;
  std::int64_t doubled_transmission = 0;
  Rational doubled_bound;
};

/// Smallest-index minimizer of the weighted transmission. The bound above is
/// asserted (std::logic_error on failure). Throws ZeroTotalWeight.
CycleMedian cycle_median(const WeightedCycle& wc);

/// 8 * sum over unordered pairs c(x)c(y)d(x,y), from the doubled weights.
std::int64_t cycle_total_weighted_distance_times8(const WeightedCycle& wc);

}  // namespace opg
