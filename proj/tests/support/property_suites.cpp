#include "property_suites.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "opgraph/median.hpp"
#include "opgraph/witness.hpp"
#include "oracles.hpp"

namespace suites {

namespace {

void fail(SuiteResult& r, const std::string& what) {
  if (r.failures++ == 0) r.first_failure = what;
}

}  // namespace

SuiteResult f_cap_rearrangement() {
  SuiteResult r{"f_cap rearrangement, 1 <= b <= a <= 50"};
  auto reference = [](std::int64_t x) { return (x + 1) * (x + 1) / 4; };
  for (std::int64_t x = 0; x <= 51; ++x) {
    ++r.cases;
    if (opg::f_cap(x) != reference(x)) fail(r, "f_cap(" + std::to_string(x) + ") mismatch");
  }
  for (std::int64_t a = 1; a <= 50; ++a) {
    for (std::int64_t b = 1; b <= a; ++b) {
      ++r.cases;
      if (opg::f_cap(a + 1) + opg::f_cap(b - 1) < opg::f_cap(a) + opg::f_cap(b)) {
        fail(r, "a=" + std::to_string(a) + " b=" + std::to_string(b));
      }
    }
  }
  return r;
}

SuiteResult cycle_median_bound(int trials, std::uint32_t seed) {
  SuiteResult r{"weighted cycle median bound, k <= 20"};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> len(3, 20);
  for (int t = 0; t < trials; ++t) {
    const int k = len(rng);
    // Mix dense weights with sparse ones (many zeros) to reach the extremes.
    const int hi = (t % 3 == 0) ? 1 : (t % 3 == 1 ? 10 : 1000);
    std::uniform_int_distribution<int> wdist(t % 4 == 0 ? -hi : 0, hi);
    opg::WeightedCycle wc;
    for (int i = 0; i < k; ++i) wc.doubled_weights.push_back(std::max(0, wdist(rng)));
    std::int64_t total = 0;
    for (auto w : wc.doubled_weights) total += w;
    if (total == 0) wc.doubled_weights[0] = 1, total = 1;
    ++r.cases;

    const auto naive = oracle::cycle_weighted_sums(wc.doubled_weights);
    const std::int64_t best = *std::min_element(naive.begin(), naive.end());
    opg::CycleMedian med = opg::cycle_median(wc);
    std::ostringstream where;
    where << "trial " << t << " k=" << k;
    if (med.doubled_transmission != best || naive[med.position] != best) {
      fail(r, where.str() + ": median is not a minimizer");
      continue;
    }
    // Doubled values D = 2 sigma_c and T = 2N: sigma_c <= kN/4 (even k) or
    // (k^2-1)N/(4k) (odd k).
    const bool ok = (k % 2 == 0) ? 4 * best <= std::int64_t(k) * total
                                 : 4 * std::int64_t(k) * best <= (std::int64_t(k) * k - 1) * total;
    if (!ok) fail(r, where.str() + ": median bound violated");
    std::int64_t pair_sum8 = 0;  // 8 * sum over pairs c(x)c(y)d(x,y)
    for (int i = 0; i < k; ++i) pair_sum8 += wc.doubled_weights[i] * naive[i];
    if (pair_sum8 != opg::cycle_total_weighted_distance_times8(wc)) fail(r, where.str() + ": total distance mismatch");
    const bool total_ok = (k % 2 == 0) ? 4 * pair_sum8 <= std::int64_t(k) * total * total
                                       : 4 * std::int64_t(k) * pair_sum8 <= (std::int64_t(k) * k - 1) * total * total;
    if (!total_ok) fail(r, where.str() + ": total weighted distance bound violated");
  }
  return r;
}

SuiteResult tree_median_characterization(int trials, std::uint32_t seed) {
  SuiteResult r{"weighted tree median characterization, <= 30 nodes"};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> size(1, 30);
  for (int t = 0; t < trials; ++t) {
    const int nodes = size(rng);
    opg::WeightedTree tree;
    tree.node_count = nodes;
    for (int v = 1; v < nodes; ++v) {
      // Alternate between random recursive trees and path-like trees.
      int parent = (t % 5 == 0) ? v - 1 : std::uniform_int_distribution<int>(0, v - 1)(rng);
      tree.edges.emplace_back(parent, v);
    }
    const int hi = (t % 2 == 0) ? 3 : 50;
    for (int v = 0; v < nodes; ++v) {
      int w = std::uniform_int_distribution<int>(-hi / 2, hi)(rng);
      tree.weights.push_back(std::max(0, w));
    }
    std::int64_t total = 0;
    for (auto w : tree.weights) total += w;
    if (total == 0) tree.weights[nodes - 1] = 1, total = 1;
    ++r.cases;

    oracle::EdgeList edges(tree.edges.begin(), tree.edges.end());
    const auto sums = oracle::tree_weighted_sums(nodes, edges, tree.weights);
    const std::int64_t best = *std::min_element(sums.begin(), sums.end());
    const auto bw = opg::branch_weights(tree);
    int first_light = -1;
    for (int v = 0; v < nodes; ++v) {
      const std::int64_t obw = oracle::tree_branch_weight(nodes, edges, tree.weights, v);
      const bool light = 2 * obw <= total;
      if (light && first_light < 0) first_light = v;
      if (bw[v] != obw || light != (sums[v] == best)) {
        fail(r, "trial " + std::to_string(t) + " node " + std::to_string(v));
        break;
      }
    }
    opg::TreeMedian med = opg::tree_median(tree);
    if (med.node != first_light) fail(r, "trial " + std::to_string(t) + ": tree_median picked another node");
  }
  return r;
}

std::vector<SuiteResult> run_all(int trials, std::uint32_t seed) {
  return {f_cap_rearrangement(), cycle_median_bound(trials, seed), tree_median_characterization(trials, seed + 1)};
}

}  // namespace suites
