#pragma once

#include <optional>
#include <string>
#include <vector>

#include "opgraph/graph.hpp"
#include "opgraph/outerplanar.hpp"

namespace opg {

enum class Family { kPath, kCycle, kHnq, kHn3, kFan, kLadder };

struct GeneratorParams {
  int n = 0;
  std::optional<int> q;
  std::optional<int> k;        // H_{n,3}: floor((n+2)/4)
  std::optional<int> k_prime;  // H_{n,3}: n - 4k + 4
};

/// A named extremal graph with its (canonical) outerplane embedding. Paths are
/// not 2-connected and carry no embedding.
struct GeneratedGraph {
  Graph graph;
  std::optional<OuterplaneEmbedding> embedding;
  Family family = Family::kPath;
  GeneratorParams params;
  std::vector<std::string> labels;  // labels[v] names vertex v
};

GeneratedGraph gen_path(int n);
GeneratedGraph gen_cycle(int n);

/// Two rails joined by rungs so that exactly one interior face has length q and
/// every other face has length 4. Needs q >= 4, n >= q and n - q divisible by 4.
GeneratedGraph gen_hnq(int n, int q);

/// Four-rail maximal outerplanar graph with a median vertex far from the
/// proximity bound by less than a quarter. Needs n >= 10.
GeneratedGraph gen_hn3(int n);

/// Triangulated zig-zag strip; its end vertex a_0 attains the largest
/// average distance possible in a 2-connected outerplanar graph. Needs n >= 3.
GeneratedGraph gen_fan(int n);

/// 2 x floor(n/2) ladder, plus an apex on a_1, b_1 when n is odd; radius is
/// floor(n/4) + 1. Needs n >= 4.
GeneratedGraph gen_ladder(int n);

/// Largest n' <= n for which gen_hnq(n', q) is defined, if any.
std::optional<int> nearest_hnq_order(int n, int q);

GeneratedGraph generate(Family family, int n, std::optional<int> q = std::nullopt);

std::string to_string(Family f);
std::optional<Family> parse_family(const std::string& name);

}  // namespace opg
