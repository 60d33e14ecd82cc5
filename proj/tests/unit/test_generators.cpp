#include <doctest.h>

#include "opgraph/bounds.hpp"
#include "opgraph/errors.hpp"
#include "opgraph/generators.hpp"
#include "opgraph/metrics.hpp"

using namespace opg;

namespace {

std::vector<int> face_lengths(const GeneratedGraph& g) {
  std::vector<int> out;
  for (const Face& f : interior_faces(*g.embedding)) out.push_back(f.length());
  std::sort(out.begin(), out.end());
  return out;
}

void check_embedding_round_trip(const GeneratedGraph& g) {
  REQUIRE(g.embedding.has_value());
  CHECK(g.graph.order() == g.params.n);
  CHECK(verify_embedding(g.graph, *g.embedding).accepted());
  Recognition r = recognize(g.graph);
  REQUIRE(r.ok());
  CHECK(*r.embedding == *g.embedding);
}

}  // namespace

TEST_SUITE("generators") {
  TEST_CASE("paths and cycles") {
    CHECK(global_metrics(gen_cycle(7).graph).proximity == Rational(2));
    CHECK(global_metrics(gen_path(6).graph).remoteness == Rational(3));
    CHECK(global_metrics(gen_cycle(3).graph).proximity == Rational(1));
    CHECK_FALSE(gen_path(5).embedding.has_value());
    check_embedding_round_trip(gen_cycle(9));
    CHECK_THROWS_AS(gen_path(1), DomainError);
    CHECK_THROWS_AS(gen_cycle(2), DomainError);
  }

  TEST_CASE("H_{n,q}: one face of length q, the rest quadrilaterals") {
    GeneratedGraph h = gen_hnq(12, 4);
    CHECK(global_metrics(h.graph).proximity == Rational(24, 11));
    CHECK(h.labels[2] == "a_2");
    CHECK(h.labels[8] == "b_2");

    GeneratedGraph h8 = gen_hnq(12, 8);
    CHECK(max_face_length(*h8.embedding) == 8);

    GeneratedGraph h5 = gen_hnq(13, 5);
    int a = 0, b = 0;
    for (const auto& l : h5.labels) (l[0] == 'a' ? a : b)++;
    CHECK(a == 6);
    CHECK(b == 7);

    for (int q = 4; q <= 20; ++q) {
      for (int n = q; n <= 60; n += 4) {
        GeneratedGraph g = gen_hnq(n, q);
        check_embedding_round_trip(g);
        auto lengths = face_lengths(g);
        CHECK(std::count(lengths.begin(), lengths.end(), q) == (q == 4 ? static_cast<long>(lengths.size()) : 1));
        CHECK(std::all_of(lengths.begin(), lengths.end(), [&](int l) { return l == 4 || l == q; }));
        CHECK(global_metrics(g.graph).proximity < prox_bound_2conn(n, q));
      }
    }
    CHECK_THROWS_AS(gen_hnq(13, 4), DomainError);
    CHECK_THROWS_AS(gen_hnq(12, 3), DomainError);
    CHECK_THROWS_AS(gen_hnq(7, 8), DomainError);
    CHECK(nearest_hnq_order(14, 4) == 12);
    CHECK_FALSE(nearest_hnq_order(3, 4).has_value());
  }

  TEST_CASE("H_{n,3}: maximal outerplanar with k and k'") {
    GeneratedGraph h19 = gen_hn3(19);
    CHECK(h19.params.k == 5);
    CHECK(h19.params.k_prime == 3);
    CHECK(h19.graph.order() == 19);
    GeneratedGraph h12 = gen_hn3(12);
    CHECK(h12.params.k == 3);
    CHECK(h12.params.k_prime == 4);
    for (int n = 10; n <= 60; ++n) {
      GeneratedGraph g = gen_hn3(n);
      check_embedding_round_trip(g);
      CHECK(max_face_length(*g.embedding) == 3);
      CHECK(g.graph.size() == static_cast<std::size_t>(2 * n - 3));
      CHECK(*g.params.k_prime >= 2);
      CHECK(*g.params.k_prime <= 5);
    }
    CHECK_THROWS_AS(gen_hn3(9), DomainError);
  }

  TEST_CASE("fan attains the remoteness bound at a_0") {
    for (int n = 3; n <= 40; ++n) {
      GeneratedGraph g = gen_fan(n);
      check_embedding_round_trip(g);
      CHECK(max_face_length(*g.embedding) == 3);
      VertexMetrics a0 = vertex_metrics(g.graph, 0);
      CHECK(a0.average_distance == remoteness_bound(n));
    }
    CHECK(vertex_metrics(gen_fan(6).graph, 0).transmission == 9);
    CHECK(global_metrics(gen_fan(7).graph).remoteness == Rational(2));
    CHECK(global_metrics(gen_fan(3).graph).remoteness == Rational(1));
  }

  TEST_CASE("ladder radius") {
    CHECK(global_metrics(gen_ladder(8).graph).radius == 3);
    GeneratedGraph l9 = gen_ladder(9);
    CHECK(global_metrics(l9.graph).radius == 3);
    CHECK(face_lengths(l9).front() == 3);
    GeneratedGraph l16 = gen_ladder(16);
    CHECK(global_metrics(l16.graph).radius == 5);
    CHECK(4 * max_face_length(*l16.embedding) <= 16 + 2);
    for (int n = 4; n <= 40; ++n) check_embedding_round_trip(gen_ladder(n));
    CHECK_THROWS_AS(gen_ladder(3), DomainError);
  }

  TEST_CASE("family names") {
    for (auto f : {Family::kPath, Family::kCycle, Family::kHnq, Family::kHn3, Family::kFan, Family::kLadder})
      CHECK(parse_family(to_string(f)) == f);
    CHECK(generate(Family::kLadder, 8).graph.order() == 8);
    CHECK_THROWS_AS(generate(Family::kHnq, 12), DomainError);
  }
}
