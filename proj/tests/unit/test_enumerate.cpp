#include <doctest.h>

#include "bridge.hpp"
#include "opgraph/bounds.hpp"
#include "opgraph/enumerate.hpp"
#include "opgraph/errors.hpp"
#include "opgraph/io.hpp"
#include "opgraph/metrics.hpp"
#include "oracles.hpp"

using namespace opg;

namespace {

Dissection make(int n, std::vector<Chord> chords) {
  Dissection d;
  d.n = n;
  d.chords = std::move(chords);
  return d;
}

}  // namespace

TEST_SUITE("enumerate") {
  TEST_CASE("labeled counts against the interval recursion and brute force") {
    auto f = oracle::dissection_count_recursion(12);
    auto cat = oracle::catalan(10);
    CHECK(f[5] == 11);
    CHECK(f[6] == 45);
    CHECK(f[8] == 903);
    CHECK(f[9] == 4279);
    for (int n = 3; n <= 12; ++n) {
      CHECK(count_dissections(n, {}) == f[n]);
      CHECK(count_dissections(n, {.triangulations_only = true}) == cat[n - 2]);
    }
    for (int n = 3; n <= 8; ++n) {
      CHECK(count_dissections(n, {}) == oracle::brute_force_dissection_count(n));
      CHECK(count_dissections(n, {.max_face = 4}) == oracle::brute_force_dissection_count(n, 4));
      CHECK(count_dissections(n, {.triangulations_only = true}) == oracle::brute_force_dissection_count(n, 0, true));
    }
    CHECK(count_dissections(6, {.triangulations_only = true, .up_to_symmetry = true}) == 3);
  }

  TEST_CASE("each dissection is emitted once, sorted, non-crossing, with the right max face") {
    for (int n = 3; n <= 9; ++n) {
      std::set<std::vector<Chord>> seen;
      for_each_dissection(n, {}, [&](const Dissection& d) {
        CHECK(std::is_sorted(d.chords.begin(), d.chords.end()));
        CHECK(seen.insert(d.chords).second);
        for (std::size_t i = 0; i < d.chords.size(); ++i) {
          CHECK(d.chords[i].hi - d.chords[i].lo >= 2);
          CHECK_FALSE((d.chords[i].lo == 0 && d.chords[i].hi == n - 1));
          for (std::size_t j = i + 1; j < d.chords.size(); ++j)
            CHECK_FALSE(oracle::chords_cross({d.chords[i].lo, d.chords[i].hi}, {d.chords[j].lo, d.chords[j].hi}));
        }
      });
    }
  }

  TEST_CASE("enumeration caps and domain") {
    CHECK_THROWS_AS(count_dissections(17, {}), CapExceeded);
    CHECK_THROWS_AS(count_dissections(2, {}), DomainError);
    CHECK_THROWS_AS(count_dissections(12, {.cap = 10}), CapExceeded);
  }

  TEST_CASE("canonical form") {
    CHECK(canonical_form(make(5, {{1, 3}})).chords == std::vector<Chord>{{0, 2}});
    CHECK(canonical_form(make(4, {})).chords.empty());
    Dissection fan = make(6, {{0, 2}, {0, 3}, {0, 4}});
    CHECK(canonical_form(fan).chords == fan.chords);
    CHECK(is_canonical(fan));
    CHECK_FALSE(is_canonical(make(5, {{1, 3}})));
  }

  TEST_CASE("canonical form is idempotent and constant on orbits") {
    for (int n = 4; n <= 8; ++n) {
      for_each_dissection(n, {}, [&](const Dissection& d) {
        Dissection c = canonical_form(d);
        CHECK(canonical_form(c) == c);
        CHECK(is_canonical(c));
        // Rotate by one and reflect: the class representative must not move.
        Dissection rot = make(n, {});
        for (Chord ch : d.chords) {
          int a = (ch.lo + 1) % n, b = (ch.hi + 1) % n;
          rot.chords.push_back({std::min(a, b), std::max(a, b)});
        }
        std::sort(rot.chords.begin(), rot.chords.end());
        CHECK(canonical_form(rot) == c);
        Dissection ref = make(n, {});
        for (Chord ch : d.chords) ref.chords.push_back({n - 1 - ch.hi, n - 1 - ch.lo});
        std::sort(ref.chords.begin(), ref.chords.end());
        CHECK(canonical_form(ref) == c);
      });
    }
  }

  TEST_CASE("dihedral classes coincide with isomorphism classes for n <= 8") {
    for (int n = 3; n <= 8; ++n) {
      auto reps = enumerate_dissections(n, {.up_to_symmetry = true});
      std::vector<oracle::EdgeList> graphs;
      for (const auto& d : reps) graphs.push_back(bridge::edges_of(dissection_graph(d)));
      for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(oracle::isomorphic(n, graphs[i], graphs[j]));
    }
  }

  TEST_CASE("verification summaries on small polygons") {
    VerificationSummary s6 = verify_bounds_over(6);
    CHECK(s6.all_clean());
    REQUIRE(s6.max_proximity.has_value());
    CHECK(s6.max_proximity->chords.empty());
    CHECK(s6.max_proximity->value == Rational(9, 5));
    CHECK(s6.max_proximity->gap == prox_bound_2conn(6, 6) - Rational(9, 5));
    CHECK(s6.labeled_seen == 45);

    VerifyOptions mops;
    mops.enumeration.triangulations_only = true;
    VerificationSummary s8 = verify_bounds_over(8, mops);
    CHECK(s8.all_clean());
    REQUIRE(s8.max_radius.has_value());
    // Triangulated octagons reach radius 2 at most; the bound 3 is attained
    // at n = 8 only by graphs with a quadrilateral face, such as the ladder.
    int oracle_max = 0;
    for_each_dissection(8, {.triangulations_only = true}, [&](const Dissection& d) {
      oracle_max = std::max(oracle_max, oracle::metrics(8, bridge::edges_of(dissection_graph(d))).radius);
    });
    CHECK(oracle_max == 2);
    CHECK(s8.max_radius->value == Rational(oracle_max));
    CHECK(s8.max_radius->value < Rational(radius_bound(8)));
    VerifyOptions quads;
    quads.enumeration.max_face = 4;
    VerificationSummary s8q = verify_bounds_over(8, quads);
    CHECK(s8q.max_radius->value == Rational(radius_bound(8)));

    VerificationSummary s10 = verify_bounds_over(10);
    CHECK(s10.all_clean());
    CHECK(s10.proximity_bound.violations.empty());
    CHECK(s10.graphs_checked == s10.proximity_bound.checked);
  }

  TEST_CASE("worker count does not change the report") {
    VerifyOptions one, three;
    three.workers = 3;
    auto a = summary_json(verify_bounds_over(9, one)).dump();
    auto b = summary_json(verify_bounds_over(9, three)).dump();
    CHECK(a == b);
    CHECK(count_dissections(10, {}, 4) == count_dissections(10, {}));
  }

  TEST_CASE("summary merge is associative") {
    auto all = enumerate_dissections(8, {.up_to_symmetry = true});
    VerifyOptions opts;
    VerificationSummary parts[3];
    for (std::size_t i = 0; i < all.size(); ++i) verify_one(all[i], opts, parts[i % 3]);
    VerificationSummary left = parts[0], right = parts[1], inner;
    left.merge(parts[1]);
    left.merge(parts[2]);
    right.merge(parts[2]);
    inner = parts[0];
    inner.merge(right);
    left.n = inner.n = 8;
    CHECK(summary_json(left).dump() == summary_json(inner).dump());
  }

  TEST_CASE("violations are recorded with the offending chords") {
    CheckTally t;
    t.checked = 1;
    CheckTally other;
    other.checked = 2;
    other.passed = 1;
    other.violations.push_back({{{0, 2}}, "detail"});
    t.merge(other);
    CHECK(t.checked == 3);
    CHECK_FALSE(t.clean());
    CHECK(t.violations.size() == 1);
  }

  TEST_CASE("q_n on small orders") {
    QnReport q3 = estimate_qn(3);
    CHECK(q3.qn == 3);
    CHECK_FALSE(q3.failing_witness.has_value());

    QnReport q6 = estimate_qn(6);
    CHECK(q6.qn < 6);
    REQUIRE(q6.failing_witness.has_value());
    CHECK(q6.failing_witness->max_face == q6.qn + 1);
    CHECK(*q6.failing_radius > radius_bound(6));
    CHECK(q6.lower_bracket_holds);
  }
}
