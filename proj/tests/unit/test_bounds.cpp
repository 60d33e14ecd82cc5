#include <doctest.h>

#include <vector>

#include "opgraph/bounds.hpp"
#include "opgraph/errors.hpp"

using namespace opg;

TEST_SUITE("bounds") {
  TEST_CASE("proximity bound for 2-connected outerplanar graphs") {
    CHECK(prox_bound_2conn(12, 4) == Rational(49, 22));
    CHECK(prox_bound_2conn(19, 3) == Rational(73, 24));
    CHECK(prox_bound_2conn(5, 5) == Rational(27, 16));
    CHECK_THROWS_AS(prox_bound_2conn(2, 3), DomainError);
    CHECK_THROWS_AS(prox_bound_2conn(6, 2), DomainError);
    CHECK_THROWS_AS(prox_bound_2conn(6, 7), DomainError);
  }

  TEST_CASE("proximity bound for maximal outerplanar graphs") {
    CHECK(prox_bound_mop(9) == Rational(59, 32));
    CHECK(prox_bound_mop(19) == Rational(73, 24));
    CHECK(prox_bound_mop(3) == Rational(11, 8));
    CHECK_THROWS_AS(prox_bound_mop(2), DomainError);
    for (int n = 3; n <= 1000; ++n) CHECK(prox_bound_2conn(n, 3) == prox_bound_mop(n));
  }

  TEST_CASE("proximity bound is nondecreasing in q") {
    for (int n = 4; n <= 80; ++n)
      for (int q = 3; q < n; ++q) CHECK(prox_bound_2conn(n, q) <= prox_bound_2conn(n, q + 1));
  }

  TEST_CASE("remoteness bound") {
    CHECK(remoteness_bound(6) == Rational(9, 5));
    CHECK(remoteness_bound(7) == Rational(2));
    CHECK(remoteness_bound(4) == Rational(4, 3));
    CHECK_THROWS_AS(remoteness_bound(2), DomainError);
    for (int n = 3; n <= 1000; ++n) CHECK(remoteness_bound(n) <= Rational(n, 2));
  }

  TEST_CASE("radius bound") {
    CHECK(radius_bound(8) == 3);
    CHECK(radius_bound(19) == 5);
    CHECK(radius_bound(4) == 2);
    CHECK_THROWS_AS(radius_bound(1), DomainError);
  }

  TEST_CASE("chordal radius interval") {
    auto contains_exactly = [](RadiusInterval iv, std::vector<int> radii) {
      std::vector<int> got;
      for (int r = 0; r <= 20; ++r)
        if (iv.contains(r)) got.push_back(r);
      return got == radii;
    };
    CHECK(contains_exactly(chordal_radius_interval(5), {3}));
    CHECK(contains_exactly(chordal_radius_interval(6), {3, 4}));
    CHECK(contains_exactly(chordal_radius_interval(0), {0, 1}));
    for (int diam = 0; diam <= 40; ++diam) {
      RadiusInterval iv = chordal_radius_interval(diam);
      for (int r = 0; r <= 40; ++r) CHECK(iv.contains(r) == (2 * r - 2 <= diam && diam <= 2 * r));
    }
    CHECK_THROWS_AS(chordal_radius_interval(-1), DomainError);
  }

  TEST_CASE("evaluate_bound and names") {
    CHECK(evaluate_bound(BoundKind::kProximity2Connected, 12, 4).value == Rational(49, 22));
    CHECK_THROWS_AS(evaluate_bound(BoundKind::kProximity2Connected, 12), DomainError);
    CHECK(evaluate_bound(BoundKind::kRadius, 8).value == Rational(3));
    for (auto k : {BoundKind::kProximity2Connected, BoundKind::kProximityMaximal, BoundKind::kRemoteness,
                   BoundKind::kRadius}) {
      CHECK(parse_bound_kind(to_string(k)) == k);
    }
    CHECK_FALSE(parse_bound_kind("nope").has_value());
  }
}
