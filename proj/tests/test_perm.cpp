#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "recipair/perm.hpp"
#include "test_util.hpp"

using namespace recipair;

TEST_CASE("construction validates bijections") {
  CHECK_NOTHROW(Permutation({1, 0, 2}));
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 3}), std::invalid_argument);
  CHECK(Permutation::identity(4).is_identity());
  CHECK(Permutation().degree() == 0);
}

TEST_CASE("from_cycles fixes unmentioned points") {
  const Permutation p = Permutation::from_cycles(5, {{0, 2}, {1, 3}});
  CHECK(p.apply(0) == 2);
  CHECK(p.apply(2) == 0);
  CHECK(p.apply(1) == 3);
  CHECK(p.apply(4) == 4);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 1}, {1, 2}}),
                  std::invalid_argument);
}

TEST_CASE("composition applies the right factor first") {
  const Permutation a = Permutation::from_cycles(3, {{0, 1}});
  const Permutation b = Permutation::from_cycles(3, {{1, 2}});
  CHECK(a * b == Permutation::from_cycles(3, {{0, 1, 2}}));
  CHECK(b * a == Permutation::from_cycles(3, {{0, 2, 1}}));
}

TEST_CASE("composition, inverse, identity laws") {
  for (int i = 0; i < 100; ++i) {
    const Permutation p = testutil::random_permutation(7);
    const Permutation q = testutil::random_permutation(7);
    CHECK((p * p.inverse()).is_identity());
    CHECK((p.inverse() * p).is_identity());
    CHECK(p * Permutation::identity(7) == p);
    const Permutation r = testutil::random_permutation(7);
    CHECK((p * q) * r == p * (q * r));
    CHECK((p * q).inverse() == q.inverse() * p.inverse());
  }
}

TEST_CASE("cycles are listed from their minimum, ordered by minimum") {
  const Permutation p = Permutation::from_cycles(6, {{2, 4, 3}, {0, 5}});
  const auto cycles = p.cycles();
  REQUIRE(cycles.size() == 3);
  CHECK(cycles[0] == std::vector<std::uint8_t>{0, 5});
  CHECK(cycles[1] == std::vector<std::uint8_t>{1});
  CHECK(cycles[2] == std::vector<std::uint8_t>{2, 4, 3});
  CHECK(p.cycle_count() == 3);
  CHECK(Permutation::identity(4).cycle_count() == 4);
}

TEST_CASE("parity counts transpositions mod 2") {
  CHECK(Permutation::identity(5).is_even());
  CHECK_FALSE(Permutation::from_cycles(5, {{0, 1}}).is_even());
  CHECK(Permutation::from_cycles(5, {{0, 1, 2}}).is_even());
  CHECK(Permutation::from_cycles(5, {{0, 1}, {2, 3}}).is_even());
  CHECK_FALSE(Permutation::from_cycles(4, {{0, 1, 2, 3}}).is_even());
  for (int i = 0; i < 50; ++i) {
    const Permutation p = testutil::random_permutation(8);
    const Permutation q = testutil::random_permutation(8);
    CHECK((p * q).is_even() == (p.is_even() == q.is_even()));
    CHECK(p.inverse().is_even() == p.is_even());
  }
}

TEST_CASE("moved_points") {
  const Permutation p = Permutation::from_cycles(6, {{1, 4}});
  CHECK(p.moved_points() == std::vector<std::uint8_t>{1, 4});
  CHECK(Permutation::identity(3).moved_points().empty());
}

TEST_CASE("cycle strings are 1-indexed and round-trip") {
  const Permutation p = Permutation::from_cycles(5, {{0, 2}, {1, 3, 4}});
  CHECK(to_cycle_string(p) == "(1,3)(2,4,5)");
  CHECK(to_cycle_string(Permutation::identity(3)) == "()");
  CHECK(permutation_from_cycle_string(5, to_cycle_string(p)) == p);
  CHECK(permutation_from_cycle_string(3, "()") == Permutation::identity(3));
  CHECK(permutation_from_cycle_string(4, " ( 1 , 2 ) ") ==
        Permutation::from_cycles(4, {{0, 1}}));
  // Singleton cycles are accepted as explicit fixed points.
  CHECK(permutation_from_cycle_string(3, "(1)(2,3)") ==
        Permutation::from_cycles(3, {{1, 2}}));
  for (int i = 0; i < 50; ++i) {
    const Permutation q = testutil::random_permutation(9);
    CHECK(permutation_from_cycle_string(9, to_cycle_string(q)) == q);
  }
}

TEST_CASE("cycle string parsing rejects malformed input") {
  CHECK_THROWS_AS(permutation_from_cycle_string(3, "(1,4)"),
                  std::invalid_argument);
  CHECK_THROWS_AS(permutation_from_cycle_string(3, "(1,2)(2,3)"),
                  std::invalid_argument);
  CHECK_THROWS_AS(permutation_from_cycle_string(3, "(1,2"),
                  std::invalid_argument);
  CHECK_THROWS_AS(permutation_from_cycle_string(3, "1,2"),
                  std::invalid_argument);
  CHECK_THROWS_AS(permutation_from_cycle_string(3, "(0,1)"),
                  std::invalid_argument);
  CHECK_THROWS_AS(permutation_from_cycle_string(3, "(1,2)x"),
                  std::invalid_argument);
  CHECK_THROWS_AS(permutation_from_cycle_string(3, "(1,2,)"),
                  std::invalid_argument);
}

TEST_CASE("hashing agrees with equality") {
  PermutationHash h;
  for (int i = 0; i < 20; ++i) {
    const Permutation p = testutil::random_permutation(6);
    const Permutation copy(p.images());
    CHECK(h(p) == h(copy));
  }
}
