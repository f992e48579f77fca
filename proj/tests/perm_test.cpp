#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sylowbench/errors.hpp"
#include "sylowbench/perm.hpp"

using namespace sylowbench;

TEST_CASE("cycle notation round trip") {
  Permutation a = parse_cycles("(1 2 3)(4 5)", 6);
  CHECK(a(0) == 1);
  CHECK(a(2) == 0);
  CHECK(a(5) == 5);
  CHECK(format_cycles(a) == "(1 2 3)(4 5)");
  CHECK(format_cycles(parse_cycles("(3 1 2)", 3)) == "(1 2 3)");
  CHECK(parse_cycles("", 4).is_identity());
  CHECK(parse_cycles("()", 4).is_identity());
  CHECK(format_cycles(Permutation(5)) == "()");
}

TEST_CASE("products apply right to left") {
  // (1 2)(1 3): 1 -> 3 -> 3, 3 -> 1 -> 2, 2 -> 2 -> 1
  CHECK(format_cycles(parse_cycles("(1 2)(1 3)", 3)) == "(1 3 2)");
  Permutation a = parse_cycles("(1 2)", 3), b = parse_cycles("(1 3)", 3);
  CHECK(compose(a, b) == parse_cycles("(1 3 2)", 3));
}

TEST_CASE("malformed cycle notation") {
  CHECK_THROWS_AS(parse_cycles("(1 2", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 4)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(0 1)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 2 1)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 x)", 3), ParseError);
  CHECK_THROWS(Permutation::from_images({0, 0, 1}));
}

TEST_CASE("random permutations agree with the naive oracle") {
  std::mt19937_64 rng(0x5eed0001);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + rng() % 12;
    Permutation a = oracle::random_perm(n, rng), b = oracle::random_perm(n, rng), c = oracle::random_perm(n, rng);
    CHECK(compose(a, b) == oracle::mul(a, b));
    CHECK(inverse(a) == oracle::inv(a));
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, inverse(a)).is_identity());
    CHECK(parse_cycles(format_cycles(a), n) == a);
    CHECK(element_order(a) == oracle::order_of(a));
    CHECK(power(a, element_order(a)).is_identity());
    CHECK(conjugate(b, a) == oracle::mul(oracle::mul(b, a), oracle::inv(b)));
    bool same = parity(a) == parity(b);
    CHECK((parity(compose(a, b)) == Parity::even) == same);
    CHECK(element_order(conjugate(b, a)) == element_order(a));
  }
}

TEST_CASE("cycle decomposition is canonical") {
  CycleDecomposition d = cycles(parse_cycles("(5 4)(3 2 1)", 6));
  REQUIRE(d.cycles.size() == 2);
  CHECK(d.cycles[0] == std::vector<Point>{0, 2, 1});
  CHECK(d.cycles[1] == std::vector<Point>{3, 4});
  CHECK(parse_cycles("(2 4)", 5).first_moved_point() == 1);
  CHECK(Permutation(5).first_moved_point() == 5);
}
