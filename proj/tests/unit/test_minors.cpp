#include <doctest.h>

#include "p3d/moves.hpp"

using namespace p3d;

TEST_CASE("worked example cluster variables") {
  Chart ch = build_chart(parse_perm(3, "s2"), parse_word(3, "-2 1 2 1 -1"));
  OrderTable ot(ch.pds);
  auto x = cluster_variables(ch, ot);
  REQUIRE(x.size() == 4);
  CHECK(x[0].to_string(ch.names) == "t1*t4 + 1");
  CHECK(x[1].to_string(ch.names) == "t2*t4*t5 - 1");
  CHECK(x[2].to_string(ch.names) == "t4");
  CHECK(x[3].to_string(ch.names) == "t5");
  CHECK(check_grid_monomials(ch, ot, x).ok());
}

TEST_CASE("grid minors at the right end are signs") {
  Chart ch = build_chart(parse_perm(3, "s2"), parse_word(3, "-2 1 2 1 -1"));
  for (int h : {1, 2, -1, -2}) {
    Laurent d = grid_minor(ch, ch.pds.m(), h);
    REQUIRE(d.is_constant());
    CHECK(std::abs(d.constant_value()) == 1);
  }
}

TEST_CASE("Laurent arithmetic") {
  Laurent x = Laurent::var(2, 0), y = Laurent::var(2, 1);
  Laurent p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK(exact_divide(p, x + y) == x - y);
  CHECK_FALSE(try_divide(p, x + Laurent::constant(2, 1)).has_value());
  CHECK(x.pow(-2) * x.pow(2) == Laurent::constant(2, 1));
}

TEST_CASE("mutation regularity on the worked example") {
  Perm u = parse_perm(3, "s2");
  Word w = parse_word(3, "-2 1 2 1 -1");
  for (int d : {4, 5}) CHECK(verify_mutation_regularity(u, w, d).ok());
  CHECK_THROWS(verify_mutation_regularity(u, w, 1));
}
