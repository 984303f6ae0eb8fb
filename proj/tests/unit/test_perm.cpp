#include <doctest.h>

#include "p3d/perm.hpp"

using namespace p3d;

TEST_CASE("words and lengths") {
  Perm w0 = Perm::w0(4);
  CHECK(w0.length() == 6);
  CHECK(Perm::from_word(4, w0.reduced_word()) == w0);
  CHECK(Perm::from_word(3, {1, 2, 1}) == Perm::from_word(3, {2, 1, 2}));
  CHECK(Perm::s(3, 1).times_s(1).is_identity());
  CHECK(compose(Perm({2, 3, 1}), Perm({2, 3, 1})) == Perm({3, 1, 2}));
}

TEST_CASE("bruhat order and demazure products") {
  Perm id(3), s1 = Perm::s(3, 1), w0 = Perm::w0(3);
  CHECK(bruhat_leq(id, w0));
  CHECK(bruhat_leq(s1, w0));
  CHECK_FALSE(bruhat_leq(w0, s1));
  CHECK_FALSE(bruhat_leq(s1, Perm::s(3, 2)));
  CHECK(demazure_product(s1, 1, Side::Right) == s1);
  CHECK(demazure_quotient(s1, 1, Side::Right) == id);
  CHECK(demazure_product(s1, 2, Side::Left) == Perm::from_word(3, {2, 1}));
  CHECK(star(5, 1) == 4);
}

TEST_CASE("signed permutation matrix") {
  auto m = signed_matrix(Perm::w0(2));
  CHECK(m[1][0] == 1);
  CHECK(m[0][1] == -1);
}

TEST_CASE("parse permutations with byte offsets") {
  CHECK(parse_perm(3, "s2") == Perm::s(3, 2));
  CHECK(parse_perm(3, " 2,1,3 ") == Perm::s(3, 1));
  CHECK(parse_perm(3, "w0") == Perm::w0(3));
  CHECK(parse_perm(3, "s1 s2") == Perm::from_word(3, {1, 2}));
  CHECK_THROWS_WITH_AS(parse_perm(3, "s1 t2"), "expected 's' at byte 3", ParseError);
  CHECK_THROWS_WITH_AS(parse_perm(3, "  s5"), "index 5 out of range for n=3 at byte 3", ParseError);
  CHECK_THROWS_WITH_AS(parse_perm(3, "1,1,3"), "repeated entry at byte 2", ParseError);
  CHECK_THROWS_AS(parse_perm(3, "1,2"), ParseError);
}
