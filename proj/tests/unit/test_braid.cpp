#include <doctest.h>

#include "p3d/braid.hpp"
#include "p3d/job.hpp"

using namespace p3d;

TEST_CASE("worked example PDS") {
  Perm u = parse_perm(3, "s2");
  Word w = parse_word(3, "-2 1 2 1 -1");
  REQUIRE(admissible(u, w));
  Pds p = compute_pds(u, w);
  CHECK(p.J == std::vector<int>{1, 2, 4, 5});
  CHECK(p.seq[5] == u);
  CHECK(p.seq[0].is_identity());
  OrderTable ot(p);
  CHECK(ot.frozen(1));
  CHECK(ot.frozen(2));
  CHECK_FALSE(ot.frozen(4));
  CHECK_FALSE(ot.frozen(5));
}

TEST_CASE("admissibility") {
  CHECK(admissible(Perm::w0(2), parse_word(2, "1")));
  CHECK_FALSE(admissible(Perm::w0(3), parse_word(3, "1 2")));
  CHECK(admissible(Perm::w0(3), parse_word(3, "1 2 -2")));
  CHECK(admissible(Perm::w0(3), parse_word(3, "-1 -2 -1")));
}

TEST_CASE("word parsing") {
  CHECK(parse_word(3, "-2, 1 2").letters == std::vector<int>{-2, 1, 2});
  CHECK_THROWS_WITH_AS(parse_word(3, "1 3"), "letter 3 out of range for n=3 at byte 2", ParseError);
  CHECK_THROWS_WITH_AS(parse_word(3, "1 - 2"), "expected integer at byte 2", ParseError);
}

TEST_CASE("job input") {
  JobInput j = parse_job("u=s2; beta=-2 1 2 1 -1");
  CHECK(j.n == 3);
  CHECK(j.u == Perm::s(3, 2));
  CHECK(j.w.m() == 5);
  CHECK(parse_job("u=2,1,3,4").n == 4);
  CHECK(parse_job("beta=1 1; n=2").u.is_identity());
  CHECK_THROWS_WITH_AS(parse_job("u=s2; beta=-2 1 x 1"), "expected integer at byte 16", ParseError);
  CHECK_THROWS_WITH_AS(parse_job("u=s2; gamma=1"), "unknown key 'gamma' at byte 6", ParseError);
  JobInput le = parse_job("le=++/.+");
  CHECK(le.n == 4);
  CHECK(le.le.has_value());
}

TEST_CASE("Le-diagrams") {
  CHECK(le_condition(parse_le(4, "+./.+")));
  CHECK_FALSE(le_condition(parse_le(4, "++/+.")));
  CHECK_THROWS_AS(parse_job("le=++/+."), ParseError);
  CHECK_THROWS_AS(parse_le(4, "+x"), ParseError);
  LePair p = le_diagram_to_pair(parse_le(4, "++/++"));
  CHECK(p.u.is_identity());
  CHECK(p.w.length() == 4);
  CHECK(p.word.letters == std::vector<int>{2, 3, 1, 2});
  LePair q = le_diagram_to_pair(parse_le(4, "+./.+"));
  CHECK(q.u == Perm::from_word(4, {3, 1}));
}
