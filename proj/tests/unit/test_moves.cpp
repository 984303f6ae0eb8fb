#include <doctest.h>

#include "p3d/moves.hpp"

using namespace p3d;

TEST_CASE("moves on the worked example") {
  Perm u = parse_perm(3, "s2");
  Word w = parse_word(3, "-2 1 2 1 -1");
  auto mvs = enumerate_applicable(u, w);
  CHECK(!mvs.empty());
  for (const auto& mv : mvs) {
    INFO(mv.to_string());
    CHECK(verify_invariance(u, w, mv).ok());
    CHECK(check_transport(u, w, mv).ok());
  }
}

TEST_CASE("B4 and B5 shapes") {
  Perm w0 = Perm::w0(3);
  Word w = parse_word(3, "1 2 -2");
  MoveInstance b4 = classify_move(w0, w, MoveKind::B4, 3);
  MoveResult r = apply_move(w0, w, b4);
  CHECK(r.word.letters.back() == 1);
  CHECK(verify_invariance(w0, w, b4).ok());
  CHECK_THROWS_AS(classify_move(w0, w, MoveKind::B3, 1), InapplicableMove);
}

TEST_CASE("extension to w0 keeps the quiver's mutable part") {
  Perm u = parse_perm(3, "s2");
  Word w = parse_word(3, "1 2 1");
  auto [u2, w2] = extend_to_w0(u, w);
  CHECK(u2 == Perm::w0(3));
  CHECK(w2.m() == w.m() + 2);
}
