#include <doctest.h>

#include "p3d/planar.hpp"
#include "p3d/verify.hpp"

using namespace p3d;

TEST_CASE("worked example graph") {
  Graph3D g(parse_perm(3, "s2"), parse_word(3, "-2 1 2 1 -1"));
  CHECK(g.bridges().size() == 4);
  CHECK(g.bridge(1).red == false);
  CHECK(g.bridge(2).red == true);
  CHECK_FALSE(g.has_bridge(3));
  CHECK(g.vertices().size() == 3 + 3 + 8);
  CHECK(g.components() == 1);
  for (const auto& b : g.bridges()) {
    const auto& r = g.rho(b.start_vertex);
    CHECK(r.size() == 3);
    CHECK(r[0] == b.edge);
  }
}

TEST_CASE("bridge count is m minus the length of u") {
  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    Instance in = random_instance(rng, 4, 8);
    Graph3D g(in.u, in.w);
    CHECK(static_cast<int>(g.bridges().size()) == in.w.m() - in.u.length());
  }
}

TEST_CASE("relative cycles of the worked example") {
  Graph3D g(parse_perm(3, "s2"), parse_word(3, "-2 1 2 1 -1"));
  auto cyc = all_cycles(g);
  REQUIRE(cyc.size() == 4);
  CHECK(cyc[0].frozen);
  CHECK(cyc[1].frozen);
  CHECK_FALSE(cyc[2].frozen);
  CHECK_FALSE(cyc[3].frozen);
  CHECK(check_cycles(g, cyc).ok);
  for (const auto& c : cyc) {
    auto bd = chain_boundary(g, c.chain);
    for (auto [v, k] : bd) CHECK(g.vertices()[v].kind == VertexKind::Marked);
    if (!c.frozen) CHECK(bd.empty());
  }
}

TEST_CASE("Le-diagram graphs are planar with one face per cycle") {
  Rng rng(11);
  for (int k = 0; k < 40; ++k) {
    LeDiagram le = random_le_diagram(rng, 3, 4);
    LeReport r = check_le_pair(le_diagram_to_pair(le));
    CHECK(r.pds_consistent);
    CHECK(r.planar);
    CHECK(r.bijection);
    CHECK(r.orientation == 1);
    CHECK(r.quiver_sign == 1);
  }
}

TEST_CASE("top cell of Gr(2,4)") {
  LePair p = le_diagram_to_pair(parse_le(4, "++/++"));
  Graph3D g(p.u, p.word);
  FaceMap fm = planar_faces(g);
  CHECK(fm.planar);
  CHECK(fm.faces == 5);
  IceQuiver q = face_quiver(g, fm);
  CHECK(q.mutable_indices().size() == 1);
}
