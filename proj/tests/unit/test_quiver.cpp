#include <doctest.h>

#include "p3d/moves.hpp"
#include "p3d/verify.hpp"

using namespace p3d;

namespace {
IceQuiver a2() {
  IceQuiver q;
  q.labels = {1, 2, 3};
  q.frozen = {0, 0, 1};
  q.B = {{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}};
  return q;
}
}  // namespace

TEST_CASE("mutation") {
  IceQuiver q = a2();
  IceQuiver m = q.mutated(1);
  CHECK(m.B[0][1] == -1);
  CHECK(m.B[1][2] == -1);
  CHECK(m.B[0][2] == 1);
  CHECK(m.mutated(1) == q);
}

TEST_CASE("really full rank") {
  CHECK(really_full_rank({{0, 1}, {-1, 0}}));
  CHECK_FALSE(really_full_rank({{0, 2}, {-2, 0}}));
  CHECK(integer_rank({{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("worked example quiver, both constructions") {
  Perm u = parse_perm(3, "s2");
  Word w = parse_word(3, "-2 1 2 1 -1");
  Graph3D g(u, w);
  IceQuiver a = quiver_from_cycles(g, all_cycles(g));
  IceQuiver b = quiver_from_half_arrows(g.pds(), OrderTable(g.pds()));
  CHECK(a == b);
  CHECK(a.labels == std::vector<int>{1, 2, 4, 5});
  CHECK(really_full_rank(a.exchange_matrix()));
}

TEST_CASE("certificates") {
  Perm u = parse_perm(3, "s2");
  Word w = parse_word(3, "-2 1 2 1 -1");
  auto cert = steered_certificate(u, w);
  REQUIRE(cert);
  std::string why;
  CHECK(check_certificate(quiver_of(u, w), *cert, &why));
  auto found = search_certificate(a2());
  CHECK(found.status == SearchResult::Acyclic);
  CHECK(check_certificate(a2(), *found.cert));
}

TEST_CASE("families on a small exhaustive range") {
  for (const char* f : {"halfarrow", "cycles", "moves", "rank", "identities", "regularity"}) {
    FamilyReport total;
    for (int m = 0; m <= 4; ++m)
      for_each_admissible(3, m, [&](const Perm& u, const Word& w) {
        total.merge(check_family(f, u, w));
        return true;
      });
    INFO(f);
    CHECK(total.ok());
    CHECK(total.instances > 1000);
  }
}
