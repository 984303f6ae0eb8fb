#include <doctest.h>

#include "p3d/count.hpp"
#include "p3d/report.hpp"
#include "p3d/verify.hpp"

using namespace p3d;

TEST_CASE("point counts in rank 2") {
  Perm w0 = Perm::w0(2);
  CHECK(poly_string(deodhar_count(w0, parse_word(2, "1"))) == "1");
  CHECK(poly_string(deodhar_count(w0, parse_word(2, "1 1"))) == "q - 1");
  CHECK(poly_string(deodhar_count(w0, parse_word(2, "1 1 1"))) == "q^2 - q + 1");
  for (long long q : {2, 3, 5}) CHECK(fq_brute_force(w0, parse_word(2, "1 1 1"), q) == q * q - q + 1);
}

TEST_CASE("walk agrees with brute force, blue letters included") {
  Rng rng(5);
  for (int k = 0; k < 60; ++k) {
    Instance in = random_instance(rng, 3, 5);
    Laurent c = deodhar_count(in.u, in.w);
    for (long long q : {2, 3}) CHECK(eval_at(c, q) == fq_brute_force(in.u, in.w, q));
  }
}

TEST_CASE("brute force budget") {
  CHECK_THROWS_AS(fq_brute_force(Perm(3), parse_word(3, "1 2 1 2 1 2 1 2"), 5, 1000), BudgetExceeded);
}

TEST_CASE("HOMFLY of standard closures") {
  CHECK(laurent_az_string(homfly(LinkWord{2, {1, -1}})) == "a*z^(-1) - a^(-1)*z^(-1)");
  CHECK(laurent_az_string(homfly(LinkWord{2, {1, 1}})) == "a^(-1)*z + a^(-1)*z^(-1) - a^(-3)*z^(-1)");
  Laurent trefoil = Laurent::monomial({-2, 0}, 2) + Laurent::monomial({-2, 2}) - Laurent::monomial({-4, 0});
  CHECK(homfly(LinkWord{2, {1, 1, 1}}) == trefoil);
  CHECK(laurent_az_string(homfly(LinkWord{3, {1, 2}})) == "1");
  CHECK(LinkWord{2, {1, -1}}.components() == 2);
  CHECK(LinkWord{2, {1, 1, 1}}.components() == 1);
  CHECK(LinkWord{3, {1, 2}}.components() == 1);
  CHECK(link_word(Perm::w0(2), parse_word(2, "1 1 1")).components() == 2);
}

TEST_CASE("point count against the top HOMFLY coefficient") {
  Perm w0 = Perm::w0(2);
  for (const char* b : {"1", "1 1", "1 1 1"}) CHECK(verify_thm_pc(w0, parse_word(2, b)).ok);
  CHECK(verify_thm_pc(Perm(3), parse_word(3, "1 2 1")).ok);
  CHECK(verify_thm_pc(Perm::s(3, 1), parse_word(3, "1 2 1")).ok);
}

TEST_CASE("divisibility by (q-1)^frozen fails on the trefoil cell") {
  auto r = point_count_function(Perm::w0(2), parse_word(2, "1 1 1"));
  CHECK(frozen_count(Perm::w0(2), parse_word(2, "1 1 1")) == 1);
  CHECK(r.den_power == 1);
}
