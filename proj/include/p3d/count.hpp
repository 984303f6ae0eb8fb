#pragma once

#include <string>
#include <vector>

#include "p3d/braid.hpp"
#include "p3d/laurent.hpp"

namespace p3d {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One-variable Laurent polynomials: in q for counts, in s = q^{1/2} for HOMFLY.
Laurent qpoly(const std::vector<long long>& coeffs);  // coeffs[k] of q^k
Laurent q_var();
Laurent q_minus_one(int power = 1);
long long eval_at(const Laurent& p, long long x);
std::string poly_string(const Laurent& p, const std::string& var = "q");
// sparse term list [[exponent, coefficient], ...]
std::vector<std::pair<int, long long>> poly_terms(const Laurent& p);
// q -> s^2
Laurent q_to_s(const Laurent& p);

// Sum over Deodhar walks from u down to id.
Laurent deodhar_count(const Perm& u, const Word& w);

// All-red word reached by B1 swaps and B4 conversions.
std::pair<Perm, Word> normalize_to_red(const Perm& u, const Word& w);

// Number of points over F_q (q prime) by enumeration of the all-red chain.
long long fq_brute_force(const Perm& u, const Word& w, long long q, long long budget = 10000000);

int frozen_count(const Perm& u, const Word& w);

// R(q) = count / (q-1)^{#frozen} as a fraction num / (q-1)^den_power, reduced
// by the largest power of (q-1) that divides.
struct PointCountFunction {
  Laurent num;
  int den_power = 0;
  std::string to_string() const;
};
PointCountFunction point_count_function(const Perm& u, const Word& w);

// Braid beta followed by the inverse positive lift of u.
struct LinkWord {
  int n = 0;
  std::vector<int> letters;  // +i positive crossing, -i negative
  int writhe() const;
  // cycles of the underlying permutation
  int components() const;
  std::string to_string() const;
};
LinkWord link_word(const Perm& u, const Word& w);

// HOMFLY polynomial in variables (a, z) with a P(L+) - a^{-1} P(L-) = z P(L0)
// and unknot = 1.
Laurent homfly(const LinkWord& L);
// coefficient of the highest power of a, a Laurent polynomial in z (one variable)
Laurent homfly_top(const Laurent& P, int* top_degree = nullptr);

// Ptop(q) with a = s^{-1}, z = s - s^{-1}, written as num / (s - s^{-1})^den_power
struct STopTerm {
  Laurent num;  // in s
  int den_power = 0;
};
STopTerm ptop_substituted(const Laurent& top_z);

struct PcReport {
  bool ok = false;
  Laurent count;
  int frozen = 0;
  int components = 0;
  Laurent homfly_poly;
  Laurent top;
  std::string detail;
};
PcReport verify_thm_pc(const Perm& u, const Word& w);

}  // namespace p3d
