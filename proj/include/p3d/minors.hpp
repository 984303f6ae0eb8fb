#pragma once

#include <string>
#include <vector>

#include "p3d/braid.hpp"
#include "p3d/laurent.hpp"

namespace p3d {

// Braid matrices in SL_n with a Laurent polynomial argument.
PolyMatrix mat_z(int n, int i, const Laurent& t);
PolyMatrix mat_zbar(int n, int i, const Laurent& t);
PolyMatrix mat_zbar_inv(int n, int i, const Laurent& t);
PolyMatrix mat_x(int n, int i, const Laurent& t);
PolyMatrix mat_y(int n, int i, const Laurent& t);
PolyMatrix mat_coroot(int n, int i, const Laurent& t);  // t must be a unit monomial
PolyMatrix mat_lift(int n, int i, int nvars);          // s-dot_i
PolyMatrix mat_signed_perm(const Perm& w, int nvars);

struct Chart {
  Pds pds;
  int nvars = 0;
  std::vector<std::string> names;
  std::vector<Laurent> t;       // t[c] for c = 1..m; t[0] unused
  std::vector<PolyMatrix> Z;    // Z[c] for c = 0..m
  std::vector<int> symbol_of;   // crossing -> variable index, -1 if hollow
};

// Symbols t_c at solid crossings (variables 0..|J|-1), zero at hollow ones.
Chart build_chart(const Perm& u, const Word& w, int extra_vars = 0);
// Arbitrary parameters, one per crossing.
Chart build_chart_with(const Pds& pds, const std::vector<Laurent>& params, std::vector<std::string> names);

Laurent grid_minor(const Chart& ch, int c, int h);
Laurent chamber_minor(const Chart& ch, int c);

// raw characters x_d in the order of J
std::vector<Laurent> cluster_variables(const Chart& ch, const OrderTable& ot);
// sign-normalized so the lex-smallest coefficient is positive
Laurent sign_normalized(const Laurent& p);

// Bruhat cell of Z_c evaluated at a random point mod a large prime.
Perm bruhat_cell_at(const PolyMatrix& Z, const std::vector<long long>& point, long long p);

struct IdentityReport {
  int checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  void merge(const IdentityReport& o);
};

IdentityReport check_many_minors_stable(const Chart& ch);
IdentityReport check_short_relations(const Chart& ch);
IdentityReport check_grid_monomials(const Chart& ch, const OrderTable& ot, const std::vector<Laurent>& x);
IdentityReport check_chart_validity(const Chart& ch, unsigned seed = 7);

// Windows for mutation moves: crossings (c, c+1) for a special solid pair of
// opposite colors, or (c-1, c, c+1) for a fully solid braid triple.
struct MutationWindow {
  int kind = 1;  // 1: opposite-color pair, 3: braid triple
  int last = 0;  // rightmost crossing
};
std::vector<MutationWindow> mutation_windows(const Pds& p);

// Exchange identities around a mutation window, with the transported chart of
// the rewritten word.
IdentityReport check_exchange_identity(const Perm& u, const Word& w, const MutationWindow& win);
IdentityReport check_ord_min(const Perm& u, const Word& w, const MutationWindow& win);

// Rewritten word for a mutation window and transported parameters.
Word rewrite_window(const Word& w, const MutationWindow& win);
std::vector<Laurent> transport_window(const Word& w, const MutationWindow& win, const std::vector<Laurent>& t);

}  // namespace p3d
