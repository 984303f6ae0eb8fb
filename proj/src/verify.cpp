#include "p3d/verify.hpp"

#include <cmath>

#include "p3d/count.hpp"
#include "p3d/moves.hpp"
#include "p3d/planar.hpp"

namespace p3d {

uint64_t Rng::next() {
  uint64_t z = (s_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void for_each_admissible(int n, int m, const std::function<bool(const Perm&, const Word&)>& f) {
  const auto perms = all_perms(n);
  const int a = 2 * (n - 1);
  std::vector<int> digit(m, 0);
  Word w;
  w.n = n;
  w.letters.assign(m, 0);
  while (true) {
    for (int c = 0; c < m; ++c) {
      int d = digit[c];
      w.letters[c] = d < n - 1 ? d + 1 : -(d - (n - 1) + 1);
    }
    Perm top = demazure_product_of_word(w);
    for (const auto& u : perms)
      if (bruhat_leq(u, top) && !f(u, w)) return;
    int c = m - 1;
    while (c >= 0 && ++digit[c] == a) digit[c--] = 0;
    if (c < 0) return;
  }
}

double candidate_count(int N, int M) {
  double total = 0;
  for (int n = 2; n <= N; ++n) {
    double fact = std::tgamma(n + 1.0);
    for (int m = 0; m <= M; ++m) total += fact * std::pow(2.0 * (n - 1), m);
  }
  return total;
}

Instance random_instance(Rng& rng, int nmax, int mmax, bool red_only) {
  int n = 2 + rng.below(nmax - 1);
  int m = 1 + rng.below(mmax);
  Word w;
  w.n = n;
  for (int c = 0; c < m; ++c) {
    int i = 1 + rng.below(n - 1);
    w.letters.push_back(red_only || rng.below(2) ? i : -i);
  }
  Perm top = demazure_product_of_word(w);
  std::vector<Perm> below;
  for (const auto& u : all_perms(n))
    if (bruhat_leq(u, top)) below.push_back(u);
  return {below[rng.below(static_cast<int>(below.size()))], w};
}

LeDiagram random_le_diagram(Rng& rng, int kmax, int nkmax) {
  while (true) {
    LeDiagram le;
    le.k = 1 + rng.below(kmax);
    int nk = 1 + rng.below(nkmax);
    le.n = le.k + nk;
    int prev = nk;
    for (int r = 0; r < le.k; ++r) {
      int len = rng.below(2) ? prev : rng.below(prev + 1);
      if (r == 0 && len == 0) len = 1;
      std::string row;
      for (int c = 0; c < len; ++c) row += rng.below(3) ? '+' : '.';
      le.rows.push_back(row);
      prev = len;
    }
    if (le_condition(le)) return le;
  }
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"halfarrow", "cycles", "moves", "rank", "identities",
                                              "regularity", "count", "divisibility", "pc"};
  return names;
}

void FamilyReport::merge(const FamilyReport& o) {
  instances += o.instances;
  checks += o.checks;
  for (const auto& f : o.failures)
    if (failures.size() < 20) failures.push_back(f);
}

namespace {

std::string tag(const Perm& u, const Word& w) { return "u=" + u.to_string() + " beta=" + w.to_string() + ": "; }

void absorb(FamilyReport& r, const IdentityReport& id, const std::string& where) {
  r.checks += id.checked;
  for (const auto& f : id.failures) r.failures.push_back(where + f);
}

}  // namespace

FamilyReport check_family(const std::string& family, const Perm& u, const Word& w) {
  FamilyReport r;
  r.family = family;
  r.instances = 1;
  const std::string where = tag(u, w);
  if (family == "halfarrow") {
    Graph3D g(u, w);
    IceQuiver a = quiver_from_cycles(g, all_cycles(g));
    IceQuiver b = quiver_from_half_arrows(g.pds(), OrderTable(g.pds()));
    ++r.checks;
    if (!(a == b)) r.failures.push_back(where + "cycle quiver " + a.to_json() + " half-arrow quiver " + b.to_json());
  } else if (family == "cycles") {
    Graph3D g(u, w);
    auto cc = check_cycles(g, all_cycles(g));
    ++r.checks;
    for (const auto& f : cc.failures) r.failures.push_back(where + f);
  } else if (family == "moves") {
    for (const auto& mv : enumerate_applicable(u, w)) {
      absorb(r, verify_invariance(u, w, mv), where);
      absorb(r, check_transport(u, w, mv), where);
    }
  } else if (family == "rank") {
    IceQuiver q = quiver_of(u, w);
    ++r.checks;
    if (!really_full_rank(q.exchange_matrix())) r.failures.push_back(where + "exchange matrix is not really full rank");
    ++r.checks;
    auto cert = steered_certificate(u, w);
    std::string why;
    if (!cert) r.failures.push_back(where + "no certificate");
    else if (!check_certificate(q, *cert, &why)) r.failures.push_back(where + "certificate rejected: " + why);
  } else if (family == "identities") {
    Chart ch = build_chart(u, w);
    absorb(r, check_many_minors_stable(ch), where);
    absorb(r, check_short_relations(ch), where);
    for (const auto& win : mutation_windows(ch.pds)) {
      absorb(r, check_exchange_identity(u, w, win), where);
      absorb(r, check_ord_min(u, w, win), where);
    }
  } else if (family == "regularity") {
    Pds p = compute_pds(u, w);
    OrderTable ot(p);
    for (int d : p.J) {
      if (ot.frozen(d)) continue;
      ++r.checks;
      auto rep = verify_mutation_regularity(u, w, d);
      if (!rep.ok()) r.failures.push_back(where + "mutation at " + std::to_string(d) + ": " + rep.detail);
    }
  } else if (family == "count") {
    Laurent walk = deodhar_count(u, w);
    for (long long q : {2, 3, 5}) {
      ++r.checks;
      long long a = eval_at(walk, q), b = fq_brute_force(u, w, q);
      if (a != b)
        r.failures.push_back(where + "q=" + std::to_string(q) + " walk " + std::to_string(a) + " brute " + std::to_string(b));
    }
  } else if (family == "divisibility") {
    ++r.checks;
    auto pcf = point_count_function(u, w);
    if (pcf.den_power > 0)
      r.failures.push_back(where + "count " + poly_string(deodhar_count(u, w)) + " not divisible by (q-1)^" +
                           std::to_string(frozen_count(u, w)));
  } else if (family == "pc") {
    ++r.checks;
    auto rep = verify_thm_pc(u, w);
    if (!rep.ok) r.failures.push_back(where + rep.detail);
  } else {
    throw std::invalid_argument("unknown family " + family);
  }
  return r;
}

FamilyReport check_le(const LeDiagram& le) {
  FamilyReport r;
  r.family = "le";
  r.instances = 1;
  r.checks = 4;
  std::string where = "le=";
  for (size_t i = 0; i < le.rows.size(); ++i) where += (i ? "/" : "") + le.rows[i];
  where += ": ";
  LeReport rep = check_le_pair(le_diagram_to_pair(le));
  if (!rep.pds_consistent) r.failures.push_back(where + "hollow crossings differ from the empty boxes");
  if (!rep.planar) r.failures.push_back(where + "not planar");
  if (!rep.bijection) r.failures.push_back(where + "cycles do not biject with faces");
  if (rep.orientation != 1) r.failures.push_back(where + "cycles not counterclockwise");
  if (rep.quiver_sign != 1) r.failures.push_back(where + "face quiver differs");
  if (!r.ok()) r.failures.back() += "\n" + rep.detail;
  return r;
}

}  // namespace p3d
