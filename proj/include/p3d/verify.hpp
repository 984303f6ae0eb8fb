#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "p3d/braid.hpp"

namespace p3d {

// Deterministic generator: splitmix64, identical on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : s_(seed) {}
  uint64_t next();
  int below(int k) { return static_cast<int>(next() % static_cast<uint64_t>(k)); }

 private:
  uint64_t s_;
};

// admissible pairs of rank n and length m in a fixed order; f returns false to stop
void for_each_admissible(int n, int m, const std::function<bool(const Perm&, const Word&)>& f);
// upper bound on the pairs visited by for_each_admissible over 2 <= n <= N, 0 <= m <= M
double candidate_count(int N, int M);

struct Instance {
  Perm u;
  Word w;
};
// 2 <= n <= nmax, 1 <= m <= mmax, u uniform among admissible permutations
Instance random_instance(Rng& rng, int nmax, int mmax, bool red_only = false);
LeDiagram random_le_diagram(Rng& rng, int kmax, int nkmax);

const std::vector<std::string>& family_names();

struct FamilyReport {
  std::string family;
  long long instances = 0;
  long long checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  void merge(const FamilyReport& o);
};

// One family on one instance. Families: halfarrow, cycles, moves, rank,
// identities, regularity, count, divisibility, pc.
FamilyReport check_family(const std::string& family, const Perm& u, const Word& w);
FamilyReport check_le(const LeDiagram& le);

}  // namespace p3d
