#include <CLI11.hpp>

#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "p3d/count.hpp"
#include "p3d/job.hpp"
#include "p3d/moves.hpp"
#include "p3d/planar.hpp"
#include "p3d/verify.hpp"

using namespace p3d;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kExampleSeconds = 1.0;
constexpr double kSweepSeconds = 600.0;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = false;
  std::string reason;  // scope, defect, divisibility, time
  std::string text;
};

std::string fmt(const char* f, ...) {
  char buf[8192];
  va_list ap;
  va_start(ap, f);
  vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

Instance sample_fixed_rank(Rng& rng, int n, int mlo, int mhi) {
  int m = mlo + rng.below(mhi - mlo + 1);
  Word w;
  w.n = n;
  for (int c = 0; c < m; ++c) {
    int i = 1 + rng.below(n - 1);
    w.letters.push_back(rng.below(2) ? i : -i);
  }
  Perm top = demazure_product_of_word(w);
  std::vector<Perm> below;
  for (const auto& u : all_perms(n))
    if (bruhat_leq(u, top)) below.push_back(u);
  return {below[rng.below(static_cast<int>(below.size()))], w};
}

// exhaustive ranges actually covered: {n, largest m}
const std::vector<std::pair<int, int>> kSweepRange{{2, 9}, {3, 7}, {4, 5}};
const std::vector<std::pair<int, int>> kRegularityRange{{2, 8}, {3, 7}, {4, 5}};

template <class F>
void sweep(const std::vector<std::pair<int, int>>& range, F f) {
  for (auto [n, M] : range)
    for (int m = 0; m <= M; ++m) for_each_admissible(n, m, [&](const Perm& u, const Word& w) {
        f(u, w);
        return true;
      });
}

struct Tally {
  long long instances = 0, checks = 0, defects = 0;
  double seconds = 0;
  std::string first;
  void add(const FamilyReport& r, double s) {
    ++instances;
    checks += r.checks;
    defects += static_cast<long long>(r.failures.size());
    if (first.empty() && !r.failures.empty()) first = r.failures[0];
    seconds += s;
  }
};

void run_family(Tally& t, const std::string& fam, const Perm& u, const Word& w) {
  auto t0 = Clock::now();
  FamilyReport r;
  try {
    r = check_family(fam, u, w);
  } catch (const std::exception& e) {
    r.failures.push_back("u=" + u.to_string() + " beta=" + w.to_string() + ": " + e.what());
  }
  t.add(r, since(t0));
}

Outcome criterion1() {
  Outcome o;
  auto t0 = Clock::now();
  JobInput job = parse_job("u=s2; beta=-2 1 2 1 -1");
  Chart ch = build_chart(job.u, job.w);
  OrderTable ot(ch.pds);
  auto x = cluster_variables(ch, ot);
  double secs = since(t0);
  std::vector<int> fr, mu;
  for (int d : ch.pds.J) (ot.frozen(d) ? fr : mu).push_back(d);
  std::vector<std::string> got;
  for (const auto& v : x) got.push_back(v.to_string(ch.names));
  std::vector<std::string> want{"t1*t4 + 1", "t2*t4*t5 - 1", "t4", "t5"};
  bool ok = ch.pds.J == std::vector<int>{1, 2, 4, 5} && fr == std::vector<int>{1, 2} && mu == std::vector<int>{4, 5} && got == want;
  o.pass = ok && secs < kExampleSeconds;
  o.reason = ok ? "time" : "defect";
  std::string vars;
  for (size_t k = 0; k < got.size(); ++k) vars += (k ? ", " : "") + got[k];
  o.text = fmt("worked example u=s2 beta=(-2,1,2,1,-1): J={1,2,4,5} %s, frozen {1,2}, mutable {4,5} %s, variables [%s] %s, %.3f s (limit %.0f s)",
               ch.pds.J == std::vector<int>{1, 2, 4, 5} ? "ok" : "WRONG", fr == std::vector<int>{1, 2} && mu == std::vector<int>{4, 5} ? "ok" : "WRONG",
               vars.c_str(), got == want ? "exact" : "WRONG", secs, kExampleSeconds);
  return o;
}

Outcome scoped(const char* what, const Tally& t, const std::string& covered, const std::string& required, bool timed) {
  Outcome o;
  o.pass = false;
  o.reason = t.defects ? "defect" : "scope";
  if (timed && t.seconds >= kSweepSeconds) o.reason = "time";
  o.text = fmt("%s: %lld defects over %lld instances (%lld checks) in %.1f s; covered %s; required %s not run",
               what, t.defects, t.instances, t.checks, t.seconds, covered.c_str(), required.c_str());
  if (t.defects) o.text += "; first: " + t.first;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria 1-8"};
  std::string expect;
  uint64_t seed = 20240601;
  long long fuzz = 10000, n4_samples = 2000, le_samples = 200, min_windows = 200;
  app.add_option("--expect-fail", expect, "comma separated N:reason entries that are allowed to fail");
  app.add_option("--seed", seed, "RNG seed");
  app.add_option("--fuzz", fuzz, "fuzzed instances with n <= 5, m <= 12");
  app.add_option("--n4-samples", n4_samples, "sampled instances with n = 4, 6 <= m <= 9");
  app.add_option("--le", le_samples, "random Le-diagrams");
  CLI11_PARSE(app, argc, argv);
  std::set<std::string> allowed;
  for (size_t p = 0; p < expect.size();) {
    size_t e = expect.find(',', p);
    if (e == std::string::npos) e = expect.size();
    allowed.insert(expect.substr(p, e - p));
    p = e + 1;
  }
  std::printf("rng seed %llu\n", static_cast<unsigned long long>(seed));
  std::fflush(stdout);
  std::map<int, Outcome> out;

  out[1] = criterion1();
  std::printf("criterion 1: %s %s\n", out[1].pass ? "PASS" : "FAIL", out[1].text.c_str());
  std::fflush(stdout);

  // criteria 2-4 share one sweep
  Tally t2, t3, t4;
  auto all3 = [&](const Perm& u, const Word& w) {
    run_family(t2, "halfarrow", u, w);
    run_family(t3, "moves", u, w);
    run_family(t4, "rank", u, w);
  };
  sweep(kSweepRange, all3);
  Rng rng(seed);
  for (long long k = 0; k < n4_samples; ++k) {
    Instance in = sample_fixed_rank(rng, 4, 6, 9);
    all3(in.u, in.w);
  }
  for (long long k = 0; k < fuzz; ++k) {
    Instance in = random_instance(rng, 5, 12);
    all3(in.u, in.w);
  }
  double per = t2.instances ? (t2.seconds + t3.seconds + t4.seconds) / t2.instances : 0;
  double full = candidate_count(4, 9);
  std::string covered = fmt("exhaustive n=2 m<=9, n=3 m<=7, n=4 m<=5; %lld samples n=4 6<=m<=9; %lld fuzz n<=5 m<=12", n4_samples, fuzz);
  std::string required = fmt("exhaustive n<=4 m<=9 (%.2g candidates, about %.1f h at the measured %.0f us per instance)", full,
                             full * per / 3600.0, per * 1e6);
  out[2] = scoped("cycle quiver vs half-arrow quiver", t2, covered, required, true);
  out[3] = scoped("move invariance B1-B5 and chart transports", t3, covered, required, false);
  out[4] = scoped("really full rank and re-checked steered certificates", t4, covered, required, false);
  for (int c = 2; c <= 4; ++c) {
    std::printf("criterion %d: FAIL (%s) %s\n", c, out[c].reason.c_str(), out[c].text.c_str());
    std::fflush(stdout);
  }

  // criterion 5
  {
    Tally id, reg;
    long long with1 = 0, with3 = 0, drawn = 0;
    Rng r5(seed + 5);
    while ((with1 < min_windows || with3 < min_windows) && drawn < 100000) {
      Instance in = random_instance(r5, 4, 9);
      ++drawn;
      auto wins = mutation_windows(compute_pds(in.u, in.w));
      bool k1 = false, k3 = false;
      for (const auto& wn : wins) (wn.kind == 1 ? k1 : k3) = true;
      if (!k1 && !k3) continue;
      with1 += k1;
      with3 += k3;
      run_family(id, "identities", in.u, in.w);
    }
    sweep(kRegularityRange, [&](const Perm& u, const Word& w) { run_family(reg, "regularity", u, w); });
    for (long long k = 0; k < n4_samples; ++k) {
      Instance in = sample_fixed_rank(rng, 4, 6, 8);
      run_family(reg, "regularity", in.u, in.w);
    }
    bool ids_ok = id.defects == 0 && with1 >= min_windows && with3 >= min_windows;
    Outcome o;
    o.pass = false;
    o.reason = (id.defects || reg.defects) ? "defect" : ids_ok ? "scope" : "defect";
    o.text = fmt("minor identities: %lld defects over %lld instances (%lld with opposite-color windows, %lld with braid-triple windows, "
                 "%lld checks); mutation regularity: %lld defects over %lld mutable vertices (exhaustive n=2 m<=8, n=3 m<=7, n=4 m<=5; "
                 "%lld samples n=4 6<=m<=8); required exhaustive n<=4 m<=8 (%.2g candidates) not run",
                 id.defects, id.instances, with1, with3, id.checks, reg.defects, reg.checks, n4_samples, candidate_count(4, 8));
    if (!id.first.empty()) o.text += "; first: " + id.first;
    if (!reg.first.empty()) o.text += "; first: " + reg.first;
    out[5] = o;
    std::printf("criterion 5: FAIL (%s) %s\n", o.reason.c_str(), o.text.c_str());
    std::fflush(stdout);
  }

  // criterion 6
  {
    long long pairs = 0, evals = 0, mismatches = 0, nondiv = 0;
    std::string first, first_div;
    std::map<std::string, long long> cache;
    auto t0 = Clock::now();
    for (int n = 2; n <= 3; ++n)
      for (int m = 0; m <= 6; ++m)
        for_each_admissible(n, m, [&](const Perm& u, const Word& w) {
          ++pairs;
          Laurent walk = deodhar_count(u, w);
          auto [nu, nw] = normalize_to_red(u, w);
          for (long long q : {2, 3, 5}) {
            std::string key = nu.to_string() + "|" + nw.to_string() + "|" + std::to_string(q);
            auto it = cache.find(key);
            if (it == cache.end()) it = cache.emplace(key, fq_brute_force(nu, nw, q)).first;
            ++evals;
            if (eval_at(walk, q) != it->second) {
              ++mismatches;
              if (first.empty()) first = "u=" + u.to_string() + " beta=" + w.to_string() + " q=" + std::to_string(q);
            }
          }
          if (point_count_function(u, w).den_power > 0) {
            ++nondiv;
            if (first_div.empty()) first_div = "u=" + u.to_string() + " beta=" + w.to_string() + " count " + poly_string(walk);
          }
          return true;
        });
    Outcome o;
    o.pass = mismatches == 0 && nondiv == 0;
    o.reason = mismatches ? "defect" : "divisibility";
    o.text = fmt("walk vs brute force at q in {2,3,5}: %lld mismatches over %lld pairs (%lld evaluations, all n<=3 m<=6) in %.1f s; "
                 "(q-1)^frozen fails to divide the count for %lld pairs",
                 mismatches, pairs, evals, since(t0), nondiv);
    if (!first.empty()) o.text += "; first mismatch " + first;
    if (!first_div.empty()) o.text += "; first non-divisible " + first_div;
    out[6] = o;
    std::printf("criterion 6: %s %s\n", o.pass ? "PASS" : ("FAIL (" + o.reason + ")").c_str(), o.text.c_str());
    std::fflush(stdout);
  }

  // criterion 7
  {
    struct Case {
      const char* name;
      const char* job;
    };
    const std::vector<Case> cases{{"S2 unlink", "u=w0; beta=1; n=2"},
                                  {"S2 unknot", "u=w0; beta=1 1; n=2"},
                                  {"S2 Hopf link", "u=w0; beta=1 1 1; n=2"},
                                  {"Richardson id < s1s2s1", "u=id; beta=1 2 1; n=3"},
                                  {"Richardson s1 < s1s2s1", "u=s1; beta=1 2 1; n=3"},
                                  {"Richardson s2 < s2s1s3s2", "u=s2; beta=2 1 3 2; n=4"}};
    int held = 0;
    std::string detail;
    for (const auto& c : cases) {
      JobInput job = parse_job(c.job);
      PcReport r = verify_thm_pc(job.u, job.w);
      bool brute = true;
      for (long long q : {2, 3, 5}) brute = brute && eval_at(r.count, q) == fq_brute_force(job.u, job.w, q);
      bool ok = r.ok && brute;
      held += ok;
      detail += fmt("%s%s %s", detail.empty() ? "" : "; ", c.name, ok ? "holds" : ("FAILS " + r.detail).c_str());
    }
    long long swept = 0, sweep_ok = 0;
    for (int m = 1; m <= 5; ++m)
      for_each_admissible(3, m, [&](const Perm& u, const Word& w) {
        for (int l : w.letters)
          if (l < 0) return true;
        ++swept;
        sweep_ok += verify_thm_pc(u, w).ok;
        return true;
      });
    Outcome o;
    o.pass = held == static_cast<int>(cases.size());
    o.reason = "defect";
    o.text = fmt("%d of %zu fixed instances (count also matched against brute force at q in {2,3,5}): %s; "
                 "information only: identity holds on %lld of %lld all-red pairs with n=3 m<=5",
                 held, cases.size(), detail.c_str(), sweep_ok, swept);
    out[7] = o;
    std::printf("criterion 7: %s %s\n", o.pass ? "PASS" : "FAIL (defect)", o.text.c_str());
    std::fflush(stdout);
  }

  // criterion 8
  {
    Rng r8(seed + 8);
    long long ok = 0, nontrivial = 0;
    std::string first;
    for (long long k = 0; k < le_samples; ++k) {
      LeDiagram le = random_le_diagram(r8, 3, 4);
      FamilyReport r = check_le(le);
      ok += r.ok();
      if (!r.ok() && first.empty()) first = r.failures[0];
      LePair p = le_diagram_to_pair(le);
      IceQuiver q = quiver_of(p.u, p.word);
      for (int i : q.mutable_indices()) {
        bool any = false;
        for (int j = 0; j < q.size(); ++j) any = any || q.B[i][j];
        if (any) {
          ++nontrivial;
          break;
        }
      }
    }
    Outcome o;
    o.pass = ok == le_samples && le_samples >= 20;
    o.reason = "defect";
    o.text = fmt("%lld of %lld random Le-diagrams in boxes up to 3x4 are planar, biject cycles with faces other than F0 counterclockwise, "
                 "and match the face quiver (%lld with a mutable vertex carrying arrows)",
                 ok, le_samples, nontrivial);
    if (!first.empty()) o.text += "; first: " + first;
    out[8] = o;
    std::printf("criterion 8: %s %s\n", o.pass ? "PASS" : "FAIL (defect)", o.text.c_str());
  }

  int status = 0;
  for (auto& [c, o] : out) {
    std::string key = std::to_string(c) + ":" + o.reason;
    bool listed = false;
    for (const auto& a : allowed) listed = listed || a.rfind(std::to_string(c) + ":", 0) == 0;
    if (!o.pass && !allowed.count(key)) {
      std::printf("criterion %d failed with reason '%s', which is not in the expected list\n", c, o.reason.c_str());
      status = 1;
    }
    if (o.pass && listed) {
      std::printf("criterion %d passed but is listed as an expected failure\n", c);
      status = 1;
    }
  }
  std::printf("%s\n", status ? "acceptance: unexpected outcome" : "acceptance: outcomes as expected");
  return status;
}
