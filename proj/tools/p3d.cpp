#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "p3d/job.hpp"
#include "p3d/planar.hpp"
#include "p3d/report.hpp"

using namespace p3d;

namespace {

enum Exit { kOk = 0, kParse = 2, kNotAdmissible = 3, kFailed = 4, kBudget = 5 };

struct Options {
  std::vector<std::string> input;
  int n = 0;
  uint64_t seed = 1;
  std::string out;
  std::string command;
};

std::string joined(const std::vector<std::string>& parts) {
  std::string s;
  for (size_t k = 0; k < parts.size(); ++k) s += (k ? "; " : "") + parts[k];
  return s;
}

JobInput load(const Options& o, bool need_admissible = true) {
  JobInput job = parse_job(joined(o.input), o.n);
  if (need_admissible && !admissible(job.u, job.w))
    throw NotAdmissible("u=" + job.u.to_string() + " is not below the Demazure product of beta=" + job.w.to_string());
  return job;
}

void emit(const Options& o, Json j) {
  j["rng_seed"] = o.seed;
  if (!j.contains("command")) j["command"] = o.command;
  std::string text = j.dump(2) + "\n";
  if (o.out.empty()) std::cout << text;
  else std::ofstream(o.out) << text;
}

void emit_text(const Options& o, const std::string& text) {
  if (o.out.empty()) std::cout << text;
  else std::ofstream(o.out) << text;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("input", o.input, "fields u=..., beta=..., le=..., n=...; several arguments are joined with '; '");
  sub->add_option("--n", o.n, "rank (inferred when absent); verify: largest rank of the range");
  sub->add_option("--seed", o.seed, "RNG seed, recorded in the output");
  sub->add_option("-o,--out", o.out, "output file (default stdout)");
}

struct VerifyOptions {
  std::string family = "halfarrow";
  int mmax = 4, max = 0;
  long long samples = 0;
  double budget = 2e6;
  int kmax = 3, nkmax = 4;
};

int run_verify(const Options& o, const VerifyOptions& v) {
  const int nmax_default = o.n ? o.n : 3;
  std::vector<std::string> fams;
  {
    std::string f = v.family;
    size_t pos = 0;
    while (pos <= f.size()) {
      size_t e = f.find(',', pos);
      if (e == std::string::npos) e = f.size();
      fams.push_back(f.substr(pos, e - pos));
      pos = e + 1;
    }
    if (fams.size() == 1 && fams[0] == "all") fams = family_names();
  }
  for (const auto& f : fams) {
    bool known = f == "le";
    for (const auto& g : family_names()) known = known || f == g;
    if (!known) throw CLI::ValidationError("--family", "unknown family " + f);
  }
  int nmax = v.max ? v.max : nmax_default, mmax = v.max ? v.max : v.mmax;

  Json out;
  out["schema"] = kSchema;
  out["command"] = "verify";
  std::vector<FamilyReport> reps(fams.size());
  for (size_t k = 0; k < fams.size(); ++k) reps[k].family = fams[k];
  auto run_one = [&](const Perm& u, const Word& w) {
    for (size_t k = 0; k < fams.size(); ++k) {
      if (fams[k] == "le") continue;
      try {
        reps[k].merge(check_family(fams[k], u, w));
      } catch (const BudgetExceeded&) {
        throw;
      } catch (const std::exception& e) {
        ++reps[k].instances;
        reps[k].failures.push_back("u=" + u.to_string() + " beta=" + w.to_string() + ": " + e.what());
      }
    }
  };
  bool le_only = fams.size() == 1 && fams[0] == "le";
  if (!o.input.empty()) {
    JobInput job = load(o);
    out["scope"] = {{"instance", pair_json(job.u, job.w)}};
    if (job.le)
      for (size_t k = 0; k < fams.size(); ++k)
        if (fams[k] == "le") reps[k].merge(check_le(*job.le));
    run_one(job.u, job.w);
  } else if (le_only) {
    long long count = v.samples ? v.samples : 20;
    out["scope"] = {{"le_samples", count}, {"kmax", v.kmax}, {"nkmax", v.nkmax}};
    Rng rng(o.seed);
    for (long long i = 0; i < count; ++i) reps[0].merge(check_le(random_le_diagram(rng, v.kmax, v.nkmax)));
  } else if (v.samples > 0) {
    out["scope"] = {{"samples", v.samples}, {"nmax", nmax}, {"mmax", mmax}};
    Rng rng(o.seed);
    for (long long i = 0; i < v.samples; ++i) {
      Instance in = random_instance(rng, nmax, mmax);
      run_one(in.u, in.w);
    }
  } else {
    double cand = candidate_count(nmax, mmax);
    out["scope"] = {{"exhaustive", true}, {"nmax", nmax}, {"mmax", mmax}, {"candidates", cand}};
    if (cand > v.budget) {
      std::cerr << "exhaustive range has " << cand << " candidates, budget " << v.budget
                << "; raise --budget or use --samples\n";
      return kBudget;
    }
    for (int n = 2; n <= nmax; ++n)
      for (int m = 0; m <= mmax; ++m)
        for_each_admissible(n, m, [&](const Perm& u, const Word& w) {
          run_one(u, w);
          return true;
        });
  }
  bool ok = true;
  Json fam = Json::array();
  for (const auto& r : reps) {
    fam.push_back(family_json(r));
    ok = ok && r.ok();
  }
  out["families"] = fam;
  out["ok"] = ok;
  emit(o, out);
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"3D plabic graphs, quivers and seeds of braid varieties"};
  app.require_subcommand(1);
  Options o;

  auto* seed = app.add_subcommand("seed", "cluster seed: J, frozen set, quiver, cluster variables");
  add_common(seed, o);

  auto* verify = app.add_subcommand("verify", "run a verification family on an instance or a range");
  add_common(verify, o);
  VerifyOptions v;
  verify->add_option("--family", v.family, "halfarrow, cycles, moves, rank, identities, regularity, count, divisibility, pc, le, all; comma separated");
  verify->add_option("--m", v.mmax, "largest word length of the range");
  verify->add_option("--max", v.max, "sets both the largest rank and the largest length");
  verify->add_option("--samples", v.samples, "random instances instead of the exhaustive range");
  verify->add_option("--budget", v.budget, "largest exhaustive candidate count");
  verify->add_option("--kmax", v.kmax, "Le-diagrams: most rows");
  verify->add_option("--nkmax", v.nkmax, "Le-diagrams: most columns");

  auto* render = app.add_subcommand("render", "SVG, DOT or JSON export");
  add_common(render, o);
  std::string what = "red", format = "svg";
  int cycle = 0;
  render->add_option("--what", what, "red, blue, graph or quiver")->check(CLI::IsMember({"red", "blue", "graph", "quiver"}));
  render->add_option("--format", format, "svg, dot or json")->check(CLI::IsMember({"svg", "dot", "json"}));
  render->add_option("--cycle", cycle, "highlight the relative cycle of this crossing");

  auto* moves = app.add_subcommand("moves", "list, apply or verify moves B1-B5");
  add_common(moves, o);
  bool list = false, verify_all = false;
  int apply = -1;
  moves->add_flag("--list", list, "list applicable moves");
  moves->add_option("--apply", apply, "apply the move with this index from --list");
  moves->add_flag("--verify-all", verify_all, "check invariance of every applicable move");

  auto* count = app.add_subcommand("count", "point count over F_q");
  add_common(count, o);
  std::string method = "walk";
  long long q = 0;
  double budget = 1e7;
  count->add_option("--method", method, "walk or brute")->check(CLI::IsMember({"walk", "brute"}));
  count->add_option("--q", q, "prime field size");
  count->add_option("--budget", budget, "largest q^m enumerated by brute force");

  auto* hom = app.add_subcommand("homfly", "link of the pair and its HOMFLY polynomial");
  add_common(hom, o);
  auto* pc = app.add_subcommand("verify-pc", "point count against the top HOMFLY coefficient");
  add_common(pc, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  o.command = app.get_subcommands().front()->get_name();
  try {
    if (*seed) {
      auto job = load(o);
      Json j = seed_json(job.u, job.w);
      j["command"] = "seed";
      emit(o, j);
    } else if (*verify) {
      return run_verify(o, v);
    } else if (*render) {
      auto job = load(o);
      Graph3D g(job.u, job.w);
      std::vector<int> chain;
      if (cycle) {
        if (!g.pds().is_solid(cycle)) throw std::invalid_argument("crossing " + std::to_string(cycle) + " is not solid");
        chain = propagate(g, cycle).chain;
      }
      if (what == "quiver") {
        IceQuiver qv = quiver_of(job.u, job.w);
        if (format == "dot") emit_text(o, qv.to_dot());
        else {
          Json j = Json::parse(qv.to_json());
          j["schema"] = kSchema;
          emit(o, j);
        }
      } else if (format == "dot") {
        emit_text(o, g.to_dot());
      } else if (format == "json") {
        Json j = Json::parse(g.to_json());
        j["schema"] = kSchema;
        emit(o, j);
      } else {
        emit_text(o, g.to_svg(what != "blue", chain));
      }
    } else if (*moves) {
      auto job = load(o);
      if (apply >= 0) {
        emit(o, apply_json(job.u, job.w, apply));
      } else if (verify_all) {
        FamilyReport r = check_family("moves", job.u, job.w);
        Json j = pair_json(job.u, job.w);
        j["schema"] = kSchema;
        j["report"] = family_json(r);
        emit(o, j);
        return r.ok() ? kOk : kFailed;
      } else {
        (void)list;
        emit(o, moves_json(job.u, job.w));
      }
    } else if (*count) {
      auto job = load(o);
      emit(o, count_json(job.u, job.w, method, q, static_cast<long long>(budget)));
    } else if (*hom) {
      auto job = load(o);
      emit(o, homfly_json(job.u, job.w));
    } else if (*pc) {
      auto job = load(o);
      Json j = pc_json(job.u, job.w);
      emit(o, j);
      return j["ok"].get<bool>() ? kOk : kFailed;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const NotAdmissible& e) {
    std::cerr << "not admissible: " << e.what() << "\n";
    return kNotAdmissible;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kParse;
  } catch (const InapplicableMove& e) {
    std::cerr << "move: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kFailed;
  }
  return kOk;
}
