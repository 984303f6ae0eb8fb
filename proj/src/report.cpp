#include "p3d/report.hpp"

namespace p3d {

std::string laurent_az_string(const Laurent& p) { return p.to_string({"a", "z"}); }

Json pair_json(const Perm& u, const Word& w) {
  return {{"n", u.n()}, {"u", u.images()}, {"beta", w.letters}};
}

Json seed_json(const Perm& u, const Word& w) {
  Json j = pair_json(u, w);
  j["schema"] = kSchema;
  Chart ch = build_chart(u, w);
  OrderTable ot(ch.pds);
  IceQuiver q = quiver_of(u, w);
  j["J"] = ch.pds.J;
  Json fr = Json::array(), mu = Json::array();
  for (int d : ch.pds.J) (ot.frozen(d) ? fr : mu).push_back(d);
  j["frozen"] = fr;
  j["mutable"] = mu;
  j["quiver"] = Json::parse(q.to_json());
  j["parameters"] = ch.names;
  auto x = cluster_variables(ch, ot);
  Json vars = Json::array();
  for (size_t k = 0; k < x.size(); ++k)
    vars.push_back({{"d", ch.pds.J[k]}, {"raw", x[k].to_string(ch.names)}, {"normalized", sign_normalized(x[k]).to_string(ch.names)}});
  j["cluster_variables"] = vars;
  return j;
}

Json move_json(const MoveInstance& mv) {
  return {{"kind", "B" + std::to_string(static_cast<int>(mv.kind))},
          {"pos", mv.pos},
          {"special", mv.special},
          {"fully_solid", mv.fully_solid},
          {"mutation", mv.mutation},
          {"text", mv.to_string()}};
}

Json moves_json(const Perm& u, const Word& w) {
  Json j = pair_json(u, w);
  j["schema"] = kSchema;
  Json list = Json::array();
  auto mvs = enumerate_applicable(u, w);
  for (size_t k = 0; k < mvs.size(); ++k) {
    Json m = move_json(mvs[k]);
    m["index"] = k;
    list.push_back(m);
  }
  j["moves"] = list;
  return j;
}

Json apply_json(const Perm& u, const Word& w, int index) {
  auto mvs = enumerate_applicable(u, w);
  if (index < 0 || index >= static_cast<int>(mvs.size()))
    throw InapplicableMove("move index " + std::to_string(index) + " out of range, " + std::to_string(mvs.size()) + " moves apply");
  const auto& mv = mvs[index];
  MoveResult res = apply_move(u, w, mv);
  Json j;
  j["schema"] = kSchema;
  j["before"] = pair_json(u, w);
  j["move"] = move_json(mv);
  j["after"] = pair_json(res.u, res.word);
  Json rel = Json::array();
  for (auto [a, b] : res.effect.relabel) rel.push_back({a, b});
  j["effect"] = {{"mutation", res.effect.mutation}, {"mutate_at", res.effect.mutate_at}, {"relabel", rel}};
  auto inv = verify_invariance(u, w, mv);
  j["invariance"] = {{"ok", inv.ok()}, {"failures", inv.failures}};
  j["quiver_after"] = Json::parse(quiver_of(res.u, res.word).to_json());
  return j;
}

static Json terms_json(const Laurent& p) {
  Json t = Json::array();
  for (auto [e, c] : poly_terms(p)) t.push_back({e, c});
  return t;
}

Json count_json(const Perm& u, const Word& w, const std::string& method, long long q, long long budget) {
  Json j = pair_json(u, w);
  j["schema"] = kSchema;
  j["method"] = method;
  j["frozen"] = frozen_count(u, w);
  if (method == "walk") {
    Laurent c = deodhar_count(u, w);
    j["count"] = poly_string(c);
    j["terms"] = terms_json(c);
    j["R"] = point_count_function(u, w).to_string();
    if (q > 0) {
      j["q"] = q;
      j["value"] = eval_at(c, q);
    }
  } else if (method == "brute") {
    if (q < 2) throw std::invalid_argument("brute force needs --q");
    j["q"] = q;
    j["value"] = fq_brute_force(u, w, q, budget);
  } else {
    throw std::invalid_argument("unknown method " + method);
  }
  return j;
}

Json homfly_json(const Perm& u, const Word& w) {
  Json j = pair_json(u, w);
  j["schema"] = kSchema;
  LinkWord L = link_word(u, w);
  j["link"] = {{"strands", L.n}, {"word", L.letters}, {"writhe", L.writhe()}, {"components", L.components()}};
  j["graph_components"] = Graph3D(u, w).components();
  Laurent P = homfly(L);
  j["homfly"] = laurent_az_string(P);
  int top = 0;
  Laurent t = homfly_top(P, &top);
  j["top_a_degree"] = top;
  j["top_coefficient"] = t.to_string({"z"});
  STopTerm st = ptop_substituted(t);
  j["ptop"] = {{"numerator_s", poly_string(st.num * Laurent::var(1, 0, -top), "s")}, {"denominator", "(s - s^-1)^" + std::to_string(st.den_power)}};
  return j;
}

Json pc_json(const Perm& u, const Word& w) {
  Json j = pair_json(u, w);
  j["schema"] = kSchema;
  PcReport r = verify_thm_pc(u, w);
  j["ok"] = r.ok;
  j["count"] = poly_string(r.count);
  j["frozen"] = r.frozen;
  j["graph_components"] = r.components;
  j["homfly"] = laurent_az_string(r.homfly_poly);
  j["top_coefficient"] = r.top.to_string({"z"});
  if (!r.ok) j["detail"] = r.detail;
  return j;
}

Json family_json(const FamilyReport& r) {
  return {{"family", r.family}, {"instances", r.instances}, {"checks", r.checks}, {"ok", r.ok()}, {"failures", r.failures}};
}

}  // namespace p3d
