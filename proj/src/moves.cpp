#include "p3d/moves.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace p3d {

std::string MoveInstance::to_string() const {
  std::ostringstream os;
  os << "B" << static_cast<int>(kind) << "@" << pos;
  if (kind == MoveKind::B1 && special) os << (fully_solid ? " solid-special" : " special");
  else if (fully_solid && kind != MoveKind::B4 && kind != MoveKind::B5) os << " fully-solid";
  os << (mutation ? " mutation" : " non-mutation");
  return os.str();
}

namespace {

bool same_sign(int a, int b) { return (a > 0) == (b > 0); }

int window_lo(const MoveInstance& mv) {
  switch (mv.kind) {
    case MoveKind::B1:
    case MoveKind::B2: return mv.pos - 2;
    case MoveKind::B3: return mv.pos - 3;
    case MoveKind::B4: return mv.pos - 1;
    default: return 0;
  }
}

bool curves_equal(const Curve& a, const Curve& b) { return a.P == b.P && a.Q == b.Q && a.side == b.side; }

bool multicurves_equal(const Multicurve& a, const Multicurve& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!curves_equal(a[i], b[i])) return false;
  return true;
}

std::string quiver_pair(const IceQuiver& want, const IceQuiver& got) {
  return "expected " + want.to_json() + "\nrecomputed " + got.to_json();
}

}  // namespace

MoveInstance classify_move(const Perm& u, const Word& w, MoveKind kind, int pos) {
  const int m = w.m();
  Pds p = compute_pds(u, w);
  MoveInstance mv;
  mv.kind = kind;
  mv.pos = pos;
  auto bad = [&](const std::string& why) { return InapplicableMove("B" + std::to_string(static_cast<int>(kind)) + " at " + std::to_string(pos) + ": " + why); };
  switch (kind) {
    case MoveKind::B1:
    case MoveKind::B2: {
      if (pos < 2 || pos > m) throw bad("position out of range");
      int a = w[pos - 1], b = w[pos];
      mv.fully_solid = p.solid[pos - 1] && p.solid[pos];
      if (kind == MoveKind::B1) {
        if (same_sign(a, b)) throw bad("letters have the same color");
        int red = a > 0 ? a : b, blue = a > 0 ? -b : -a;
        const Perm& v = p.seq[pos - 1];
        mv.special = v.times_s(red) == v.s_times(blue);
        mv.mutation = mv.special && mv.fully_solid;
      } else {
        if (!same_sign(a, b) || std::abs(std::abs(a) - std::abs(b)) <= 1) throw bad("letters do not commute");
      }
      break;
    }
    case MoveKind::B3: {
      if (pos < 3 || pos > m) throw bad("position out of range");
      int x = w[pos - 2], y = w[pos - 1], z = w[pos];
      if (x != z || !same_sign(x, y) || std::abs(std::abs(x) - std::abs(y)) != 1) throw bad("not a braid triple");
      mv.fully_solid = p.solid[pos - 2] && p.solid[pos - 1] && p.solid[pos];
      mv.mutation = mv.fully_solid;
      break;
    }
    case MoveKind::B4:
      if (pos != m || m < 1) throw bad("only the last letter");
      if (u != Perm::w0(u.n())) throw bad("requires u = w0");
      break;
    case MoveKind::B5:
      if (pos != 1 || m < 1) throw bad("only the first letter");
      break;
  }
  return mv;
}

std::vector<MoveInstance> enumerate_applicable(const Perm& u, const Word& w) {
  std::vector<MoveInstance> out;
  const int m = w.m();
  for (int d = 2; d <= m; ++d) {
    for (MoveKind k : {MoveKind::B1, MoveKind::B2}) {
      try {
        out.push_back(classify_move(u, w, k, d));
      } catch (const InapplicableMove&) {
      }
    }
    if (d >= 3) {
      try {
        out.push_back(classify_move(u, w, MoveKind::B3, d));
      } catch (const InapplicableMove&) {
      }
    }
  }
  if (m >= 1 && u == Perm::w0(u.n())) out.push_back(classify_move(u, w, MoveKind::B4, m));
  if (m >= 1) out.push_back(classify_move(u, w, MoveKind::B5, 1));
  return out;
}

MoveResult apply_move(const Perm& u, const Word& w, const MoveInstance& mv0) {
  MoveInstance mv = classify_move(u, w, mv0.kind, mv0.pos);
  const int n = w.n, d = mv.pos;
  MoveResult r;
  r.u = u;
  r.word = w;
  auto& L = r.word.letters;
  switch (mv.kind) {
    case MoveKind::B1:
    case MoveKind::B2: std::swap(L[d - 2], L[d - 1]); break;
    case MoveKind::B3: {
      int x = w[d], y = w[d - 1];
      L[d - 3] = y;
      L[d - 2] = x;
      L[d - 1] = y;
      break;
    }
    case MoveKind::B4: L[d - 1] = -star(n, w[d]); break;
    case MoveKind::B5: L[0] = -w[1]; break;
  }
  Pds p = compute_pds(u, w), p2 = compute_pds(u, r.word);
  MoveEffect& ef = r.effect;
  for (int c : p.J) ef.relabel[c] = c;
  auto check_image = [&]() {
    std::vector<int> img;
    for (auto [a, b] : ef.relabel) img.push_back(b);
    std::sort(img.begin(), img.end());
    if (img != p2.J) throw std::logic_error("relabeling does not match the solid crossings after " + mv.to_string());
  };
  if (mv.mutation) {
    ef.mutation = true;
    ef.mutate_at = d;
    // the two left crossings of a braid triple exchange their variables
    if (mv.kind == MoveKind::B3) std::swap(ef.relabel[d - 2], ef.relabel[d - 1]);
    check_image();
    return r;
  }
  switch (mv.kind) {
    case MoveKind::B1:
      if (mv.special) break;
      [[fallthrough]];
    case MoveKind::B2:
      for (auto& [a, b] : ef.relabel) {
        if (a == d - 1) b = d;
        else if (a == d) b = d - 1;
      }
      break;
    case MoveKind::B3: {
      // match monotone multicurves at the left wall of the window
      Graph3D g(u, w), g2(u, r.word);
      int wall = d - 3;
      std::vector<int> after;
      for (int c : p2.J)
        if (c >= d - 2 && c <= d) after.push_back(c);
      std::set<int> used;
      for (int c : p.J) {
        if (c < d - 2 || c > d) continue;
        Multicurve mc = propagate(g, c).curves[wall];
        int match = -1;
        for (int c2 : after)
          if (!used.count(c2) && multicurves_equal(mc, propagate(g2, c2).curves[wall])) {
            if (match >= 0) throw std::logic_error("ambiguous multicurve matching for " + mv.to_string());
            match = c2;
          }
        if (match < 0) throw std::logic_error("no multicurve match for " + mv.to_string());
        used.insert(match);
        ef.relabel[c] = match;
      }
      break;
    }
    default: break;
  }
  check_image();
  return r;
}

IceQuiver relabeled(const IceQuiver& q, const std::map<int, int>& alpha) {
  IceQuiver r = q;
  for (auto& l : r.labels) l = alpha.at(l);
  std::vector<int> order(r.size());
  for (int i = 0; i < r.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return r.labels[a] < r.labels[b]; });
  IceQuiver s;
  for (int i : order) {
    s.labels.push_back(r.labels[i]);
    s.frozen.push_back(r.frozen[i]);
    std::vector<int> row;
    for (int j : order) row.push_back(r.B[i][j]);
    s.B.push_back(row);
  }
  return s;
}

IceQuiver quiver_of(const Perm& u, const Word& w) {
  Graph3D g(u, w);
  return quiver_from_cycles(g, all_cycles(g));
}

static IceQuiver mutable_only(const IceQuiver& q) {
  std::vector<int> fr;
  for (int i = 0; i < q.size(); ++i)
    if (q.frozen[i]) fr.push_back(i);
  return q.without(fr);
}

IdentityReport verify_invariance(const Perm& u, const Word& w, const MoveInstance& mv0) {
  IdentityReport rep;
  MoveInstance mv = classify_move(u, w, mv0.kind, mv0.pos);
  MoveResult res = apply_move(u, w, mv);
  IceQuiver q = quiver_of(u, w), q2 = quiver_of(res.u, res.word);
  ++rep.checked;
  std::string where = "[" + w.to_string() + "] " + mv.to_string() + "\n";
  if (mv.kind == MoveKind::B5) {
    if (!(mutable_only(q) == mutable_only(q2))) rep.failures.push_back("mutable part changed under " + where + quiver_pair(q, q2));
  } else if (mv.kind == MoveKind::B4) {
    if (!(q == q2)) rep.failures.push_back("quiver changed under " + where + quiver_pair(q, q2));
  } else if (res.effect.mutation) {
    IceQuiver want = relabeled(q.mutated(q.index_of(res.effect.mutate_at)), res.effect.relabel);
    if (!(want == q2)) rep.failures.push_back("not a mutation under " + where + quiver_pair(want, q2));
  } else {
    IceQuiver want = relabeled(q, res.effect.relabel);
    if (!(want == q2)) rep.failures.push_back("not a relabeling under " + where + quiver_pair(want, q2));
  }
  return rep;
}

std::vector<Laurent> transport_parameters(const Word& w, const MoveInstance& mv, const std::vector<Laurent>& t) {
  std::vector<Laurent> r = t;
  const int d = mv.pos;
  switch (mv.kind) {
    case MoveKind::B1:
    case MoveKind::B2: std::swap(r[d - 1], r[d]); break;
    case MoveKind::B3: {
      const Laurent &t1 = t[d - 2], &t2 = t[d - 1], &t3 = t[d];
      r[d] = t1;
      r[d - 1] = t1 * t3 - t2;
      r[d - 2] = t3;
      break;
    }
    default: break;
  }
  (void)w;
  return r;
}

IdentityReport check_transport(const Perm& u, const Word& w, const MoveInstance& mv0) {
  IdentityReport rep;
  MoveInstance mv = classify_move(u, w, mv0.kind, mv0.pos);
  MoveResult res = apply_move(u, w, mv);
  const int n = w.n, m = w.m();
  std::string where = "[" + w.to_string() + "] " + mv.to_string();
  if (mv.kind == MoveKind::B5) {
    // z_{i*}(t)^{-1} h w0 = h' w0 zbar_i(t') with t' = t h_{i*+1} / h_{i*}
    int i = std::abs(w[1]), is = star(n, i);
    int nv = 1 + n;
    Laurent t = Laurent::var(nv, 0);
    auto h = [&](int j) { return Laurent::var(nv, j); };
    PolyMatrix H = identity_matrix(n, nv), H2 = identity_matrix(n, nv);
    Perm sw = Perm::s(n, is);
    for (int j = 1; j <= n; ++j) {
      H[j - 1][j - 1] = h(j);
      H2[j - 1][j - 1] = h(sw(j));
    }
    PolyMatrix W0 = mat_signed_perm(Perm::w0(n), nv);
    Laurent tp = t * h(is + 1) * h(is).pow(-1);
    // z_{i*}(t)^{-1} = [[0,1],[-1,t]] in rows and columns i*, i*+1
    PolyMatrix zi = mat_z(n, is, t), zinv2 = identity_matrix(n, nv);
    zinv2[is - 1][is - 1] = Laurent(nv);
    zinv2[is - 1][is] = Laurent::constant(nv, 1);
    zinv2[is][is - 1] = Laurent::constant(nv, -1);
    zinv2[is][is] = t;
    ++rep.checked;
    if (matmul(zi, zinv2) != identity_matrix(n, nv)) rep.failures.push_back("inverse braid matrix is wrong");
    PolyMatrix lhs = matmul(matmul(zinv2, H), W0);
    PolyMatrix rhs = matmul(matmul(H2, W0), mat_zbar(n, i, tp));
    ++rep.checked;
    if (lhs != rhs) rep.failures.push_back("color-switch identity fails at the first letter of " + where);
    return rep;
  }
  if (mv.kind == MoveKind::B4) {
    Chart a = build_chart(u, w), b = build_chart(res.u, res.word);
    for (int c = 0; c <= m; ++c) {
      ++rep.checked;
      if (a.Z[c] != b.Z[c]) rep.failures.push_back("chart changes at " + std::to_string(c) + " under " + where);
    }
    return rep;
  }
  std::vector<std::string> names;
  for (int c = 1; c <= m; ++c) names.push_back("t" + std::to_string(c));
  std::vector<Laurent> params(m + 1, Laurent(m));
  for (int c = 1; c <= m; ++c) params[c] = Laurent::var(m, c - 1);
  Pds p = compute_pds(u, w), p2 = compute_pds(res.u, res.word);
  Chart a = build_chart_with(p, params, names);
  Chart b = build_chart_with(p2, transport_parameters(w, mv, params), names);
  for (int c = 0; c <= m; ++c) {
    if (c > window_lo(mv) && c < mv.pos) continue;
    ++rep.checked;
    if (a.Z[c] != b.Z[c]) rep.failures.push_back("braid matrices disagree at " + std::to_string(c) + " under " + where);
  }
  return rep;
}

MoveSequence conjugation_move(const Perm& u, const Word& w) {
  if (u != Perm::w0(u.n())) throw InapplicableMove("conjugation move requires u = w0");
  if (w.m() < 1) throw InapplicableMove("empty word");
  MoveSequence s;
  s.u = u;
  s.word = w;
  Pds p = compute_pds(u, w);
  std::map<int, int> cur_to_start;
  for (int c : p.J) {
    cur_to_start[c] = c;
    s.relabel[c] = c;
  }
  auto step = [&](MoveKind k, int pos) {
    MoveInstance mv = classify_move(s.u, s.word, k, pos);
    MoveResult r = apply_move(s.u, s.word, mv);
    s.moves.push_back(mv);
    if (r.effect.mutation) s.mutations.push_back(cur_to_start.at(r.effect.mutate_at));
    std::map<int, int> next;
    for (auto [a, b] : r.effect.relabel) next[b] = cur_to_start.at(a);
    cur_to_start = next;
    s.u = r.u;
    s.word = r.word;
  };
  const int m = w.m();
  if (s.word[1] > 0) step(MoveKind::B5, 1);
  for (int d = 2; d <= m; ++d) {
    if (same_sign(s.word[d - 1], s.word[d])) throw InapplicableMove("conjugation move needs the rest of the word red");
    step(MoveKind::B1, d);
  }
  step(MoveKind::B4, m);
  for (auto [cur, start] : cur_to_start) s.relabel[start] = cur;
  return s;
}

std::pair<Perm, Word> extend_to_w0(const Perm& u, const Word& w) {
  Perm v = u;
  Word r = w;
  const int n = u.n();
  while (true) {
    int i = 1;
    while (i < n && v.right_descent(i)) ++i;
    if (i == n) break;
    v = v.times_s(i);
    r.letters.push_back(i);
  }
  return {v, r};
}

namespace {

struct Tracker {
  Perm u;
  Word w;
  std::map<int, int> lab;  // solid index -> original label
  std::vector<int> muts;   // original labels

  void step(MoveKind k, int pos) {
    MoveInstance mv = classify_move(u, w, k, pos);
    MoveResult r = apply_move(u, w, mv);
    if (r.effect.mutation) muts.push_back(lab.at(r.effect.mutate_at));
    std::map<int, int> next;
    for (auto [a, b] : r.effect.relabel) next[b] = lab.at(a);
    lab = next;
    u = r.u;
    w = r.word;
  }
};

bool is_reduced(int n, const std::vector<int>& word) { return static_cast<int>(word.size()) == Perm::from_word(n, word).length(); }

// positive-word B2/B3 moves turning the prefix [1..k] into a word ending in a
std::vector<std::pair<MoveKind, int>> steer_prefix(int n, const std::vector<int>& prefix, int a) {
  using State = std::vector<int>;
  std::map<State, std::pair<State, std::pair<MoveKind, int>>> parent;
  std::deque<State> q{prefix};
  parent[prefix] = {{}, {MoveKind::B2, 0}};
  while (!q.empty()) {
    State s = q.front();
    q.pop_front();
    if (!s.empty() && s.back() == a) {
      std::vector<std::pair<MoveKind, int>> path;
      while (s != prefix) {
        auto& [ps, mv] = parent[s];
        path.push_back(mv);
        s = ps;
      }
      std::reverse(path.begin(), path.end());
      return path;
    }
    const int k = static_cast<int>(s.size());
    for (int d = 2; d <= k; ++d) {
      int x = s[d - 2], y = s[d - 1];
      if (std::abs(x - y) > 1) {
        State t = s;
        std::swap(t[d - 2], t[d - 1]);
        if (!parent.count(t)) {
          parent[t] = {s, {MoveKind::B2, d}};
          q.push_back(t);
        }
      }
      if (d >= 3 && s[d - 3] == y && std::abs(s[d - 2] - y) == 1) {
        State t = s;
        t[d - 3] = s[d - 2];
        t[d - 2] = y;
        t[d - 1] = s[d - 2];
        if (!parent.count(t)) {
          parent[t] = {s, {MoveKind::B3, d}};
          q.push_back(t);
        }
      }
    }
  }
  (void)n;
  throw std::logic_error("no reduced word ends in the required letter");
}

std::unique_ptr<Certificate> isolated_cert(const IceQuiver& mq) {
  auto c = std::make_unique<Certificate>();
  c->labels = mq.labels;
  c->isolated = true;
  return c;
}

IceQuiver labeled_mutable(const Perm& u, const Word& w, const std::map<int, int>& lab) {
  IceQuiver q = mutable_only(quiver_of(u, w));
  for (auto& l : q.labels) l = lab.at(l);
  return q;
}

bool no_arrows(const IceQuiver& q) {
  for (const auto& r : q.B)
    for (int v : r)
      if (v) return false;
  return true;
}

std::unique_ptr<Certificate> steer(const Perm& u0, const Word& w0, const std::map<int, int>& lab0) {
  IceQuiver mq = labeled_mutable(u0, w0, lab0);
  if (no_arrows(mq)) return isolated_cert(mq);
  const int n = u0.n();
  auto [u, w] = extend_to_w0(u0, w0);
  Tracker tr{u, w, lab0, {}};
  // all letters red
  while (true) {
    int last_blue = 0;
    for (int c = 1; c <= tr.w.m(); ++c)
      if (tr.w[c] < 0) last_blue = c;
    if (!last_blue) break;
    if (last_blue == tr.w.m()) tr.step(MoveKind::B4, last_blue);
    else tr.step(MoveKind::B1, last_blue + 1);
  }
  // first non-reduced prefix, rewritten to end in a double letter
  int k = 1;
  while (is_reduced(n, std::vector<int>(tr.w.letters.begin(), tr.w.letters.begin() + k))) ++k;
  int a = tr.w[k];
  auto path = steer_prefix(n, std::vector<int>(tr.w.letters.begin(), tr.w.letters.begin() + k - 1), a);
  for (auto [kind, d] : path) tr.step(kind, d);
  // rotate the double letter to the front
  for (int r = 0; r < k - 2; ++r) {
    tr.step(MoveKind::B5, 1);
    for (int d = 2; d <= tr.w.m(); ++d) tr.step(MoveKind::B1, d);
    tr.step(MoveKind::B4, tr.w.m());
  }
  if (tr.w[1] != tr.w[2]) throw std::logic_error("double letter not at the front");
  tr.step(MoveKind::B5, 1);

  Pds p = compute_pds(tr.u, tr.w);
  Word w1 = tr.w, w2 = tr.w;
  w1.letters.erase(w1.letters.begin());
  w2.letters.erase(w2.letters.begin(), w2.letters.begin() + 2);
  std::map<int, int> lab1, lab2;
  for (int c : compute_pds(tr.u, w1).J) lab1[c] = tr.lab.at(c + 1);
  if (!p.is_solid(2)) {
    auto sub = steer(tr.u, w1, lab1);
    if (sub->isolated) return isolated_cert(mq);
    auto cert = std::make_unique<Certificate>();
    cert->labels = mq.labels;
    cert->mutations = tr.muts;
    cert->mutations.insert(cert->mutations.end(), sub->mutations.begin(), sub->mutations.end());
    cert->sink = sub->sink;
    cert->first = std::move(sub->first);
    cert->second = std::move(sub->second);
    return cert;
  }
  for (int c : compute_pds(tr.u, w2).J) lab2[c] = tr.lab.at(c + 2);
  auto cert = std::make_unique<Certificate>();
  cert->labels = mq.labels;
  cert->mutations = tr.muts;
  cert->sink = tr.lab.at(2);
  cert->first = steer(tr.u, w1, lab1);
  cert->second = steer(tr.u, w2, lab2);
  return cert;
}

}  // namespace

std::unique_ptr<Certificate> steered_certificate(const Perm& u, const Word& w) {
  Pds p = compute_pds(u, w);
  std::map<int, int> lab;
  for (int c : p.J) lab[c] = c;
  return steer(u, w, lab);
}

}  // namespace p3d

namespace p3d {

RegularityReport verify_mutation_regularity(const Perm& u, const Word& w, int d) {
  RegularityReport rep;
  rep.d = d;
  Chart ch = build_chart(u, w);
  OrderTable ot(ch.pds);
  IceQuiver q = quiver_of(u, w);
  int k = q.index_of(d);
  if (k < 0) throw std::invalid_argument("crossing " + std::to_string(d) + " is not solid");
  if (q.frozen[k]) throw std::invalid_argument("crossing " + std::to_string(d) + " is frozen");
  std::vector<Laurent> x = cluster_variables(ch, ot);
  Laurent in = Laurent::constant(ch.nvars, 1), out = Laurent::constant(ch.nvars, 1);
  for (int c = 0; c < q.size(); ++c) {
    int b = q.B[c][k];
    if (b > 0) in = in * x[c].pow(b);
    if (b < 0) out = out * x[c].pow(-b);
  }
  auto r = try_divide(in + out, x[k]);
  if (!r) {
    rep.detail = "exchange binomial is not divisible by x_" + std::to_string(d);
    return rep;
  }
  rep.exact = true;
  rep.value = *r;
  Laurent units = Laurent::constant(ch.nvars, 1);
  for (int h = 1; h < w.n; ++h) units = units * grid_minor(ch, 0, h) * grid_minor(ch, 0, -h);
  rep.chart_regular = true;
  for (int v = 0; v < ch.nvars; ++v) {
    int lo = 0, ulo = INT32_MAX;
    for (const auto& [e, c] : r->terms()) lo = std::min(lo, e[v]);
    for (const auto& [e, c] : units.terms()) ulo = std::min(ulo, e[v]);
    if (lo < 0 && ulo <= 0) {
      rep.chart_regular = false;
      rep.detail = ch.names[v] + " is inverted but is not a unit on the chart";
    }
  }
  return rep;
}

}  // namespace p3d
