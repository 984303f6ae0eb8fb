#include "p3d/cycles.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace p3d {

namespace {

struct Pt {
  int x, y;
};

Pt pos(const Graph3D& g, int c, int s) { return {g.col(c, s), g.row(c, s)}; }

bool strictly_inside(Pt p, Pt q, Pt z) { return p.x < z.x && z.x < q.x && p.y < z.y && z.y < q.y; }

int outside_side(Pt p, Pt q, Pt z) {
  bool hband = p.y < z.y && z.y < q.y, vband = p.x < z.x && z.x < q.x;
  if (hband && z.x < p.x) return 1;
  if (hband && z.x > q.x) return -1;
  if (vband && z.y < p.y) return -1;
  if (vband && z.y > q.y) return 1;
  if (z.x < p.x && z.y > q.y) return 1;
  if (z.x > q.x && z.y < p.y) return -1;
  return 0;
}

// curve between a and b at time c whose inside sides come from an older curve
Curve rebuild(const Graph3D& g, int c, int a, int b, const std::function<int(int)>& old_side) {
  Curve k;
  k.P = a;
  k.Q = b;
  Pt p = pos(g, c, a), q = pos(g, c, b);
  if (!(p.x < q.x && p.y < q.y)) throw PropagationError("curve endpoints out of order");
  for (int s = 0; s < g.n(); ++s) {
    if (s == a || s == b || !strictly_inside(p, q, pos(g, c, s))) continue;
    int sd = old_side(s);
    if (!sd) throw PropagationError("dot enters a curve's box from an undefined side");
    k.side[s] = sd;
  }
  if (!curve_valid(g, c, k)) throw PropagationError("transported curve is not monotone");
  return k;
}

void sort_multicurve(const Graph3D& g, int c, Multicurve& mc) {
  std::sort(mc.begin(), mc.end(), [&](const Curve& a, const Curve& b) { return g.row(c, a.P) < g.row(c, b.P); });
  for (size_t i = 0; i + 1 < mc.size(); ++i) {
    Pt q = pos(g, c, mc[i].Q), p = pos(g, c, mc[i + 1].P);
    if (!(q.x < p.x && q.y < p.y)) throw PropagationError("multicurve components are not separated");
  }
}

}  // namespace

int curve_side(const Graph3D& g, int c, const Curve& k, int s) {
  if (s == k.P || s == k.Q) return 0;
  Pt p = pos(g, c, k.P), q = pos(g, c, k.Q), z = pos(g, c, s);
  if (strictly_inside(p, q, z)) {
    auto it = k.side.find(s);
    return it == k.side.end() ? 0 : it->second;
  }
  return outside_side(p, q, z);
}

bool curve_valid(const Graph3D& g, int c, const Curve& k) {
  Pt p = pos(g, c, k.P), q = pos(g, c, k.Q);
  if (!(p.x < q.x && p.y < q.y)) return false;
  std::vector<Pt> above, below;
  for (int s = 0; s < g.n(); ++s) {
    if (s == k.P || s == k.Q) continue;
    Pt z = pos(g, c, s);
    if (!strictly_inside(p, q, z)) continue;
    auto it = k.side.find(s);
    if (it == k.side.end()) return false;
    (it->second > 0 ? above : below).push_back(z);
  }
  for (Pt a : above)
    for (Pt b : below)
      if (a.x > b.x && a.y < b.y) return false;
  return true;
}

RelativeCycle propagate(const Graph3D& g, int d) {
  const Word& w = g.pds().word;
  const BridgeInfo& bd = g.bridge(d);
  RelativeCycle cyc;
  cyc.d = d;
  cyc.curves.assign(d, {});
  cyc.curves[d - 1] = {Curve{bd.start_strand, bd.end_strand, {}}};
  for (int r = d - 1; r >= 1; --r) {
    const Multicurve& cur = cyc.curves[r];
    Multicurve next;
    if (!g.pds().is_solid(r)) {
      for (const Curve& k : cur)
        next.push_back(rebuild(g, r - 1, k.P, k.Q, [&](int s) { return curve_side(g, r, k, s); }));
    } else {
      const BridgeInfo& b = g.bridge(r);
      int D = b.start_strand, Dp = b.end_strand;
      Pt pd = pos(g, r, D), pdp = pos(g, r, Dp);
      bool cut_any = false;
      for (const Curve& k : cur) {
        Pt p = pos(g, r, k.P), q = pos(g, r, k.Q);
        bool cut;
        if (w[r] > 0) {
          cut = p.y <= pd.y && q.y >= pdp.y && (D == k.P || curve_side(g, r, k, D) == -1) &&
                (Dp == k.Q || curve_side(g, r, k, Dp) == 1);
        } else {
          cut = p.x <= pd.x && q.x >= pdp.x && (D == k.P || curve_side(g, r, k, D) == 1) &&
                (Dp == k.Q || curve_side(g, r, k, Dp) == -1);
        }
        auto old = [&](int s) { return curve_side(g, r, k, s); };
        if (!cut) {
          next.push_back(rebuild(g, r - 1, k.P, k.Q, old));
          continue;
        }
        if (cut_any) throw PropagationError("bridge cuts two curves");
        cut_any = true;
        if (k.P != D) next.push_back(rebuild(g, r - 1, k.P, D, old));
        if (Dp != k.Q) next.push_back(rebuild(g, r - 1, Dp, k.Q, old));
      }
      if (cut_any) cyc.cuts.push_back(r);
    }
    sort_multicurve(g, r - 1, next);
    cyc.curves[r - 1] = std::move(next);
  }
  cyc.frozen = !cyc.curves[0].empty();

  // boundary chain on half-steps, then on edges
  const int n = g.n(), m = g.m();
  std::vector<std::vector<int>> hs(n, std::vector<int>(2 * m, 0));
  auto mark = [&](int s, int k, int v) {
    if (k < 0 || k > 2 * d - 2) return;
    if (hs[s][k]) throw PropagationError("strand segment traversed twice");
    hs[s][k] = v;
  };
  for (int r = 0; r < d; ++r)
    for (const Curve& k : cyc.curves[r])
      for (int h : {2 * r - 1, 2 * r}) {
        mark(k.P, h, 1);
        mark(k.Q, h, -1);
      }
  cyc.chain.assign(g.edges().size(), 0);
  std::vector<char> seen(g.edges().size(), 0);
  for (int s = 0; s < n; ++s)
    for (int k = 0; k < 2 * m; ++k) {
      int e = g.strand_edge(s, k);
      if (!seen[e]) {
        seen[e] = 1;
        cyc.chain[e] = hs[s][k];
      } else if (cyc.chain[e] != hs[s][k]) {
        throw PropagationError("cycle covers part of an edge");
      }
    }
  cyc.chain[bd.edge] = 1;
  for (int r : cyc.cuts) cyc.chain[g.bridge(r).edge] = -1;
  return cyc;
}

std::vector<RelativeCycle> all_cycles(const Graph3D& g) {
  std::vector<RelativeCycle> out;
  for (int d : g.pds().J) out.push_back(propagate(g, d));
  return out;
}

Perm sigma(const Graph3D& g, int c, const Multicurve& mc) {
  const int n = g.n();
  std::vector<int> img(n + 1);
  for (int s = 0; s < n; ++s) img[g.row(c, s)] = g.col(c, s);
  for (const Curve& k : mc) {
    Pt p = pos(g, c, k.P), q = pos(g, c, k.Q);
    std::vector<Pt> above, below;
    for (const auto& [s, sd] : k.side) (sd > 0 ? above : below).push_back(pos(g, c, s));
    // below dots with no below dot to their north-west, above dots with none to their south-east
    std::vector<Pt> X, A;
    for (Pt z : below)
      if (std::none_of(below.begin(), below.end(), [&](Pt o) { return o.x < z.x && o.y > z.y; })) X.push_back(z);
    for (Pt z : above)
      if (std::none_of(above.begin(), above.end(), [&](Pt o) { return o.x > z.x && o.y < z.y; })) A.push_back(z);
    auto byx = [](Pt a, Pt b) { return a.x < b.x; };
    std::sort(X.begin(), X.end(), byx);
    std::sort(A.begin(), A.end(), byx);
    std::vector<Pt> corners;
    int py = p.y;
    for (Pt z : X) {
      corners.push_back({z.x, py});
      py = z.y;
    }
    corners.push_back({q.x, py});
    int px = p.x;
    for (Pt z : A) {
      corners.push_back({px, z.y});
      px = z.x;
    }
    corners.push_back({px, q.y});
    for (Pt z : corners) img[z.y] = z.x;
  }
  return Perm(std::vector<int>(img.begin() + 1, img.end()));
}

int disk_membership(const Graph3D& g, const RelativeCycle& cyc, int c, int h) {
  if (c >= cyc.d || h == 0) return 0;
  for (const Curve& k : cyc.curves[c]) {
    Pt p = pos(g, c, k.P), q = pos(g, c, k.Q);
    if (h > 0 && p.y <= h && h < q.y) return 1;
    if (h < 0 && p.x <= -h && -h < q.x) return 1;
  }
  return 0;
}

std::map<int, int> chain_boundary(const Graph3D& g, const std::vector<int>& chain) {
  std::map<int, int> b;
  for (size_t i = 0; i < chain.size(); ++i) {
    if (!chain[i]) continue;
    b[g.edges()[i].v1] += chain[i];
    b[g.edges()[i].v0] -= chain[i];
  }
  for (auto it = b.begin(); it != b.end();) it = it->second ? std::next(it) : b.erase(it);
  return b;
}

int intersection(const Graph3D& g, const std::vector<int>& a, const std::vector<int>& b) {
  const auto& E = g.edges();
  const int nv = static_cast<int>(g.vertices().size());
  auto used = [&](const std::vector<int>& ch, int v) {
    std::vector<int> r;
    for (int e : g.rho(v))
      if (ch[e]) r.push_back(e);
    return r;
  };
  auto leaves = [&](const std::vector<int>& ch, int e, int v) {
    return (E[e].v0 == v && ch[e] > 0) || (E[e].v1 == v && ch[e] < 0);
  };
  std::vector<char> shared(E.size(), 0), done(E.size(), 0);
  for (size_t e = 0; e < E.size(); ++e) shared[e] = a[e] && b[e];
  for (int v = 0; v < nv; ++v) {
    auto ua = used(a, v), ub = used(b, v);
    if (ua.empty() || ub.empty()) continue;
    bool any = false;
    for (int e : g.rho(v)) any |= static_cast<bool>(shared[e]);
    if (!any) throw std::logic_error("cycles meet at a vertex without a shared edge");
  }
  int total = 0;
  for (size_t e0 = 0; e0 < E.size(); ++e0) {
    if (!shared[e0] || done[e0]) continue;
    // collect the shared component containing e0 and its ends
    std::vector<int> comp;
    std::vector<int> stack{static_cast<int>(e0)};
    done[e0] = 1;
    std::map<int, int> shared_deg;
    while (!stack.empty()) {
      int e = stack.back();
      stack.pop_back();
      comp.push_back(e);
      for (int v : {E[e].v0, E[e].v1}) {
        ++shared_deg[v];
        for (int f : g.rho(v))
          if (shared[f] && !done[f]) {
            done[f] = 1;
            stack.push_back(f);
          }
      }
    }
    std::vector<int> ends;
    for (auto [v, k] : shared_deg)
      if (k == 1) ends.push_back(v);
    if (ends.empty()) continue;  // a whole closed cycle is shared
    if (ends.size() != 2) throw std::logic_error("shared part of two cycles is not a path");
    int p0 = ends[0], pr = ends[1];
    auto end_data = [&](int v, int& e_path, int& ea, int& eb) {
      e_path = ea = eb = -1;
      for (int f : g.rho(v)) {
        if (shared[f]) e_path = f;
        else if (a[f]) ea = f;
        else if (b[f]) eb = f;
      }
      if (ea < 0 || eb < 0) throw std::logic_error("shared path ends at a boundary vertex");
    };
    auto cyclic_is = [&](int v, int x, int y, int z) {
      const auto& r = g.rho(v);
      for (int k = 0; k < 3; ++k)
        if (r[k] == x && r[(k + 1) % 3] == y && r[(k + 2) % 3] == z) return true;
      return false;
    };
    int e1, aa, ab, er, ba, bb;
    end_data(p0, e1, aa, ab);
    end_data(pr, er, ba, bb);
    bool above0 = cyclic_is(p0, e1, ab, aa);
    bool abover = cyclic_is(pr, er, ba, bb);
    if (above0 == abover) continue;
    int sa = leaves(a, e1, p0) ? 1 : -1;
    int sb = leaves(b, e1, p0) ? 1 : -1;
    total += sa * sb * (above0 ? 1 : -1);
  }
  return total;
}

std::vector<std::vector<int>> bridge_pairing(const Graph3D& g, const std::vector<RelativeCycle>& cycles) {
  const auto& J = g.pds().J;
  std::vector<std::vector<int>> P(J.size(), std::vector<int>(J.size(), 0));
  for (size_t i = 0; i < J.size(); ++i)
    for (size_t j = 0; j < J.size(); ++j) P[i][j] = cycles[i].chain[g.bridge(J[j]).edge];
  return P;
}

CycleCheck check_cycles(const Graph3D& g, const std::vector<RelativeCycle>& cycles) {
  CycleCheck r;
  auto fail = [&](std::string s) {
    r.ok = false;
    r.failures.push_back(std::move(s));
  };
  const Pds& p = g.pds();
  OrderTable ot(p);
  const int n = g.n();
  for (size_t i = 0; i < cycles.size(); ++i) {
    const RelativeCycle& cyc = cycles[i];
    const int d = cyc.d;
    const Aps& aps = ot.aps()[i];
    if (cyc.frozen != aps.frozen) fail("cycle " + std::to_string(d) + ": frozen flag disagrees with the APS");
    for (int c = 0; c < d; ++c) {
      if (sigma(g, c, cyc.curves[c]) != aps.seq[c])
        fail("cycle " + std::to_string(d) + ": sigma at time " + std::to_string(c) + " disagrees with the APS");
      for (int h = -(n - 1); h <= n - 1; ++h)
        if (h && disk_membership(g, cyc, c, h) != ot(d, c, h))
          fail("cycle " + std::to_string(d) + ": membership at (" + std::to_string(c) + "," + std::to_string(h) + ")");
    }
    auto bd = chain_boundary(g, cyc.chain);
    for (auto [v, k] : bd) {
      const Vertex& vx = g.vertices()[v];
      if (!cyc.frozen || vx.kind != VertexKind::Marked || (k != 1 && k != -1))
        fail("cycle " + std::to_string(d) + ": unexpected boundary at vertex " + std::to_string(v));
    }
    if (cyc.frozen && bd.empty()) fail("cycle " + std::to_string(d) + ": frozen cycle has no boundary");
  }
  auto P = bridge_pairing(g, cycles);
  for (size_t i = 0; i < P.size(); ++i)
    for (size_t j = 0; j < P.size(); ++j) {
      int want = i == j ? 1 : (j > i ? 0 : P[i][j]);
      if (P[i][j] != want) fail("bridge pairing is not lower unitriangular");
    }
  return r;
}

}  // namespace p3d
