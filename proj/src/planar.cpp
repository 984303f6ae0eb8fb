#include "p3d/planar.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace p3d {

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

int row_in_half_step(const Graph3D& g, int s, int k) { return g.row((k + 1) / 2, s); }

}  // namespace

FaceMap planar_faces(const Graph3D& g) {
  const int n = g.n(), m = g.m();
  const Word& w = g.pds().word;
  for (int c = 1; c <= m; ++c)
    if (w[c] < 0) throw std::invalid_argument("planar faces need an all-red word");
  FaceMap fm;
  auto keep = g.trimmed_edges();

  // a hollow crossing survives in the drawing only if both strands are kept
  // there; a single kept strand changes rows and walls off its band
  std::vector<char> jump(m + 1, 0);
  for (int c = 1; c <= m; ++c) {
    if (g.pds().is_solid(c)) continue;
    int l = w[c];
    int kept = 0;
    for (int r : {l, l + 1})
      if (keep[g.strand_edge(g.strand_at_row(c - 1, r), 2 * c - 2)]) ++kept;
    if (kept == 2) {
      fm.planar = false;
      fm.detail += "hollow crossing " + std::to_string(c) + " keeps both strands\n";
    }
    jump[c] = kept > 0;
  }

  const int K = 2 * m + 1, B = n + 1;
  auto id = [&](int k, int j) { return k * B + j; };
  Dsu d(K * B);
  for (int k = 0; k < K; ++k) {
    for (int j = 0; j + 1 < B; ++j) {
      bool wall = false;
      if (k < 2 * m) {
        int s = -1;
        for (int t = 0; t < n; ++t)
          if (row_in_half_step(g, t, k) == j + 1) s = t;
        wall = keep[g.strand_edge(s, k)];
      }
      if (!wall) d.unite(id(k, j), id(k, j + 1));
    }
    if (k == 0) continue;
    for (int j = 0; j < B; ++j) {
      bool wall = false;
      if (k % 2 == 1) {
        int c = (k + 1) / 2;
        wall = (g.has_bridge(c) || jump[c]) && w[c] == j;
      }
      if (!wall) d.unite(id(k - 1, j), id(k, j));
    }
  }

  std::map<int, int> index;
  fm.cell_face.assign(K, std::vector<int>(B));
  for (int k = 0; k < K; ++k)
    for (int j = 0; j < B; ++j) {
      auto it = index.emplace(d.find(id(k, j)), static_cast<int>(index.size())).first;
      fm.cell_face[k][j] = it->second;
    }
  fm.faces = static_cast<int>(index.size());
  fm.f0 = fm.cell_face[2 * m][0];
  fm.boundary.assign(fm.faces, 0);
  for (int j = 0; j < B; ++j) fm.boundary[fm.cell_face[0][j]] = 1;

  const auto& E = g.edges();
  fm.sides.assign(E.size(), {-1, -1});
  for (size_t e = 0; e < E.size(); ++e) {
    if (!keep[e]) continue;
    if (E[e].kind == EdgeKind::Bridge) {
      int c = E[e].crossing;
      fm.sides[e] = {fm.cell_face[2 * c - 2][w[c]], fm.cell_face[2 * c - 1][w[c]]};
      continue;
    }
    int s = E[e].strand;
    int k0 = g.vertices()[E[e].v0].time2, k1 = g.vertices()[E[e].v1].time2;
    for (int k = k0; k < k1; ++k) {
      int r = row_in_half_step(g, s, k);
      std::array<int, 2> lr{fm.cell_face[k][r], fm.cell_face[k][r - 1]};
      if (k == k0) fm.sides[e] = lr;
      else if (fm.sides[e] != lr) {
        fm.planar = false;
        fm.detail += "edge " + std::to_string(e) + " borders different faces along its length\n";
      }
    }
  }
  return fm;
}

std::vector<int> face_boundary(const Graph3D& g, const FaceMap& fm, int f) {
  std::vector<int> chain(g.edges().size(), 0);
  for (size_t e = 0; e < chain.size(); ++e) {
    if (fm.sides[e][0] == f) ++chain[e];
    if (fm.sides[e][1] == f) --chain[e];
  }
  return chain;
}

IceQuiver face_quiver(const Graph3D& g, const FaceMap& fm, std::vector<int>* face_of_label) {
  std::vector<int> faces;
  for (int f = 0; f < fm.faces; ++f)
    if (f != fm.f0) faces.push_back(f);
  std::vector<int> pos(fm.faces, -1);
  for (size_t i = 0; i < faces.size(); ++i) pos[faces[i]] = static_cast<int>(i);
  IceQuiver q;
  const int N = static_cast<int>(faces.size());
  q.B.assign(N, std::vector<int>(N, 0));
  for (int i = 0; i < N; ++i) {
    q.labels.push_back(faces[i]);
    q.frozen.push_back(fm.boundary[faces[i]]);
  }
  const auto& V = g.vertices();
  const auto& E = g.edges();
  for (size_t e = 0; e < E.size(); ++e) {
    if (fm.sides[e][0] < 0) continue;
    const Vertex& a = V[E[e].v0];
    const Vertex& b = V[E[e].v1];
    if (a.kind != VertexKind::Bridge || b.kind != VertexKind::Bridge || a.black == b.black) continue;
    int L = pos[fm.sides[e][0]], R = pos[fm.sides[e][1]];
    if (L < 0 || R < 0 || L == R) continue;
    // v0 black: the arrow runs from the right face to the left face
    int sgn = a.black ? -1 : 1;
    q.B[L][R] += sgn;
    q.B[R][L] -= sgn;
  }
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (q.frozen[i] && q.frozen[j]) q.B[i][j] = 0;
  if (face_of_label) *face_of_label = faces;
  return q;
}

LeReport check_le_pair(const LePair& p) {
  LeReport rep;
  Graph3D g(p.u, p.word);
  const int m = p.word.m();

  rep.pds_consistent = true;
  for (int c = 1; c <= m; ++c)
    if (g.pds().is_solid(c) != static_cast<bool>(p.dotted[c - 1])) {
      rep.pds_consistent = false;
      rep.detail += "crossing " + std::to_string(c) + " disagrees with its box\n";
    }
  int descents = 0;
  for (int i = 1; i < p.w.n(); ++i)
    if (p.w.right_descent(i)) ++descents;
  if (descents > 1 || p.w.length() != m) {
    rep.pds_consistent = false;
    rep.detail += "w is not Grassmannian with a reduced word\n";
  }

  FaceMap fm = planar_faces(g);
  rep.planar = fm.planar;
  rep.detail += fm.detail;
  if (!fm.planar) return rep;

  auto cycles = all_cycles(g);
  std::vector<int> face_of(cycles.size(), -1);
  int ccw = 0, cw = 0;
  for (size_t i = 0; i < cycles.size(); ++i) {
    for (int f = 0; f < fm.faces && face_of[i] < 0; ++f) {
      if (f == fm.f0) continue;
      auto b = face_boundary(g, fm, f);
      if (b == cycles[i].chain) { face_of[i] = f; ++ccw; }
      else {
        for (int& x : b) x = -x;
        if (b == cycles[i].chain) { face_of[i] = f; ++cw; }
      }
    }
    if (face_of[i] < 0) rep.detail += "cycle " + std::to_string(cycles[i].d) + " bounds no face\n";
    else if (static_cast<bool>(fm.boundary[face_of[i]]) != cycles[i].frozen)
      rep.detail += "cycle " + std::to_string(cycles[i].d) + " frozen flag disagrees with its face\n";
  }
  std::vector<int> hit(fm.faces, 0);
  bool ok = static_cast<int>(cycles.size()) == fm.faces - 1;
  for (size_t i = 0; i < cycles.size(); ++i) {
    if (face_of[i] < 0 || hit[face_of[i]]++ ||
        static_cast<bool>(fm.boundary[face_of[i]]) != cycles[i].frozen)
      ok = false;
  }
  rep.bijection = ok;
  if (!ok) {
    rep.detail += std::to_string(cycles.size()) + " cycles, " + std::to_string(fm.faces) + " faces\n";
    return rep;
  }
  rep.orientation = cw == 0 ? 1 : ccw == 0 ? -1 : 0;

  IceQuiver qc = quiver_from_cycles(g, cycles);
  std::vector<int> faces;
  IceQuiver qf = face_quiver(g, fm, &faces);
  std::vector<int> fpos(fm.faces, -1);
  for (size_t i = 0; i < faces.size(); ++i) fpos[faces[i]] = static_cast<int>(i);
  bool same = true, opposite = true;
  for (int a = 0; a < qc.size(); ++a)
    for (int b = 0; b < qc.size(); ++b) {
      int x = qc.B[a][b];
      int y = qf.B[fpos[face_of[a]]][fpos[face_of[b]]];
      if (x != y) same = false;
      if (x != -y) opposite = false;
    }
  rep.quiver_sign = same ? 1 : opposite ? -1 : 0;
  if (!same && !opposite) rep.detail += "face quiver differs\n" + qc.to_json() + "\n" + qf.to_json() + "\n";
  return rep;
}

}  // namespace p3d
