#include "p3d/graph3d.hpp"

#include <numeric>
#include <sstream>

#include <json.hpp>

namespace p3d {

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  bool unite(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

}  // namespace

Graph3D::Graph3D(const Perm& u, const Word& w) : n_(u.n()), m_(w.m()), pds_(compute_pds(u, w)) {
  const int n = n_, m = m_;
  col_.assign(m + 1, std::vector<int>(n));
  row_.assign(m + 1, std::vector<int>(n));
  at_row_.assign(m + 1, std::vector<int>(n + 1, -1));
  at_col_.assign(m + 1, std::vector<int>(n + 1, -1));
  for (int s = 0; s < n; ++s) col_[0][s] = row_[0][s] = s + 1;
  for (int c = 1; c <= m; ++c) {
    col_[c] = col_[c - 1];
    row_[c] = row_[c - 1];
    if (!pds_.is_solid(c)) {
      int l = w[c];
      for (int s = 0; s < n; ++s) {
        if (l > 0) {
          if (row_[c - 1][s] == l) row_[c][s] = l + 1;
          else if (row_[c - 1][s] == l + 1) row_[c][s] = l;
        } else {
          int a = -l;
          if (col_[c - 1][s] == a) col_[c][s] = a + 1;
          else if (col_[c - 1][s] == a + 1) col_[c][s] = a;
        }
      }
    }
  }
  for (int c = 0; c <= m; ++c)
    for (int s = 0; s < n; ++s) {
      at_row_[c][row_[c][s]] = s;
      at_col_[c][col_[c][s]] = s;
      if (pds_.seq[c](row_[c][s]) != col_[c][s]) throw std::logic_error("strand positions disagree with the distinguished subexpression");
    }

  // events on each strand, ordered by time
  std::vector<std::vector<int>> events(n);
  marked_.resize(n);
  end_.resize(n);
  for (int s = 0; s < n; ++s) {
    marked_[s] = static_cast<int>(verts_.size());
    verts_.push_back({VertexKind::Marked, s, 0, 0, false, false});
    events[s].push_back(marked_[s]);
  }
  bridge_index_.assign(m + 1, -1);
  for (int c = 1; c <= m; ++c) {
    if (!pds_.is_solid(c)) continue;
    int l = w[c];
    BridgeInfo b{};
    b.c = c;
    b.red = l > 0;
    if (b.red) {
      b.start_strand = at_row_[c][l];
      b.end_strand = at_row_[c][l + 1];
    } else {
      b.start_strand = at_col_[c][-l];
      b.end_strand = at_col_[c][-l + 1];
    }
    b.start_vertex = static_cast<int>(verts_.size());
    verts_.push_back({VertexKind::Bridge, b.start_strand, 2 * c - 1, c, b.red, true});
    b.end_vertex = static_cast<int>(verts_.size());
    verts_.push_back({VertexKind::Bridge, b.end_strand, 2 * c - 1, c, !b.red, false});
    events[b.start_strand].push_back(b.start_vertex);
    events[b.end_strand].push_back(b.end_vertex);
    bridge_index_[c] = static_cast<int>(bridges_.size());
    bridges_.push_back(b);
  }
  for (int s = 0; s < n; ++s) {
    end_[s] = static_cast<int>(verts_.size());
    verts_.push_back({VertexKind::End, s, 2 * m, 0, false, false});
    events[s].push_back(end_[s]);
  }

  rho_.assign(verts_.size(), {});
  half_edge_.assign(n, std::vector<int>(2 * m, -1));
  // per vertex: previous and next strand edge
  std::vector<int> prev_e(verts_.size(), -1), next_e(verts_.size(), -1);
  for (int s = 0; s < n; ++s) {
    for (size_t k = 0; k + 1 < events[s].size(); ++k) {
      int a = events[s][k], b = events[s][k + 1];
      int id = static_cast<int>(edges_.size());
      edges_.push_back({EdgeKind::Strand, a, b, s, 0});
      next_e[a] = id;
      prev_e[b] = id;
      for (int h = verts_[a].time2; h < verts_[b].time2; ++h) half_edge_[s][h] = id;
    }
  }
  for (auto& b : bridges_) {
    b.edge = static_cast<int>(edges_.size());
    edges_.push_back({EdgeKind::Bridge, b.start_vertex, b.end_vertex, -1, b.c});
    for (int v : {b.start_vertex, b.end_vertex}) {
      if (b.red) rho_[v] = {b.edge, next_e[v], prev_e[v]};
      else rho_[v] = {b.edge, prev_e[v], next_e[v]};
    }
  }
  for (int s = 0; s < n; ++s) {
    rho_[marked_[s]] = {next_e[marked_[s]]};
    rho_[end_[s]] = {prev_e[end_[s]]};
  }
}

const BridgeInfo& Graph3D::bridge(int c) const {
  if (!has_bridge(c)) throw std::out_of_range("no bridge at crossing " + std::to_string(c));
  return bridges_[bridge_index_[c]];
}

int Graph3D::components() const {
  Dsu d(static_cast<int>(verts_.size()));
  int k = static_cast<int>(verts_.size());
  for (const auto& e : edges_)
    if (d.unite(e.v0, e.v1)) --k;
  return k;
}

std::vector<char> Graph3D::trimmed_edges() const {
  std::vector<char> keep(edges_.size(), 1);
  for (size_t i = 0; i < edges_.size(); ++i)
    if (verts_[edges_[i].v1].kind == VertexKind::End) keep[i] = 0;
  return keep;
}

int Graph3D::trimmed_components() const {
  Dsu d(static_cast<int>(verts_.size()));
  int k = 0;
  for (const auto& v : verts_)
    if (v.kind != VertexKind::End) ++k;
  auto keep = trimmed_edges();
  for (size_t i = 0; i < edges_.size(); ++i)
    if (keep[i] && d.unite(edges_[i].v0, edges_[i].v1)) --k;
  return k;
}

static const char* kind_name(VertexKind k) {
  switch (k) {
    case VertexKind::Marked: return "marked";
    case VertexKind::End: return "end";
    default: return "bridge";
  }
}

std::string Graph3D::to_json() const {
  nlohmann::json j;
  j["n"] = n_;
  j["m"] = m_;
  j["u"] = pds_.u.images();
  j["beta"] = pds_.word.letters;
  j["J"] = pds_.J;
  auto& vs = j["vertices"] = nlohmann::json::array();
  for (size_t i = 0; i < verts_.size(); ++i) {
    const auto& v = verts_[i];
    nlohmann::json o{{"id", i}, {"kind", kind_name(v.kind)}, {"strand", v.strand}, {"time", v.time2 / 2.0}, {"rho", rho_[i]}};
    if (v.kind == VertexKind::Bridge) {
      o["crossing"] = v.crossing;
      o["color"] = v.black ? "black" : "white";
    }
    vs.push_back(o);
  }
  auto& es = j["edges"] = nlohmann::json::array();
  for (size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    nlohmann::json o{{"id", i}, {"from", e.v0}, {"to", e.v1}, {"kind", e.kind == EdgeKind::Strand ? "strand" : "bridge"}};
    if (e.kind == EdgeKind::Strand) o["strand"] = e.strand;
    else o["crossing"] = e.crossing;
    es.push_back(o);
  }
  auto& bs = j["bridges"] = nlohmann::json::array();
  for (const auto& b : bridges_)
    bs.push_back({{"crossing", b.c}, {"color", b.red ? "red" : "blue"}, {"start_strand", b.start_strand}, {"end_strand", b.end_strand}, {"edge", b.edge}});
  j["components"] = components();
  j["trimmed_components"] = trimmed_components();
  return j.dump(2);
}

std::string Graph3D::to_svg(bool red, const std::vector<int>& chain) const {
  const double sx = 60, sy = 50, ox = 40, oy = 30;
  auto X = [&](double t) { return ox + t * sx; };
  auto Y = [&](double h) { return oy + (n_ - h) * sy; };
  auto coord = [&](int c, int s) { return red ? row_[c][s] : col_[c][s]; };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << X(m_) + ox << "\" height=\"" << Y(1) + oy << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  auto stroke_of = [&](int e) {
    if (!chain.empty() && chain[e] > 0) return std::string("#d62728\" stroke-width=\"3");
    if (!chain.empty() && chain[e] < 0) return std::string("#1f77b4\" stroke-width=\"3");
    return std::string("#444\" stroke-width=\"1.5");
  };
  for (int s = 0; s < n_; ++s) {
    for (int k = 0; k < 2 * m_; ++k) {
      int c0 = k / 2, c1 = (k + 1) / 2;
      double h0 = k % 2 ? (coord(c0, s) + coord(c1, s)) / 2.0 : coord(c0, s);
      double h1 = k % 2 ? coord(c1, s) : (coord(c0, s) + coord(c1, s)) / 2.0;
      os << "<line x1=\"" << X(k / 2.0) << "\" y1=\"" << Y(h0) << "\" x2=\"" << X((k + 1) / 2.0) << "\" y2=\"" << Y(h1)
         << "\" stroke=\"" << stroke_of(half_edge_[s][k]) << "\"/>\n";
    }
  }
  for (const auto& b : bridges_) {
    double t = b.c - 0.5;
    double h0 = coord(b.c, b.start_strand), h1 = coord(b.c, b.end_strand);
    os << "<line x1=\"" << X(t) << "\" y1=\"" << Y(h0) << "\" x2=\"" << X(t) << "\" y2=\"" << Y(h1) << "\" stroke=\""
       << (chain.empty() ? std::string(b.red ? "#c00\" stroke-width=\"2" : "#00c\" stroke-width=\"2") : stroke_of(b.edge))
       << "\" stroke-dasharray=\"" << (b.red == red ? "none" : "4,3") << "\"/>\n";
    for (int v : {b.start_vertex, b.end_vertex}) {
      double h = coord(b.c, verts_[v].strand);
      os << "<circle cx=\"" << X(t) << "\" cy=\"" << Y(h) << "\" r=\"5\" stroke=\"black\" fill=\"" << (verts_[v].black ? "black" : "white")
         << "\"/>\n";
    }
  }
  for (int s = 0; s < n_; ++s)
    os << "<text x=\"" << X(0) - 25 << "\" y=\"" << Y(coord(0, s)) + 4 << "\" font-size=\"12\">M" << s + 1 << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

std::string Graph3D::to_dot() const {
  std::ostringstream os;
  os << "graph G {\n  node [shape=circle, width=0.2, label=\"\"];\n";
  for (size_t i = 0; i < verts_.size(); ++i) {
    const auto& v = verts_[i];
    os << "  v" << i << " [";
    if (v.kind == VertexKind::Bridge) os << "style=filled, fillcolor=" << (v.black ? "black" : "white");
    else os << "shape=box, label=\"" << (v.kind == VertexKind::Marked ? "M" : "E") << v.strand + 1 << "\"";
    os << ", pos=\"" << v.time2 / 2.0 << "," << v.strand << "!\"];\n";
  }
  for (const auto& e : edges_) {
    os << "  v" << e.v0 << " -- v" << e.v1;
    if (e.kind == EdgeKind::Bridge) os << " [color=" << (bridge(e.crossing).red ? "red" : "blue") << ", penwidth=2]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace p3d
