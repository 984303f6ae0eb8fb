#pragma once

#include <array>
#include <string>
#include <vector>

#include "p3d/braid.hpp"

namespace p3d {

enum class VertexKind { Marked, End, Bridge };
enum class EdgeKind { Strand, Bridge };

struct Vertex {
  VertexKind kind;
  int strand;
  int time2;       // twice the time coordinate
  int crossing;    // bridge crossing, 0 otherwise
  bool black;      // bridge endpoints only
  bool is_start;   // bridge endpoints: start (D) or end (D')
};

struct Edge {
  EdgeKind kind;
  int v0, v1;      // canonical orientation: forward in time, or bridge start to end
  int strand;      // -1 for bridges
  int crossing;    // bridge crossing, 0 for strand edges
};

struct BridgeInfo {
  int c;
  bool red;
  int start_strand, end_strand;  // D and D' with D before D' in the dominance order
  int edge;
  int start_vertex, end_vertex;
};

// Strands are numbered 0..n-1 by their row at time 0. The dot of the strand at
// row r in the diagram at time c sits at (x, y) = (u_c(r), r).
class Graph3D {
 public:
  Graph3D() = default;
  Graph3D(const Perm& u, const Word& w);

  int n() const { return n_; }
  int m() const { return m_; }
  const Pds& pds() const { return pds_; }

  int col(int c, int s) const { return col_[c][s]; }
  int row(int c, int s) const { return row_[c][s]; }
  int strand_at_row(int c, int r) const { return at_row_[c][r]; }
  int strand_at_col(int c, int x) const { return at_col_[c][x]; }

  const std::vector<Vertex>& vertices() const { return verts_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<BridgeInfo>& bridges() const { return bridges_; }
  const BridgeInfo& bridge(int c) const;
  bool has_bridge(int c) const { return c >= 1 && c <= m_ && bridge_index_[c] >= 0; }

  // edge covering the half-step [k/2, (k+1)/2] of strand s
  int strand_edge(int s, int k) const { return half_edge_[s][k]; }
  // cyclic order of incident edges at a vertex (ribbon structure)
  const std::vector<int>& rho(int v) const { return rho_[v]; }
  // marked vertex of strand s, end vertex of strand s
  int marked(int s) const { return marked_[s]; }
  int end(int s) const { return end_[s]; }

  int components() const;
  // edges that survive removal of the end vertices
  std::vector<char> trimmed_edges() const;
  int trimmed_components() const;

  std::string to_json() const;
  std::string to_svg(bool red, const std::vector<int>& highlight_chain = {}) const;
  std::string to_dot() const;

 private:
  int n_ = 0, m_ = 0;
  Pds pds_;
  std::vector<std::vector<int>> col_, row_, at_row_, at_col_;
  std::vector<Vertex> verts_;
  std::vector<Edge> edges_;
  std::vector<BridgeInfo> bridges_;
  std::vector<int> bridge_index_;
  std::vector<std::vector<int>> half_edge_;
  std::vector<std::vector<int>> rho_;
  std::vector<int> marked_, end_;
};

}  // namespace p3d
