#pragma once

#include <array>
#include <string>
#include <vector>

#include "p3d/quiver.hpp"

namespace p3d {

// Faces of the trimmed red projection of an all-red graph, read off the grid of
// cells (half-step k, band j), where band j lies between rows j and j+1 and the
// extra column k = 2m is the region past the end vertices.
struct FaceMap {
  bool planar = true;
  std::string detail;
  int faces = 0;
  int f0 = -1;                                 // face containing the region past time m
  std::vector<std::vector<int>> cell_face;     // [k][j]
  std::vector<char> boundary;                  // touches the line through the marked vertices
  std::vector<std::array<int, 2>> sides;       // per edge: {left, right} of the canonical orientation, -1 if trimmed
};

FaceMap planar_faces(const Graph3D& g);

// boundary of a face as an edge chain, traversed with the face on the left
std::vector<int> face_boundary(const Graph3D& g, const FaceMap& fm, int f);

// arrows across black-white edges with the black endpoint of the edge on the
// right of the arrow; faces other than f0, frozen = boundary
IceQuiver face_quiver(const Graph3D& g, const FaceMap& fm, std::vector<int>* face_of_label = nullptr);

struct LeReport {
  bool pds_consistent = false;   // hollow crossings are exactly the empty boxes, w Grassmannian
  bool planar = false;
  bool bijection = false;        // cycles -> faces other than f0
  int orientation = 0;           // +1 counterclockwise, -1 clockwise, 0 mixed
  int quiver_sign = 0;           // +1 face quiver equals cycle quiver, -1 opposite, 0 neither
  std::string detail;
};
LeReport check_le_pair(const LePair& p);

}  // namespace p3d
