#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "p3d/cycles.hpp"

namespace p3d {

// Ice quiver stored as a full skew-symmetric matrix; frozen-frozen entries are
// kept at zero.
struct IceQuiver {
  std::vector<int> labels;
  std::vector<char> frozen;
  std::vector<std::vector<int>> B;

  int size() const { return static_cast<int>(labels.size()); }
  int index_of(int label) const;
  std::vector<int> mutable_indices() const;
  // rows: all vertices, columns: mutable vertices
  std::vector<std::vector<int>> exchange_matrix() const;
  IceQuiver mutated(int k) const;  // k is an index, not a label
  IceQuiver without(const std::vector<int>& indices) const;
  std::string to_dot() const;
  std::string to_json() const;
  friend bool operator==(const IceQuiver& a, const IceQuiver& b) {
    return a.labels == b.labels && a.frozen == b.frozen && a.B == b.B;
  }
};

IceQuiver quiver_from_half_arrows(const Pds& p, const OrderTable& ot);
IceQuiver quiver_from_cycles(const Graph3D& g, const std::vector<RelativeCycle>& cycles);

// all invariant factors of the exchange matrix equal 1
bool really_full_rank(const std::vector<std::vector<int>>& m);
int integer_rank(const std::vector<std::vector<int>>& m);

// Locally acyclic certificate: a vertex is isolated, or after a mutation
// sequence some vertex s is a sink, and both Q - s and Q - s - (in-neighbors of s)
// have certificates.
struct Certificate {
  std::vector<int> labels;       // mutable vertices covered, original labels
  bool isolated = false;
  std::vector<int> mutations;    // original labels
  int sink = -1;                 // original label
  std::unique_ptr<Certificate> first, second;
};

// decide local acyclicity of the mutable part by a bounded search; nullopt if
// the budget runs out
struct SearchResult {
  enum Status { Acyclic, Unknown } status = Unknown;
  std::unique_ptr<Certificate> cert;
};
SearchResult search_certificate(const IceQuiver& q, int max_depth = 3, long long budget = 200000);

// independent check of a certificate against a quiver
bool check_certificate(const IceQuiver& q, const Certificate& cert, std::string* why = nullptr);

std::string certificate_json(const Certificate& c);

}  // namespace p3d
