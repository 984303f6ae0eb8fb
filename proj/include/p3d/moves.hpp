#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "p3d/minors.hpp"
#include "p3d/quiver.hpp"

namespace p3d {

enum class MoveKind { B1 = 1, B2, B3, B4, B5 };

struct MoveInstance {
  MoveKind kind = MoveKind::B1;
  int pos = 0;               // rightmost crossing of the window (1 for B5, m for B4)
  bool special = false;      // B1 only
  bool fully_solid = false;
  bool mutation = false;
  std::string to_string() const;
};

struct MoveEffect {
  bool mutation = false;
  int mutate_at = 0;         // crossing index, same before and after
  std::map<int, int> relabel;  // solid index before -> solid index after, applied after the mutation
};

struct MoveResult {
  Perm u;
  Word word;
  MoveEffect effect;
};

struct InapplicableMove : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<MoveInstance> enumerate_applicable(const Perm& u, const Word& w);
// classify the move of the given kind at pos; throws InapplicableMove
MoveInstance classify_move(const Perm& u, const Word& w, MoveKind kind, int pos);
MoveResult apply_move(const Perm& u, const Word& w, const MoveInstance& mv);

IceQuiver relabeled(const IceQuiver& q, const std::map<int, int>& alpha);

// quiver of (u, w) recomputed from scratch, through relative cycles
IceQuiver quiver_of(const Perm& u, const Word& w);

IdentityReport verify_invariance(const Perm& u, const Word& w, const MoveInstance& mv);

// parameters of the rewritten word, one per crossing, from generic ones
std::vector<Laurent> transport_parameters(const Word& w, const MoveInstance& mv, const std::vector<Laurent>& t);
// symbolic check of the matrix identity behind the move
IdentityReport check_transport(const Perm& u, const Word& w, const MoveInstance& mv);

// i beta0 -> beta0 i*, via B5, repeated B1 and B4; requires u = w0
struct MoveSequence {
  Perm u;
  Word word;
  std::vector<MoveInstance> moves;
  std::vector<int> mutations;  // solid indices of the starting word
  std::map<int, int> relabel;  // solid index before -> solid index after
};
MoveSequence conjugation_move(const Perm& u, const Word& w);

// append hollow letters until u = w0
std::pair<Perm, Word> extend_to_w0(const Perm& u, const Word& w);

// certificate for the mutable part of the quiver of (u, w), following the
// double-bridge reduction
std::unique_ptr<Certificate> steered_certificate(const Perm& u, const Word& w);

// x'_d = (prod_{c->d} x_c + prod_{d->c} x_c) / x_d in the Laurent ring of the
// chart. chart_regular additionally requires every variable inverted in x'_d to
// divide the product of the grid minors at c = 0, which are units.
struct RegularityReport {
  int d = 0;
  bool exact = false;
  bool chart_regular = false;
  Laurent value;
  std::string detail;
  bool ok() const { return exact && chart_regular; }
};
RegularityReport verify_mutation_regularity(const Perm& u, const Word& w, int d);

}  // namespace p3d
