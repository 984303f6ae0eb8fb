#pragma once

#include <map>
#include <string>
#include <vector>

#include "p3d/perm.hpp"

namespace p3d {

struct NotAdmissible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Signed letters: i > 0 acts on the right (red), i < 0 on the left (blue).
struct Word {
  int n = 0;
  std::vector<int> letters;

  int m() const { return static_cast<int>(letters.size()); }
  int operator[](int c) const { return letters[c - 1]; }  // 1-based
  void validate() const;
  std::string to_string() const;
  friend bool operator==(const Word& a, const Word& b) { return a.n == b.n && a.letters == b.letters; }
};

Word parse_word(int n, const std::string& text);

// s^- u s^+ for a signed letter
Perm act(const Perm& u, int letter);
Perm act_quotient(const Perm& u, int letter);
Perm act_product(const Perm& u, int letter);

Perm demazure_product_of_word(const Word& w);
bool admissible(const Perm& u, const Word& w);

struct Pds {
  Perm u;
  Word word;
  std::vector<Perm> seq;     // seq[c] = u_(c), c = 0..m
  std::vector<char> solid;   // solid[c] for c = 1..m, solid[0] unused
  std::vector<int> J;        // solid indices, increasing

  int m() const { return word.m(); }
  bool is_solid(int c) const { return solid[c]; }
  int index_of(int d) const;  // position of d in J, -1 if absent
};

Pds compute_pds(const Perm& u, const Word& w);

struct Aps {
  int d = 0;
  std::vector<Perm> seq;  // v^{(d)}_(c), c = 0..m
  bool frozen = false;
};

Aps compute_aps(const Pds& p, int d);

// q[d][c][h] for h in +-[1..n-1]
class OrderTable {
 public:
  OrderTable() = default;
  explicit OrderTable(const Pds& p);

  int operator()(int d, int c, int h) const;
  const std::vector<int>& J() const { return J_; }
  const std::vector<Aps>& aps() const { return aps_; }
  bool frozen(int d) const;

 private:
  int n_ = 0, m_ = 0;
  std::vector<int> J_;
  std::vector<Aps> aps_;
  std::vector<std::vector<std::vector<char>>> q_;  // [k][c][h + n]
};

// Le-diagram rows of '.' (empty) and '+' (dot) inside a k x (n-k) box; rows
// may be shorter to describe a Young diagram lambda (English notation).
struct LeDiagram {
  int k = 0, n = 0;
  std::vector<std::string> rows;
};

LeDiagram parse_le(int n, const std::string& text);  // rows separated by '/' or newlines
bool le_condition(const LeDiagram& le);

struct LePair {
  Perm u;
  Word word;                                // red letters, a reduced word for w
  Perm w;
  std::vector<std::pair<int, int>> boxes;   // crossing c-1 -> (row, col), 0-based
  std::vector<char> dotted;                 // per crossing c-1
};

LePair le_diagram_to_pair(const LeDiagram& le);

}  // namespace p3d
