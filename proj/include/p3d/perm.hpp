#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace p3d {

// message cites the byte offset of the offending input
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RankMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Permutation of [1..n] in one-line notation. Products compose right to left:
// (x*y)(i) = x(y(i)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(int n);
  explicit Perm(std::vector<int> images);

  static Perm identity(int n) { return Perm(n); }
  static Perm s(int n, int i);
  static Perm w0(int n);
  static Perm from_word(int n, const std::vector<int>& word);

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }
  const std::vector<int>& images() const { return img_; }

  Perm inverse() const;
  int length() const;
  bool is_identity() const;

  Perm times_s(int i) const;  // u s_i
  Perm s_times(int i) const;  // s_i u
  bool right_descent(int i) const { return img_[i - 1] > img_[i]; }
  bool left_descent(int i) const;

  // {u(1),...,u(k)} as a sorted list
  std::vector<int> prefix_set(int k) const;

  // smallest-descent stripping from the right
  std::vector<int> reduced_word() const;

  std::string to_string() const;

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return a.img_ != b.img_; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

 private:
  std::vector<int> img_;
};

Perm compose(const Perm& x, const Perm& y);
inline Perm operator*(const Perm& x, const Perm& y) { return compose(x, y); }

bool bruhat_leq(const Perm& u, const Perm& w);

enum class Side { Left, Right };

Perm demazure_quotient(const Perm& u, int i, Side side);
Perm demazure_product(const Perm& u, int i, Side side);

// i* = n - i, sign preserved
int star(int n, int i);

using IntMatrix = std::vector<std::vector<long long>>;

// entry (w(j), j) equals (-1)^{#{a<j : w(a) > w(j)}}
IntMatrix signed_matrix(const Perm& w);

// "2,1,3" or an s-word like "s2s1" / "s2 s1" / "id"
Perm parse_perm(int n, const std::string& text);

std::vector<Perm> all_perms(int n);

}  // namespace p3d
