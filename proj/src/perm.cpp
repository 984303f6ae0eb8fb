#include "p3d/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace p3d {

Perm::Perm(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 1); }

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size() + 1, 0);
  for (int v : img_) {
    if (v < 1 || v > n() || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = 1;
  }
}

Perm Perm::s(int n, int i) {
  if (i < 1 || i >= n) throw std::out_of_range("simple reflection index out of range");
  Perm p(n);
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

Perm Perm::w0(int n) {
  Perm p(n);
  std::reverse(p.img_.begin(), p.img_.end());
  return p;
}

Perm Perm::from_word(int n, const std::vector<int>& word) {
  Perm p(n);
  for (int i : word) p = p.times_s(i);
  return p;
}

Perm Perm::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < n(); ++i) inv[img_[i] - 1] = i + 1;
  Perm p;
  p.img_ = std::move(inv);
  return p;
}

int Perm::length() const {
  int len = 0;
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      if (img_[i] > img_[j]) ++len;
  return len;
}

bool Perm::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (img_[i] != i + 1) return false;
  return true;
}

Perm Perm::times_s(int i) const {
  if (i < 1 || i >= n()) throw std::out_of_range("simple reflection index out of range");
  Perm p = *this;
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

Perm Perm::s_times(int i) const {
  if (i < 1 || i >= n()) throw std::out_of_range("simple reflection index out of range");
  Perm p = *this;
  for (int& v : p.img_) {
    if (v == i) v = i + 1;
    else if (v == i + 1) v = i;
  }
  return p;
}

bool Perm::left_descent(int i) const {
  // s_i u < u iff i+1 appears before i
  int pi = 0, pi1 = 0;
  for (int k = 0; k < n(); ++k) {
    if (img_[k] == i) pi = k;
    if (img_[k] == i + 1) pi1 = k;
  }
  return pi1 < pi;
}

std::vector<int> Perm::prefix_set(int k) const {
  std::vector<int> s(img_.begin(), img_.begin() + k);
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<int> Perm::reduced_word() const {
  std::vector<int> rev;
  Perm p = *this;
  while (!p.is_identity()) {
    for (int i = 1; i < n(); ++i) {
      if (p.right_descent(i)) {
        rev.push_back(i);
        p = p.times_s(i);
        break;
      }
    }
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

std::string Perm::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < n(); ++i) os << (i ? "," : "") << img_[i];
  return os.str();
}

Perm compose(const Perm& x, const Perm& y) {
  if (x.n() != y.n()) throw RankMismatch("rank mismatch in compose");
  std::vector<int> z(x.n());
  for (int i = 1; i <= x.n(); ++i) z[i - 1] = x(y(i));
  return Perm(std::move(z));
}

bool bruhat_leq(const Perm& u, const Perm& w) {
  if (u.n() != w.n()) throw RankMismatch("rank mismatch in bruhat_leq");
  int n = u.n();
  for (int i = 1; i <= n; ++i) {
    int cu = 0, cw = 0;
    for (int j = 1; j <= n; ++j) {
      if (u(j) >= i) ++cu;
      if (w(j) >= i) ++cw;
      if (cu > cw) return false;
    }
  }
  return true;
}

Perm demazure_quotient(const Perm& u, int i, Side side) {
  if (side == Side::Right) return u.right_descent(i) ? u.times_s(i) : u;
  return u.left_descent(i) ? u.s_times(i) : u;
}

Perm demazure_product(const Perm& u, int i, Side side) {
  if (side == Side::Right) return u.right_descent(i) ? u : u.times_s(i);
  return u.left_descent(i) ? u : u.s_times(i);
}

int star(int n, int i) { return i > 0 ? n - i : -(n + i); }

IntMatrix signed_matrix(const Perm& w) {
  int n = w.n();
  IntMatrix m(n, std::vector<long long>(n, 0));
  for (int j = 1; j <= n; ++j) {
    int inv = 0;
    for (int a = 1; a < j; ++a)
      if (w(a) > w(j)) ++inv;
    m[w(j) - 1][j - 1] = (inv % 2) ? -1 : 1;
  }
  return m;
}

Perm parse_perm(int n, const std::string& text) {
  auto fail = [](size_t at, const std::string& what) {
    throw ParseError(what + " at byte " + std::to_string(at));
  };
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return Perm(n);
  size_t last = text.find_last_not_of(" \t\r\n");
  std::string core = text.substr(first, last - first + 1);
  if (core == "id" || core == "e") return Perm(n);
  if (core == "w0") return Perm::w0(n);
  if (core[0] == 's') {
    std::vector<int> word;
    size_t pos = first;
    while (pos <= last) {
      char ch = text[pos];
      if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == '*') {
        ++pos;
        continue;
      }
      if (ch != 's') fail(pos, "expected 's'");
      size_t end = pos + 1;
      while (end <= last && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      if (end == pos + 1) fail(pos + 1, "missing index");
      if (end - pos > 4) fail(pos + 1, "index too large");
      int i = std::stoi(text.substr(pos + 1, end - pos - 1));
      if (i < 1 || i >= n) fail(pos + 1, "index " + std::to_string(i) + " out of range for n=" + std::to_string(n));
      word.push_back(i);
      pos = end;
    }
    return Perm::from_word(n, word);
  }
  std::vector<int> imgs;
  std::vector<size_t> at;
  size_t pos = first;
  bool need = true;
  while (pos <= last) {
    char ch = text[pos];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++pos;
      continue;
    }
    if (ch == ',') {
      if (need) fail(pos, "empty entry");
      need = true;
      ++pos;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(ch))) fail(pos, "expected digit");
    size_t end = pos;
    while (end <= last && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    if (end - pos > 4) fail(pos, "entry too large");
    imgs.push_back(std::stoi(text.substr(pos, end - pos)));
    at.push_back(pos);
    need = false;
    pos = end;
  }
  if (need) fail(last + 1, "trailing comma");
  if (static_cast<int>(imgs.size()) != n)
    fail(first, "one-line notation has " + std::to_string(imgs.size()) + " entries, expected " + std::to_string(n));
  std::vector<char> seen(n + 1, 0);
  for (size_t k = 0; k < imgs.size(); ++k) {
    if (imgs[k] < 1 || imgs[k] > n) fail(at[k], "entry out of range");
    if (seen[imgs[k]]) fail(at[k], "repeated entry");
    seen[imgs[k]] = 1;
  }
  return Perm(imgs);
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Perm> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace p3d
