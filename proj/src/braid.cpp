#include "p3d/braid.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace p3d {

void Word::validate() const {
  if (n < 1) throw ParseError("rank must be positive");
  for (int c = 0; c < m(); ++c) {
    int a = std::abs(letters[c]);
    if (letters[c] == 0 || a >= n)
      throw ParseError("letter " + std::to_string(letters[c]) + " at position " + std::to_string(c + 1) +
                       " out of range for n=" + std::to_string(n));
  }
}

std::string Word::to_string() const {
  std::ostringstream os;
  for (int c = 0; c < m(); ++c) os << (c ? " " : "") << letters[c];
  return os.str();
}

Word parse_word(int n, const std::string& text) {
  Word w;
  w.n = n;
  size_t pos = 0;
  while (pos < text.size()) {
    char ch = text[pos];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      ++pos;
      continue;
    }
    size_t end = pos;
    if (text[end] == '-' || text[end] == '+') ++end;
    size_t digits = end;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    if (end == digits) throw ParseError("expected integer at byte " + std::to_string(pos));
    if (end - digits > 4) throw ParseError("letter too large at byte " + std::to_string(pos));
    int letter = std::stoi(text.substr(pos, end - pos));
    if (letter == 0 || std::abs(letter) >= n)
      throw ParseError("letter " + std::to_string(letter) + " out of range for n=" + std::to_string(n) + " at byte " +
                       std::to_string(pos));
    w.letters.push_back(letter);
    pos = end;
  }
  w.validate();
  return w;
}

Perm act(const Perm& u, int letter) { return letter > 0 ? u.times_s(letter) : u.s_times(-letter); }

Perm act_quotient(const Perm& u, int letter) {
  return letter > 0 ? demazure_quotient(u, letter, Side::Right) : demazure_quotient(u, -letter, Side::Left);
}

Perm act_product(const Perm& u, int letter) {
  return letter > 0 ? demazure_product(u, letter, Side::Right) : demazure_product(u, -letter, Side::Left);
}

Perm demazure_product_of_word(const Word& w) {
  Perm x(w.n);
  for (int c = 1; c <= w.m(); ++c) x = act_product(x, w[c]);
  return x;
}

bool admissible(const Perm& u, const Word& w) {
  if (u.n() != w.n) throw RankMismatch("rank mismatch between u and word");
  return bruhat_leq(u, demazure_product_of_word(w));
}

int Pds::index_of(int d) const {
  auto it = std::lower_bound(J.begin(), J.end(), d);
  return (it != J.end() && *it == d) ? static_cast<int>(it - J.begin()) : -1;
}

Pds compute_pds(const Perm& u, const Word& w) {
  w.validate();
  if (u.n() != w.n) throw RankMismatch("rank mismatch between u and word");
  Pds p;
  p.u = u;
  p.word = w;
  int m = w.m();
  p.seq.assign(m + 1, Perm(w.n));
  p.solid.assign(m + 1, 0);
  p.seq[m] = u;
  for (int c = m; c >= 1; --c) {
    p.seq[c - 1] = act_quotient(p.seq[c], w[c]);
    p.solid[c] = p.seq[c - 1] == p.seq[c];
  }
  if (!p.seq[0].is_identity())
    throw NotAdmissible("u=" + u.to_string() + " is not below the Demazure product of the word");
  for (int c = 1; c <= m; ++c)
    if (p.solid[c]) p.J.push_back(c);
  return p;
}

Aps compute_aps(const Pds& p, int d) {
  if (d < 1 || d > p.m() || !p.solid[d]) throw std::invalid_argument("index is not a solid crossing");
  Aps a;
  a.d = d;
  a.seq = p.seq;
  a.seq[d - 1] = act_product(p.seq[d], p.word[d]);
  for (int c = d - 1; c >= 1; --c) a.seq[c - 1] = act_quotient(a.seq[c], p.word[c]);
  a.frozen = !a.seq[0].is_identity();
  return a;
}

OrderTable::OrderTable(const Pds& p) : n_(p.word.n), m_(p.m()), J_(p.J) {
  for (int d : J_) aps_.push_back(compute_aps(p, d));
  q_.assign(J_.size(), std::vector<std::vector<char>>(m_ + 1, std::vector<char>(2 * n_ + 1, 0)));
  for (size_t k = 0; k < J_.size(); ++k) {
    for (int c = 0; c <= m_; ++c) {
      const Perm& uc = p.seq[c];
      const Perm& vc = aps_[k].seq[c];
      Perm ui = uc.inverse(), vi = vc.inverse();
      for (int h = 1; h < n_; ++h) {
        q_[k][c][n_ + h] = uc.prefix_set(h) != vc.prefix_set(h);
        q_[k][c][n_ - h] = ui.prefix_set(h) != vi.prefix_set(h);
      }
    }
  }
}

int OrderTable::operator()(int d, int c, int h) const {
  auto it = std::lower_bound(J_.begin(), J_.end(), d);
  if (it == J_.end() || *it != d) throw std::invalid_argument("order table: not a solid index");
  if (h == 0 || std::abs(h) >= n_) return 0;
  return q_[it - J_.begin()][c][n_ + h];
}

bool OrderTable::frozen(int d) const {
  auto it = std::lower_bound(J_.begin(), J_.end(), d);
  if (it == J_.end() || *it != d) throw std::invalid_argument("order table: not a solid index");
  return aps_[it - J_.begin()].frozen;
}

LeDiagram parse_le(int n, const std::string& text) {
  LeDiagram le;
  le.n = n;
  std::string row;
  auto flush = [&]() {
    if (!row.empty()) le.rows.push_back(row);
    row.clear();
  };
  for (size_t pos = 0; pos < text.size(); ++pos) {
    char ch = text[pos];
    if (ch == '/' || ch == '\n' || ch == ';') flush();
    else if (ch == '.' || ch == '+') row += ch;
    else if (!std::isspace(static_cast<unsigned char>(ch)))
      throw ParseError(std::string("bad Le-diagram character '") + ch + "' at byte " + std::to_string(pos));
  }
  flush();
  le.k = static_cast<int>(le.rows.size());
  return le;
}

bool le_condition(const LeDiagram& le) {
  const auto& R = le.rows;
  for (size_t r = 1; r < R.size(); ++r)
    if (R[r].size() > R[r - 1].size()) return false;
  if (le.k < 0 || le.k > le.n) return false;
  for (const auto& row : R)
    if (static_cast<int>(row.size()) > le.n - le.k) return false;
  for (size_t r = 0; r < R.size(); ++r) {
    for (size_t c = 0; c < R[r].size(); ++c) {
      if (R[r][c] == '+') continue;
      bool above = false, left = false;
      for (size_t r2 = 0; r2 < r; ++r2)
        if (R[r2][c] == '+') above = true;
      for (size_t c2 = 0; c2 < c; ++c2)
        if (R[r][c2] == '+') left = true;
      if (above && left) return false;
    }
  }
  return true;
}

LePair le_diagram_to_pair(const LeDiagram& le) {
  if (!le_condition(le)) throw ParseError("Le-condition violated or shape does not fit the box");
  int n = le.n, k = le.k;
  LePair out;
  out.word.n = n;
  std::vector<int> hollow;
  // bottom row first, each row right to left; box (r,c) carries s_{n-k+r-c}
  for (int r = k - 1; r >= 0; --r) {
    for (int c = static_cast<int>(le.rows[r].size()) - 1; c >= 0; --c) {
      int letter = n - k + r - c;
      out.word.letters.push_back(letter);
      out.boxes.push_back({r, c});
      bool dot = le.rows[r][c] == '+';
      out.dotted.push_back(dot);
      if (!dot) hollow.push_back(letter);
    }
  }
  out.w = Perm::from_word(n, out.word.letters);
  out.u = Perm::from_word(n, hollow);
  return out;
}

}  // namespace p3d
