#include "p3d/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace p3d {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in Laurent arithmetic");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in Laurent arithmetic");
  return r;
}

Laurent Laurent::constant(int nvars, long long c) {
  Laurent p(nvars);
  if (c) p.terms_[Exps(nvars, 0)] = c;
  return p;
}

Laurent Laurent::var(int nvars, int i, int power) {
  Exps e(nvars, 0);
  e.at(i) = power;
  return monomial(e, 1);
}

Laurent Laurent::monomial(const Exps& e, long long c) {
  Laurent p(static_cast<int>(e.size()));
  if (c) p.terms_[e] = c;
  return p;
}

bool Laurent::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (int x : terms_.begin()->first)
    if (x) return false;
  return true;
}

long long Laurent::constant_value() const {
  if (!is_constant()) throw std::logic_error("not a constant");
  return terms_.empty() ? 0 : terms_.begin()->second;
}

void Laurent::add_term(const Exps& e, long long c) {
  if (!c) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (!it->second) terms_.erase(it);
  }
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (nv_ == 0 && terms_.empty()) nv_ = o.nv_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  if (nv_ == 0 && terms_.empty()) nv_ = o.nv_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r(std::max(a.nv_, b.nv_));
  Exps e(r.nv_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < r.nv_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, checked_mul(ca, cb));
    }
  return r;
}

Laurent Laurent::scaled(long long k) const {
  Laurent r(nv_);
  if (!k) return r;
  for (const auto& [e, c] : terms_) r.terms_[e] = checked_mul(c, k);
  return r;
}

Laurent Laurent::pow(int k) const {
  if (k < 0) {
    if (!is_monomial()) throw InexactDivision("negative power of a non-monomial");
    auto [e, c] = *terms_.begin();
    if (c != 1 && c != -1) throw InexactDivision("negative power of a non-unit monomial");
    Exps ne(e.size());
    for (size_t i = 0; i < e.size(); ++i) ne[i] = -e[i] * (-k);
    return monomial(ne, ((-k) % 2) ? c : 1);
  }
  Laurent r = constant(nv_, 1), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

long long Laurent::trailing_coefficient() const {
  if (terms_.empty()) return 0;
  return terms_.begin()->second;
}

static long long powmod(long long b, long long e, long long p) {
  long long r = 1;
  b %= p;
  if (b < 0) b += p;
  while (e) {
    if (e & 1) r = static_cast<long long>((__int128)r * b % p);
    b = static_cast<long long>((__int128)b * b % p);
    e >>= 1;
  }
  return r;
}

long long Laurent::eval_mod(const std::vector<long long>& point, long long p) const {
  long long total = 0;
  for (const auto& [e, c] : terms_) {
    long long v = ((c % p) + p) % p;
    for (int i = 0; i < nv_; ++i) {
      if (!e[i]) continue;
      long long x = ((point[i] % p) + p) % p;
      if (e[i] < 0) {
        if (!x) throw std::domain_error("evaluation at a pole");
        x = powmod(x, p - 2, p);
      }
      v = static_cast<long long>((__int128)v * powmod(x, std::abs(e[i]), p) % p);
    }
    total = (total + v) % p;
  }
  return total;
}

Laurent Laurent::substitute(const std::vector<Laurent>& images) const {
  if (static_cast<int>(images.size()) != nv_) throw std::invalid_argument("substitution arity mismatch");
  int nv2 = images.empty() ? 0 : images[0].nvars();
  Laurent r(nv2);
  for (const auto& [e, c] : terms_) {
    Laurent t = constant(nv2, c);
    for (int i = 0; i < nv_; ++i)
      if (e[i]) t = t * images[i].pow(e[i]);
    r += t;
  }
  return r;
}

std::string Laurent::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool unit = true;
    for (int x : e)
      if (x) unit = false;
    long long a = c < 0 ? -c : c;
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    first = false;
    bool need_star = false;
    if (a != 1 || unit) {
      os << a;
      need_star = true;
    }
    for (int i = 0; i < nv_; ++i) {
      if (!e[i]) continue;
      if (need_star) os << "*";
      os << (i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i));
      if (e[i] != 1) os << "^" << (e[i] < 0 ? "(" + std::to_string(e[i]) + ")" : std::to_string(e[i]));
      need_star = true;
    }
  }
  return os.str();
}

std::optional<Laurent> try_divide(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  int nv = std::max(a.nvars(), b.nvars());
  Laurent q(nv);
  if (a.is_zero()) return q;
  const auto& bt = b.terms();
  auto [blead_e, blead_c] = *bt.rbegin();
  auto [blow_e, blow_c] = *bt.begin();
  Exps lower(nv);
  {
    const Exps& alow = a.terms().begin()->first;
    for (int i = 0; i < nv; ++i) lower[i] = alow[i] - blow_e[i];
  }
  Laurent r = a;
  Exps t(nv);
  while (!r.is_zero()) {
    auto [re, rc] = *r.terms().rbegin();
    if (rc % blead_c) return std::nullopt;
    for (int i = 0; i < nv; ++i) t[i] = re[i] - blead_e[i];
    if (t < lower) return std::nullopt;
    Laurent term = Laurent::monomial(t, rc / blead_c);
    q += term;
    r -= term * b;
  }
  return q;
}

Laurent exact_divide(const Laurent& a, const Laurent& b) {
  auto q = try_divide(a, b);
  if (!q) throw InexactDivision("inexact Laurent division");
  return *q;
}

PolyMatrix identity_matrix(int n, int nvars) {
  PolyMatrix m(n, std::vector<Laurent>(n, Laurent(nvars)));
  for (int i = 0; i < n; ++i) m[i][i] = Laurent::constant(nvars, 1);
  return m;
}

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b) {
  size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  int nv = a.empty() ? 0 : a[0][0].nvars();
  PolyMatrix c(n, std::vector<Laurent>(p, Laurent(nv)));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (size_t j = 0; j < p; ++j)
        if (!b[l][j].is_zero()) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

PolyMatrix from_int(const std::vector<std::vector<long long>>& m, int nvars) {
  PolyMatrix r(m.size());
  for (size_t i = 0; i < m.size(); ++i)
    for (long long v : m[i]) r[i].push_back(Laurent::constant(nvars, v));
  return r;
}

Laurent minor(const PolyMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor must be square");
  int k = static_cast<int>(rows.size());
  int nv = m.empty() ? 0 : m[0][0].nvars();
  if (k == 0) return Laurent::constant(nv, 1);
  // expand row by row; memo over the set of used columns
  std::unordered_map<unsigned, Laurent> memo;
  std::vector<unsigned> masks_by_pop;
  auto rec = [&](auto&& self, int r, unsigned used) -> Laurent {
    if (r == k) return Laurent::constant(nv, 1);
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    Laurent acc(nv);
    int sign_pos = 0;
    for (int j = 0; j < k; ++j) {
      if (used & (1u << j)) continue;
      const Laurent& e = m[rows[r] - 1][cols[j] - 1];
      if (!e.is_zero()) {
        Laurent sub = self(self, r + 1, used | (1u << j));
        if (!sub.is_zero()) {
          Laurent t = e * sub;
          if (sign_pos % 2) acc -= t;
          else acc += t;
        }
      }
      ++sign_pos;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return rec(rec, 0, 0u);
}

Laurent det(const PolyMatrix& m) {
  std::vector<int> idx(m.size());
  std::iota(idx.begin(), idx.end(), 1);
  return minor(m, idx, idx);
}

}  // namespace p3d
