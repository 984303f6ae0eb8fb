#include "p3d/count.hpp"

#include <array>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "p3d/graph3d.hpp"
#include "p3d/moves.hpp"

namespace p3d {

Laurent qpoly(const std::vector<long long>& coeffs) {
  Laurent p(1);
  for (size_t k = 0; k < coeffs.size(); ++k) p.add_term({static_cast<int>(k)}, coeffs[k]);
  return p;
}

Laurent q_var() { return Laurent::var(1, 0); }

Laurent q_minus_one(int power) {
  Laurent base = q_var() - Laurent::constant(1, 1);
  Laurent r = Laurent::constant(1, 1);
  for (int k = 0; k < power; ++k) r = r * base;
  return r;
}

long long eval_at(const Laurent& p, long long x) {
  long long total = 0;
  for (const auto& [e, c] : p.terms()) {
    if (e[0] < 0) throw std::invalid_argument("eval_at needs a polynomial");
    long long v = c;
    for (int k = 0; k < e[0]; ++k) v = checked_mul(v, x);
    total = checked_add(total, v);
  }
  return total;
}

std::string poly_string(const Laurent& p, const std::string& var) { return p.to_string({var}); }

std::vector<std::pair<int, long long>> poly_terms(const Laurent& p) {
  std::vector<std::pair<int, long long>> out;
  for (const auto& [e, c] : p.terms()) out.emplace_back(e[0], c);
  return out;
}

Laurent q_to_s(const Laurent& p) {
  Laurent r(1);
  for (const auto& [e, c] : p.terms()) r.add_term({2 * e[0]}, c);
  return r;
}

Laurent deodhar_count(const Perm& u, const Word& w) {
  if (!admissible(u, w)) throw NotAdmissible("u is not below the Demazure product of the word");
  const Laurent one = Laurent::constant(1, 1), q = q_var(), qm1 = q - one;
  std::map<Perm, Laurent> state{{u, one}};
  for (int c = w.m(); c >= 1; --c) {
    std::map<Perm, Laurent> next;
    auto add = [&](const Perm& v, const Laurent& x) {
      auto [it, ins] = next.emplace(v, x);
      if (!ins) it->second += x;
    };
    for (const auto& [v, x] : state) {
      Perm v2 = act(v, w[c]);
      if (v2.length() < v.length()) {
        add(v2, x * q);
      } else {
        add(v2, x);
        add(v, x * qm1);
      }
    }
    state = std::move(next);
  }
  auto it = state.find(Perm::identity(u.n()));
  if (it == state.end()) return Laurent(1);
  return exact_divide(it->second, Laurent::var(1, 0, u.length()));
}

std::pair<Perm, Word> normalize_to_red(const Perm& u, const Word& w) {
  bool has_blue = false;
  for (int l : w.letters) has_blue |= l < 0;
  if (!has_blue) return {u, w};
  auto [cu, cw] = extend_to_w0(u, w);
  while (true) {
    int last_blue = 0;
    for (int c = 1; c <= cw.m(); ++c)
      if (cw[c] < 0) last_blue = c;
    if (!last_blue) break;
    for (int d = last_blue + 1; d <= cw.m(); ++d) {
      MoveResult r = apply_move(cu, cw, classify_move(cu, cw, MoveKind::B1, d));
      cu = r.u;
      cw = r.word;
    }
    MoveResult r = apply_move(cu, cw, classify_move(cu, cw, MoveKind::B4, cw.m()));
    cu = r.u;
    cw = r.word;
  }
  return {cu, cw};
}

namespace {

using Mat = std::array<std::array<long long, 5>, 5>;

// Bruhat cell of A for the rank conditions on rows i..n and columns 1..j, as
// the base-n code of its one-line notation. Columns are reduced left to right
// so that their lowest nonzero rows are distinct; that row is the image of j.
int cell_code(const Mat& A, int n, long long p, const std::vector<long long>& inv) {
  long long red[5][5];
  int bottom_col[5];
  std::fill(bottom_col, bottom_col + n, -1);
  int code = 0;
  for (int j = 0; j < n; ++j) {
    long long* v = red[j];
    for (int r = 0; r < n; ++r) v[r] = A[r][j];
    int b = n - 1;
    while (true) {
      while (b >= 0 && v[b] == 0) --b;
      if (b < 0) throw std::logic_error("singular matrix in the point count");
      int k = bottom_col[b];
      if (k < 0) break;
      long long f = v[b] * inv[red[k][b]] % p;
      for (int r = 0; r <= b; ++r) v[r] = ((v[r] - f * red[k][r]) % p + p) % p;
    }
    bottom_col[b] = j;
    code = code * n + b;
  }
  return code;
}

int perm_code(const Perm& x) {
  int code = 0;
  for (int j = 1; j <= x.n(); ++j) code = code * x.n() + x(j) - 1;
  return code;
}

}  // namespace

long long fq_brute_force(const Perm& u, const Word& w0word, long long q, long long budget) {
  if (q < 2) throw std::invalid_argument("q must be a prime");
  for (long long d = 2; d * d <= q; ++d)
    if (q % d == 0) throw std::invalid_argument("q must be a prime");
  if (!admissible(u, w0word)) throw NotAdmissible("u is not below the Demazure product of the word");
  auto [nu, w] = normalize_to_red(u, w0word);
  int n = w.n, m = w.m();
  if (n > 5) throw BudgetExceeded("brute force supports n <= 5");
  long long total = 1;
  for (int k = 0; k < m; ++k) {
    total *= q;
    if (total > budget) throw BudgetExceeded("q^m exceeds the enumeration budget");
  }
  Perm target = Perm::w0(n) * nu;
  // alive[c]: cells from which the target is reachable when each later step
  // either keeps the cell or multiplies it by s_i on the right
  std::vector<std::set<Perm>> reach(m + 1);
  reach[m] = {target};
  for (int c = m; c >= 1; --c)
    for (const Perm& v : reach[c]) {
      reach[c - 1].insert(v);
      reach[c - 1].insert(v.times_s(w[c]));
    }
  int codes = 1;
  for (int k = 0; k < n; ++k) codes *= n;
  std::vector<std::vector<char>> alive(m + 1, std::vector<char>(codes, 0));
  for (int c = 0; c <= m; ++c)
    for (const Perm& v : reach[c]) alive[c][perm_code(v)] = 1;
  std::vector<long long> inv(q, 0);
  for (long long a = 1; a < q; ++a)
    for (long long b = 1; b < q; ++b)
      if (a * b % q == 1) inv[a] = b;
  Mat start{};
  Perm w0 = Perm::w0(n);
  for (int j = 1; j <= n; ++j) start[w0(j) - 1][j - 1] = 1;  // w0 is an involution
  long long count = 0;
  std::function<void(const Mat&, int)> rec = [&](const Mat& A, int c) {
    if (!alive[c - 1][cell_code(A, n, q, inv)]) return;
    if (c > m) {
      ++count;
      return;
    }
    int i = w[c] - 1;
    for (long long t = 0; t < q; ++t) {
      Mat B = A;
      for (int r = 0; r < n; ++r) {
        long long a = A[r][i], b = A[r][i + 1];
        B[r][i] = (t * a + b) % q;
        B[r][i + 1] = (q - a) % q;
      }
      rec(B, c + 1);
    }
  };
  rec(start, 1);
  return count;
}

int frozen_count(const Perm& u, const Word& w) {
  Pds p = compute_pds(u, w);
  OrderTable ot(p);
  int k = 0;
  for (int d : p.J) k += ot.frozen(d);
  return k;
}

std::string PointCountFunction::to_string() const {
  std::string s = "(" + poly_string(num) + ")";
  if (den_power) s += "/(q - 1)^" + std::to_string(den_power);
  return s;
}

PointCountFunction point_count_function(const Perm& u, const Word& w) {
  PointCountFunction r{deodhar_count(u, w), frozen_count(u, w)};
  Laurent base = q_minus_one();
  while (r.den_power > 0) {
    auto d = try_divide(r.num, base);
    if (!d) break;
    r.num = *d;
    --r.den_power;
  }
  return r;
}

int LinkWord::writhe() const {
  int s = 0;
  for (int l : letters) s += l > 0 ? 1 : -1;
  return s;
}

int LinkWord::components() const {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  for (int l : letters) {
    int i = std::abs(l) - 1;
    std::swap(p[i], p[i + 1]);
  }
  std::vector<char> seen(n, 0);
  int c = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++c;
    for (int j = i; !seen[j]; j = p[j]) seen[j] = 1;
  }
  return c;
}

std::string LinkWord::to_string() const {
  std::ostringstream os;
  for (size_t k = 0; k < letters.size(); ++k) os << (k ? " " : "") << letters[k];
  return os.str();
}

LinkWord link_word(const Perm& u, const Word& w) {
  auto [nu, nw] = normalize_to_red(u, w);
  LinkWord L{w.n, nw.letters};
  std::vector<int> red = nu.reduced_word();
  for (auto it = red.rbegin(); it != red.rend(); ++it) L.letters.push_back(-*it);
  return L;
}

namespace {

// Hecke algebra of S_n over Z[a^+-1, z^+-1] with g^2 = (z/a) g + a^{-2}.
using Hecke = std::map<Perm, Laurent>;

const Laurent& A(int k) {
  static std::map<int, Laurent> cache;
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, Laurent::monomial({k, 0})).first;
  return it->second;
}

Laurent az(int ka, int kz, long long c = 1) { return Laurent::monomial({ka, kz}, c); }

void add_to(Hecke& h, const Perm& w, const Laurent& x) {
  if (x.is_zero()) return;
  auto [it, ins] = h.emplace(w, x);
  if (!ins) {
    it->second += x;
    if (it->second.is_zero()) h.erase(it);
  }
}

Hecke times_g(const Hecke& h, int i) {
  Hecke out;
  for (const auto& [w, x] : h) {
    Perm ws = w.times_s(i);
    if (!w.right_descent(i)) {
      add_to(out, ws, x);
    } else {
      add_to(out, w, x * az(-1, 1));
      add_to(out, ws, x * az(-2, 0));
    }
  }
  return out;
}

Hecke times_ginv(const Hecke& h, int i) {
  // g^{-1} = a^2 g - a z
  Hecke out;
  for (const auto& [w, x] : times_g(h, i)) add_to(out, w, x * A(2));
  for (const auto& [w, x] : h) add_to(out, w, x * az(1, 1, -1));
  return out;
}

class Trace {
 public:
  const Laurent& operator()(const Perm& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    Laurent v = compute(w);
    return memo_.emplace(w, v).first->second;
  }

 private:
  std::map<Perm, Laurent> memo_;

  static Perm restrict(const Perm& w) {
    std::vector<int> img(w.images().begin(), w.images().end() - 1);
    return Perm(img);
  }

  Laurent compute(const Perm& w) {
    int n = w.n();
    if (n == 1) return Laurent::constant(2, 1);
    const Laurent delta = az(1, -1) - az(-1, -1);
    int k = w.inverse()(n);
    if (k == n) return delta * (*this)(restrict(w));
    Perm wp = w;
    for (int j = k; j <= n - 1; ++j) wp = wp.times_s(j);
    // T_w = T_{w'} g_{n-1} g_{n-2} ... g_k; drop g_{n-1}
    Hecke h{{restrict(wp), Laurent::constant(2, 1)}};
    for (int j = n - 2; j >= k; --j) h = times_g(h, j);
    Laurent r(2);
    for (const auto& [v, x] : h) r += x * (*this)(v);
    return r;
  }
};

}  // namespace

Laurent homfly(const LinkWord& L) {
  if (L.n < 1) throw std::invalid_argument("link needs at least one strand");
  if (L.n > 7) throw BudgetExceeded("HOMFLY evaluation supports at most 7 strands");
  Hecke h{{Perm::identity(L.n), Laurent::constant(2, 1)}};
  for (int l : L.letters) {
    if (l == 0 || std::abs(l) >= L.n) throw std::invalid_argument("letter out of range");
    h = l > 0 ? times_g(h, l) : times_ginv(h, -l);
  }
  Trace tr;
  Laurent r(2);
  for (const auto& [w, x] : h) r += x * tr(w);
  return r;
}

Laurent homfly_top(const Laurent& P, int* top_degree) {
  if (P.is_zero()) throw std::invalid_argument("zero HOMFLY polynomial");
  int top = P.terms().rbegin()->first[0];
  Laurent r(1);
  for (const auto& [e, c] : P.terms())
    if (e[0] == top) r.add_term({e[1]}, c);
  if (top_degree) *top_degree = top;
  return r;
}

STopTerm ptop_substituted(const Laurent& top_z) {
  // top_z is the coefficient of a^k with k stored by the caller in the s-shift
  int zmin = top_z.terms().begin()->first[0];
  int D = zmin < 0 ? -zmin : 0;
  Laurent zs = Laurent::var(1, 0) - Laurent::var(1, 0, -1);
  STopTerm r{Laurent(1), D};
  for (const auto& [e, c] : top_z.terms()) {
    Laurent t = Laurent::constant(1, c);
    for (int k = 0; k < e[0] + D; ++k) t = t * zs;
    r.num += t;
  }
  return r;
}

PcReport verify_thm_pc(const Perm& u, const Word& w) {
  PcReport rep;
  rep.count = deodhar_count(u, w);
  rep.frozen = frozen_count(u, w);
  rep.components = Graph3D(u, w).components();
  rep.homfly_poly = homfly(link_word(u, w));
  int top = 0;
  rep.top = homfly_top(rep.homfly_poly, &top);
  STopTerm st = ptop_substituted(rep.top);
  // a^top = s^{-top}
  Laurent rhs_num = st.num * Laurent::var(1, 0, -top);
  // count * (s - 1/s)^D == (s^2 - 1)^{frozen + c - 1} * rhs_num
  Laurent zs = Laurent::var(1, 0) - Laurent::var(1, 0, -1);
  Laurent lhs = q_to_s(rep.count);
  for (int k = 0; k < st.den_power; ++k) lhs = lhs * zs;
  Laurent rhs = rhs_num;
  Laurent s2m1 = Laurent::var(1, 0, 2) - Laurent::constant(1, 1);
  for (int k = 0; k < rep.frozen + rep.components - 1; ++k) rhs = rhs * s2m1;
  rep.ok = lhs == rhs;
  if (!rep.ok)
    rep.detail = "count*(s-1/s)^" + std::to_string(st.den_power) + " = " + poly_string(lhs, "s") +
                 " but (q-1)^{frozen+c-1} * Ptop numerator = " + poly_string(rhs, "s");
  return rep;
}

}  // namespace p3d
