#include "p3d/minors.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>

namespace p3d {

namespace {

PolyMatrix block2(int n, int i, const Laurent& a, const Laurent& b, const Laurent& c, const Laurent& d) {
  if (i < 1 || i >= n) throw std::out_of_range("braid matrix index out of range");
  int nv = std::max({a.nvars(), b.nvars(), c.nvars(), d.nvars()});
  PolyMatrix m = identity_matrix(n, nv);
  m[i - 1][i - 1] = a;
  m[i - 1][i] = b;
  m[i][i - 1] = c;
  m[i][i] = d;
  return m;
}

Laurent K(int nv, long long v) { return Laurent::constant(nv, v); }

std::vector<int> range1(int k) {
  std::vector<int> r(k);
  for (int i = 0; i < k; ++i) r[i] = i + 1;
  return r;
}

}  // namespace

PolyMatrix mat_z(int n, int i, const Laurent& t) {
  int nv = t.nvars();
  return block2(n, i, t, K(nv, -1), K(nv, 1), K(nv, 0));
}

PolyMatrix mat_zbar(int n, int i, const Laurent& t) {
  int nv = t.nvars();
  return block2(n, i, t, K(nv, 1), K(nv, -1), K(nv, 0));
}

PolyMatrix mat_zbar_inv(int n, int i, const Laurent& t) {
  int nv = t.nvars();
  return block2(n, i, K(nv, 0), K(nv, -1), K(nv, 1), t);
}

PolyMatrix mat_x(int n, int i, const Laurent& t) {
  int nv = t.nvars();
  return block2(n, i, K(nv, 1), t, K(nv, 0), K(nv, 1));
}

PolyMatrix mat_y(int n, int i, const Laurent& t) {
  int nv = t.nvars();
  return block2(n, i, K(nv, 1), K(nv, 0), t, K(nv, 1));
}

PolyMatrix mat_coroot(int n, int i, const Laurent& t) {
  int nv = t.nvars();
  return block2(n, i, t, K(nv, 0), K(nv, 0), t.pow(-1));
}

PolyMatrix mat_lift(int n, int i, int nvars) { return mat_z(n, i, Laurent(nvars)); }

PolyMatrix mat_signed_perm(const Perm& w, int nvars) { return from_int(signed_matrix(w), nvars); }

Chart build_chart_with(const Pds& pds, const std::vector<Laurent>& params, std::vector<std::string> names) {
  Chart ch;
  ch.pds = pds;
  int n = pds.word.n, m = pds.m();
  ch.nvars = static_cast<int>(names.size());
  ch.names = std::move(names);
  ch.t = params;
  ch.symbol_of.assign(m + 1, -1);
  ch.Z.assign(m + 1, PolyMatrix());
  ch.Z[m] = mat_signed_perm(Perm::w0(n) * pds.u, ch.nvars);
  for (int c = m; c >= 1; --c) {
    int l = pds.word[c];
    if (l > 0) ch.Z[c - 1] = matmul(ch.Z[c], mat_z(n, l, params[c]));
    else ch.Z[c - 1] = matmul(mat_zbar_inv(n, star(n, -l), params[c]), ch.Z[c]);
  }
  return ch;
}

Chart build_chart(const Perm& u, const Word& w, int extra_vars) {
  Pds pds = compute_pds(u, w);
  int nv = static_cast<int>(pds.J.size()) + extra_vars;
  std::vector<std::string> names;
  for (int d : pds.J) names.push_back("t" + std::to_string(d));
  for (int e = 0; e < extra_vars; ++e) names.push_back("h" + std::to_string(e + 1));
  std::vector<Laurent> params(w.m() + 1, Laurent(nv));
  std::vector<int> sym(w.m() + 1, -1);
  for (size_t k = 0; k < pds.J.size(); ++k) {
    params[pds.J[k]] = Laurent::var(nv, static_cast<int>(k));
    sym[pds.J[k]] = static_cast<int>(k);
  }
  Chart ch = build_chart_with(pds, params, names);
  ch.symbol_of = sym;
  return ch;
}

Laurent grid_minor(const Chart& ch, int c, int h) {
  int n = ch.pds.word.n;
  if (h == 0 || std::abs(h) == n) return Laurent::constant(ch.nvars, 1);
  if (std::abs(h) > n) throw std::out_of_range("grid minor index out of range");
  const Perm& uc = ch.pds.seq[c];
  Perm w0 = Perm::w0(n);
  if (h > 0) {
    Perm rows_perm = w0 * uc;
    return minor(ch.Z[c], rows_perm.prefix_set(h), range1(h));
  }
  int k = -h;
  return minor(ch.Z[c], w0.prefix_set(k), uc.inverse().prefix_set(k));
}

Laurent chamber_minor(const Chart& ch, int c) { return grid_minor(ch, c - 1, ch.pds.word[c]); }

std::vector<Laurent> cluster_variables(const Chart& ch, const OrderTable& ot) {
  const auto& J = ch.pds.J;
  int k = static_cast<int>(J.size());
  // M[a][b] = q[J_b][J_a - 1][i_{J_a}], upper unitriangular in the order of J
  std::vector<std::vector<long long>> M(k, std::vector<long long>(k, 0));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) M[a][b] = ot(J[b], J[a] - 1, ch.pds.word[J[a]]);
  for (int a = 0; a < k; ++a) {
    if (M[a][a] != 1) throw std::logic_error("chamber minor matrix is not unitriangular");
    for (int b = 0; b < a; ++b)
      if (M[a][b] != 0) throw std::logic_error("chamber minor matrix is not upper triangular");
  }
  // Delta_a = prod_b x_b^{M[a][b]}: back substitution
  std::vector<Laurent> x(k);
  for (int a = k - 1; a >= 0; --a) {
    Laurent num = chamber_minor(ch, J[a]);
    Laurent den = Laurent::constant(ch.nvars, 1);
    for (int b = a + 1; b < k; ++b)
      if (M[a][b]) den = den * x[b].pow(static_cast<int>(M[a][b]));
    x[a] = exact_divide(num, den);
  }
  return x;
}

Laurent sign_normalized(const Laurent& p) { return p.trailing_coefficient() < 0 ? -p : p; }

static int rank_mod(std::vector<std::vector<long long>> a, long long p) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] % p) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[r]);
    long long inv = 1, b = a[r][c] % p, e = p - 2;
    if (b < 0) b += p;
    while (e) {
      if (e & 1) inv = static_cast<long long>((__int128)inv * b % p);
      b = static_cast<long long>((__int128)b * b % p);
      e >>= 1;
    }
    for (int i = 0; i < rows; ++i) {
      if (i == r || !(a[i][c] % p)) continue;
      long long f = static_cast<long long>((__int128)(a[i][c] % p + p) * inv % p);
      for (int j = c; j < cols; ++j) a[i][j] = static_cast<long long>(((a[i][j] - (__int128)f * a[r][j]) % p + p) % p);
    }
    ++r;
  }
  return r;
}

Perm bruhat_cell_at(const PolyMatrix& Z, const std::vector<long long>& point, long long p) {
  int n = static_cast<int>(Z.size());
  std::vector<std::vector<long long>> A(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A[i][j] = Z[i][j].eval_mod(point, p);
  // r(i,j) = rank of rows i..n, columns 1..j determines the cell
  std::vector<std::vector<int>> r(n + 2, std::vector<int>(n + 1, 0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      std::vector<std::vector<long long>> sub;
      for (int a = i; a <= n; ++a) sub.emplace_back(A[a - 1].begin(), A[a - 1].begin() + j);
      r[i][j] = rank_mod(sub, p);
    }
  std::vector<int> img(n, 0);
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i) {
      int v = r[i][j] - r[i + 1][j] - r[i][j - 1] + r[i + 1][j - 1];
      if (v == 1) img[j - 1] = i;
    }
  return Perm(img);
}

void IdentityReport::merge(const IdentityReport& o) {
  checked += o.checked;
  failures.insert(failures.end(), o.failures.begin(), o.failures.end());
}

IdentityReport check_many_minors_stable(const Chart& ch) {
  IdentityReport rep;
  int n = ch.pds.word.n;
  for (int c = 1; c <= ch.pds.m(); ++c) {
    int ic = ch.pds.word[c];
    for (int a = 1; a < n; ++a) {
      int h = ic > 0 ? a : -a;
      if (h == ic) continue;
      ++rep.checked;
      if (grid_minor(ch, c - 1, h) != grid_minor(ch, c, h))
        rep.failures.push_back("stability fails at c=" + std::to_string(c) + " h=" + std::to_string(h));
    }
  }
  return rep;
}

IdentityReport check_short_relations(const Chart& ch) {
  IdentityReport rep;
  int n = ch.pds.word.n;
  for (int c = 0; c <= ch.pds.m(); ++c) {
    for (int a = 1; a <= n; ++a) {
      int b = -ch.pds.seq[c](a);
      Laurent lhs = grid_minor(ch, c, a) * grid_minor(ch, c, b + 1);
      Laurent rhs = grid_minor(ch, c, b) * grid_minor(ch, c, a - 1);
      ++rep.checked;
      if (lhs != rhs)
        rep.failures.push_back("short relation fails at c=" + std::to_string(c) + " a=" + std::to_string(a));
    }
  }
  return rep;
}

IdentityReport check_grid_monomials(const Chart& ch, const OrderTable& ot, const std::vector<Laurent>& x) {
  IdentityReport rep;
  int n = ch.pds.word.n;
  const auto& J = ch.pds.J;
  for (int c = 0; c <= ch.pds.m(); ++c)
    for (int h = -(n - 1); h <= n - 1; ++h) {
      if (!h) continue;
      Laurent prod = Laurent::constant(ch.nvars, 1);
      for (size_t k = 0; k < J.size(); ++k)
        if (ot(J[k], c, h)) prod = prod * x[k];
      Laurent g = grid_minor(ch, c, h);
      ++rep.checked;
      if (g != prod && g != -prod)
        rep.failures.push_back("grid minor (" + std::to_string(c) + "," + std::to_string(h) +
                               ") is not the predicted monomial");
    }
  return rep;
}

IdentityReport check_chart_validity(const Chart& ch, unsigned seed) {
  IdentityReport rep;
  const long long p = 1000000007LL;
  std::mt19937_64 rng(seed);
  std::vector<long long> pt(ch.nvars);
  for (auto& v : pt) v = 1 + static_cast<long long>(rng() % (p - 1));
  int n = ch.pds.word.n;
  Perm w0 = Perm::w0(n);
  for (int c = 0; c <= ch.pds.m(); ++c) {
    ++rep.checked;
    Perm cell = bruhat_cell_at(ch.Z[c], pt, p);
    if (cell != w0 * ch.pds.seq[c])
      rep.failures.push_back("Z_" + std::to_string(c) + " lies in cell " + cell.to_string());
    Laurent d = det(ch.Z[c]);
    if (!(d.is_constant() && d.constant_value() == 1)) rep.failures.push_back("det Z_" + std::to_string(c) + " != 1");
  }
  return rep;
}

std::vector<MutationWindow> mutation_windows(const Pds& p) {
  std::vector<MutationWindow> out;
  const Word& w = p.word;
  for (int d = 2; d <= w.m(); ++d) {
    int a = w[d - 1], b = w[d];
    if ((a > 0) != (b > 0) && p.solid[d - 1] && p.solid[d]) {
      int red = a > 0 ? a : b, blue = a > 0 ? -b : -a;
      const Perm& v = p.seq[d - 1];
      if (v.times_s(red) == v.s_times(blue)) out.push_back({1, d});
    }
    if (d >= 3) {
      int x = w[d - 2], y = w[d - 1], z = w[d];
      if (x == z && (x > 0) == (y > 0) && std::abs(std::abs(x) - std::abs(y)) == 1 && p.solid[d - 2] &&
          p.solid[d - 1] && p.solid[d])
        out.push_back({3, d});
    }
  }
  return out;
}

Word rewrite_window(const Word& w, const MutationWindow& win) {
  Word r = w;
  int d = win.last;
  if (win.kind == 1) {
    std::swap(r.letters[d - 2], r.letters[d - 1]);
  } else {
    int x = w[d], y = w[d - 1];
    r.letters[d - 3] = y;
    r.letters[d - 2] = x;
    r.letters[d - 1] = y;
  }
  return r;
}

std::vector<Laurent> transport_window(const Word& w, const MutationWindow& win, const std::vector<Laurent>& t) {
  std::vector<Laurent> r = t;
  int d = win.last;
  if (win.kind == 1) {
    std::swap(r[d - 1], r[d]);
  } else {
    const Laurent &t1 = t[d - 2], &t2 = t[d - 1], &t3 = t[d];
    if (w[d] > 0) {
      // Z_{c-2} = Z_{c+1} z_i(t3) z_j(t2) z_i(t1)
      r[d] = t1;
      r[d - 1] = t1 * t3 - t2;
      r[d - 2] = t3;
    } else {
      // Z_{c-2} = zbar(t1)^{-1} zbar(t2)^{-1} zbar(t3)^{-1} Z_{c+1}
      r[d] = t1;
      r[d - 1] = t1 * t3 - t2;
      r[d - 2] = t3;
    }
  }
  return r;
}

static std::string where(const Word& w, const MutationWindow& win) {
  std::ostringstream os;
  os << "[" << w.to_string() << "] window kind " << win.kind << " ending at " << win.last;
  return os.str();
}

IdentityReport check_exchange_identity(const Perm& u, const Word& w, const MutationWindow& win) {
  IdentityReport rep;
  Chart ch = build_chart(u, w);
  Word w2 = rewrite_window(w, win);
  Pds p2 = compute_pds(u, w2);
  Chart ch2 = build_chart_with(p2, transport_window(w, win, ch.t), ch.names);
  int d = win.last;
  int lo = win.kind == 1 ? d - 2 : d - 3;
  ++rep.checked;
  if (ch2.Z[lo] != ch.Z[lo]) {
    rep.failures.push_back("transported chart disagrees left of " + where(w, win));
    return rep;
  }
  int c = d - 1;
  auto G = [&](int cc, int h) { return grid_minor(ch, cc, h); };
  ++rep.checked;
  if (win.kind == 1) {
    int j = w[c];
    Laurent lhs = G(c, j) * grid_minor(ch2, c, j);
    int jm = j - 1, jp = j + 1;
    Laurent rhs = G(c + 1, j) * G(c - 1, j) + G(c, jm) * G(c, jp);
    if (lhs != rhs) rep.failures.push_back("opposite-color exchange identity fails at " + where(w, win));
  } else {
    int i = w[c - 1], j = w[c];
    Laurent lhs = G(c, i) * grid_minor(ch2, c, j);
    Laurent rhs = G(c + 1, i) * G(c - 2, j) + G(c + 1, j) * G(c - 2, i);
    if (lhs != rhs) rep.failures.push_back("braid-triple exchange identity fails at " + where(w, win));
  }
  return rep;
}

IdentityReport check_ord_min(const Perm& u, const Word& w, const MutationWindow& win) {
  IdentityReport rep;
  Pds p = compute_pds(u, w);
  Word w2 = rewrite_window(w, win);
  Pds p2 = compute_pds(u, w2);
  if (p2.J != p.J) {
    rep.failures.push_back("solid set changed under " + where(w, win));
    return rep;
  }
  OrderTable ot(p), ot2(p2);
  int d = win.last, c = d - 1;
  int n = w.n;
  auto q = [&](const OrderTable& t, int e, int cc, int h) {
    if (h == 0 || std::abs(h) >= n) return 0;
    return t(e, cc, h);
  };
  for (int e : p.J) {
    if (e == d) continue;
    int F, F2, A, B, C, D;
    if (win.kind == 1) {
      int i = w[c] > 0 ? w[c] : w[d];
      F = q(ot, e, c, i);
      F2 = q(ot2, e, c, i);
      A = q(ot, e, c - 1, i);
      C = q(ot, e, c + 1, i);
      B = q(ot, e, c, i + 1);
      D = q(ot, e, c, i - 1);
    } else {
      int i = w[c - 1], j = w[c];
      F = q(ot, e, c, i);
      F2 = q(ot2, e, c, j);
      A = q(ot, e, c - 2, i);
      C = q(ot, e, c + 1, j);
      B = q(ot, e, c - 2, j);
      D = q(ot, e, c + 1, i);
    }
    ++rep.checked;
    if (F + F2 != std::min(A + C, B + D))
      rep.failures.push_back("order relation fails for vertex " + std::to_string(e) + " at " + where(w, win));
  }
  return rep;
}

}  // namespace p3d
