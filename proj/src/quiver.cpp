#include "p3d/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace p3d {

int IceQuiver::index_of(int label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
}

std::vector<int> IceQuiver::mutable_indices() const {
  std::vector<int> r;
  for (int i = 0; i < size(); ++i)
    if (!frozen[i]) r.push_back(i);
  return r;
}

std::vector<std::vector<int>> IceQuiver::exchange_matrix() const {
  auto mi = mutable_indices();
  std::vector<std::vector<int>> r(size(), std::vector<int>(mi.size()));
  for (int i = 0; i < size(); ++i)
    for (size_t j = 0; j < mi.size(); ++j) r[i][j] = B[i][mi[j]];
  return r;
}

IceQuiver IceQuiver::mutated(int k) const {
  if (frozen.at(k)) throw std::invalid_argument("cannot mutate at a frozen vertex");
  IceQuiver q = *this;
  const int n = size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) q.B[i][j] = -B[i][j];
      else q.B[i][j] = B[i][j] + (std::abs(B[i][k]) * B[k][j] + B[i][k] * std::abs(B[k][j])) / 2;
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (frozen[i] && frozen[j]) q.B[i][j] = 0;
  return q;
}

IceQuiver IceQuiver::without(const std::vector<int>& indices) const {
  std::vector<char> drop(size(), 0);
  for (int i : indices) drop.at(i) = 1;
  IceQuiver q;
  std::vector<int> keep;
  for (int i = 0; i < size(); ++i)
    if (!drop[i]) keep.push_back(i);
  for (int i : keep) {
    q.labels.push_back(labels[i]);
    q.frozen.push_back(frozen[i]);
    std::vector<int> row;
    for (int j : keep) row.push_back(B[i][j]);
    q.B.push_back(row);
  }
  return q;
}

std::string IceQuiver::to_dot() const {
  std::ostringstream os;
  os << "digraph Q {\n";
  for (int i = 0; i < size(); ++i)
    os << "  " << labels[i] << (frozen[i] ? " [shape=box];\n" : " [shape=circle];\n");
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      for (int k = 0; k < B[i][j]; ++k) os << "  " << labels[i] << " -> " << labels[j] << ";\n";
  os << "}\n";
  return os.str();
}

std::string IceQuiver::to_json() const {
  nlohmann::json j;
  j["vertices"] = labels;
  std::vector<int> fr, mu;
  for (int i = 0; i < size(); ++i) (frozen[i] ? fr : mu).push_back(labels[i]);
  j["frozen"] = fr;
  j["mutable"] = mu;
  j["B"] = B;
  j["exchange_matrix"] = exchange_matrix();
  return j.dump(2);
}

IceQuiver quiver_from_half_arrows(const Pds& p, const OrderTable& ot) {
  const auto& J = p.J;
  const int k = static_cast<int>(J.size()), n = p.u.n();
  std::vector<std::vector<int>> H(k, std::vector<int>(k, 0));
  auto nabla = [&](int c, int h) {
    std::vector<int> r;
    if (h == 0 || std::abs(h) >= n) return r;
    for (int a = 0; a < k; ++a)
      if (ot(J[a], c, h)) r.push_back(a);
    return r;
  };
  for (int c : J) {
    int l = p.word[c], i = std::abs(l), sg = l > 0 ? 1 : -1;
    auto A = nabla(c, sg * (i - 1)), Bf = nabla(c, sg * i), C = nabla(c, sg * (i + 1)), D = nabla(c - 1, sg * i);
    const std::vector<int>* pairs[6][2] = {{&A, &Bf}, {&Bf, &D}, {&D, &A}, {&C, &Bf}, {&Bf, &D}, {&D, &C}};
    for (auto& pr : pairs)
      for (int x : *pr[0])
        for (int y : *pr[1]) {
          if (l > 0) ++H[x][y];
          else ++H[y][x];
        }
  }
  IceQuiver q;
  q.labels = J;
  for (int d : J) q.frozen.push_back(ot.frozen(d));
  q.B.assign(k, std::vector<int>(k, 0));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (a == b) continue;
      if (q.frozen[a] && q.frozen[b]) continue;
      int diff = H[a][b] - H[b][a];
      if (diff % 2) throw std::logic_error("odd half-arrow count");
      q.B[a][b] = diff / 2;
    }
  return q;
}

IceQuiver quiver_from_cycles(const Graph3D& g, const std::vector<RelativeCycle>& cycles) {
  const auto& J = g.pds().J;
  const int k = static_cast<int>(J.size());
  IceQuiver q;
  q.labels = J;
  for (const auto& c : cycles) q.frozen.push_back(c.frozen);
  q.B.assign(k, std::vector<int>(k, 0));
  for (int b = 0; b < k; ++b) {
    if (q.frozen[b]) continue;
    for (int a = 0; a < k; ++a) {
      if (a == b) continue;
      int v = intersection(g, cycles[a].chain, cycles[b].chain);
      q.B[a][b] = v;
      if (q.frozen[a]) q.B[b][a] = -v;
    }
  }
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (!q.frozen[a] && !q.frozen[b] && q.B[a][b] != -q.B[b][a])
        throw std::logic_error("intersection form is not skew-symmetric");
  return q;
}

namespace {

using i128 = __int128;

// diagonal of the Smith normal form, nonzero entries only
std::vector<i128> smith_diagonal(std::vector<std::vector<i128>> a) {
  const int rows = static_cast<int>(a.size()), cols = rows ? static_cast<int>(a[0].size()) : 0;
  std::vector<i128> diag;
  int t = 0;
  auto abs128 = [](i128 x) { return x < 0 ? -x : x; };
  while (t < rows && t < cols) {
    // pivot: smallest nonzero absolute value in the remaining block
    int pr = -1, pc = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (a[i][j] && (pr < 0 || abs128(a[i][j]) < abs128(a[pr][pc]))) pr = i, pc = j;
    if (pr < 0) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < rows; ++i) {
        i128 f = a[i][t] / a[t][t];
        if (f)
          for (int j = t; j < cols; ++j) a[i][j] -= f * a[t][j];
        if (a[i][t]) {
          clean = false;
          std::swap(a[t], a[i]);
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        i128 f = a[t][j] / a[t][t];
        if (f)
          for (int i = t; i < rows; ++i) a[i][j] -= f * a[i][t];
        if (a[t][j]) {
          clean = false;
          for (auto& row : a) std::swap(row[t], row[j]);
        }
      }
      if (clean) {
        // the pivot must divide the rest of the block
        for (int i = t + 1; i < rows && clean; ++i)
          for (int j = t + 1; j < cols && clean; ++j)
            if (a[i][j] % a[t][t]) {
              for (int jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
              clean = false;
            }
      }
    }
    diag.push_back(abs128(a[t][t]));
    ++t;
  }
  return diag;
}

std::vector<std::vector<i128>> widen(const std::vector<std::vector<int>>& m) {
  std::vector<std::vector<i128>> r;
  for (const auto& row : m) r.emplace_back(row.begin(), row.end());
  return r;
}

}  // namespace

bool really_full_rank(const std::vector<std::vector<int>>& m) {
  if (m.empty() || m[0].empty()) return true;
  auto d = smith_diagonal(widen(m));
  if (d.size() != m[0].size()) return false;
  return std::all_of(d.begin(), d.end(), [](i128 x) { return x == 1; });
}

int integer_rank(const std::vector<std::vector<int>>& m) {
  if (m.empty() || m[0].empty()) return 0;
  return static_cast<int>(smith_diagonal(widen(m)).size());
}

namespace {

IceQuiver mutable_part(const IceQuiver& q) {
  std::vector<int> fr;
  for (int i = 0; i < q.size(); ++i)
    if (q.frozen[i]) fr.push_back(i);
  return q.without(fr);
}

bool is_isolated(const IceQuiver& q) {
  for (const auto& row : q.B)
    for (int v : row)
      if (v) return false;
  return true;
}

std::vector<int> sinks(const IceQuiver& q) {
  std::vector<int> r;
  for (int i = 0; i < q.size(); ++i)
    if (std::none_of(q.B[i].begin(), q.B[i].end(), [](int v) { return v > 0; })) r.push_back(i);
  return r;
}

std::vector<int> in_neighbors(const IceQuiver& q, int s) {
  std::vector<int> r;
  for (int i = 0; i < q.size(); ++i)
    if (q.B[i][s] > 0) r.push_back(i);
  return r;
}

struct Searcher {
  int max_depth;
  long long budget;
  std::map<std::pair<std::vector<int>, std::vector<std::vector<int>>>, bool> failed;

  std::unique_ptr<Certificate> run(const IceQuiver& q) {
    auto cert = std::make_unique<Certificate>();
    cert->labels = q.labels;
    if (is_isolated(q)) {
      cert->isolated = true;
      return cert;
    }
    auto key = std::make_pair(q.labels, q.B);
    if (failed.count(key)) return nullptr;
    for (int depth = 0; depth <= max_depth; ++depth) {
      std::vector<int> seq;
      if (auto r = dfs(q, q, seq, depth)) return r;
      if (budget <= 0) return nullptr;
    }
    failed[key] = true;
    return nullptr;
  }

  std::unique_ptr<Certificate> try_sinks(const IceQuiver& orig, const IceQuiver& q1, const std::vector<int>& seq) {
    for (int s : sinks(q1)) {
      if (--budget <= 0) return nullptr;
      auto a = run(q1.without({s}));
      if (!a) continue;
      auto nin = in_neighbors(q1, s);
      nin.push_back(s);
      auto b = run(q1.without(nin));
      if (!b) continue;
      auto cert = std::make_unique<Certificate>();
      cert->labels = orig.labels;
      for (int i : seq) cert->mutations.push_back(orig.labels[i]);
      cert->sink = q1.labels[s];
      cert->first = std::move(a);
      cert->second = std::move(b);
      return cert;
    }
    return nullptr;
  }

  std::unique_ptr<Certificate> dfs(const IceQuiver& orig, const IceQuiver& cur, std::vector<int>& seq, int depth) {
    if (static_cast<int>(seq.size()) == depth) return try_sinks(orig, cur, seq);
    for (int k = 0; k < cur.size(); ++k) {
      if (!seq.empty() && seq.back() == k) continue;
      if (--budget <= 0) return nullptr;
      seq.push_back(k);
      auto r = dfs(orig, cur.mutated(k), seq, depth);
      seq.pop_back();
      if (r) return r;
    }
    return nullptr;
  }
};

}  // namespace

SearchResult search_certificate(const IceQuiver& q, int max_depth, long long budget) {
  Searcher s{max_depth, budget, {}};
  SearchResult r;
  r.cert = s.run(mutable_part(q));
  r.status = r.cert ? SearchResult::Acyclic : SearchResult::Unknown;
  return r;
}

bool check_certificate(const IceQuiver& q0, const Certificate& cert, std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  IceQuiver q = q0.size() && std::any_of(q0.frozen.begin(), q0.frozen.end(), [](char f) { return f; }) ? mutable_part(q0) : q0;
  std::vector<int> a = q.labels, b = cert.labels;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return fail("certificate covers different vertices");
  if (cert.isolated) return is_isolated(q) ? true : fail("quiver claimed isolated has arrows");
  for (int l : cert.mutations) {
    int k = q.index_of(l);
    if (k < 0) return fail("mutation at unknown vertex " + std::to_string(l));
    q = q.mutated(k);
  }
  int s = q.index_of(cert.sink);
  if (s < 0) return fail("unknown sink vertex");
  for (int j = 0; j < q.size(); ++j)
    if (q.B[s][j] > 0) return fail("vertex " + std::to_string(cert.sink) + " is not a sink");
  if (!cert.first || !cert.second) return fail("missing sub-certificate");
  auto nin = in_neighbors(q, s);
  nin.push_back(s);
  return check_certificate(q.without({s}), *cert.first, why) && check_certificate(q.without(nin), *cert.second, why);
}

static nlohmann::json cert_to_json(const Certificate& c) {
  nlohmann::json j;
  j["vertices"] = c.labels;
  if (c.isolated) {
    j["isolated"] = true;
    return j;
  }
  j["mutations"] = c.mutations;
  j["sink"] = c.sink;
  j["minus_sink"] = cert_to_json(*c.first);
  j["minus_sink_and_in_neighbors"] = cert_to_json(*c.second);
  return j;
}

std::string certificate_json(const Certificate& c) { return cert_to_json(c).dump(2); }

}  // namespace p3d
