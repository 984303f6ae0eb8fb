#include "p3d/job.hpp"

#include <algorithm>
#include <cctype>

namespace p3d {

namespace {

struct Field {
  std::string key;
  size_t at = 0;  // byte offset of the value
  std::string value;
};

int max_index(const std::string& s) {
  int best = 0;
  for (size_t i = 0; i < s.size();) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j - i <= 4) best = std::max(best, std::stoi(s.substr(i, j - i)));
    i = j;
  }
  return best;
}

int count_entries(const std::string& s) {
  int k = 0;
  for (size_t i = 0; i < s.size(); ++i)
    if (std::isdigit(static_cast<unsigned char>(s[i])) && (i == 0 || !std::isdigit(static_cast<unsigned char>(s[i - 1])))) ++k;
  return k;
}

bool is_one_line(const std::string& v) {
  size_t p = v.find_first_not_of(" \t\r\n");
  return p != std::string::npos && std::isdigit(static_cast<unsigned char>(v[p]));
}

}  // namespace

JobInput parse_job(const std::string& text, int n) {
  std::vector<Field> fields;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find_first_of(";\n", pos);
    if (end == std::string::npos) end = text.size();
    std::string part = text.substr(pos, end - pos);
    size_t a = part.find_first_not_of(" \t\r");
    if (a != std::string::npos) {
      size_t eq = part.find('=');
      if (eq == std::string::npos) throw ParseError("expected key=value at byte " + std::to_string(pos + a));
      std::string key = part.substr(a, eq - a);
      while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
      if (key != "u" && key != "beta" && key != "w" && key != "le" && key != "n")
        throw ParseError("unknown key '" + key + "' at byte " + std::to_string(pos + a));
      for (const auto& f : fields)
        if (f.key == key || (f.key == "w" && key == "beta") || (f.key == "beta" && key == "w"))
          throw ParseError("repeated key '" + key + "' at byte " + std::to_string(pos + a));
      fields.push_back({key, pos + eq + 1, part.substr(eq + 1)});
    }
    pos = end + 1;
  }
  auto find = [&](const std::string& k) -> const Field* {
    for (const auto& f : fields)
      if (f.key == k || (k == "beta" && f.key == "w")) return &f;
    return nullptr;
  };
  // parsers report offsets relative to their argument; padding keeps them global
  auto padded = [&](const Field& f) { return std::string(f.at, ' ') + f.value; };

  const Field* fn = find("n");
  const Field* fu = find("u");
  const Field* fb = find("beta");
  const Field* fl = find("le");
  if (fn) {
    std::string v = fn->value;
    size_t a = v.find_first_not_of(" \t");
    size_t b = v.find_last_not_of(" \t");
    if (a == std::string::npos) throw ParseError("empty rank at byte " + std::to_string(fn->at));
    for (size_t i = a; i <= b; ++i)
      if (!std::isdigit(static_cast<unsigned char>(v[i]))) throw ParseError("bad rank at byte " + std::to_string(fn->at + i));
    if (b - a > 2) throw ParseError("rank too large at byte " + std::to_string(fn->at + a));
    int k = std::stoi(v.substr(a, b - a + 1));
    if (n && k != n) throw ParseError("rank " + std::to_string(k) + " conflicts with " + std::to_string(n) + " at byte " + std::to_string(fn->at + a));
    n = k;
  }
  JobInput job;
  if (fl) {
    if (fu || fb) throw ParseError("le cannot be combined with u or beta at byte " + std::to_string(fl->at));
    LeDiagram le = parse_le(1, padded(*fl));
    if (le.rows.empty()) throw ParseError("empty Le-diagram at byte " + std::to_string(fl->at));
    if (!n) n = le.k + static_cast<int>(le.rows[0].size());
    le.n = n;
    if (!le_condition(le)) throw ParseError("Le-condition violated or shape does not fit the box at byte " + std::to_string(fl->at));
    LePair p = le_diagram_to_pair(le);
    job.n = n;
    job.u = p.u;
    job.w = p.word;
    job.le = le;
    return job;
  }
  if (!n) {
    if (fu && is_one_line(fu->value)) n = count_entries(fu->value);
    else n = std::max({2, fu ? max_index(fu->value) + 1 : 0, fb ? max_index(fb->value) + 1 : 0});
  }
  if (n < 1 || n > 12) throw ParseError("rank " + std::to_string(n) + " out of range at byte 0");
  job.n = n;
  job.u = fu ? parse_perm(n, padded(*fu)) : Perm(n);
  job.w = fb ? parse_word(n, padded(*fb)) : Word{n, {}};
  return job;
}

}  // namespace p3d
