#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace p3d {

struct InexactDivision : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Exps = std::vector<int>;

// Sparse Laurent polynomial with integer coefficients in a fixed number of
// variables. Terms are kept in lex order of exponent vectors.
class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(int nvars) : nv_(nvars) {}
  static Laurent constant(int nvars, long long c);
  static Laurent var(int nvars, int i, int power = 1);
  static Laurent monomial(const Exps& e, long long c = 1);

  int nvars() const { return nv_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;
  long long constant_value() const;  // throws unless constant
  size_t size() const { return terms_.size(); }
  const std::map<Exps, long long>& terms() const { return terms_; }

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent scaled(long long k) const;
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  // negative powers only for monomials
  Laurent pow(int k) const;

  // lex-smallest term's coefficient
  long long trailing_coefficient() const;

  // evaluate modulo a prime; variables with negative exponents must be units
  long long eval_mod(const std::vector<long long>& point, long long p) const;

  // substitute each variable by a Laurent polynomial in another ring
  Laurent substitute(const std::vector<Laurent>& images) const;

  std::string to_string(const std::vector<std::string>& names) const;

  void add_term(const Exps& e, long long c);

 private:
  int nv_ = 0;
  std::map<Exps, long long> terms_;
};

// exact quotient a / b in the Laurent ring, or nullopt if b does not divide a
std::optional<Laurent> try_divide(const Laurent& a, const Laurent& b);
Laurent exact_divide(const Laurent& a, const Laurent& b);

long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

using PolyMatrix = std::vector<std::vector<Laurent>>;

PolyMatrix identity_matrix(int n, int nvars);
PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix from_int(const std::vector<std::vector<long long>>& m, int nvars);

// determinant of the submatrix with the given 1-based rows and columns
Laurent minor(const PolyMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);
Laurent det(const PolyMatrix& m);

}  // namespace p3d
