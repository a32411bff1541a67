#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "srll/errors.hpp"

namespace srll {

/// Exact arbitrary-precision rational scalar. GMP keeps the canonical
/// invariant gcd(|num|, den) = 1 with den >= 1.
using Rational = mpq_class;

Rational rat_pow(const Rational& base, long e);
std::string rat_str(const Rational& r);

// ---------------------------------------------------------------------------
// Variable registry. Insertion order is the canonical variable order; the
// reserved names below are registered first so canonical forms are stable
// across runs.
// ---------------------------------------------------------------------------

using VarId = std::uint32_t;

namespace vars {
inline constexpr VarId p = 0;
inline constexpr VarId q = 1;
inline constexpr VarId z = 2;
inline constexpr VarId w = 3;
inline constexpr VarId z1 = 4;
inline constexpr VarId z2 = 5;
inline constexpr VarId u = 6;
inline constexpr VarId g = 7;   // gamma = q^(c/2), the central-charge marker
inline constexpr VarId g1 = 8;  // q^(c_1/2) on tensor leg 1
inline constexpr VarId g2 = 9;  // q^(c_2/2) on tensor leg 2
inline constexpr VarId g3 = 10;
}  // namespace vars

VarId var_register(const std::string& name);
std::optional<VarId> var_lookup(const std::string& name);
const std::string& var_name(VarId id);
std::size_t var_count();

// ---------------------------------------------------------------------------
// Monomial: finitely supported exponent vector, negative exponents allowed.
// ---------------------------------------------------------------------------

class Monomial {
 public:
  Monomial() = default;
  static Monomial var(VarId v, int e = 1);

  int exponent(VarId v) const;
  bool is_one() const { return factors_.empty(); }
  long total_degree() const;

  Monomial operator*(const Monomial& o) const;
  Monomial pow(int e) const;
  Monomial inverse() const { return pow(-1); }

  // true when every exponent of `o` is <= the matching exponent here
  bool divisible_by(const Monomial& o) const;

  /// graded-lex on registry order: total degree first, then the first
  /// variable (in registry order) with differing exponent decides, higher
  /// exponent larger.
  static int cmp(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
  bool operator<(const Monomial& o) const { return cmp(*this, o) < 0; }

  const std::vector<std::pair<VarId, int>>& factors() const { return factors_; }
  std::string str() const;

 private:
  std::vector<std::pair<VarId, int>> factors_;  // sorted by VarId, exponents != 0
  friend class Poly;
};

/// One-term value: coefficient times monomial. The substitution images and
/// the spectral arguments of noncommutative letters live here.
struct UnitMonomial {
  Rational coeff = 1;
  Monomial mono;

  bool operator==(const UnitMonomial& o) const {
    return coeff == o.coeff && mono == o.mono;
  }
  UnitMonomial operator*(const UnitMonomial& o) const {
    return {coeff * o.coeff, mono * o.mono};
  }
  UnitMonomial pow(int e) const { return {rat_pow(coeff, e), mono.pow(e)}; }
  std::string str() const;
};

using Substitution = std::map<VarId, UnitMonomial>;

// ---------------------------------------------------------------------------
// Sparse multivariate Laurent polynomial over Rational.
// ---------------------------------------------------------------------------

class Poly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Poly() = default;  // zero
  explicit Poly(const Rational& c);
  explicit Poly(long c) : Poly(Rational(c)) {}
  static Poly variable(VarId v, int e = 1);
  static Poly term(const Monomial& m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // largest term under graded-lex
  std::pair<Monomial, Rational> leading_term() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);

  Poly mul_scalar(const Rational& c) const;
  Poly mul_monomial(const Monomial& m, const Rational& c = Rational(1)) const;

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// per-variable minimum exponent over all terms; dividing by it makes the
  /// polynomial a true polynomial with zero minimum exponent per variable
  Monomial monomial_content() const;

  std::vector<VarId> variables() const;
  bool has_negative_exponent() const;
  int degree_in(VarId v) const;

  std::map<int, Poly> univariate_in(VarId v) const;
  static Poly from_univariate(VarId v, const std::map<int, Poly>& coeffs);

  Poly substitute(const Substitution& images) const;
  std::optional<Rational> evaluate(const std::map<VarId, Rational>& point) const;

  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
};

/// quotient and exactness: returns empty when b does not divide a termwise
std::optional<Poly> try_exact_div(const Poly& a, const Poly& b);
Poly exact_div(const Poly& a, const Poly& b);

/// pseudo-remainder of a by b viewed as univariate in v (true polynomials)
Poly pseudo_rem(const Poly& a, const Poly& b, VarId v);

/// gcd of true polynomials (no negative exponents), normalized monic under
/// graded-lex. Subresultant PRS over a recursively chosen main variable.
Poly poly_gcd(const Poly& a, const Poly& b);

// ---------------------------------------------------------------------------
// Canonical rational function: den is a true polynomial with no monomial
// content and graded-lex leading coefficient 1; num/den reduced by gcd; any
// Laurent monomial part lives in the numerator.
// ---------------------------------------------------------------------------

class RatFunc {
 public:
  RatFunc() : num_(), den_(Poly(1L)) {}
  RatFunc(const Rational& c) : num_(Poly(c)), den_(Poly(1L)) {}
  RatFunc(long c) : RatFunc(Rational(c)) {}
  RatFunc(Poly num, Poly den);
  explicit RatFunc(Poly num) : num_(std::move(num)), den_(Poly(1L)) {}
  static RatFunc variable(VarId v, int e = 1);
  static RatFunc from_unit(const UnitMonomial& um);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc inverse() const;
  RatFunc pow(int e) const;

  /// value equality via cross-multiplication; never relies on gcd having fired
  static bool eq(const RatFunc& a, const RatFunc& b);

  /// canonical reduced representative (idempotent, eq-equivalent)
  RatFunc reduced() const { return RatFunc(num_, den_); }

  /// structural identity of the stored canonical form
  bool identical(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  RatFunc substitute(const Substitution& images) const;
  std::optional<Rational> evaluate(const std::map<VarId, Rational>& point) const;

  std::string str() const;

 private:
  void canonicalize();
  Poly num_;
  Poly den_;
};

}  // namespace srll
