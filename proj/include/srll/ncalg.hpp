#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "srll/field.hpp"
#include "srll/report.hpp"
#include "srll/superlinalg.hpp"

namespace srll {

// formal parameter slots used by rule and relation templates
VarId slot1();
VarId slot2();
VarId confluence_var(int k);  // _c1.._c4

enum class Sym : std::uint8_t {
  K,      // diagonal Gaussian generator k_i^±
  EGauss, // lower Gaussian entry e_{i,j}^±, i > j
  FGauss, // upper Gaussian entry f_{i,j}^±, i < j
  X,      // Drinfeld current X_i^± (level = sign)
  Psi,    // psi_i
  Phi,    // phi_i
  Ell,    // RLL generator l_{i,j}^±
  Delta,  // opaque central delta(arg)
};

struct Letter {
  Sym sym = Sym::K;
  int level = 0;  // +1 / -1; 0 when not applicable
  int i = 0, j = 0;
  bool inv = false;
  int leg = 0;        // 0 plain, 1..3 tensor position
  int parity = 0;     // Z2 degree
  UnitMonomial param; // spectral argument (unit monomial)

  auto skey() const { return std::tie(sym, level, i, j, inv); }

  bool operator==(const Letter& o) const {
    return skey() == o.skey() && leg == o.leg && param == o.param;
  }
  bool operator<(const Letter& o) const;
  std::string str() const;

  Letter with_leg(int l) const {
    Letter c = *this;
    c.leg = l;
    return c;
  }
  Letter inverse() const {
    Letter c = *this;
    c.inv = !c.inv;
    return c;
  }
};

// letter factories (parities derived from the space where relevant)
Letter Lk(int i, int level, UnitMonomial param, bool inv = false, int leg = 0);
Letter LX(int i, int sign, UnitMonomial param, const GradedSpace& sp, int leg = 0);
Letter Le(int i, int j, int level, UnitMonomial param, const GradedSpace& sp, int leg = 0);
Letter Lf(int i, int j, int level, UnitMonomial param, const GradedSpace& sp, int leg = 0);
Letter Lpsi(int i, UnitMonomial param, bool inv = false, int leg = 0);
Letter Lphi(int i, UnitMonomial param, bool inv = false, int leg = 0);
Letter Lell(int i, int j, int level, UnitMonomial param, const GradedSpace& sp, int leg = 0);
Letter Ldelta(UnitMonomial param);

UnitMonomial um(VarId v);                 // plain variable argument
UnitMonomial um_shift(VarId v, VarId gv, int e);  // v * gv^e

using Word = std::vector<Letter>;

std::string word_str(const Word& w);

/// Free associative superalgebra element: finite sum of words with RatFunc
/// coefficients. Multiplication sorts letters by tensor leg (stable within a
/// leg) picking up the Koszul sign each time an odd letter passes an odd
/// letter of a different leg.
class NCPoly {
 public:
  NCPoly() = default;
  static NCPoly one() { return term({}, RatFunc(1L)); }
  static NCPoly letter(const Letter& l) { return term({l}, RatFunc(1L)); }
  static NCPoly term(Word w, RatFunc c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Word, RatFunc>& terms() const { return terms_; }

  NCPoly operator+(const NCPoly& o) const;
  NCPoly operator-(const NCPoly& o) const;
  NCPoly operator-() const;
  NCPoly operator*(const NCPoly& o) const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly scaled(const RatFunc& c) const;
  NCPoly substitute_params(const Substitution& images) const;  // params and coefficients

  /// true when all coefficients of the difference vanish
  static bool eq(const NCPoly& a, const NCPoly& b);

  std::string str() const;

 private:
  void add_term(const Word& w, const RatFunc& c);
  std::map<Word, RatFunc> terms_;
  friend NCPoly nc_mul(const NCPoly&, const NCPoly&);
};

NCPoly nc_mul(const NCPoly& a, const NCPoly& b);

/// leg-sort a concatenated word, returning the Koszul sign (+1/-1)
int leg_sort(Word& w);

// ---------------------------------------------------------------------------
// rewriting
// ---------------------------------------------------------------------------

struct LetterKey {
  Sym sym;
  int level;
  int i, j;
  bool inv;

  bool matches(const Letter& l) const {
    return l.skey() == std::tie(sym, level, i, j, inv);
  }
  bool operator==(const LetterKey& o) const {
    return std::tie(sym, level, i, j, inv) == std::tie(o.sym, o.level, o.i, o.j, o.inv);
  }
};

LetterKey key_of(const Letter& l);

/// ranking used to orient exchange rules and define canonical words: compare
/// by symbol precedence (explicit list first, then structural), ties broken
/// by the spectral-parameter order z < z1 < z2 < w < u.
struct LetterOrder {
  std::vector<LetterKey> precedence;

  int sym_rank(const Letter& l) const;
  static int param_cmp(const UnitMonomial& a, const UnitMonomial& b);
  int cmp(const Letter& x, const Letter& y) const;
  bool lt(const Letter& x, const Letter& y) const { return cmp(x, y) < 0; }
};

enum class RuleKind { Exchange, Anticommute, Cancel };

struct RewriteRule {
  LetterKey a, b;   // adjacent redex pattern: a then b
  RuleKind kind = RuleKind::Exchange;
  RatFunc scalar;   // Exchange: a b -> scalar * b a, template in sa/sb and marker g
  VarId sa = 0, sb = 0;  // slot variables bound to the params of a resp. b
  bool only_when_param_desc = false;
  std::string name;
};

class RewriteSystem {
 public:
  void add(RewriteRule r) { rules_.push_back(std::move(r)); }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  bool empty() const { return rules_.empty(); }

 private:
  std::vector<RewriteRule> rules_;
};

struct NormalOrderOptions {
  long budget = 1000000;  // rule applications per call
};

/// exhaustive leftmost-innermost rewriting; unique normal form for the
/// exchange systems used here (checked separately by local confluence)
NCPoly normal_order(const NCPoly& x, const RewriteSystem& rules,
                    const LetterOrder& order, NormalOrderOptions opts = {});

/// every word over the system's alphabet (distinct formal parameters) up to
/// maxlen reaches one normal form under all reduction orders
Report check_local_confluence(const RewriteSystem& rules, const LetterOrder& order,
                              int maxlen);

}  // namespace srll
