#include "srll/ncalg.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>
#include <sstream>

#include "srll/errors.hpp"

namespace srll {

VarId slot1() {
  static VarId v = var_register("_s1");
  return v;
}

VarId slot2() {
  static VarId v = var_register("_s2");
  return v;
}

VarId confluence_var(int k) {
  static VarId base = var_register("_c1");
  if (k == 1) return base;
  return var_register("_c" + std::to_string(k));
}

bool Letter::operator<(const Letter& o) const {
  if (leg != o.leg) return leg < o.leg;
  if (skey() != o.skey()) return skey() < o.skey();
  if (!(param.mono == o.param.mono)) return param.mono < o.param.mono;
  return param.coeff < o.param.coeff;
}

namespace {

std::string subscript_pair(int i, int j) {
  return "_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

std::string level_str(int level) { return level > 0 ? "^+" : level < 0 ? "^-" : ""; }

}  // namespace

std::string Letter::str() const {
  std::ostringstream os;
  switch (sym) {
    case Sym::K: os << "k_" << i << level_str(level); break;
    case Sym::EGauss:
      if (i == j + 1) {
        os << "e_" << j << level_str(level);
      } else {
        os << "e" << subscript_pair(i, j) << level_str(level);
      }
      break;
    case Sym::FGauss:
      if (j == i + 1) {
        os << "f_" << i << level_str(level);
      } else {
        os << "f" << subscript_pair(i, j) << level_str(level);
      }
      break;
    case Sym::X: os << "X_" << i << level_str(level); break;
    case Sym::Psi: os << "psi_" << i; break;
    case Sym::Phi: os << "phi_" << i; break;
    case Sym::Ell: os << "l" << subscript_pair(i, j) << level_str(level); break;
    case Sym::Delta: os << "delta"; break;
  }
  os << "(" << param.str() << ")";
  if (inv) os << "^-1";
  if (leg != 0) os << "@" << leg;
  return os.str();
}

Letter Lk(int i, int level, UnitMonomial param, bool inv, int leg) {
  Letter l;
  l.sym = Sym::K;
  l.i = i;
  l.level = level;
  l.inv = inv;
  l.leg = leg;
  l.param = std::move(param);
  l.parity = 0;
  return l;
}

Letter LX(int i, int sign, UnitMonomial param, const GradedSpace& sp, int leg) {
  Letter l;
  l.sym = Sym::X;
  l.i = i;
  l.level = sign;
  l.leg = leg;
  l.param = std::move(param);
  l.parity = (i == sp.m) ? 1 : 0;
  return l;
}

Letter Le(int i, int j, int level, UnitMonomial param, const GradedSpace& sp, int leg) {
  Letter l;
  l.sym = Sym::EGauss;
  l.i = i;
  l.j = j;
  l.level = level;
  l.leg = leg;
  l.param = std::move(param);
  l.parity = (sp.parity(i) + sp.parity(j)) % 2;
  return l;
}

Letter Lf(int i, int j, int level, UnitMonomial param, const GradedSpace& sp, int leg) {
  Letter l;
  l.sym = Sym::FGauss;
  l.i = i;
  l.j = j;
  l.level = level;
  l.leg = leg;
  l.param = std::move(param);
  l.parity = (sp.parity(i) + sp.parity(j)) % 2;
  return l;
}

Letter Lpsi(int i, UnitMonomial param, bool inv, int leg) {
  Letter l;
  l.sym = Sym::Psi;
  l.i = i;
  l.inv = inv;
  l.leg = leg;
  l.param = std::move(param);
  l.parity = 0;
  return l;
}

Letter Lphi(int i, UnitMonomial param, bool inv, int leg) {
  Letter l;
  l.sym = Sym::Phi;
  l.i = i;
  l.inv = inv;
  l.leg = leg;
  l.param = std::move(param);
  l.parity = 0;
  return l;
}

Letter Lell(int i, int j, int level, UnitMonomial param, const GradedSpace& sp, int leg) {
  Letter l;
  l.sym = Sym::Ell;
  l.i = i;
  l.j = j;
  l.level = level;
  l.leg = leg;
  l.param = std::move(param);
  l.parity = (sp.parity(i) + sp.parity(j)) % 2;
  return l;
}

Letter Ldelta(UnitMonomial param) {
  Letter l;
  l.sym = Sym::Delta;
  l.param = std::move(param);
  l.parity = 0;
  return l;
}

UnitMonomial um(VarId v) { return {Rational(1), Monomial::var(v)}; }

UnitMonomial um_shift(VarId v, VarId gv, int e) {
  return {Rational(1), Monomial::var(v) * Monomial::var(gv, e)};
}

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) os << " ";
    os << w[k].str();
  }
  return os.str();
}

// ------------------------------------------------------------------ NCPoly ---

int leg_sort(Word& w) {
  // stable insertion sort by leg; adjacent transposition of letters on
  // different legs picks up the Koszul sign
  int sign = 1;
  for (size_t i = 1; i < w.size(); ++i) {
    size_t k = i;
    while (k > 0 && w[k - 1].leg > w[k].leg) {
      if (w[k - 1].parity && w[k].parity) sign = -sign;
      std::swap(w[k - 1], w[k]);
      --k;
    }
  }
  return sign;
}

NCPoly NCPoly::term(Word w, RatFunc c) {
  NCPoly p;
  if (!c.is_zero()) {
    int sign = leg_sort(w);
    if (sign < 0) c = -c;
    p.terms_.emplace(std::move(w), std::move(c));
  }
  return p;
}

void NCPoly::add_term(const Word& w, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
  NCPoly r = *this;
  r += o;
  return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly NCPoly::operator-(const NCPoly& o) const { return *this + (-o); }

NCPoly NCPoly::operator-() const {
  NCPoly r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

NCPoly NCPoly::scaled(const RatFunc& c) const {
  NCPoly r;
  if (c.is_zero()) return r;
  for (const auto& [w, coef] : terms_) {
    RatFunc v = coef * c;
    if (!v.is_zero()) r.terms_.emplace(w, std::move(v));
  }
  return r;
}

NCPoly NCPoly::substitute_params(const Substitution& images) const {
  NCPoly r;
  for (const auto& [w, c] : terms_) {
    Word nw = w;
    for (auto& l : nw) {
      Poly pm = Poly::term(l.param.mono, l.param.coeff).substitute(images);
      assert(pm.is_monomial());
      auto [m, coeff] = pm.leading_term();
      l.param = {coeff, m};
    }
    r.add_term(nw, c.substitute(images));
  }
  return r;
}

bool NCPoly::eq(const NCPoly& a, const NCPoly& b) { return (a - b).is_zero(); }

NCPoly nc_mul(const NCPoly& a, const NCPoly& b) {
  NCPoly r;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      int sign = leg_sort(w);
      RatFunc c = ca * cb;
      if (sign < 0) c = -c;
      r.add_term(w, c);
    }
  return r;
}

NCPoly NCPoly::operator*(const NCPoly& o) const { return nc_mul(*this, o); }

std::string NCPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (!w.empty()) os << " " << word_str(w);
  }
  return os.str();
}

// --------------------------------------------------------------- rewriting ---

LetterKey key_of(const Letter& l) { return {l.sym, l.level, l.i, l.j, l.inv}; }

int LetterOrder::sym_rank(const Letter& l) const {
  for (size_t k = 0; k < precedence.size(); ++k)
    if (precedence[k].matches(l)) return static_cast<int>(k);
  return static_cast<int>(precedence.size());
}

int LetterOrder::param_cmp(const UnitMonomial& a, const UnitMonomial& b) {
  if (a.mono == b.mono) {
    if (a.coeff == b.coeff) return 0;
    return a.coeff < b.coeff ? -1 : 1;
  }
  // precedence list for the spectral bases; higher exponent on an earlier
  // variable ranks smaller (so z1 < z2 < w as plain arguments)
  static const VarId prec[] = {vars::z, vars::z1, vars::z2, vars::w, vars::u};
  for (VarId v : prec) {
    int ea = a.mono.exponent(v), eb = b.mono.exponent(v);
    if (ea != eb) return ea > eb ? -1 : 1;
  }
  return a.mono < b.mono ? -1 : 1;
}

int LetterOrder::cmp(const Letter& x, const Letter& y) const {
  int rx = sym_rank(x), ry = sym_rank(y);
  if (rx != ry) return rx < ry ? -1 : 1;
  if (x.skey() != y.skey()) return x.skey() < y.skey() ? -1 : 1;
  return param_cmp(x.param, y.param);
}

namespace {

struct Step {
  size_t pos;
  size_t rule;
};

bool rule_applies(const RewriteRule& r, const Letter& x, const Letter& y,
                  const LetterOrder& order) {
  if (x.leg != y.leg) return false;
  if (!r.a.matches(x) || !r.b.matches(y)) return false;
  switch (r.kind) {
    case RuleKind::Cancel:
      return x.param == y.param;
    case RuleKind::Anticommute:
      return x.param == y.param || LetterOrder::param_cmp(x.param, y.param) > 0;
    case RuleKind::Exchange:
      if (r.only_when_param_desc)
        return LetterOrder::param_cmp(x.param, y.param) > 0;
      return true;
  }
  return false;
}

std::vector<Step> applicable_steps(const Word& w, const RewriteSystem& rules,
                                   const LetterOrder& order) {
  std::vector<Step> steps;
  if (w.size() < 2) return steps;
  for (size_t pos = 0; pos + 1 < w.size(); ++pos)
    for (size_t ri = 0; ri < rules.rules().size(); ++ri)
      if (rule_applies(rules.rules()[ri], w[pos], w[pos + 1], order))
        steps.push_back({pos, ri});
  return steps;
}

VarId leg_marker(int leg) {
  switch (leg) {
    case 0: return vars::g;
    case 1: return vars::g1;
    case 2: return vars::g2;
    case 3: return vars::g3;
    default: throw ShapeError("unsupported leg");
  }
}

// apply one step to (word, coeff); may produce zero or one term
bool apply_step(Word& w, RatFunc& c, const Step& st, const RewriteSystem& rules) {
  const RewriteRule& r = rules.rules()[st.rule];
  Letter& x = w[st.pos];
  Letter& y = w[st.pos + 1];
  switch (r.kind) {
    case RuleKind::Cancel:
      w.erase(w.begin() + st.pos, w.begin() + st.pos + 2);
      return true;
    case RuleKind::Anticommute:
      if (x.param == y.param) return false;  // square of an odd letter is zero
      std::swap(x, y);
      c = -c;
      return true;
    case RuleKind::Exchange: {
      Substitution sub;
      sub[r.sa] = x.param;
      sub[r.sb] = y.param;
      VarId marker = leg_marker(x.leg);
      if (marker != vars::g) sub[vars::g] = um(marker);
      RatFunc s = r.scalar.substitute(sub);
      if (s.is_zero()) return false;
      c = c * s;
      std::swap(x, y);
      return true;
    }
  }
  return true;
}

}  // namespace

NCPoly normal_order(const NCPoly& x, const RewriteSystem& rules,
                    const LetterOrder& order, NormalOrderOptions opts) {
  long budget = opts.budget;
  NCPoly result;
  std::deque<std::pair<Word, RatFunc>> work;
  for (const auto& [w, c] : x.terms()) work.emplace_back(w, c);
  while (!work.empty()) {
    auto [w, c] = work.front();
    work.pop_front();
    bool reduced_one = false;
    // leftmost applicable position, first matching rule
    for (size_t pos = 0; pos + 1 < w.size() && !reduced_one; ++pos) {
      for (size_t ri = 0; ri < rules.rules().size(); ++ri) {
        if (!rule_applies(rules.rules()[ri], w[pos], w[pos + 1], order)) continue;
        if (--budget < 0) throw BudgetExceeded("normal_order budget exhausted");
        bool alive = apply_step(w, c, {pos, ri}, rules);
        if (alive && !c.is_zero()) work.emplace_back(std::move(w), std::move(c));
        reduced_one = true;
        break;
      }
    }
    if (!reduced_one) result += NCPoly::term(std::move(w), std::move(c));
  }
  return result;
}

Report check_local_confluence(const RewriteSystem& rules, const LetterOrder& order,
                              int maxlen) {
  Report base;
  base.check = "confluence";
  base.with("maxlen", static_cast<long>(maxlen));
  return timed_report(std::move(base), [&](Report& rep) {
    if (maxlen > 4) throw NotApplicable("confluence check limited to words of length 4");
    // alphabet: distinct letter keys from the rule patterns
    std::vector<LetterKey> alphabet;
    auto add_key = [&](const LetterKey& k) {
      for (const auto& e : alphabet)
        if (e == k) return;
      alphabet.push_back(k);
    };
    for (const auto& r : rules.rules()) {
      add_key(r.a);
      add_key(r.b);
    }

    // outcome of a maximal reduction path: zero, or one scaled word
    struct Outcome {
      bool zero;
      Word w;
      RatFunc c;
    };

    long cases = 0, bad = 0;
    std::string first_witness;
    std::vector<int> pick;
    for (int len = 1; len <= maxlen; ++len) {
      pick.assign(len, 0);
      while (true) {
        Word w;
        for (int k = 0; k < len; ++k) {
          const LetterKey& key = alphabet[pick[k]];
          Letter l;
          l.sym = key.sym;
          l.level = key.level;
          l.i = key.i;
          l.j = key.j;
          l.inv = key.inv;
          l.parity = 0;  // within one leg, parity never enters rewriting
          l.param = um(confluence_var(k + 1));
          w.push_back(l);
        }
        ++cases;

        std::vector<Outcome> outcomes;
        std::set<std::pair<Word, std::string>> seen;
        std::function<void(const Word&, const RatFunc&)> explore =
            [&](const Word& cur, const RatFunc& coeff) {
              auto steps = applicable_steps(cur, rules, order);
              if (steps.empty()) {
                outcomes.push_back({false, cur, coeff});
                return;
              }
              for (const auto& st : steps) {
                Word next = cur;
                RatFunc c2 = coeff;
                bool alive = apply_step(next, c2, st, rules);
                if (!alive || c2.is_zero()) {
                  outcomes.push_back({true, {}, RatFunc()});
                  continue;
                }
                if (seen.emplace(next, c2.str()).second) explore(next, c2);
              }
            };
        explore(w, RatFunc(1L));

        bool consistent = true;
        for (size_t a = 1; a < outcomes.size() && consistent; ++a) {
          const Outcome &x = outcomes[0], &y = outcomes[a];
          if (x.zero != y.zero) {
            consistent = false;
          } else if (!x.zero) {
            consistent = x.w == y.w && RatFunc::eq(x.c, y.c);
          }
        }
        if (!consistent) {
          ++bad;
          if (first_witness.empty())
            first_witness = word_str(w) + " has inequivalent normal forms";
        }

        int k = len - 1;
        while (k >= 0 && pick[k] + 1 == static_cast<int>(alphabet.size())) {
          pick[k] = 0;
          --k;
        }
        if (k < 0) break;
        ++pick[k];
      }
    }
    rep.with("cases", cases);
    if (bad == 0) {
      rep.status = Status::Pass;
    } else {
      rep.status = Status::Fail;
      rep.residual = first_witness;
    }
  });
}

}  // namespace srll
