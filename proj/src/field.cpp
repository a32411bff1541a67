#include "srll/field.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <sstream>

namespace srll {

Rational rat_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  Rational b = base;
  if (e < 0) {
    if (b == 0) throw DivisionByZero("0^negative");
    b = Rational(1) / b;
    e = -e;
  }
  Rational r(1);
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  r.canonicalize();
  return r;
}

std::string rat_str(const Rational& r) { return r.get_str(); }

// -------------------------------------------------------------- registry ---

namespace {
struct Registry {
  std::vector<std::string> names;
  std::map<std::string, VarId> ids;
  std::mutex mu;
  Registry() {
    for (const char* n :
         {"p", "q", "z", "w", "z1", "z2", "u", "g", "g1", "g2", "g3"}) {
      ids.emplace(n, static_cast<VarId>(names.size()));
      names.emplace_back(n);
    }
  }
};
Registry& registry() {
  static Registry r;
  return r;
}
}  // namespace

VarId var_register(const std::string& name) {
  auto& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  auto it = r.ids.find(name);
  if (it != r.ids.end()) return it->second;
  VarId id = static_cast<VarId>(r.names.size());
  r.ids.emplace(name, id);
  r.names.push_back(name);
  return id;
}

std::optional<VarId> var_lookup(const std::string& name) {
  auto& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  auto it = r.ids.find(name);
  if (it == r.ids.end()) return std::nullopt;
  return it->second;
}

const std::string& var_name(VarId id) {
  auto& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  return r.names.at(id);
}

std::size_t var_count() {
  auto& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  return r.names.size();
}

// -------------------------------------------------------------- monomial ---

Monomial Monomial::var(VarId v, int e) {
  Monomial m;
  if (e != 0) m.factors_.emplace_back(v, e);
  return m;
}

int Monomial::exponent(VarId v) const {
  for (const auto& [var, e] : factors_)
    if (var == v) return e;
  return 0;
}

long Monomial::total_degree() const {
  long d = 0;
  for (const auto& [var, e] : factors_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + o.factors_.size());
  auto a = factors_.begin(), b = o.factors_.begin();
  while (a != factors_.end() && b != o.factors_.end()) {
    if (a->first < b->first) {
      r.factors_.push_back(*a++);
    } else if (b->first < a->first) {
      r.factors_.push_back(*b++);
    } else {
      int e = a->second + b->second;
      if (e != 0) r.factors_.emplace_back(a->first, e);
      ++a;
      ++b;
    }
  }
  r.factors_.insert(r.factors_.end(), a, factors_.end());
  r.factors_.insert(r.factors_.end(), b, o.factors_.end());
  return r;
}

Monomial Monomial::pow(int e) const {
  Monomial r;
  if (e == 0) return r;
  r.factors_ = factors_;
  for (auto& [var, exp] : r.factors_) exp *= e;
  return r;
}

bool Monomial::divisible_by(const Monomial& o) const {
  for (const auto& [var, e] : o.factors_)
    if (exponent(var) < e) return false;
  return true;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
  long da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  auto ia = a.factors_.begin(), ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    VarId va = ia != a.factors_.end() ? ia->first : ~VarId(0);
    VarId vb = ib != b.factors_.end() ? ib->first : ~VarId(0);
    if (va == vb) {
      if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
      ++ia;
      ++ib;
    } else if (va < vb) {
      // a has an exponent where b has zero
      return ia->second > 0 ? 1 : -1;
    } else {
      return ib->second > 0 ? -1 : 1;
    }
  }
  return 0;
}

std::string Monomial::str() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [var, e] : factors_) {
    if (!first) os << "*";
    first = false;
    os << var_name(var);
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::string UnitMonomial::str() const {
  std::ostringstream os;
  if (coeff != 1) {
    os << rat_str(coeff);
    if (!mono.is_one()) os << "*" << mono.str();
  } else {
    os << mono.str();
  }
  return os.str();
}

// ------------------------------------------------------------------ poly ---

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial(), c);
}

Poly Poly::variable(VarId v, int e) {
  Poly p;
  p.terms_.emplace(Monomial::var(v, e), Rational(1));
  return p;
}

Poly Poly::term(const Monomial& m, const Rational& c) {
  Poly p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::pair<Monomial, Rational> Poly::leading_term() const {
  assert(!terms_.empty());
  auto it = terms_.rbegin();
  return {it->first, it->second};
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly Poly::mul_scalar(const Rational& c) const {
  Poly r;
  if (c == 0) return r;
  for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
  return r;
}

Poly Poly::mul_monomial(const Monomial& m, const Rational& c) const {
  Poly r;
  if (c == 0) return r;
  for (const auto& [mm, coef] : terms_) r.terms_.emplace(mm * m, coef * c);
  return r;
}

Monomial Poly::monomial_content() const {
  if (terms_.empty()) return Monomial();
  std::map<VarId, int> mins;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) mins.emplace(v, e);
  for (auto& [v, emin] : mins)
    for (const auto& [m, c] : terms_) emin = std::min(emin, m.exponent(v));
  Monomial r;
  for (const auto& [v, e] : mins)
    if (e != 0) r = r * Monomial::var(v, e);
  return r;
}

std::vector<VarId> Poly::variables() const {
  std::vector<VarId> vs;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors())
      if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
  std::sort(vs.begin(), vs.end());
  return vs;
}

bool Poly::has_negative_exponent() const {
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors())
      if (e < 0) return true;
  return false;
}

int Poly::degree_in(VarId v) const {
  int d = 0;
  bool any = false;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(v);
    if (!any || e > d) d = e;
    any = true;
  }
  return d;
}

std::map<int, Poly> Poly::univariate_in(VarId v) const {
  std::map<int, Poly> coeffs;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(v);
    Monomial rest = m * Monomial::var(v, -e);
    coeffs[e].add_term(rest, c);
  }
  for (auto it = coeffs.begin(); it != coeffs.end();)
    it = it->second.is_zero() ? coeffs.erase(it) : std::next(it);
  return coeffs;
}

Poly Poly::from_univariate(VarId v, const std::map<int, Poly>& coeffs) {
  Poly r;
  for (const auto& [e, c] : coeffs) r += c.mul_monomial(Monomial::var(v, e));
  return r;
}

Poly Poly::substitute(const Substitution& images) const {
  for (const auto& [v, im] : images)
    if (im.coeff == 0)
      throw UnsupportedSubstitution("image of " + var_name(v) + " is zero");
  Poly r;
  for (const auto& [m, c] : terms_) {
    Rational coeff = c;
    Monomial mono;
    for (const auto& [v, e] : m.factors()) {
      auto it = images.find(v);
      if (it == images.end()) {
        mono = mono * Monomial::var(v, e);
      } else {
        coeff *= rat_pow(it->second.coeff, e);
        mono = mono * it->second.mono.pow(e);
      }
    }
    r.add_term(mono, coeff);
  }
  return r;
}

std::optional<Rational> Poly::evaluate(const std::map<VarId, Rational>& point) const {
  Rational sum(0);
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (const auto& [var, e] : m.factors()) {
      auto it = point.find(var);
      if (it == point.end()) return std::nullopt;  // unbound variable
      if (it->second == 0 && e < 0) return std::nullopt;
      v *= rat_pow(it->second, e);
    }
    sum += v;
  }
  sum.canonicalize();
  return sum;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // descending graded-lex
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational ac = c < 0 ? Rational(-c) : c;
    if (c < 0) {
      os << "-";
    } else if (!first) {
      os << "+";
    }
    first = false;
    if (m.is_one()) {
      os << rat_str(ac);
    } else if (ac == 1) {
      os << m.str();
    } else {
      os << rat_str(ac) << "*" << m.str();
    }
  }
  return os.str();
}

// ------------------------------------------------------- division and gcd ---

std::optional<Poly> try_exact_div(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  Poly rem = a, quot;
  auto [lm, lc] = b.leading_term();
  while (!rem.is_zero()) {
    auto [rm, rc] = rem.leading_term();
    if (!rm.divisible_by(lm)) return std::nullopt;
    Monomial m = rm * lm.inverse();
    Rational c = rc / lc;
    quot += Poly::term(m, c);
    rem -= b.mul_monomial(m, c);
  }
  return quot;
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto q = try_exact_div(a, b);
  if (!q) throw DivisionByZero("inexact polynomial division");
  return *q;
}

Poly pseudo_rem(const Poly& a, const Poly& b, VarId v) {
  int db = b.degree_in(v);
  auto bu = b.univariate_in(v);
  Poly lb = bu.rbegin()->second;  // leading coefficient of b in v
  Poly r = a;
  int e = a.degree_in(v) - db + 1;
  while (!r.is_zero()) {
    auto ru = r.univariate_in(v);
    int dr = ru.rbegin()->first;
    if (dr < db) break;
    Poly lr = ru.rbegin()->second;
    r = r * lb - b * lr.mul_monomial(Monomial::var(v, dr - db));
    --e;
  }
  if (e > 0) {
    Poly scale(1L);
    for (int i = 0; i < e; ++i) scale = scale * lb;
    r = r * scale;
  }
  return r;
}

namespace {

Poly make_monic(const Poly& a) {
  if (a.is_zero()) return a;
  return a.mul_scalar(Rational(1) / a.leading_term().second);
}

Poly poly_pow(const Poly& a, int e) {
  Poly r(1L);
  for (int i = 0; i < e; ++i) r = r * a;
  return r;
}

// content of a viewed as univariate in v: gcd of the coefficient polynomials
Poly content_in(const Poly& a, VarId v) {
  Poly c;
  for (const auto& [e, coeff] : a.univariate_in(v)) {
    c = c.is_zero() ? make_monic(coeff) : poly_gcd(c, coeff);
    if (c.is_constant()) return Poly(1L);
  }
  return c;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  assert(!a.has_negative_exponent() && !b.has_negative_exponent());
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.is_constant() || b.is_constant()) return Poly(1L);

  auto va = a.variables();
  auto vb = b.variables();
  std::vector<VarId> common;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(),
                        std::back_inserter(common));
  if (common.empty()) return Poly(1L);
  // recurse on the cheapest common variable
  VarId v = common.front();
  int best = a.degree_in(v) + b.degree_in(v);
  for (VarId cand : common) {
    int cost = a.degree_in(cand) + b.degree_in(cand);
    if (cost < best) {
      best = cost;
      v = cand;
    }
  }

  Poly ca = content_in(a, v), cb = content_in(b, v);
  Poly pa = exact_div(a, ca), pb = exact_div(b, cb);
  Poly cont_gcd = poly_gcd(ca, cb);

  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);

  // subresultant PRS with a primitive-part fallback when the predicted
  // divisor is not exact (keeps the computation correct either way)
  Poly gc(1L), h(1L);
  Poly gcd_v;
  while (true) {
    int delta = pa.degree_in(v) - pb.degree_in(v);
    Poly r = pseudo_rem(pa, pb, v);
    if (r.is_zero()) {
      gcd_v = exact_div(pb, content_in(pb, v));
      break;
    }
    if (r.degree_in(v) == 0) {
      gcd_v = Poly(1L);
      break;
    }
    Poly divisor = gc * poly_pow(h, delta);
    auto next = try_exact_div(r, divisor);
    if (!next) next = exact_div(r, content_in(r, v));
    pa = pb;
    pb = *next;
    gc = pa.univariate_in(v).rbegin()->second;
    if (delta > 0) {
      auto hn = try_exact_div(poly_pow(gc, delta), poly_pow(h, delta - 1));
      h = hn ? *hn : gc;
    }
  }
  return make_monic(cont_gcd * gcd_v);
}

// --------------------------------------------------------------- ratfunc ---

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  canonicalize();
}

RatFunc RatFunc::variable(VarId v, int e) {
  return RatFunc(Poly::variable(v, e));
}

RatFunc RatFunc::from_unit(const UnitMonomial& um) {
  return RatFunc(Poly::term(um.mono, um.coeff));
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly(1L);
    return;
  }
  Monomial mn = num_.monomial_content();
  Monomial md = den_.monomial_content();
  Poly n = num_.mul_monomial(mn.inverse());
  Poly d = den_.mul_monomial(md.inverse());
  if (!n.is_constant() && !d.is_constant()) {
    Poly gg = poly_gcd(n, d);
    if (!gg.is_constant()) {
      n = exact_div(n, gg);
      d = exact_div(d, gg);
    }
  }
  n = n.mul_monomial(mn * md.inverse());
  Rational lc = d.leading_term().second;
  num_ = n.mul_scalar(Rational(1) / lc);
  den_ = d.mul_scalar(Rational(1) / lc);
}

namespace {

// shared-denominator addition: divide out gcd(den1, den2) before cross
// multiplying, which keeps the later reduction small
RatFunc add_reduced(const Poly& n1, const Poly& d1, const Poly& n2, const Poly& d2,
                    bool subtract) {
  Poly g = (d1.is_constant() || d2.is_constant()) ? Poly(1L) : poly_gcd(d1, d2);
  Poly d2r = g.is_constant() ? d2 : exact_div(d2, g);
  Poly d1r = g.is_constant() ? d1 : exact_div(d1, g);
  Poly num = subtract ? n1 * d2r - n2 * d1r : n1 * d2r + n2 * d1r;
  return RatFunc(std::move(num), d1 * d2r);
}

}  // namespace

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return add_reduced(num_, den_, o.num_, o.den_, false);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return RatFunc(num_ - o.num_, den_);
  return add_reduced(num_, den_, o.num_, o.den_, true);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc();
  // scalar factors need no reduction
  if (o.den_ == Poly(1L) && o.num_.is_constant()) {
    RatFunc r = *this;
    r.num_ = r.num_.mul_scalar(o.num_.leading_term().second);
    return r;
  }
  if (den_ == Poly(1L) && num_.is_constant()) {
    RatFunc r = o;
    r.num_ = r.num_.mul_scalar(num_.leading_term().second);
    return r;
  }
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  *this = *this + o;
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  *this = *this * o;
  return *this;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc r(1L);
  RatFunc b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool RatFunc::eq(const RatFunc& a, const RatFunc& b) {
  return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
}

RatFunc RatFunc::substitute(const Substitution& images) const {
  return RatFunc(num_.substitute(images), den_.substitute(images));
}

std::optional<Rational> RatFunc::evaluate(const std::map<VarId, Rational>& point) const {
  auto n = num_.evaluate(point);
  auto d = den_.evaluate(point);
  if (!n || !d || *d == 0) return std::nullopt;
  Rational r = *n / *d;
  r.canonicalize();
  return r;
}

std::string RatFunc::str() const {
  if (den_ == Poly(1L)) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace srll
