#include "srll/superlinalg.hpp"

#include <cassert>
#include <sstream>

#include "srll/errors.hpp"

namespace srll {

GradedTensor GradedTensor::identity(GradedSpace space, int legs) {
  GradedTensor t(space, legs);
  std::uint32_t d = t.dim();
  for (std::uint32_t i = 0; i < d; ++i) t.rows_[i][i] = RatFunc(1L);
  return t;
}

std::uint32_t GradedTensor::dim() const {
  std::uint32_t d = 1;
  for (int i = 0; i < legs_; ++i) d *= static_cast<std::uint32_t>(space_.N());
  return d;
}

std::uint32_t GradedTensor::encode(const std::vector<int>& idx) const {
  if (static_cast<int>(idx.size()) != legs_) throw ShapeError("bad multi-index arity");
  std::uint32_t code = 0;
  for (int v : idx) {
    if (v < 1 || v > space_.N()) throw ShapeError("index out of range");
    code = code * space_.N() + static_cast<std::uint32_t>(v - 1);
  }
  return code;
}

std::vector<int> GradedTensor::decode(std::uint32_t code) const {
  std::vector<int> idx(legs_);
  for (int i = legs_ - 1; i >= 0; --i) {
    idx[i] = static_cast<int>(code % space_.N()) + 1;
    code /= space_.N();
  }
  return idx;
}

void GradedTensor::set(const std::vector<int>& row, const std::vector<int>& col,
                       RatFunc v) {
  std::uint32_t r = encode(row), c = encode(col);
  if (v.is_zero()) {
    auto it = rows_.find(r);
    if (it != rows_.end()) {
      it->second.erase(c);
      if (it->second.empty()) rows_.erase(it);
    }
    return;
  }
  rows_[r][c] = std::move(v);
}

void GradedTensor::add(const std::vector<int>& row, const std::vector<int>& col,
                       const RatFunc& v) {
  if (v.is_zero()) return;
  std::uint32_t r = encode(row), c = encode(col);
  auto& cell = rows_[r][c];
  cell += v;
  if (cell.is_zero()) {
    rows_[r].erase(c);
    if (rows_[r].empty()) rows_.erase(r);
  }
}

RatFunc GradedTensor::get(const std::vector<int>& row, const std::vector<int>& col) const {
  auto it = rows_.find(encode(row));
  if (it == rows_.end()) return RatFunc();
  auto jt = it->second.find(encode(col));
  return jt == it->second.end() ? RatFunc() : jt->second;
}

std::size_t GradedTensor::nonzero_count() const {
  std::size_t n = 0;
  for (const auto& [r, cols] : rows_) n += cols.size();
  return n;
}

GradedTensor GradedTensor::operator+(const GradedTensor& o) const {
  if (!(space_ == o.space_) || legs_ != o.legs_) throw ShapeError("tensor shape mismatch");
  GradedTensor t = *this;
  for (const auto& [r, cols] : o.rows_)
    for (const auto& [c, v] : cols) {
      auto& cell = t.rows_[r][c];
      cell += v;
      if (cell.is_zero()) {
        t.rows_[r].erase(c);
        if (t.rows_[r].empty()) t.rows_.erase(r);
      }
    }
  return t;
}

GradedTensor GradedTensor::operator-(const GradedTensor& o) const {
  return *this + o.scaled(RatFunc(-1L));
}

GradedTensor GradedTensor::scaled(const RatFunc& c) const {
  GradedTensor t(space_, legs_);
  if (c.is_zero()) return t;
  for (const auto& [r, cols] : rows_)
    for (const auto& [cc, v] : cols) t.rows_[r][cc] = v * c;
  return t;
}

GradedTensor GradedTensor::substitute(const Substitution& images) const {
  GradedTensor t(space_, legs_);
  for (const auto& [r, cols] : rows_)
    for (const auto& [c, v] : cols) {
      RatFunc s = v.substitute(images);
      if (!s.is_zero()) t.rows_[r][c] = std::move(s);
    }
  return t;
}

bool GradedTensor::eq(const GradedTensor& a, const GradedTensor& b) {
  if (!(a.space_ == b.space_) || a.legs_ != b.legs_) return false;
  GradedTensor d = a - b;
  return d.is_zero();
}

bool GradedTensor::weight_conserving() const {
  for (const auto& [r, cols] : rows_) {
    auto ridx = decode(r);
    int pr = 0;
    for (int i : ridx) pr += space_.parity(i);
    for (const auto& [c, v] : cols) {
      auto cidx = decode(c);
      int pc = 0;
      for (int i : cidx) pc += space_.parity(i);
      if ((pr + pc) % 2 != 0) return false;
    }
  }
  return true;
}

std::string GradedTensor::str() const {
  std::ostringstream os;
  for (const auto& [r, cols] : rows_) {
    auto ri = decode(r);
    for (const auto& [c, v] : cols) {
      auto ci = decode(c);
      os << "(";
      for (size_t i = 0; i < ri.size(); ++i) os << (i ? "," : "") << ri[i];
      os << ";";
      for (size_t i = 0; i < ci.size(); ++i) os << (i ? "," : "") << ci[i];
      os << ") = " << v.str() << "\n";
    }
  }
  return os.str();
}

GradedTensor compose(const GradedTensor& a, const GradedTensor& b) {
  if (!(a.space() == b.space()) || a.legs() != b.legs())
    throw ShapeError("compose: shape mismatch");
  GradedTensor t(a.space(), a.legs());
  GradedTensor result(a.space(), a.legs());
  for (const auto& [r, acols] : a.rows()) {
    std::map<std::uint32_t, RatFunc> out;
    for (const auto& [k, av] : acols) {
      auto it = b.rows().find(k);
      if (it == b.rows().end()) continue;
      for (const auto& [c, bv] : it->second) {
        auto& cell = out[c];
        cell += av * bv;
      }
    }
    for (auto& [c, v] : out)
      if (!v.is_zero()) result.add(result.decode(r), result.decode(c), v);
  }
  return result;
}

GradedTensor super_permutation(GradedSpace space) {
  GradedTensor t(space, 2);
  for (int a = 1; a <= space.N(); ++a)
    for (int b = 1; b <= space.N(); ++b) {
      int sign = (space.parity(a) * space.parity(b)) % 2 ? -1 : 1;
      t.set({b, a}, {a, b}, RatFunc(static_cast<long>(sign)));
    }
  return t;
}

GradedTensor theta(GradedSpace space) {
  GradedTensor t(space, 2);
  for (int a = 1; a <= space.N(); ++a)
    for (int b = 1; b <= space.N(); ++b) {
      int sign = (space.parity(a) * space.parity(b)) % 2 ? -1 : 1;
      t.set({a, b}, {a, b}, RatFunc(static_cast<long>(sign)));
    }
  return t;
}

namespace {

// identity on legs [1..total] except `a` acting on adjacent legs (s, s+1);
// plain Kronecker embedding is exact for weight-conserving operators
GradedTensor embed_adjacent(const GradedTensor& a, int s, int total) {
  GradedSpace sp = a.space();
  int N = sp.N();
  GradedTensor t(sp, total);
  int rest = total - 2;
  std::vector<int> ctx(rest, 1);
  while (true) {
    for (const auto& [r, cols] : a.rows()) {
      auto ri = a.decode(r);
      for (const auto& [c, v] : cols) {
        auto ci = a.decode(c);
        std::vector<int> row, col;
        int k = 0;
        for (int leg = 1; leg <= total; ++leg) {
          if (leg == s) {
            row.push_back(ri[0]);
            col.push_back(ci[0]);
          } else if (leg == s + 1) {
            row.push_back(ri[1]);
            col.push_back(ci[1]);
          } else {
            row.push_back(ctx[k]);
            col.push_back(ctx[k]);
            ++k;
          }
        }
        t.add(row, col, v);
      }
    }
    int i = rest - 1;
    while (i >= 0 && ctx[i] == N) {
      ctx[i] = 1;
      --i;
    }
    if (i < 0) break;
    ++ctx[i];
  }
  return t;
}

}  // namespace

GradedTensor graded_embed(const GradedTensor& a, int s, int t, int total) {
  if (a.legs() != 2) throw ShapeError("graded_embed: operator must act on two legs");
  if (!(1 <= s && s < t && t <= total)) throw ShapeError("graded_embed: bad legs");
  if (!a.weight_conserving())
    throw ShapeError("graded_embed: operator is not weight conserving");
  GradedTensor cur = embed_adjacent(a, s, total);
  // walk leg s+1 rightwards to position t by conjugating with adjacent
  // signed permutations
  if (t > s + 1) {
    GradedTensor P = super_permutation(a.space());
    for (int pos = s + 1; pos < t; ++pos) {
      GradedTensor W = embed_adjacent(P, pos, total);
      cur = compose(W, compose(cur, W));
    }
  }
  return cur;
}

GradedTensor conjugate_21(const GradedTensor& a) {
  if (a.legs() != 2) throw ShapeError("conjugate_21: need two legs");
  GradedTensor P = super_permutation(a.space());
  return compose(P, compose(a, P));
}

}  // namespace srll
