#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "srll/field.hpp"

namespace srll {

/// Parity-graded space with m even then n odd basis vectors, indexed 1..N.
struct GradedSpace {
  int m = 0;
  int n = 0;

  int N() const { return m + n; }
  int parity(int i) const { return i <= m ? 0 : 1; }  // 1-based index

  bool operator==(const GradedSpace& o) const { return m == o.m && n == o.n; }
};

/// Sparse operator on V^(x)legs over RatFunc. Row/column multi-indices are
/// encoded base N with leg 1 most significant, entries 1-based per leg.
class GradedTensor {
 public:
  GradedTensor() = default;
  GradedTensor(GradedSpace space, int legs) : space_(space), legs_(legs) {}

  static GradedTensor identity(GradedSpace space, int legs);

  const GradedSpace& space() const { return space_; }
  int legs() const { return legs_; }
  std::uint32_t dim() const;

  void set(const std::vector<int>& row, const std::vector<int>& col, RatFunc v);
  void add(const std::vector<int>& row, const std::vector<int>& col, const RatFunc& v);
  RatFunc get(const std::vector<int>& row, const std::vector<int>& col) const;

  std::uint32_t encode(const std::vector<int>& idx) const;
  std::vector<int> decode(std::uint32_t code) const;

  const std::map<std::uint32_t, std::map<std::uint32_t, RatFunc>>& rows() const {
    return rows_;
  }

  std::size_t nonzero_count() const;
  bool is_zero() const { return rows_.empty(); }

  GradedTensor operator+(const GradedTensor& o) const;
  GradedTensor operator-(const GradedTensor& o) const;
  GradedTensor scaled(const RatFunc& c) const;
  GradedTensor substitute(const Substitution& images) const;

  /// entries equal as rational functions (cross-multiplication eq)
  static bool eq(const GradedTensor& a, const GradedTensor& b);

  /// entries vanish unless the parities of all row and column indices sum
  /// to zero mod 2
  bool weight_conserving() const;

  std::string str() const;

 private:
  GradedSpace space_;
  int legs_ = 0;
  std::map<std::uint32_t, std::map<std::uint32_t, RatFunc>> rows_;
};

/// matrix product over RatFunc; shapes must agree
GradedTensor compose(const GradedTensor& a, const GradedTensor& b);

/// signed permutation P(v_a (x) v_b) = (-1)^{[a][b]} v_b (x) v_a
GradedTensor super_permutation(GradedSpace space);

/// diagonal sign matrix theta_{ab,ab} = (-1)^{[a][b]}
GradedTensor theta(GradedSpace space);

/// Operator acting as `a` on legs (s,t) of V^(x)total and as identity
/// elsewhere. Adjacent embeddings of weight-conserving operators are plain
/// Kronecker products; non-adjacent legs are reached by conjugating with
/// adjacent signed permutations, which fixes the Koszul sign convention.
GradedTensor graded_embed(const GradedTensor& a, int s, int t, int total);

/// P . a . P on two legs
GradedTensor conjugate_21(const GradedTensor& a);

}  // namespace srll
