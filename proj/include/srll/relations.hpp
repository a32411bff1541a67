#pragma once

#include <optional>
#include <string>
#include <vector>

#include "srll/ncalg.hpp"
#include "srll/report.hpp"

namespace srll {

/// One catalogued defining relation, instantiated for a concrete space:
/// cl * wl == cr * wr with coefficient templates over the slots _s1 (first
/// letter's argument), _s2 (second letter's argument) and the central marker g.
struct RelationInstance {
  std::string id;      // stable machine id
  std::string source;  // catalog tag plus any correction note
  RatFunc cl, cr;
  Word wl, wr;
  RuleKind kind = RuleKind::Exchange;
  bool orientable = true;

  std::string display() const;
};

// ---------------------------------------------------------------- catalog ---

/// k_i^eps1(z) k_j^eps2(w) mutual commutation (same level, or mixed with i<=m)
RelationInstance rel_kk_commute(int i, int lvl_i, int j, int lvl_j, GradedSpace sp);

/// two-sided k_i^+ k_i^- relation for m < i <= m+n
RelationInstance rel_kiki_mixed(int i, GradedSpace sp);

/// two-sided mixed-level relation between k_j^pm(z) and k_i^mp(w)^-1, i > j;
/// `level` is the level of the k_j(z) factor
RelationInstance rel_kikj_mixed(int i, int j, int level, GradedSpace sp);

/// conjugation scalar gamma with k_j^klevel(z) X_i^eps(w) = gamma X_i^eps(w) k_j^klevel(z);
/// template over slots (_s1 = k argument, _s2 = X argument) and marker g
RatFunc kx_gamma(int j, int klevel, int i, int eps, GradedSpace sp);

/// k_j - X_i exchange as a relation record
RelationInstance rel_kx(int j, int klevel, int i, int eps, GradedSpace sp);

/// same-index current exchange (anticommutator when i == m)
RelationInstance rel_xx_same(int i, int level, GradedSpace sp);

/// adjacent current exchange between X_i and X_{i+1}
RelationInstance rel_xx_adjacent(int i, int level, GradedSpace sp);

/// the delta-function relations are catalogued for listing only
RelationInstance rel_delta_bracket(int i, int j, GradedSpace sp);

/// every catalogued relation instance for the given space (CLI listing)
std::vector<RelationInstance> catalog_all(GradedSpace sp);

// ----------------------------------------------------- rewriting interface ---

/// orient relations toward the ranking; throws NotOrientable for delta rules
RewriteSystem as_rewrite_system(const std::vector<RelationInstance>& rels,
                                const LetterOrder& order);

/// ranking whose canonical word is A(z1) A(z2) B(w) for the given symbols
LetterOrder ranking_for(const std::vector<LetterKey>& precedence);

// ------------------------------------------------------------------ serre ---

enum class SerreRel { S1 = 1, S2, S3, S4, S5, S6, S7, S8 };

struct SerreInstance {
  SerreRel rel;
  int i = 0;        // current index for S1-S4; ignored for S5-S8 (index = m)
  int variant = 1;  // +1 upper / -1 lower sign choice in the S5-S8 prefactor
};

struct SerreMutation {
  // replaces the middle coefficient -(q+p^-1); empty = no mutation
  std::optional<RatFunc> middle;
  // flips the sign of the last summand's coefficient
  bool flip_last = false;
};

/// applicable instances for the space (used by `verify all` and acceptance)
std::vector<SerreInstance> serre_instances(GradedSpace sp);

/// the six-word symmetrized Serre expression
NCPoly build_serre_expression(const SerreInstance& inst, GradedSpace sp,
                              const SerreMutation* mut = nullptr);

/// normal-order the Serre expression and test for exact zero
Report verify_serre(const SerreInstance& inst, GradedSpace sp,
                    const SerreMutation* mut = nullptr);

/// the sixteen N=3 checks: case m = 3,2,1,0 and relation index 1..4
SerreInstance serre_case_n3(int m_case, int rel_index);
Report verify_serre_case_n3(int m_case, int rel_index, const SerreMutation* mut = nullptr);

// ------------------------------------------------------------------ gauss ---

/// L^level(z) in Gauss form as an N x N matrix of NCPoly entries
std::vector<std::vector<NCPoly>> gauss_L(int N, int level, VarId arg, GradedSpace sp);

/// L^level(z)^-1 from the inverted Gauss factors
std::vector<std::vector<NCPoly>> gauss_L_inverse(int N, int level, VarId arg, GradedSpace sp);

/// L * L^-1 = identity using only same-argument k cancellation
Report verify_gauss_inverse(int N, int level, GradedSpace sp);

/// q = p turns the adjacent-exchange factor q p^-1 into 1
Report check_one_param_degeneration();

}  // namespace srll
