#include <doctest.h>

#include "srll/expr_io.hpp"
#include "srll/relations.hpp"

using namespace srll;

namespace {

RatFunc at_zw(const RatFunc& tpl) {
  Substitution inst{{slot1(), um(vars::z)}, {slot2(), um(vars::w)}};
  return tpl.substitute(inst);
}

}  // namespace

TEST_CASE("kiki instantiates to the published two-sided coefficients") {
  RelationInstance rel = rel_kiki_mixed(2, {1, 1});
  CHECK(RatFunc::eq(at_zw(rel.cl),
                    parse_expr("(w*g^-1*p-z*g*q^-1)/(z*g*p-w*g^-1*q^-1)")));
  CHECK(RatFunc::eq(at_zw(rel.cr),
                    parse_expr("(w*g*p-z*g^-1*q^-1)/(z*g^-1*p-w*g*q^-1)")));
  // the N=2 display writes the same relation with q in front; the two
  // printed coefficient families agree because a p - b q^-1 and a q - b p^-1
  // differ by the unit q/p
  CHECK(RatFunc::eq(at_zw(rel.cl),
                    parse_expr("(w*g^-1*q-p^-1*z*g)/(z*g*q-w*g^-1*p^-1)")));
}

TEST_CASE("anticommutator and trivial conjugation instances") {
  RelationInstance anti = rel_xx_same(1, +1, {1, 1});
  CHECK(anti.kind == RuleKind::Anticommute);
  CHECK(RatFunc::eq(anti.cr, RatFunc(-1L)));

  // j - i >= 2 and j - i <= -1 both conjugate trivially
  CHECK(RatFunc::eq(kx_gamma(3, +1, 1, +1, {2, 1}), RatFunc(1L)));
  CHECK(RatFunc::eq(kx_gamma(1, -1, 2, -1, {2, 1}), RatFunc(1L)));
}

TEST_CASE("catalog instantiates for every split up to N=4") {
  for (int N = 2; N <= 4; ++N)
    for (int m = 0; m <= N; ++m) {
      auto rels = catalog_all({m, N - m});
      CHECK(rels.size() > 10);
      for (const auto& r : rels) CHECK_FALSE(r.display().empty());
    }
}

TEST_CASE("orientation of relation sets") {
  GradedSpace sp{2, 1};
  LetterOrder order = ranking_for({key_of(LX(1, +1, um(vars::z1), sp)),
                                   key_of(LX(2, +1, um(vars::w), sp)),
                                   key_of(LX(1, -1, um(vars::z1), sp)),
                                   key_of(LX(2, -1, um(vars::w), sp))});
  // the four displayed current relations orient into a four-rule system
  std::vector<RelationInstance> rels = {
      rel_xx_same(1, +1, sp), rel_xx_same(1, -1, sp),
      rel_xx_adjacent(1, +1, sp), rel_xx_adjacent(1, -1, sp)};
  RewriteSystem sys = as_rewrite_system(rels, order);
  CHECK(sys.rules().size() == 4);

  CHECK(as_rewrite_system({}, order).empty());

  CHECK_THROWS_AS(as_rewrite_system({rel_delta_bracket(1, 1, sp)}, order),
                  NotOrientable);
}

TEST_CASE("all sixteen N=3 Serre coefficients vanish") {
  for (int m = 3; m >= 0; --m)
    for (int rel = 1; rel <= 4; ++rel) {
      Report r = verify_serre_case_n3(m, rel);
      INFO(r.id());
      CHECK(r.passed());
    }
}

TEST_CASE("mutated Serre coefficients do not vanish") {
  SerreMutation mut;
  mut.middle = parse_expr("q+p");  // (q+p^-1) -> (q+p)
  for (int m : {3, 2, 1, 0}) {
    Report r = verify_serre_case_n3(m, 1, &mut);
    CHECK(r.status == Status::Fail);
  }
  SerreMutation flip;
  flip.flip_last = true;
  CHECK(verify_serre_case_n3(3, 1, &flip).status == Status::Fail);
}

TEST_CASE("general Serre instances at the stated splits") {
  for (GradedSpace sp : {GradedSpace{2, 2}, GradedSpace{3, 1}, GradedSpace{1, 3}}) {
    auto insts = serre_instances(sp);
    CHECK_FALSE(insts.empty());
    for (const auto& inst : insts) {
      Report r = verify_serre(inst, sp);
      INFO(r.id());
      CHECK(r.passed());
    }
  }
  // the sign alternative tied to the other level genuinely fails
  CHECK(verify_serre({SerreRel::S5, 0, -1}, {2, 2}).status == Status::Fail);
  CHECK(verify_serre({SerreRel::S7, 0, -1}, {1, 3}).status == Status::Fail);
}

TEST_CASE("serre guards reject out-of-range instances") {
  // report-producing checks surface guard violations as error outcomes
  CHECK(verify_serre({SerreRel::S1, 2, 0}, GradedSpace{2, 1}).status ==
        Status::Error);  // i = m
  CHECK_THROWS_AS(build_serre_expression({SerreRel::S5, 0, +1}, GradedSpace{1, 1}),
                  NotApplicable);  // needs m >= 2
}

TEST_CASE("every orientable current system is locally confluent at length 3") {
  for (GradedSpace sp : {GradedSpace{2, 1}, GradedSpace{1, 2}, GradedSpace{3, 0}}) {
    for (int lvl : {+1, -1})
      for (int i = 1; i + 1 <= sp.N() - 1; ++i) {
        LetterOrder order = ranking_for({key_of(LX(i, lvl, um(vars::z1), sp)),
                                         key_of(LX(i + 1, lvl, um(vars::w), sp))});
        RewriteSystem sys = as_rewrite_system(
            {rel_xx_same(i, lvl, sp), rel_xx_adjacent(i, lvl, sp)}, order);
        Report r = check_local_confluence(sys, order, 3);
        INFO("m=" << sp.m << " n=" << sp.n << " i=" << i << " lv=" << lvl);
        CHECK(r.passed());
      }
  }
}

TEST_CASE("gauss inverse identities") {
  for (int level : {+1, -1}) {
    CHECK(verify_gauss_inverse(1, level, {1, 1}).passed());
    CHECK(verify_gauss_inverse(2, level, {1, 1}).passed());
    CHECK(verify_gauss_inverse(2, level, {2, 0}).passed());
    CHECK(verify_gauss_inverse(3, level, {2, 1}).passed());
  }
}

TEST_CASE("gauss entries match the published N=2 forms") {
  GradedSpace sp{1, 1};
  auto L = gauss_L(2, +1, vars::z, sp);
  auto Linv = gauss_L_inverse(2, +1, vars::z, sp);
  Letter k1 = Lk(1, +1, um(vars::z)), k2 = Lk(2, +1, um(vars::z));
  Letter e1 = Le(2, 1, +1, um(vars::z), sp), f1 = Lf(1, 2, +1, um(vars::z), sp);
  CHECK(NCPoly::eq(L[0][0], NCPoly::letter(k1)));
  CHECK(NCPoly::eq(L[0][1], NCPoly::term({k1, f1}, RatFunc(1L))));
  CHECK(NCPoly::eq(L[1][0], NCPoly::term({e1, k1}, RatFunc(1L))));
  CHECK(NCPoly::eq(L[1][1], NCPoly::letter(k2) +
                                NCPoly::term({e1, k1, f1}, RatFunc(1L))));
  CHECK(NCPoly::eq(Linv[0][0],
                   NCPoly::letter(k1.inverse()) +
                       NCPoly::term({f1, k2.inverse(), e1}, RatFunc(1L))));
  CHECK(NCPoly::eq(Linv[0][1], NCPoly::term({f1, k2.inverse()}, RatFunc(-1L))));
  CHECK(NCPoly::eq(Linv[1][0], NCPoly::term({k2.inverse(), e1}, RatFunc(-1L))));
  CHECK(NCPoly::eq(Linv[1][1], NCPoly::letter(k2.inverse())));

  // entry (1,1) of L L^-1 collapses to 1 by a k-cancellation and an exact
  // two-word cancellation; entry (1,2) cancels to zero outright
  NCPoly p11 = L[0][0] * Linv[0][0] + L[0][1] * Linv[1][0];
  CHECK(p11.term_count() == 1);  // the two f1 k2^-1 e1 words cancel exactly
  NCPoly p12 = L[0][0] * Linv[0][1] + L[0][1] * Linv[1][1];
  CHECK(p12.is_zero());
}

TEST_CASE("two-sided k-k structure constants coincide at zero central charge") {
  Substitution g1{{vars::g, {Rational(1), Monomial()}}};
  for (GradedSpace sp : {GradedSpace{1, 1}, GradedSpace{2, 1}, GradedSpace{1, 2}}) {
    for (int i = sp.m + 1; i <= sp.N(); ++i) {
      RelationInstance rel = rel_kiki_mixed(i, sp);
      CHECK(RatFunc::eq(rel.cl.substitute(g1), rel.cr.substitute(g1)));
    }
    for (int lvl : {+1, -1})
      for (int j = 1; j < sp.N(); ++j)
        for (int i = j + 1; i <= sp.N(); ++i) {
          RelationInstance rel = rel_kikj_mixed(i, j, lvl, sp);
          CHECK(RatFunc::eq(rel.cl.substitute(g1), rel.cr.substitute(g1)));
        }
  }
}

TEST_CASE("one-parameter degeneration report") {
  Report r = check_one_param_degeneration();
  CHECK(r.passed());
  // and the q = p specialization of the full exchange-relation ratio matches
  // the one-parameter shape
  RelationInstance rel = rel_xx_adjacent(1, +1, {2, 1});
  RatFunc ratio = at_zw(rel.cr / rel.cl);
  RatFunc spec = ratio.substitute({{vars::q, um(vars::p)}});
  CHECK(RatFunc::eq(spec, parse_expr("(z*p-w*p^-1)/(z-w)")));
}
