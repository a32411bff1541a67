#include <doctest.h>

#include <random>

#include "srll/expr_io.hpp"
#include "srll/hopf.hpp"

using namespace srll;

namespace {

GradedSpace sp11{1, 1};
GradedSpace sp21{2, 1};

UnitMonomial shifted(VarId v, VarId gv, int e) { return um_shift(v, gv, e); }

}  // namespace

TEST_CASE("coproduct is a homomorphism on the k relations") {
  CHECK(verify_coproduct_on_k_relation(rel_kiki_mixed(2, sp11), sp11).passed());
  CHECK(verify_coproduct_on_k_relation(rel_kk_commute(1, +1, 1, -1, sp11), sp11).passed());
  CHECK(verify_coproduct_on_k_relation(rel_kiki_mixed(3, sp21), sp21).passed());
  CHECK(verify_coproduct_on_k_relation(rel_kikj_mixed(2, 1, +1, sp21), sp21).passed());
  // corrupted central shift on one leg breaks it
  CHECK(verify_coproduct_on_k_relation(rel_kiki_mixed(2, sp11), sp11, true).status ==
        Status::Fail);
}

TEST_CASE("coproduct of the odd anticommutator vanishes") {
  CHECK(verify_coproduct_anticommutator(sp11).passed());
  CHECK(verify_coproduct_anticommutator(sp21).passed());
  CHECK(verify_coproduct_anticommutator({1, 2}).passed());
  // a single coproduct times the unit is itself
  NCPoly d = coproduct(LX(1, +1, um(vars::z), sp11), sp11);
  CHECK(NCPoly::eq(d * NCPoly::one(), d));
}

TEST_CASE("even-index coproduct product matches the hand-tracked expansion") {
  // i < m: all four cross terms survive with plain signs
  GradedSpace sp = sp21;
  Letter Xz = LX(1, +1, um(vars::z), sp);
  Letter Xw = LX(1, +1, um(vars::w), sp);
  NCPoly engine = coproduct(Xz, sp) * coproduct(Xw, sp);

  Letter Xz1 = Xz.with_leg(1), Xw1 = Xw.with_leg(1);
  Letter psi_z = Lpsi(1, shifted(vars::z, vars::g1, 1), false, 1);
  Letter psi_w = Lpsi(1, shifted(vars::w, vars::g1, 1), false, 1);
  Letter Xz2 = LX(1, +1, shifted(vars::z, vars::g1, 2), sp, 2);
  Letter Xw2 = LX(1, +1, shifted(vars::w, vars::g1, 2), sp, 2);
  NCPoly hand = NCPoly::term({Xz1, Xw1}, RatFunc(1L)) +
                NCPoly::term({Xz1, psi_w, Xw2}, RatFunc(1L)) +
                NCPoly::term({psi_z, Xw1, Xz2}, RatFunc(1L)) +
                NCPoly::term({psi_z, psi_w, Xz2, Xw2}, RatFunc(1L));
  CHECK(NCPoly::eq(engine, hand));

  // the odd case flips the sign of the crossed term
  Letter Ym = LX(2, +1, um(vars::z), sp);
  Letter Yw = LX(2, +1, um(vars::w), sp);
  NCPoly engine_odd = coproduct(Ym, sp) * coproduct(Yw, sp);
  Letter psi2_z = Lpsi(2, shifted(vars::z, vars::g1, 1), false, 1);
  Letter Ym2 = LX(2, +1, shifted(vars::z, vars::g1, 2), sp, 2);
  Letter Yw1 = Yw.with_leg(1);
  auto it = engine_odd.terms().find(Word{psi2_z, Yw1, Ym2});
  REQUIRE(it != engine_odd.terms().end());
  CHECK(RatFunc::eq(it->second, RatFunc(-1L)));
}

TEST_CASE("psi exchange scalars reproduce the published ones") {
  // for i < m: psi_i(z2 g1) X_i^+(z1) carries (z2 q^-1 - z1 p)/(z2 p - z1 q^-1)
  RatFunc tpl = psi_x_scalar(1, 1, +1, sp21);
  Substitution at{{slot1(), um_shift(vars::z2, vars::g, 1)}, {slot2(), um(vars::z1)}};
  CHECK(RatFunc::eq(tpl.substitute(at),
                    parse_expr("(z2*q^-1-z1*p)/(z2*p-z1*q^-1)")));
  // for i < m - 1 the neighbour scalar is (z2 p - w q^-1)/(z2 - w)
  GradedSpace sp31{3, 1};
  RatFunc tpl2 = psi_x_scalar(1, 2, +1, sp31);
  Substitution at2{{slot1(), um_shift(vars::z2, vars::g, 1)}, {slot2(), um(vars::w)}};
  CHECK(RatFunc::eq(tpl2.substitute(at2), parse_expr("(z2*p-w*q^-1)/(z2-w)")));
  // at the odd index the composite commutes with the current identically
  CHECK(RatFunc::eq(psi_x_scalar(1, 1, +1, sp11), RatFunc(1L)));
  CHECK(RatFunc::eq(phi_x_scalar(1, 1, -1, sp11), RatFunc(1L)));
}

TEST_CASE("the Serre coproduct coefficient vanishes exactly") {
  CHECK(verify_serre_coproduct_coefficient().passed());
  CHECK(verify_serre_coproduct_coefficient(false, true).passed());  // q = p first
  Report mutated = verify_serre_coproduct_coefficient(true);
  CHECK(mutated.passed());  // control: nonzero detected, including numerically
}

TEST_CASE("phi psi commutation") {
  CHECK(verify_phi_psi_commutation().passed());
  for (int k = 1; k <= 6; ++k) CHECK(verify_phi_psi_commutation(k).passed());
}

TEST_CASE("counit and antipode axioms") {
  CHECK(verify_counit_antipode_axioms(sp11).passed());
  CHECK(verify_counit_antipode_axioms(sp21).passed());
  CHECK(verify_counit_antipode_axioms({0, 2}).passed());

  // named examples
  Letter X = LX(1, +1, um(vars::z), sp11);
  NCPoly d = coproduct(X, sp11);
  CHECK(NCPoly::eq(apply_counit_and_merge(d, 2), NCPoly::letter(X)));
  NCPoly s = apply_antipode_and_merge(d, 2);
  RewriteSystem cancels;
  {
    Letter psi = Lpsi(1, um_shift(vars::z, vars::g, 1));
    RewriteRule r;
    r.a = key_of(psi);
    r.b = key_of(psi.inverse());
    r.kind = RuleKind::Cancel;
    cancels.add(r);
  }
  LetterOrder order;
  CHECK(normal_order(s, cancels, order).is_zero());
}

TEST_CASE("antipode reverses with the super sign") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> pick(0, 2);
  auto random_word = [&](int len) {
    Word w;
    for (int k = 0; k < len; ++k) {
      switch (pick(rng)) {
        case 0: w.push_back(LX(1, +1, um(vars::z), sp11)); break;   // odd
        case 1: w.push_back(LX(1, -1, um(vars::w), sp11)); break;   // odd
        default: w.push_back(Lk(1, +1, um(vars::z1))); break;       // even
      }
    }
    return w;
  };
  for (int trial = 0; trial < 40; ++trial) {
    Word wa = random_word(1 + trial % 2), wb = random_word(1 + (trial / 2) % 3);
    NCPoly a = NCPoly::term(wa, RatFunc(1L));
    NCPoly b = NCPoly::term(wb, RatFunc(1L));
    int pa = 0, pb = 0;
    for (const auto& l : wa) pa += l.parity;
    for (const auto& l : wb) pb += l.parity;
    NCPoly lhs = antipode(a * b);
    NCPoly rhs = (antipode(b) * antipode(a)).scaled(RatFunc((pa * pb) % 2 ? -1L : 1L));
    CHECK(NCPoly::eq(lhs, rhs));
  }
}

TEST_CASE("counit is an algebra map on the catalogued scalar relations") {
  for (GradedSpace sp : {sp11, sp21}) {
    for (const auto& rel : catalog_all(sp)) {
      if (rel.wl.size() != 2 || rel.wl[0].sym != Sym::K || rel.wl[1].sym != Sym::K)
        continue;
      Substitution inst{{slot1(), um(vars::z)},
                        {slot2(), um(vars::w)},
                        {vars::g, {Rational(1), Monomial()}}};
      CHECK(RatFunc::eq(rel.cl.substitute(inst), rel.cr.substitute(inst)));
    }
  }
}

TEST_CASE("antipode anticommutator structure with opaque deltas") {
  CHECK(verify_antipode_anticommutator(sp11).passed());
  CHECK(verify_antipode_anticommutator(sp21).passed());
}

TEST_CASE("coassociativity of the RLL coproduct") {
  CHECK(verify_coassociativity_L(1, {1, 0}).passed());
  CHECK(verify_coassociativity_L(2, {1, 1}).passed());
  CHECK(verify_coassociativity_L(3, {2, 1}).passed());
  CHECK(verify_coassociativity_L(4, {3, 1}).passed());
  Report mutated = verify_coassociativity_L(2, {1, 1}, true);
  CHECK(mutated.passed());  // the dropped shift is detected

  // four-term oracle at N=2: both sides written out by hand for l_{1,2}^+
  GradedSpace sp{1, 1};
  NCPoly side;
  for (int k = 1; k <= 2; ++k)
    for (int l = 1; l <= 2; ++l) {
      UnitMonomial a1{Rational(1), Monomial::var(vars::z) * Monomial::var(vars::g2) *
                                       Monomial::var(vars::g3)};
      UnitMonomial a2{Rational(1), Monomial::var(vars::z) *
                                       Monomial::var(vars::g1, -1) *
                                       Monomial::var(vars::g3)};
      UnitMonomial a3{Rational(1), Monomial::var(vars::z) *
                                       Monomial::var(vars::g1, -1) *
                                       Monomial::var(vars::g2, -1)};
      side += NCPoly::term({Lell(1, l, +1, a1, sp, 1), Lell(l, k, +1, a2, sp, 2),
                            Lell(k, 2, +1, a3, sp, 3)},
                           RatFunc(1L));
    }
  CHECK(side.term_count() == 4);
}
