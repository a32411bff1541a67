#include <doctest.h>

#include "srll/expr_io.hpp"
#include "srll/relations.hpp"
#include "srll/rmatrix.hpp"

using namespace srll;

namespace {

// the z/w -> 0 limit of a ratio-form entry: drop every term carrying z
RatFunc limit_at_zero(const RatFunc& f, VarId v) {
  auto keep = [&](const Poly& p) {
    Poly out;
    for (const auto& [mono, c] : p.terms()) {
      REQUIRE(mono.exponent(v) >= 0);
      if (mono.exponent(v) == 0) out += Poly::term(mono, c);
    }
    return out;
  };
  Poly den0 = keep(f.den());
  REQUIRE_FALSE(den0.is_zero());
  return RatFunc(keep(f.num()), den0);
}

GradedTensor limit_at_zero(const GradedTensor& t, VarId v) {
  GradedTensor out(t.space(), t.legs());
  for (const auto& [r, cols] : t.rows())
    for (const auto& [c, val] : cols)
      out.add(out.decode(r), out.decode(c), limit_at_zero(val, v));
  return out;
}

}  // namespace

TEST_CASE("basic R examples") {
  GradedTensor r10 = build_basic_R({1, 0});
  CHECK(RatFunc::eq(r10.get({1, 1}, {1, 1}), RatFunc(1L)));
  CHECK(r10.nonzero_count() == 1);

  GradedTensor r11 = build_basic_R({1, 1});
  CHECK(RatFunc::eq(r11.get({2, 2}, {2, 2}), -parse_expr("p*q")));
  CHECK(RatFunc::eq(r11.get({1, 2}, {2, 1}), parse_expr("q")));
  CHECK(RatFunc::eq(r11.get({2, 1}, {1, 2}), parse_expr("p")));
  CHECK(RatFunc::eq(r11.get({2, 1}, {2, 1}), parse_expr("1-p*q")));
}

TEST_CASE("spectral limit recovers the basic R") {
  // oracle: at z/w -> 0 every affine entry has an exact rational limit and
  // the limiting matrix composed with P is the constant basic R
  for (int N = 2; N <= 3; ++N)
    for (int m = 0; m <= N; ++m) {
      GradedSpace sp{m, N - m};
      GradedTensor Rw = build_affine_R(sp, RForm::Twisted,
                                       {1, Monomial::var(vars::z)},
                                       {1, Monomial()});  // ratio z against 1
      GradedTensor R0 = limit_at_zero(Rw, vars::z);
      CHECK(GradedTensor::eq(compose(R0, super_permutation(sp)), build_basic_R(sp)));
    }
}

TEST_CASE("affine R matches the published entries") {
  GradedSpace sp{1, 1};
  GradedTensor R = build_affine_R(sp, RForm::Twisted);
  CHECK(RatFunc::eq(R.get({2, 2}, {2, 2}),
                    -parse_expr("(w*q-z*p^-1)/(z*q-w*p^-1)")));
  CHECK(RatFunc::eq(R.get({1, 2}, {1, 2}),
                    parse_expr("(z-w)*q*p^-1/(z*q-w*p^-1)")));

  // setting z = w turns the Type-1 matrix into the plain permutation
  GradedSpace even{2, 0};
  GradedTensor R1 = build_affine_R(even, RForm::Twisted,
                                   {1, Monomial::var(vars::z)},
                                   {1, Monomial::var(vars::z)});
  CHECK(GradedTensor::eq(R1, super_permutation(even)));

  // the 21-conjugated N=3 matrix reproduces the displayed entries
  GradedTensor R21 = conjugate_21(build_affine_R({2, 1}, RForm::Twisted));
  CHECK(RatFunc::eq(R21.get({1, 2}, {1, 2}), parse_expr("(z-w)/(z*q-w*p^-1)")));
  CHECK(RatFunc::eq(R21.get({1, 3}, {3, 1}),
                    parse_expr("w*(q-p^-1)/(z*q-w*p^-1)")));
  CHECK(RatFunc::eq(R21.get({3, 2}, {2, 3}),
                    parse_expr("z*(q-p^-1)/(z*q-w*p^-1)")));
  CHECK(RatFunc::eq(R21.get({3, 3}, {3, 3}),
                    -parse_expr("(w*q-z*p^-1)/(z*q-w*p^-1)")));
}

TEST_CASE("graded YBE reports") {
  CHECK(check_graded_YBE({1, 1}).passed());
  CHECK(check_graded_YBE({0, 2}).passed());
  CHECK(check_graded_YBE({2, 1}).passed());

  // identity solves the YBE trivially
  GradedSpace sp{1, 1};
  GradedTensor id3 = GradedTensor::identity(sp, 3);
  CHECK(GradedTensor::eq(compose(id3, compose(id3, id3)),
                         compose(id3, compose(id3, id3))));

  // a corrupted entry breaks it: multiply one entry by 2 and expand directly
  UnitMonomial one{1, Monomial()};
  UnitMonomial az{1, Monomial::var(vars::z)};
  UnitMonomial aw{1, Monomial::var(vars::w)};
  UnitMonomial azw{1, Monomial::var(vars::z) * Monomial::var(vars::w)};
  auto mutate = [](GradedTensor R) {
    RatFunc v = R.get({1, 2}, {2, 1});
    R.set({1, 2}, {2, 1}, v * RatFunc(2L));
    return R;
  };
  GradedTensor R12 = graded_embed(mutate(build_affine_R(sp, RForm::Twisted, az, one)), 1, 2, 3);
  GradedTensor R13 = graded_embed(mutate(build_affine_R(sp, RForm::Twisted, azw, one)), 1, 3, 3);
  GradedTensor R23 = graded_embed(mutate(build_affine_R(sp, RForm::Twisted, aw, one)), 2, 3, 3);
  GradedTensor diff = compose(R12, compose(R13, R23)) - compose(R23, compose(R13, R12));
  CHECK(diff.nonzero_count() > 0);
}

TEST_CASE("unitarity and symmetry reports") {
  CHECK(check_unitarity({2, 0}).passed());
  CHECK(check_unitarity({1, 2}).passed());
  CHECK(check_symmetry({2, 0}).passed());
  CHECK(check_symmetry({1, 1}).passed());
}

TEST_CASE("exactly one sign convention solves the graded YBE as stated") {
  Report r = check_form_conventions({1, 1});
  CHECK(r.passed());
  CHECK(check_graded_YBE({1, 1}, RForm::Tilde).status == Status::Fail);
  CHECK(check_unitarity({1, 1}, RForm::Tilde).passed());
}

TEST_CASE("homogeneity in the spectral pair") {
  for (GradedSpace sp : {GradedSpace{2, 0}, GradedSpace{1, 1}, GradedSpace{2, 1}}) {
    GradedTensor R = build_affine_R(sp, RForm::Twisted);
    Substitution scale;
    scale[vars::z] = {Rational(1), Monomial::var(vars::u) * Monomial::var(vars::z)};
    scale[vars::w] = {Rational(1), Monomial::var(vars::u) * Monomial::var(vars::w)};
    CHECK(GradedTensor::eq(R.substitute(scale), R));
  }
}

TEST_CASE("one-parameter degeneration of the exchange factor") {
  CHECK(check_one_param_degeneration().passed());
}
