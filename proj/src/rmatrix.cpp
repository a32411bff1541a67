#include "srll/rmatrix.hpp"

#include "srll/errors.hpp"

namespace srll {

namespace {

RatFunc rf_var(VarId v, int e = 1) { return RatFunc::variable(v, e); }

}  // namespace

GradedTensor build_basic_R(GradedSpace space) {
  int N = space.N();
  if (N < 1) throw ShapeError("build_basic_R: empty space");
  GradedTensor R(space, 2);
  RatFunc p = rf_var(vars::p), q = rf_var(vars::q);
  for (int i = 1; i <= N; ++i) {
    // (-1)^[i] (E_ii (x) E_ii) resp. (-1)^[i] pq (E_ii (x) E_ii)
    if (space.parity(i) == 0) {
      R.add({i, i}, {i, i}, RatFunc(1L));
    } else {
      R.add({i, i}, {i, i}, -(p * q));
    }
  }
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      if (i == j) continue;
      int sgn = (space.parity(i) * space.parity(j)) % 2 ? -1 : 1;
      RatFunc c = (i > j ? p : q) * RatFunc(static_cast<long>(sgn));
      // E_ij (x) E_ji has its entry at row (i,j), column (j,i)
      R.add({i, j}, {j, i}, c);
      if (i < j) R.add({j, i}, {j, i}, RatFunc(1L) - p * q);
    }
  return R;
}

GradedTensor build_affine_R(GradedSpace space, RForm form, const UnitMonomial& arg_z,
                            const UnitMonomial& arg_w) {
  int N = space.N();
  if (N < 1) throw ShapeError("build_affine_R: empty space");
  GradedTensor R(space, 2);
  RatFunc p = rf_var(vars::p), q = rf_var(vars::q);
  RatFunc z = rf_var(vars::z), w = rf_var(vars::w);
  RatFunc pinv = rf_var(vars::p, -1);
  RatFunc D = z * q - w * pinv;
  RatFunc odd_diag = (w * q - z * pinv) / D;       // tilde sign
  RatFunc mix_lt = ((z - w) * q * pinv) / D;       // E_ii (x) E_jj, i < j
  RatFunc mix_gt = (z - w) / D;                    // E_ii (x) E_jj, i > j
  RatFunc ex_lt = (z * (q - pinv)) / D;            // E_ij (x) E_ji, i < j
  RatFunc ex_gt = (w * (q - pinv)) / D;            // E_ij (x) E_ji, i > j

  for (int i = 1; i <= N; ++i) {
    if (space.parity(i) == 0) {
      R.add({i, i}, {i, i}, RatFunc(1L));
    } else {
      R.add({i, i}, {i, i},
            form == RForm::Twisted ? -odd_diag : odd_diag);
    }
  }
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      if (i == j) continue;
      R.add({i, j}, {i, j}, i < j ? mix_lt : mix_gt);
      RatFunc ex = i < j ? ex_lt : ex_gt;
      if (form == RForm::Twisted && (space.parity(i) * space.parity(j)) % 2)
        ex = -ex;
      R.add({i, j}, {j, i}, ex);
    }

  Substitution sub;
  bool nontrivial = !(arg_z.coeff == 1 && arg_z.mono == Monomial::var(vars::z)) ||
                    !(arg_w.coeff == 1 && arg_w.mono == Monomial::var(vars::w));
  if (nontrivial) {
    sub[vars::z] = arg_z;
    sub[vars::w] = arg_w;
    R = R.substitute(sub);
  }
  return R;
}

GradedTensor build_affine_R21_swapped(GradedSpace space, RForm form) {
  GradedTensor R_wz = build_affine_R(space, form, {1, Monomial::var(vars::w)},
                                     {1, Monomial::var(vars::z)});
  return conjugate_21(R_wz);
}

namespace {

Report check_ybe_impl(GradedSpace space, RForm form, const char* name) {
  Report base;
  base.check = name;
  base.with("m", space.m).with("n", space.n);
  base.with("form", form == RForm::Twisted ? "twisted" : "tilde");
  return timed_report(std::move(base), [&](Report& rep) {
    UnitMonomial one{1, Monomial()};
    UnitMonomial az{1, Monomial::var(vars::z)};
    UnitMonomial aw{1, Monomial::var(vars::w)};
    UnitMonomial azw{1, Monomial::var(vars::z) * Monomial::var(vars::w)};
    GradedTensor R_z = build_affine_R(space, form, az, one);
    GradedTensor R_zw = build_affine_R(space, form, azw, one);
    GradedTensor R_w = build_affine_R(space, form, aw, one);
    GradedTensor R12 = graded_embed(R_z, 1, 2, 3);
    GradedTensor R13 = graded_embed(R_zw, 1, 3, 3);
    GradedTensor R23 = graded_embed(R_w, 2, 3, 3);
    GradedTensor lhs = compose(R12, compose(R13, R23));
    GradedTensor rhs = compose(R23, compose(R13, R12));
    GradedTensor diff = lhs - rhs;
    std::size_t residual = diff.nonzero_count();
    if (residual == 0) {
      rep.status = Status::Pass;
    } else {
      rep.status = Status::Fail;
      rep.residual = std::to_string(residual) + " nonzero entries";
    }
  });
}

}  // namespace

Report check_graded_YBE(GradedSpace space, RForm form) {
  return check_ybe_impl(space, form, "ybe");
}

Report check_unitarity(GradedSpace space, RForm form) {
  Report base;
  base.check = "unitarity";
  base.with("m", space.m).with("n", space.n);
  base.with("form", form == RForm::Twisted ? "twisted" : "tilde");
  return timed_report(std::move(base), [&](Report& rep) {
    GradedTensor R = build_affine_R(space, form);
    GradedTensor R21 = build_affine_R21_swapped(space, form);
    GradedTensor prod = compose(R, R21);
    GradedTensor diff = prod - GradedTensor::identity(space, 2);
    std::size_t residual = diff.nonzero_count();
    if (residual == 0) {
      rep.status = Status::Pass;
    } else {
      rep.status = Status::Fail;
      rep.residual = std::to_string(residual) + " nonzero entries";
    }
  });
}

Report check_symmetry(GradedSpace space, RForm form) {
  Report base;
  base.check = "symmetry";
  base.with("m", space.m).with("n", space.n);
  base.with("form", form == RForm::Twisted ? "twisted" : "tilde");
  return timed_report(std::move(base), [&](Report& rep) {
    GradedTensor R = build_affine_R(space, form);
    GradedTensor P = super_permutation(space);
    // P R12 P = R21 as the defining bookkeeping of R21
    GradedTensor R21_def = compose(P, compose(R, P));
    GradedTensor R21_conj = conjugate_21(R);
    std::size_t r1 = (R21_def - R21_conj).nonzero_count();
    // R12(z/w) R21(w/z) = 1
    GradedTensor prod = compose(R, build_affine_R21_swapped(space, form));
    std::size_t r2 = (prod - GradedTensor::identity(space, 2)).nonzero_count();
    if (r1 == 0 && r2 == 0) {
      rep.status = Status::Pass;
    } else {
      rep.status = Status::Fail;
      rep.residual = std::to_string(r1 + r2) + " nonzero entries";
    }
  });
}

Report check_form_conventions(GradedSpace space) {
  Report base;
  base.check = "form-conventions";
  base.with("m", space.m).with("n", space.n);
  return timed_report(std::move(base), [&](Report& rep) {
    Report tw = check_graded_YBE(space, RForm::Twisted);
    Report ti = check_graded_YBE(space, RForm::Tilde);
    rep.notes.push_back(std::string("twisted form graded YBE: ") +
                        status_name(tw.status));
    rep.notes.push_back(std::string("tilde form graded YBE: ") +
                        status_name(ti.status));
    bool any_odd = space.n > 0 && space.m > 0;
    // on a purely even or purely odd space the forms differ at most by signs
    // that the checks treat uniformly; with mixed parity exactly one form
    // solves the graded YBE as stated
    if (tw.passed() && (!ti.passed() || !any_odd)) {
      rep.status = Status::Pass;
      rep.notes.push_back("graded YBE holds for the twisted form");
    } else {
      rep.status = Status::Fail;
      rep.residual = "unexpected convention outcome";
    }
  });
}

}  // namespace srll
