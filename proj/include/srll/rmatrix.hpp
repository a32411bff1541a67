#pragma once

#include "srll/report.hpp"
#include "srll/superlinalg.hpp"

namespace srll {

enum class RForm {
  Tilde,    // plain-sign matrix from the Baxterized basic R
  Twisted,  // graded form matching the published 4x4 and 9x9 matrices
};

/// constant basic R on V (x) V, entries in p, q only
GradedTensor build_basic_R(GradedSpace space);

/// Spectral R on V (x) V built in homogeneous ratio form: every entry depends
/// on the two arguments only through their ratio. `arg_z` and `arg_w` are
/// unit monomials substituted for the canonical variables z and w.
GradedTensor build_affine_R(GradedSpace space, RForm form,
                            const UnitMonomial& arg_z = {1, Monomial::var(vars::z)},
                            const UnitMonomial& arg_w = {1, Monomial::var(vars::w)});

/// R21 = P R12 P with the argument ratio inverted (z and w exchanged)
GradedTensor build_affine_R21_swapped(GradedSpace space, RForm form);

/// R12(z) R13(zw) R23(w) - R23(w) R13(zw) R12(z) on V^(x)3 with graded leg
/// embeddings; pass iff every entry is exactly zero.
Report check_graded_YBE(GradedSpace space, RForm form = RForm::Twisted);

/// R12(z/w) R21(w/z) = 1 (the unitary condition, z^-1 realized by z <-> w)
Report check_unitarity(GradedSpace space, RForm form = RForm::Twisted);

/// P R12 P = R21 reproduced entrywise, plus R12(z/w) R21(w/z) = 1
Report check_symmetry(GradedSpace space, RForm form = RForm::Twisted);

/// records which of the two sign conventions satisfies the graded YBE as
/// stated (exactly one should)
Report check_form_conventions(GradedSpace space);

}  // namespace srll
