#pragma once

#include <string>

#include "srll/ncalg.hpp"
#include "srll/relations.hpp"
#include "srll/report.hpp"
#include "srll/rmatrix.hpp"

namespace srll {

enum class RllEq { Rel1, Rel2 };

/// free indices of one component equation: row pair (i1, i2), column pair
/// (k1, k2) of the theta-twisted matrix relation on legs 1 and 2
struct EntryIndices {
  int i1, k1, i2, k2;
};

struct EntryEquation {
  NCPoly lhs;  // L1^-1(w) R21 theta L2(z) theta side
  NCPoly rhs;  // theta L2(z) theta R21 L1^-1(w) side
  std::string text() const;
};

/// Component extraction from the inverse-form matrix relations. `level` is
/// the level of L2(z); Rel1 uses the same level on L1(w)^-1, Rel2 the
/// opposite one (with the matching central-charge shifts in the R arguments).
/// With identity_L the Gaussian matrices are replaced by the identity, which
/// collapses both sides to the same signed R entry (index-plumbing check).
EntryEquation extract_entry(RllEq eq, EntryIndices idx, GradedSpace sp, int level,
                            bool identity_L = false);

/// The worked N=3 derivation labels its displayed component "(i1=3, k1=1,
/// i2=2, k2=1)", but the equation it displays is the ((3,2),(2,1)) component;
/// the printed k1 is off by one. This helper maps the printed label to the
/// actual indices and reports the correction.
EntryIndices correct_prerel_label(EntryIndices printed, std::string* note = nullptr);

/// scripted N=3 derivation of the adjacent-current exchange relations; checks
/// the result against the catalog (X1X2 rel1-rel4 by m and sign) and returns
/// the pass/fail report. sign = +1 derives the X+ relation, -1 the X- one.
Report derive_x1x2(int m_case, int sign);

}  // namespace srll
