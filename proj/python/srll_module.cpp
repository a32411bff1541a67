// Python bindings for the main verification operations.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "srll/expr_io.hpp"
#include "srll/hopf.hpp"
#include "srll/relations.hpp"
#include "srll/rll.hpp"
#include "srll/rmatrix.hpp"
#include "srll/runner.hpp"

namespace py = pybind11;
using namespace srll;

namespace {

py::dict report_to_dict(const Report& r) {
  py::dict d;
  d["check"] = r.check;
  py::dict params;
  for (const auto& [k, v] : r.params) params[py::str(k)] = v;
  d["params"] = params;
  d["status"] = status_name(r.status);
  d["residual"] = r.residual;
  d["elapsed_ms"] = r.elapsed_ms;
  d["notes"] = r.notes;
  return d;
}

Report dispatch(const std::string& name, int m, int n, int level, int i, int rel) {
  GradedSpace sp{m, n};
  if (name == "ybe") return check_graded_YBE(sp);
  if (name == "unitarity") return check_unitarity(sp);
  if (name == "symmetry") return check_symmetry(sp);
  if (name == "gauss") return verify_gauss_inverse(sp.N(), level, sp);
  if (name == "derive-x1x2") return derive_x1x2(m, level);
  if (name == "serre") return verify_serre_case_n3(m, rel);
  if (name == "serre-general")
    return verify_serre({static_cast<SerreRel>(rel), i, level}, sp);
  if (name == "hopf-k-relation")
    return verify_coproduct_on_k_relation(rel_kiki_mixed(sp.N(), sp), sp);
  if (name == "hopf-anticommutator") return verify_coproduct_anticommutator(sp);
  if (name == "hopf-d-coefficient") return verify_serre_coproduct_coefficient();
  if (name == "hopf-phi-psi") return verify_phi_psi_commutation();
  if (name == "hopf-axioms") return verify_counit_antipode_axioms(sp);
  if (name == "hopf-coassoc") return verify_coassociativity_L(sp.N(), sp);
  if (name == "one-param-degeneration") return check_one_param_degeneration();
  throw std::invalid_argument("unknown check: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() =
      "Exact symbolic verification of the two-parameter graded R-matrices, "
      "their RLL relation catalog, and the Hopf-structure computations.";

  mod.def(
      "parse_expr",
      [](const std::string& text) { return parse_expr(text).str(); },
      py::arg("text"),
      "Parse an expression in the fixture grammar and return its canonical form.");

  mod.def(
      "expr_eq",
      [](const std::string& a, const std::string& b) {
        return RatFunc::eq(parse_expr(a), parse_expr(b));
      },
      py::arg("a"), py::arg("b"),
      "Exact equality of two expressions (cross-multiplication test).");

  mod.def(
      "affine_r_entries",
      [](int m, int n, bool twisted) {
        GradedTensor R = build_affine_R({m, n}, twisted ? RForm::Twisted : RForm::Tilde);
        py::dict out;
        int N = m + n;
        for (const auto& [r, cols] : R.rows()) {
          auto ri = R.decode(r);
          for (const auto& [c, v] : cols) {
            auto ci = R.decode(c);
            py::tuple key = py::make_tuple((ri[0] - 1) * N + ri[1], (ci[0] - 1) * N + ci[1]);
            out[key] = v.str();
          }
        }
        return out;
      },
      py::arg("m"), py::arg("n"), py::arg("twisted") = true,
      "Sparse entries of the spectral R-matrix, keyed by 1-based flat indices.");

  mod.def(
      "extract_entry",
      [](int i1, int k1, int i2, int k2, int m, int n, int level, bool paper_label) {
        EntryIndices idx{i1, k1, i2, k2};
        std::string note;
        if (paper_label) idx = correct_prerel_label(idx, &note);
        EntryEquation eq = extract_entry(RllEq::Rel1, idx, {m, n}, level);
        return py::make_tuple(eq.text(), note);
      },
      py::arg("i1"), py::arg("k1"), py::arg("i2"), py::arg("k2"), py::arg("m"),
      py::arg("n"), py::arg("level") = 1, py::arg("paper_label") = false,
      "One extracted component equation in canonical text form.");

  mod.def(
      "verify",
      [](const std::string& name, int m, int n, int level, int i, int rel) {
        return report_to_dict(dispatch(name, m, n, level, i, rel));
      },
      py::arg("name"), py::arg("m") = 1, py::arg("n") = 1, py::arg("level") = 1,
      py::arg("i") = 1, py::arg("rel") = 1,
      "Run one named verification and return its report as a dict.");

  mod.def(
      "run_all",
      [](int max_dim, const std::string& fixtures_dir) {
        RunOptions opts;
        opts.max_dim = max_dim;
        opts.fixtures_dir = fixtures_dir;
        py::list out;
        for (const auto& r : run_checks(all_checks(opts), 1))
          out.append(report_to_dict(r));
        return out;
      },
      py::arg("max_dim") = 3, py::arg("fixtures_dir") = "fixtures",
      "Run the whole suite up to the given dimension.");
}
