// Command-line driver for the exact verification suite.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "srll/expr_io.hpp"
#include "srll/hopf.hpp"
#include "srll/relations.hpp"
#include "srll/rll.hpp"
#include "srll/rmatrix.hpp"
#include "srll/runner.hpp"

using namespace srll;

namespace {

struct Emitter {
  std::string json_path;
  std::vector<Report> reports;
  bool all_pass = true;

  void operator()(const Report& r) {
    reports.push_back(r);
    if (!r.passed()) all_pass = false;
    std::cout << status_name(r.status) << "  " << r.id();
    if (!r.residual.empty()) std::cout << "  [" << r.residual << "]";
    std::cout << "  (" << r.elapsed_ms << " ms)\n";
    for (const auto& n : r.notes) std::cout << "    note: " << n << "\n";
  }

  int finish() {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!json_path.empty()) {
      file.open(json_path);
      out = &file;
    }
    for (const auto& r : reports) (*out) << r.to_json() << "\n";
    return all_pass ? 0 : 1;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for the two-parameter graded R-matrix, its RLL "
               "relation catalog, and the Hopf-structure computations"};
  app.require_subcommand(1);

  int m = 1, n = 1, max_dim = 4, parallel = 1, rel = 1, i1 = 3, k1 = 1, i2 = 2, k2 = 1;
  int serre_i = 1;
  long budget = 1000000;
  std::string json_path, fixtures = "fixtures", case_name = "m2", level = "+";
  std::string hopf_check = "k-relation", form = "twisted", eqname = "rel1";
  bool paper_label = false;
  int coassoc_N = 2;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--json", json_path, "write the JSON report stream to a file");
    cmd->add_option("--budget", budget, "rewrite budget per normal ordering");
    cmd->add_option("--parallel", parallel, "worker threads for `all`");
  };

  auto* ybe = app.add_subcommand("ybe", "graded Yang-Baxter identity");
  ybe->add_option("--m", m)->required();
  ybe->add_option("--n", n)->required();
  ybe->add_option("--form", form, "twisted|tilde");
  add_common(ybe);

  auto* unit = app.add_subcommand("unitarity", "R12(z/w) R21(w/z) = 1");
  unit->add_option("--m", m)->required();
  unit->add_option("--n", n)->required();
  add_common(unit);

  auto* symm = app.add_subcommand("symmetry", "P R12 P = R21 and the inverse ratio product");
  symm->add_option("--m", m)->required();
  symm->add_option("--n", n)->required();
  add_common(symm);

  auto* golden = app.add_subcommand("golden", "compare constructors against the shipped fixtures");
  golden->add_option("--fixtures", fixtures, "fixture directory");
  add_common(golden);

  auto* gauss = app.add_subcommand("gauss", "L(z) L(z)^-1 = 1 with k-cancellation only");
  gauss->add_option("--N", coassoc_N, "matrix size (2 or 3)");
  gauss->add_option("--level", level, "+ or -");
  add_common(gauss);

  auto* rllx = app.add_subcommand("rll-extract", "print one extracted component equation");
  rllx->add_option("--m", m)->required();
  rllx->add_option("--n", n)->required();
  rllx->add_option("--i1", i1);
  rllx->add_option("--k1", k1);
  rllx->add_option("--i2", i2);
  rllx->add_option("--k2", k2);
  rllx->add_option("--eq", eqname, "rel1|rel2");
  rllx->add_option("--level", level, "+ or - (level of L2(z))");
  rllx->add_flag("--paper-label", paper_label,
                 "apply the documented index correction for the worked display");
  add_common(rllx);

  auto* derive = app.add_subcommand("derive-x1x2", "scripted N=3 derivation vs the catalog");
  derive->add_option("--m", m)->required();
  add_common(derive);

  auto* serre = app.add_subcommand("serre", "Serre coefficient checks");
  serre->add_option("--case", case_name, "m3|m2|m1|m0 (N=3 catalog)");
  serre->add_option("--rel", rel, "1..4 within the case");
  add_common(serre);

  auto* serre_gen = app.add_subcommand("serre-general", "general-N Serre instances");
  serre_gen->add_option("--m", m)->required();
  serre_gen->add_option("--n", n)->required();
  serre_gen->add_option("--rel", rel, "1..8");
  serre_gen->add_option("--i", serre_i, "current index for rel 1-4");
  serre_gen->add_option("--variant", level, "+ or - for rel 5-8");
  add_common(serre_gen);

  auto* hopf = app.add_subcommand("hopf", "Hopf-structure checks");
  hopf->add_option("--check", hopf_check,
                   "k-relation|anticommutator|d-coefficient|phi-psi|axioms|coassoc");
  hopf->add_option("--m", m);
  hopf->add_option("--n", n);
  hopf->add_option("--N", coassoc_N, "size for coassoc");
  add_common(hopf);

  auto* confl = app.add_subcommand("confluence", "local confluence of the exchange systems");
  confl->add_option("--m", m)->required();
  confl->add_option("--n", n)->required();
  confl->add_option("--i", serre_i, "adjacent pair index");
  confl->add_option("--level", level, "+ or -");
  add_common(confl);

  auto* list = app.add_subcommand("list-relations", "print the relation catalog");
  list->add_option("--m", m)->required();
  list->add_option("--n", n)->required();

  auto* all = app.add_subcommand("all", "run the whole suite");
  all->add_option("--max-dim", max_dim, "largest m+n for the R-matrix sweeps");
  all->add_option("--fixtures", fixtures, "fixture directory");
  add_common(all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Emitter emit;
  emit.json_path = json_path;
  GradedSpace sp{m, n};
  int lvl = level == "-" ? -1 : +1;

  try {
    if (ybe->parsed()) {
      emit(check_graded_YBE(sp, form == "tilde" ? RForm::Tilde : RForm::Twisted));
    } else if (unit->parsed()) {
      emit(check_unitarity(sp));
    } else if (symm->parsed()) {
      emit(check_symmetry(sp));
    } else if (golden->parsed()) {
      for (const auto& r : golden_checks(fixtures)) emit(r);
    } else if (gauss->parsed()) {
      GradedSpace gsp = coassoc_N == 2 ? GradedSpace{1, 1} : GradedSpace{2, 1};
      emit(verify_gauss_inverse(coassoc_N, lvl, gsp));
    } else if (rllx->parsed()) {
      EntryIndices idx{i1, k1, i2, k2};
      std::string note;
      if (paper_label) idx = correct_prerel_label(idx, &note);
      EntryEquation eq = extract_entry(eqname == "rel2" ? RllEq::Rel2 : RllEq::Rel1,
                                       idx, sp, lvl);
      if (!note.empty()) std::cout << "note: " << note << "\n";
      std::cout << eq.text();
      return 0;
    } else if (derive->parsed()) {
      emit(derive_x1x2(m, +1));
      emit(derive_x1x2(m, -1));
    } else if (serre->parsed()) {
      int mc = case_name.size() == 2 ? case_name[1] - '0' : -1;
      if (mc < 0 || mc > 3) throw NotApplicable("case must be m0..m3");
      emit(verify_serre_case_n3(mc, rel));
    } else if (serre_gen->parsed()) {
      SerreInstance inst{static_cast<SerreRel>(rel), serre_i, lvl};
      emit(verify_serre(inst, sp));
    } else if (hopf->parsed()) {
      if (hopf_check == "k-relation") {
        emit(verify_coproduct_on_k_relation(
            sp.m < sp.N() ? rel_kiki_mixed(sp.N(), sp) : rel_kk_commute(1, 1, 1, -1, sp),
            sp));
      } else if (hopf_check == "anticommutator") {
        emit(verify_coproduct_anticommutator(sp));
      } else if (hopf_check == "d-coefficient") {
        emit(verify_serre_coproduct_coefficient());
      } else if (hopf_check == "phi-psi") {
        emit(verify_phi_psi_commutation());
      } else if (hopf_check == "axioms") {
        emit(verify_counit_antipode_axioms(sp));
      } else if (hopf_check == "coassoc") {
        GradedSpace csp{coassoc_N > 1 ? coassoc_N - 1 : 1, coassoc_N > 1 ? 1 : 0};
        emit(verify_coassociativity_L(coassoc_N, csp));
      } else {
        std::cerr << "unknown hopf check\n";
        return 2;
      }
    } else if (confl->parsed()) {
      std::vector<RelationInstance> rels = {rel_xx_same(serre_i, lvl, sp),
                                            rel_xx_adjacent(serre_i, lvl, sp)};
      LetterOrder order = ranking_for({key_of(LX(serre_i, lvl, um(vars::z1), sp)),
                                       key_of(LX(serre_i + 1, lvl, um(vars::w), sp))});
      RewriteSystem sys = as_rewrite_system(rels, order);
      emit(check_local_confluence(sys, order, 3));
    } else if (list->parsed()) {
      for (const auto& r : catalog_all(sp))
        std::cout << r.id << ": " << r.display() << "\n";
      return 0;
    } else if (all->parsed()) {
      RunOptions opts;
      opts.max_dim = max_dim;
      opts.parallel = parallel;
      opts.budget = budget;
      opts.fixtures_dir = fixtures;
      auto reports = run_checks(all_checks(opts), parallel);
      for (const auto& r : reports) emit(r);
      long pass = 0;
      for (const auto& r : reports)
        if (r.passed()) ++pass;
      std::cout << pass << "/" << reports.size() << " checks passed\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return emit.finish();
}
