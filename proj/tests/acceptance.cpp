// Acceptance suite: one criterion per invocation (argument 1..8), or all of
// them with no argument. Prints one pass/fail line per criterion and fails
// the process if any check or its stated time bound is violated.

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <random>
#include <vector>

#include "srll/expr_io.hpp"
#include "srll/hopf.hpp"
#include "srll/relations.hpp"
#include "srll/rll.hpp"
#include "srll/rmatrix.hpp"
#include "srll/runner.hpp"

using namespace srll;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  int number;
  const char* title;
  long cap_ms;
  bool (*run)(std::string& detail);
};

bool all_pass(const std::vector<Report>& reports, std::string& detail) {
  for (const auto& r : reports)
    if (!r.passed()) {
      detail = r.id() + ": " + r.residual;
      return false;
    }
  detail = std::to_string(reports.size()) + " checks";
  return true;
}

// ---- 1: golden matrices ----------------------------------------------------
bool crit_golden(std::string& detail) {
  std::vector<Report> reports = golden_checks(SRLL_FIXTURES_DIR);
  reports.resize(4);  // the four matrix displays
  return all_pass(reports, detail);
}

// ---- 2: YBE, unitarity, symmetry for every split m+n <= 4 ------------------
bool crit_rmatrix_sweep(std::string& detail) {
  std::vector<Report> reports;
  for (int N = 2; N <= 4; ++N)
    for (int m = 0; m <= N; ++m) {
      GradedSpace sp{m, N - m};
      reports.push_back(check_graded_YBE(sp));
      reports.push_back(check_unitarity(sp));
      reports.push_back(check_symmetry(sp));
    }
  return all_pass(reports, detail);
}

// ---- 3: Gauss inverse identities -------------------------------------------
bool crit_gauss(std::string& detail) {
  std::vector<Report> reports;
  for (int level : {+1, -1}) {
    reports.push_back(verify_gauss_inverse(2, level, {1, 1}));
    reports.push_back(verify_gauss_inverse(3, level, {2, 1}));
  }
  return all_pass(reports, detail);
}

// ---- 4: RLL extraction and the scripted derivation -------------------------
bool crit_rll(std::string& detail) {
  std::string note;
  EntryIndices idx = correct_prerel_label({3, 1, 2, 1}, &note);
  EntryEquation eq = extract_entry(RllEq::Rel1, idx, {2, 1}, +1);
  std::ifstream f(std::string(SRLL_FIXTURES_DIR) + "/prerel1_m2n1.txt");
  std::string want((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  if (want.empty() || eq.text() != want) {
    detail = "extraction does not reproduce the transcribed display";
    return false;
  }
  std::vector<Report> reports;
  for (int m = 0; m <= 3; ++m)
    for (int sign : {+1, -1}) reports.push_back(derive_x1x2(m, sign));
  bool ok = all_pass(reports, detail);
  if (ok) detail = "display reproduced (" + note + "); 8 derivations match the catalog";
  return ok;
}

// ---- 5: Serre suite ---------------------------------------------------------
bool crit_serre(std::string& detail) {
  std::vector<Report> reports;
  for (int m = 3; m >= 0; --m)
    for (int rel = 1; rel <= 4; ++rel) reports.push_back(verify_serre_case_n3(m, rel));
  for (GradedSpace sp : {GradedSpace{2, 2}, GradedSpace{3, 1}, GradedSpace{1, 3}})
    for (const SerreInstance& inst : serre_instances(sp))
      reports.push_back(verify_serre(inst, sp));
  if (!all_pass(reports, detail)) return false;
  // mutated-coefficient controls must not vanish
  SerreMutation mut;
  mut.middle = parse_expr("q+p");
  for (int m = 3; m >= 0; --m)
    for (int rel = 1; rel <= 4; ++rel)
      if (verify_serre_case_n3(m, rel, &mut).passed()) {
        detail = "mutated control unexpectedly vanished";
        return false;
      }
  detail += " plus 16 mutated controls";
  return true;
}

// ---- 6: Hopf suite ----------------------------------------------------------
bool crit_hopf(std::string& detail) {
  GradedSpace sp11{1, 1}, sp21{2, 1};
  std::vector<Report> reports = {
      verify_coproduct_on_k_relation(rel_kiki_mixed(2, sp11), sp11),
      verify_coproduct_on_k_relation(rel_kiki_mixed(3, sp21), sp21),
      verify_coproduct_anticommutator(sp11),
      verify_coproduct_anticommutator(sp21),
      verify_serre_coproduct_coefficient(),
      verify_phi_psi_commutation(),
      verify_counit_antipode_axioms(sp11),
      verify_counit_antipode_axioms(sp21),
      verify_antipode_anticommutator(sp11),
      verify_coassociativity_L(1, {1, 0}),
      verify_coassociativity_L(2, {1, 1}),
      verify_coassociativity_L(3, {2, 1}),
      verify_coassociativity_L(4, {3, 1}),
  };
  return all_pass(reports, detail);
}

// ---- 7: property suites ------------------------------------------------------
bool crit_properties(std::string& detail) {
  // field axioms on >= 1000 random samples, eq against numeric evaluation
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> coeff(-3, 3), expo(-1, 2), nterms(0, 3), nv(0, 2),
      pick(0, 3), val(1, 23);
  const VarId pool[] = {vars::p, vars::q, vars::z, vars::w};
  auto rnd_poly = [&](bool nonzero) {
    Poly out;
    for (int k = 0, t = nterms(rng); k < t; ++k) {
      Monomial mo;
      for (int v = 0, n = nv(rng); v < n; ++v)
        mo = mo * Monomial::var(pool[pick(rng)], expo(rng));
      if (int c = coeff(rng)) out += Poly::term(mo, Rational(c));
    }
    if (nonzero && out.is_zero()) out = Poly(1L);
    return out;
  };
  for (int k = 0; k < 1000; ++k) {
    RatFunc a(rnd_poly(false), rnd_poly(true));
    RatFunc b(rnd_poly(false), rnd_poly(true));
    RatFunc c(rnd_poly(false), rnd_poly(true));
    if (!RatFunc::eq((a + b) + c, a + (b + c)) ||
        !RatFunc::eq(a * (b + c), a * b + a * c) ||
        (!a.is_zero() && !RatFunc::eq(a * a.inverse(), RatFunc(1L)))) {
      detail = "field axiom failure";
      return false;
    }
  }
  {
    // eq agrees with evaluation at 20 pole-free rational points
    RatFunc a = parse_expr("(z-w)/(z*q-w*p^-1)");
    RatFunc b = parse_expr("(w-z)/(w*p^-1-z*q)");
    int samples = 0;
    while (samples < 20) {
      std::map<VarId, Rational> pt{{vars::p, val(rng)}, {vars::q, val(rng)},
                                   {vars::z, val(rng)}, {vars::w, val(rng)}};
      auto va = a.evaluate(pt), vb = b.evaluate(pt);
      if (!va || !vb) continue;
      ++samples;
      if (*va != *vb) {
        detail = "eq/evaluation disagreement";
        return false;
      }
    }
  }
  // Koszul-sign consistency, both routes, N <= 4
  for (int N = 2; N <= 4; ++N)
    for (int m = 0; m <= N; ++m) {
      GradedSpace sp{m, N - m};
      GradedTensor P = super_permutation(sp);
      GradedTensor direct(sp, 3);
      for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b)
          for (int c = 1; c <= N; ++c) {
            int e = sp.parity(a) * sp.parity(b) + sp.parity(a) * sp.parity(c) +
                    sp.parity(b) * sp.parity(c);
            direct.set({c, b, a}, {a, b, c}, RatFunc(e % 2 ? -1L : 1L));
          }
      GradedTensor P12 = graded_embed(P, 1, 2, 3);
      GradedTensor P23 = graded_embed(P, 2, 3, 3);
      if (!GradedTensor::eq(graded_embed(P, 1, 3, 3), direct) ||
          !GradedTensor::eq(compose(P12, compose(P23, P12)), direct)) {
        detail = "Koszul-sign inconsistency";
        return false;
      }
    }
  // normal ordering: idempotence and budget behaviour
  {
    GradedSpace sp{2, 1};
    LetterOrder order = ranking_for({key_of(LX(1, +1, um(vars::z1), sp)),
                                     key_of(LX(2, +1, um(vars::w), sp))});
    RewriteSystem sys = as_rewrite_system(
        {rel_xx_same(1, +1, sp), rel_xx_adjacent(1, +1, sp)}, order);
    NCPoly w = NCPoly::term({LX(2, +1, um(vars::w), sp), LX(1, +1, um(vars::z2), sp),
                             LX(1, +1, um(vars::z1), sp)},
                            RatFunc(1L));
    NCPoly once = normal_order(w, sys, order);
    if (!NCPoly::eq(once, normal_order(once, sys, order))) {
      detail = "normal_order not idempotent";
      return false;
    }
    NormalOrderOptions tiny;
    tiny.budget = 1;
    bool threw = false;
    try {
      normal_order(w, sys, order, tiny);
    } catch (const BudgetExceeded&) {
      threw = true;
    }
    if (!threw) {
      detail = "budget not enforced";
      return false;
    }
  }
  // local confluence of each orientable system at word length 3
  for (GradedSpace sp : {GradedSpace{2, 1}, GradedSpace{1, 2}})
    for (int lvl : {+1, -1}) {
      LetterOrder order = ranking_for({key_of(LX(1, lvl, um(vars::z1), sp)),
                                       key_of(LX(2, lvl, um(vars::w), sp))});
      RewriteSystem sys = as_rewrite_system(
          {rel_xx_same(1, lvl, sp), rel_xx_adjacent(1, lvl, sp)}, order);
      if (!check_local_confluence(sys, order, 3).passed()) {
        detail = "confluence failure";
        return false;
      }
    }
  detail = "field axioms (1000 samples), eq/eval, Koszul, rewriting, confluence";
  return true;
}

// ---- 8: one-parameter degeneration ------------------------------------------
bool crit_degeneration(std::string& detail) {
  Report r = check_one_param_degeneration();
  detail = r.notes.empty() ? "" : r.notes.front();
  return r.passed();
}

const Criterion criteria[] = {
    {1, "golden matrices reproduce the published displays", 1000, crit_golden},
    {2, "graded YBE, unitarity, symmetry for all m+n <= 4", 300000, crit_rmatrix_sweep},
    {3, "Gauss inverse identity at N=2 and N=3", 1000, crit_gauss},
    {4, "RLL extraction display and the scripted derivation", 5000, crit_rll},
    {5, "Serre coefficient suite with mutated controls", 30000, crit_serre},
    {6, "Hopf-structure suite", 10000, crit_hopf},
    {7, "property suites", 60000, crit_properties},
    {8, "one-parameter degeneration of the exchange factor", 1000, crit_degeneration},
};

bool run_criterion(const Criterion& c) {
  auto t0 = Clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = c.run(detail);
  } catch (const std::exception& e) {
    detail = e.what();
  }
  long ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  bool in_time = ms <= c.cap_ms;
  std::cout << (ok && in_time ? "PASS" : "FAIL") << " criterion " << c.number << ": "
            << c.title << " (" << ms << " ms, cap " << c.cap_ms << ")";
  if (!detail.empty()) std::cout << " -- " << detail;
  std::cout << std::endl;
  return ok && in_time;
}

}  // namespace

int main(int argc, char** argv) {
  bool ok = true;
  if (argc > 1) {
    int want = std::atoi(argv[1]);
    bool found = false;
    for (const auto& c : criteria)
      if (c.number == want) {
        ok = run_criterion(c);
        found = true;
      }
    if (!found) {
      std::cerr << "usage: srll_acceptance [1..8]\n";
      return 2;
    }
  } else {
    for (const auto& c : criteria) ok = run_criterion(c) && ok;
  }
  return ok ? 0 : 1;
}
