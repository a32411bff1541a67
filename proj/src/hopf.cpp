#include "srll/hopf.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "srll/errors.hpp"

namespace srll {

namespace {

RatFunc rf(VarId v, int e = 1) { return RatFunc::variable(v, e); }

UnitMonomial mul_marker(const UnitMonomial& p, VarId gv, int e) {
  return {p.coeff, p.mono * Monomial::var(gv, e)};
}

Substitution invert_marker(VarId gv) {
  Substitution s;
  s[gv] = {Rational(1), Monomial::var(gv, -1)};
  return s;
}

}  // namespace

NCPoly coproduct(const Letter& l, GradedSpace sp) {
  if (l.leg != 0) throw ShapeError("coproduct of a non-plain letter");
  switch (l.sym) {
    case Sym::K: {
      Letter a = l, b = l;
      a.leg = 1;
      a.param = mul_marker(l.param, vars::g2, l.level);
      b.leg = 2;
      b.param = mul_marker(l.param, vars::g1, -l.level);
      return NCPoly::term({a, b}, RatFunc(1L));
    }
    case Sym::Psi: {
      // minus-level composite: shifts like a k^- pair
      Letter a = l, b = l;
      a.leg = 1;
      a.param = mul_marker(l.param, vars::g2, -1);
      b.leg = 2;
      b.param = mul_marker(l.param, vars::g1, +1);
      return NCPoly::term({a, b}, RatFunc(1L));
    }
    case Sym::Phi: {
      Letter a = l, b = l;
      a.leg = 1;
      a.param = mul_marker(l.param, vars::g2, +1);
      b.leg = 2;
      b.param = mul_marker(l.param, vars::g1, -1);
      return NCPoly::term({a, b}, RatFunc(1L));
    }
    case Sym::X: {
      if (l.inv) throw ShapeError("currents are not invertible letters");
      if (l.level > 0) {
        // X+(z) (x) 1 + psi(z g1) (x) X+(z g1^2)
        Letter x1 = l.with_leg(1);
        NCPoly first = NCPoly::term({x1}, RatFunc(1L));
        Letter psi = Lpsi(l.i, mul_marker(l.param, vars::g1, 1), false, 1);
        Letter x2 = l.with_leg(2);
        x2.param = mul_marker(l.param, vars::g1, 2);
        NCPoly second = NCPoly::term({psi, x2}, RatFunc(1L));
        return first + second;
      }
      // 1 (x) X-(z) + X-(z g2^2) (x) phi(z g2)
      Letter x2 = l.with_leg(2);
      NCPoly first = NCPoly::term({x2}, RatFunc(1L));
      Letter x1 = l.with_leg(1);
      x1.param = mul_marker(l.param, vars::g2, 2);
      Letter phi = Lphi(l.i, mul_marker(l.param, vars::g2, 1), false, 2);
      NCPoly second = NCPoly::term({x1, phi}, RatFunc(1L));
      return first + second;
    }
    default:
      throw ShapeError("coproduct not defined for this letter kind");
  }
}

NCPoly apply_counit_and_merge(const NCPoly& x, int leg) {
  int keep = leg == 1 ? 2 : 1;
  Substitution merge;
  merge[leg == 1 ? vars::g1 : vars::g2] = {Rational(1), Monomial()};
  merge[keep == 1 ? vars::g1 : vars::g2] = um(vars::g);
  NCPoly out;
  for (const auto& [w, c] : x.terms()) {
    bool killed = false;
    Word nw;
    for (const auto& l : w) {
      if (l.leg == leg) {
        if (l.sym == Sym::X) {
          killed = true;
          break;
        }
        continue;  // counit of the invertible family is 1
      }
      Letter kept = l;
      kept.leg = 0;
      nw.push_back(kept);
    }
    if (killed) continue;
    out += NCPoly::term(nw, c).substitute_params(merge);
  }
  return out;
}

namespace {

// antipode image of one letter in terms of its own central marker gv;
// the enclosing pass has already inverted gv in the letter's argument
NCPoly antipode_letter(const Letter& l, VarId gv, GradedSpace sp) {
  switch (l.sym) {
    case Sym::K:
    case Sym::Psi:
    case Sym::Phi: {
      Letter inv = l;
      inv.inv = !l.inv;
      return NCPoly::term({inv}, RatFunc(1L));
    }
    case Sym::X: {
      if (l.level > 0) {
        // S(X+(u)) = -psi(u g^-1)^-1 X+(u g^-2)
        Letter psi = Lpsi(l.i, mul_marker(l.param, gv, -1), true, l.leg);
        Letter x = l;
        x.param = mul_marker(l.param, gv, -2);
        return NCPoly::term({psi, x}, RatFunc(-1L));
      }
      // S(X-(u)) = -X-(u g^-2) phi(u g^-1)^-1
      Letter x = l;
      x.param = mul_marker(l.param, gv, -2);
      Letter phi = Lphi(l.i, mul_marker(l.param, gv, -1), true, l.leg);
      return NCPoly::term({x, phi}, RatFunc(-1L));
    }
    case Sym::Delta: {
      return NCPoly::term({l}, RatFunc(1L));  // argument already inverted
    }
    default:
      throw ShapeError("antipode not defined for this letter kind");
  }
}

// reverse-and-map one leg's subword with the super sign
NCPoly antipode_word(const Word& w, VarId gv, GradedSpace sp) {
  int sign = 1;
  for (size_t a = 0; a < w.size(); ++a)
    for (size_t b = a + 1; b < w.size(); ++b)
      if (w[a].parity && w[b].parity) sign = -sign;
  NCPoly out = NCPoly::term({}, RatFunc(static_cast<long>(sign)));
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out = out * antipode_letter(*it, gv, sp);
  return out;
}

}  // namespace

NCPoly apply_antipode_and_merge(const NCPoly& x, int leg) {
  VarId gv = leg == 1 ? vars::g1 : vars::g2;
  Substitution invert = invert_marker(gv);
  Substitution merge;
  merge[vars::g1] = um(vars::g);
  merge[vars::g2] = um(vars::g);
  NCPoly out;
  for (const auto& [w0, c0] : x.terms()) {
    // invert the acted leg's marker everywhere first
    NCPoly term0 = NCPoly::term(w0, c0).substitute_params(invert);
    for (const auto& [w, c] : term0.terms()) {
      Word other, acted;
      for (const auto& l : w) (l.leg == leg ? acted : other).push_back(l);
      NCPoly mapped = antipode_word(acted, gv, GradedSpace{});
      // merge: concatenate in leg order with legs erased
      for (auto& [mw, mc] : mapped.terms()) {
        Word merged;
        auto push_plain = [&](const Word& src) {
          for (const auto& l : src) {
            Letter p = l;
            p.leg = 0;
            merged.push_back(p);
          }
        };
        if (leg == 2) {
          push_plain(other);
          push_plain(mw);
        } else {
          push_plain(mw);
          push_plain(other);
        }
        out += NCPoly::term(merged, c * mc).substitute_params(merge);
      }
    }
  }
  return out;
}

NCPoly antipode(const NCPoly& x) {
  Substitution invert = invert_marker(vars::g);
  NCPoly out;
  for (const auto& [w0, c0] : x.terms()) {
    NCPoly term0 = NCPoly::term(w0, c0).substitute_params(invert);
    for (const auto& [w, c] : term0.terms()) {
      NCPoly mapped = antipode_word(w, vars::g, GradedSpace{});
      out += mapped.scaled(c);
    }
  }
  return out;
}

RatFunc counit(const NCPoly& x) {
  Substitution kill;
  kill[vars::g] = {Rational(1), Monomial()};
  RatFunc total;
  for (const auto& [w, c] : x.terms()) {
    bool killed = false;
    for (const auto& l : w)
      if (l.sym == Sym::X) killed = true;
    if (killed) continue;
    total += c.substitute(kill);
  }
  return total;
}

RatFunc psi_x_scalar(int i, int j, int eps, GradedSpace sp) {
  return kx_gamma(i + 1, -1, j, eps, sp) / kx_gamma(i, -1, j, eps, sp);
}

RatFunc phi_x_scalar(int i, int j, int eps, GradedSpace sp) {
  return kx_gamma(i + 1, +1, j, eps, sp) / kx_gamma(i, +1, j, eps, sp);
}

RatFunc phi_psi_scalar(int i, GradedSpace sp) {
  // phi_i(a) psi_i(b): move k_{i+1}^+(a), k_i^+(a)^-1 through k_{i+1}^-(b), k_i^-(b)^-1
  // slot convention of the k-k catalog entries: _s1 = the (w)-argument of the
  // inverse letter, _s2 = the (z)-argument
  Substitution to_ab;  // rebind so that _s1 = a (phi argument), _s2 = b
  VarId sa = slot1(), sb = slot2();
  // s3: k_{i+1}^+(a) k_{i+1}^-(b) exchange from the kiki family
  RatFunc s3;
  if (i + 1 <= sp.m) {
    s3 = RatFunc(1L);
  } else {
    RelationInstance kk = rel_kiki_mixed(i + 1, sp);
    // cl k+(z=_s1) k-(w=_s2) = cr k- k+ with our slots z=_s1 -> a, w=_s2 -> b
    s3 = kk.cr / kk.cl;
  }
  // s2: k_i^+(a)^-1 past k_i^-(b)^-1
  RatFunc s2;
  if (i <= sp.m) {
    s2 = RatFunc(1L);
  } else {
    RelationInstance kk = rel_kiki_mixed(i, sp);
    // k+ k- = (cr/cl) k- k+, and inverting both letters keeps the same ratio
    s2 = kk.cr / kk.cl;
  }
  // s1: k_i^+(a)^-1 past k_{i+1}^-(b): from cl k_{i+1}^-(w)^-1 k_i^+(z) = cr k_i^+ k_{i+1}^-^-1
  RelationInstance r1 = rel_kikj_mixed(i + 1, i, +1, sp);
  // invert both letters: k_i^{+,-1}(z) k_{i+1}^-(w) = (cl/cr) k_{i+1}^-(w) k_i^{+,-1}(z)
  RatFunc s1 = r1.cl / r1.cr;  // slots: _s1 = w-argument = b, _s2 = z-argument = a
  Substitution swap_slots;
  swap_slots[sa] = um(sb);
  swap_slots[sb] = um(sa);
  s1 = s1.substitute(swap_slots);  // rebind to _s1 = a, _s2 = b
  // s4: k_{i+1}^+(a) past k_i^-(b)^-1: from cl k_{i+1}^{+,-1}(w) k_i^-(z) = cr k_i^- k_{i+1}^{+,-1}
  RelationInstance r4 = rel_kikj_mixed(i + 1, i, -1, sp);
  // invert both letters: k_{i+1}^+(w) k_i^{-,-1}(z) = (cr/cl) k_i^{-,-1}(z) k_{i+1}^+(w)
  RatFunc s4 = r4.cr / r4.cl;  // slots: _s1 = w-argument = a, _s2 = z-argument = b
  (void)to_ab;
  return s1 * s2 * s3 * s4;
}

// ---------------------------------------------------------------- reports ---

Report verify_coproduct_on_k_relation(const RelationInstance& rel, GradedSpace sp,
                                      bool mutate_shift) {
  Report base;
  base.check = "hopf-k-relation";
  base.with("relation", rel.id).with("m", sp.m).with("n", sp.n);
  if (mutate_shift) base.with("mutated", "yes");
  return timed_report(std::move(base), [&](Report& rep) {
    if (rel.wl.size() != 2 || rel.wl[0].sym != Sym::K || rel.wl[1].sym != Sym::K)
      throw NotApplicable("relation is not a two-letter k relation");
    // instantiate the relation at plain arguments z, w
    Substitution inst;
    inst[slot1()] = um(vars::z);
    inst[slot2()] = um(vars::w);
    Substitution combined;  // Delta of the coefficients: c = c1 + c2, g -> g1 g2
    combined[vars::g] = {Rational(1), Monomial::var(vars::g1) * Monomial::var(vars::g2)};

    auto delta_of = [&](const Letter& tpl, VarId arg) {
      Letter concrete = tpl;
      concrete.param = um(arg);
      NCPoly d = coproduct(concrete, sp);
      if (mutate_shift && arg == vars::z) {
        // corrupt the leg-1 shift g2^level -> g2^(2 level)
        Substitution bad;
        bad[vars::g2] = {Rational(1), Monomial::var(vars::g2, 2)};
        NCPoly out;
        for (const auto& [w, c] : d.terms()) {
          Word nw = w;
          for (auto& l : nw)
            if (l.leg == 1) {
              Poly pm = Poly::term(l.param.mono, l.param.coeff).substitute(bad);
              auto [m, coef] = pm.leading_term();
              l.param = {coef, m};
            }
          out += NCPoly::term(nw, c);
        }
        d = out;
      }
      return d;
    };

    NCPoly dl = delta_of(rel.wl[0], vars::z) * delta_of(rel.wl[1], vars::w);
    NCPoly dr = delta_of(rel.wr[0], vars::w) * delta_of(rel.wr[1], vars::z);
    RatFunc cl = rel.cl.substitute(inst).substitute(combined);
    RatFunc cr = rel.cr.substitute(inst).substitute(combined);
    NCPoly difference = dl.scaled(cl) - dr.scaled(cr);

    // normal-order each leg with the same relation
    LetterOrder order = ranking_for({key_of(rel.wr[0]), key_of(rel.wr[1])});
    RewriteSystem sys = as_rewrite_system({rel}, order);
    NCPoly reduced = normal_order(difference, sys, order);
    if (reduced.is_zero()) {
      rep.status = Status::Pass;
    } else {
      rep.status = Status::Fail;
      rep.residual = reduced.str();
    }
  });
}

Report verify_coproduct_anticommutator(GradedSpace sp) {
  Report base;
  base.check = "hopf-anticommutator";
  base.with("m", sp.m).with("n", sp.n);
  return timed_report(std::move(base), [&](Report& rep) {
    int m = sp.m;
    if (m < 1 || m > sp.N() - 1)
      throw NotApplicable("odd current requires 1 <= m <= N-1");
    Letter Xz = LX(m, +1, um(vars::z), sp);
    Letter Xw = LX(m, +1, um(vars::w), sp);
    NCPoly dz = coproduct(Xz, sp), dw = coproduct(Xw, sp);
    NCPoly expr = dz * dw + dw * dz;

    // rules: psi-past-X (identically trivial at the odd index), X
    // anticommutation, psi-psi commutation
    RewriteSystem sys;
    RewriteRule rpx;
    rpx.a = key_of(Lpsi(m, um(slot1())));
    rpx.b = key_of(LX(m, +1, um(slot2()), sp));
    rpx.kind = RuleKind::Exchange;
    rpx.scalar = psi_x_scalar(m, m, +1, sp);
    rpx.sa = slot1();
    rpx.sb = slot2();
    sys.add(rpx);
    RewriteRule rxx;
    rxx.a = key_of(LX(m, +1, um(slot1()), sp));
    rxx.b = rxx.a;
    rxx.kind = RuleKind::Anticommute;
    sys.add(rxx);
    RewriteRule rpp;
    rpp.a = key_of(Lpsi(m, um(slot1())));
    rpp.b = rpp.a;
    rpp.kind = RuleKind::Exchange;
    rpp.scalar = RatFunc(1L);
    rpp.sa = slot1();
    rpp.sb = slot2();
    rpp.only_when_param_desc = true;
    sys.add(rpp);

    LetterOrder order = ranking_for({key_of(LX(m, +1, um(vars::z), sp)),
                                     key_of(Lpsi(m, um(vars::z)))});
    NCPoly reduced = normal_order(expr, sys, order);
    if (reduced.is_zero()) {
      rep.status = Status::Pass;
    } else {
      rep.status = Status::Fail;
      rep.residual = reduced.str();
    }
  });
}

Report verify_serre_coproduct_coefficient(bool flip_last_sign, bool specialize_q_to_p) {
  Report base;
  base.check = "hopf-d-coefficient";
  if (flip_last_sign) base.with("mutated", "flip-last");
  if (specialize_q_to_p) base.with("specialized", "q=p");
  return timed_report(std::move(base), [&](Report& rep) {
    RatFunc p = rf(vars::p), q = rf(vars::q), pinv = rf(vars::p, -1),
            qinv = rf(vars::q, -1);
    RatFunc z1 = rf(vars::z1), z2 = rf(vars::z2), w = rf(vars::w);
    auto f = [&](const RatFunc& zi) {
      return ((zi - w) * q * pinv) / (zi * q - w * pinv);
    };
    RatFunc e = (z2 * qinv - z1 * p) / (z2 * p - z1 * qinv);
    // middle coefficient: the Serre coefficient q + p^-1 (two displays print
    // q - p^-1 at this spot; that variant does not vanish and is flagged as a
    // transcription slip)
    RatFunc mid = q + pinv;
    std::vector<RatFunc> summands = {
        pinv * q,          -mid * f(z2),        f(z1) * f(z2),
        pinv * q * e,      -mid * f(z1) * e,    f(z2) * f(z1) * e};
    if (flip_last_sign) summands.back() = -summands.back();
    RatFunc d;
    for (auto& s : summands) {
      RatFunc t = specialize_q_to_p ? s.substitute({{vars::q, um(vars::p)}}) : s;
      d += t;
    }
    if (flip_last_sign) {
      // control: must NOT vanish, also checked at a rational sample point
      std::map<VarId, Rational> pt{{vars::p, 2}, {vars::q, 3}, {vars::z1, 5},
                                   {vars::z2, 7}, {vars::w, 11}};
      auto value = d.evaluate(pt);
      if (!d.is_zero() && value && *value != 0) {
        rep.status = Status::Pass;
        rep.notes.push_back("mutated coefficient is nonzero, value " + rat_str(*value));
      } else {
        rep.status = Status::Fail;
        rep.residual = "mutated coefficient unexpectedly vanished";
      }
      return;
    }
    if (d.is_zero()) {
      rep.status = Status::Pass;
    } else {
      rep.status = Status::Fail;
      rep.residual = d.str();
    }
  });
}

Report verify_phi_psi_commutation(int drop_factor) {
  Report base;
  base.check = "hopf-phi-psi";
  if (drop_factor) base.with("dropped-factor", static_cast<long>(drop_factor));
  return timed_report(std::move(base), [&](Report& rep) {
    RatFunc p = rf(vars::p), q = rf(vars::q), qinv = rf(vars::q, -1);
    RatFunc z = rf(vars::z), w = rf(vars::w);
    RatFunc gm2 = rf(vars::g, -2);  // q^{-c}
    std::vector<RatFunc> F = {
        (w * gm2 * p - z * qinv) / (w * gm2 - z),
        (w - z * gm2) / (w * p - z * gm2 * qinv),
        (w * p - z * gm2 * qinv) / (z * gm2 * p - w * qinv),
        (z * p - w * gm2 * qinv) / (w * gm2 * p - qinv * z),
        (z * gm2 * p - w * qinv) / (z * gm2 - w),
        (z - w * gm2) / (z * p - w * gm2 * qinv),
    };
    RatFunc prod(1L);
    for (int k = 0; k < 6; ++k) {
      if (drop_factor == k + 1) continue;
      prod *= F[k];
    }
    if (drop_factor) {
      if (!RatFunc::eq(prod, RatFunc(1L))) {
        rep.status = Status::Pass;
        rep.notes.push_back("partial product != 1 as expected");
      } else {
        rep.status = Status::Fail;
        rep.residual = "partial product unexpectedly 1";
      }
      return;
    }
    bool ok = RatFunc::eq(prod, RatFunc(1L));
    // g -> 1 specialization of the full product stays 1
    bool ok_g1 = RatFunc::eq(prod.substitute({{vars::g, {Rational(1), Monomial()}}}),
                             RatFunc(1L));
    // cross-check against the catalog-derived composite scalar at the
    // arguments of the published computation: a = w g^-1, b = z g^-1
    GradedSpace sp{1, 1};
    RatFunc gamma = phi_psi_scalar(1, sp);
    Substitution at;
    at[slot1()] = um_shift(vars::w, vars::g, -1);
    at[slot2()] = um_shift(vars::z, vars::g, -1);
    bool ok_cat = RatFunc::eq(gamma.substitute(at), RatFunc(1L));
    if (ok && ok_g1 && ok_cat) {
      rep.status = Status::Pass;
      rep.notes.push_back("display product, g->1 specialization and catalog scalar agree");
    } else {
      rep.status = Status::Fail;
      rep.residual = ok ? (ok_g1 ? "catalog scalar mismatch" : "g->1 mismatch")
                        : prod.str();
    }
  });
}

namespace {

RewriteSystem cancel_rules_for(const NCPoly& x) {
  RewriteSystem sys;
  std::set<std::tuple<Sym, int, int, int, bool>> seen;
  for (const auto& [w, c] : x.terms())
    for (const auto& l : w) {
      if (l.sym != Sym::K && l.sym != Sym::Psi && l.sym != Sym::Phi) continue;
      auto key = std::make_tuple(l.sym, l.level, l.i, l.j, false);
      if (!seen.insert(key).second) continue;
      Letter plain = l;
      plain.inv = false;
      RewriteRule r1;
      r1.a = key_of(plain);
      r1.b = key_of(plain.inverse());
      r1.kind = RuleKind::Cancel;
      sys.add(r1);
      RewriteRule r2;
      r2.a = r1.b;
      r2.b = r1.a;
      r2.kind = RuleKind::Cancel;
      sys.add(r2);
    }
  return sys;
}

}  // namespace

Report verify_counit_antipode_axioms(GradedSpace sp) {
  Report base;
  base.check = "hopf-axioms";
  base.with("m", sp.m).with("n", sp.n);
  return timed_report(std::move(base), [&](Report& rep) {
    LetterOrder order;
    long failures = 0;
    std::string witness;
    auto run_letter = [&](const Letter& gen, const char* label) {
      NCPoly d = coproduct(gen, sp);
      NCPoly expect_id = NCPoly::letter(gen);
      bool is_x = gen.sym == Sym::X;
      NCPoly expect_s = is_x ? NCPoly() : NCPoly::one();
      struct CaseDef {
        const char* name;
        NCPoly value;
        const NCPoly* want;
      };
      NCPoly c1 = apply_counit_and_merge(d, 2);
      NCPoly c2 = apply_counit_and_merge(d, 1);
      NCPoly s1 = apply_antipode_and_merge(d, 2);
      NCPoly s2 = apply_antipode_and_merge(d, 1);
      RewriteSystem sys1 = cancel_rules_for(s1);
      RewriteSystem sys2 = cancel_rules_for(s2);
      s1 = normal_order(s1, sys1, order);
      s2 = normal_order(s2, sys2, order);
      std::vector<CaseDef> cases = {{"M(1 x eps)Delta", c1, &expect_id},
                                    {"M(eps x 1)Delta", c2, &expect_id},
                                    {"M(1 x S)Delta", s1, &expect_s},
                                    {"M(S x 1)Delta", s2, &expect_s}};
      for (auto& cs : cases) {
        if (!NCPoly::eq(cs.value, *cs.want)) {
          ++failures;
          if (witness.empty())
            witness = std::string(label) + " " + cs.name + " = " + cs.value.str();
        }
      }
    };

    for (int lvl : {+1, -1}) {
      for (int j = 1; j <= sp.N(); ++j)
        run_letter(Lk(j, lvl, um(vars::z)), "k");
      for (int i = 1; i <= sp.N() - 1; ++i)
        run_letter(LX(i, lvl, um(vars::z), sp), "X");
    }
    // central marker q^c: group-like, S(q^c) = q^{-c}
    Monomial gc = Monomial::var(vars::g);
    bool marker_ok = (gc * gc.inverse()).is_one();
    if (!marker_ok) ++failures;
    rep.notes.push_back("q^c axioms reduce to g g^-1 = 1 in the marker monoid");

    if (failures == 0) {
      rep.status = Status::Pass;
    } else {
      rep.status = Status::Fail;
      rep.residual = witness;
    }
  });
}

Report verify_antipode_anticommutator(GradedSpace sp) {
  Report base;
  base.check = "hopf-antipode-anticommutator";
  base.with("m", sp.m).with("n", sp.n);
  return timed_report(std::move(base), [&](Report& rep) {
    int m = sp.m;
    if (m < 1 || m > sp.N() - 1) throw NotApplicable("odd current required");
    Letter Xp = LX(m, +1, um(vars::z), sp);
    Letter Xm = LX(m, -1, um(vars::w), sp);
    NCPoly bracket = NCPoly::letter(Xp) * NCPoly::letter(Xm) +
                     NCPoly::letter(Xm) * NCPoly::letter(Xp);
    NCPoly lhs = antipode(bracket);

    // move the composite inverses outward: scalar-1 exchanges at the odd
    // index plus the phi-psi exchange template
    RewriteSystem sys;
    auto add_ex = [&](const Letter& a, const Letter& b, RatFunc scalar) {
      RewriteRule r;
      r.a = key_of(a);
      r.b = key_of(b);
      r.kind = RuleKind::Exchange;
      r.scalar = std::move(scalar);
      r.sa = slot1();
      r.sb = slot2();
      sys.add(r);
    };
    Letter psi_inv = Lpsi(m, um(slot1()), true);
    Letter phi_inv = Lphi(m, um(slot2()), true);
    for (int eps : {+1, -1}) {
      Letter X = LX(m, eps, um(slot2()), sp);
      // X(b) psi^-1(a) -> psi^-1(a) X(b): composite scalar is identically 1
      RewriteRule r1;
      r1.a = key_of(X);
      r1.b = key_of(psi_inv);
      r1.kind = RuleKind::Exchange;
      r1.scalar = psi_x_scalar(m, m, eps, sp);
      r1.sa = slot2();
      r1.sb = slot1();
      sys.add(r1);
      RewriteRule r2;
      r2.a = key_of(X);
      r2.b = key_of(Lphi(m, um(slot1()), true));
      r2.kind = RuleKind::Exchange;
      r2.scalar = phi_x_scalar(m, m, eps, sp);
      r2.sa = slot2();
      r2.sb = slot1();
      sys.add(r2);
    }
    // phi^-1(a) psi^-1(b) -> Gamma(a,b) psi^-1(b) phi^-1(a)
    add_ex(Lphi(m, um(slot1()), true), Lpsi(m, um(slot2()), true),
           phi_psi_scalar(m, sp));
    LetterOrder order = ranking_for({key_of(Lpsi(m, um(vars::z), true)),
                                     key_of(Lphi(m, um(vars::z), true)),
                                     key_of(LX(m, +1, um(vars::z), sp)),
                                     key_of(LX(m, -1, um(vars::z), sp))});
    NCPoly lhs_reduced = normal_order(lhs, sys, order);

    // paper route: -psi(z g^-1)^-1 phi(w g^-1)^-1 {X+(z g^-2), X-(w g^-2)}
    Letter psi_z = Lpsi(m, um_shift(vars::z, vars::g, -1), true);
    Letter phi_w = Lphi(m, um_shift(vars::w, vars::g, -1), true);
    Letter Xp_s = LX(m, +1, um_shift(vars::z, vars::g, -2), sp);
    Letter Xm_s = LX(m, -1, um_shift(vars::w, vars::g, -2), sp);
    NCPoly bracket_s = NCPoly::letter(Xp_s) * NCPoly::letter(Xm_s) +
                       NCPoly::letter(Xm_s) * NCPoly::letter(Xp_s);
    NCPoly route = -(NCPoly::term({psi_z, phi_w}, RatFunc(1L)) * bracket_s);
    NCPoly route_reduced = normal_order(route, sys, order);
    if (!NCPoly::eq(lhs_reduced, route_reduced)) {
      rep.status = Status::Fail;
      rep.residual = (lhs_reduced - route_reduced).str();
      return;
    }

    // substitute the opaque-delta bracket and cancel the composites
    RatFunc pref = rf(vars::p) - rf(vars::q, -1);
    UnitMonomial d1{Rational(1), Monomial::var(vars::w) * Monomial::var(vars::z, -1) *
                                     Monomial::var(vars::g, 2)};
    UnitMonomial d2{Rational(1), Monomial::var(vars::w) * Monomial::var(vars::z, -1) *
                                     Monomial::var(vars::g, -2)};
    NCPoly delta_side =
        NCPoly::term({Ldelta(d1), Lphi(m, um_shift(vars::w, vars::g, -1))}, pref) -
        NCPoly::term({Ldelta(d2), Lpsi(m, um_shift(vars::z, vars::g, -1))}, pref);
    NCPoly final_expr = -(NCPoly::term({psi_z, phi_w}, RatFunc(1L)) * delta_side);
    // delta letters commute with everything; bring them to the front
    RewriteSystem sys2 = cancel_rules_for(final_expr);
    {
      // phi^-1(a) psi(b) = Gamma(a,b)^-1 psi(b) phi^-1(a)
      RewriteRule r;
      r.a = key_of(Lphi(m, um(slot1()), true));
      r.b = key_of(Lpsi(m, um(slot2())));
      r.kind = RuleKind::Exchange;
      r.scalar = phi_psi_scalar(m, sp).inverse();
      r.sa = slot1();
      r.sb = slot2();
      sys2.add(r);
    }
    for (Sym s : {Sym::Psi, Sym::Phi}) {
      for (bool inv : {false, true}) {
        Letter a;
        a.sym = s;
        a.i = m;
        a.inv = inv;
        a.param = um(slot1());
        Letter dl = Ldelta(um(slot2()));
        RewriteRule r;
        r.a = key_of(a);
        r.b = key_of(dl);
        r.kind = RuleKind::Exchange;
        r.scalar = RatFunc(1L);
        r.sa = slot1();
        r.sb = slot2();
        sys2.add(r);
      }
    }
    NCPoly final_reduced = normal_order(final_expr, sys2, order);

    // the expected answer: (p - q^-1)(delta(w/z g^-2) phi^-1 - delta(w/z g^2) psi^-1),
    // which is also S applied to the right-hand side of the delta relation
    NCPoly expected =
        NCPoly::term({Ldelta(d2), Lphi(m, um_shift(vars::w, vars::g, -1), true)}, pref) -
        NCPoly::term({Ldelta(d1), Lpsi(m, um_shift(vars::z, vars::g, -1), true)}, pref);
    NCPoly target =
        NCPoly::term({Ldelta(d1), Lphi(m, um_shift(vars::w, vars::g, 1))}, pref) -
        NCPoly::term({Ldelta(d2), Lpsi(m, um_shift(vars::z, vars::g, 1))}, pref);
    NCPoly s_target = normal_order(antipode(target), sys2, order);
    if (NCPoly::eq(final_reduced, expected) && NCPoly::eq(s_target, expected)) {
      rep.status = Status::Pass;
      rep.notes.push_back("coefficient algebra matches with delta symbols opaque");
    } else {
      rep.status = Status::Fail;
      rep.residual = (final_reduced - expected).str();
    }
  });
}

Report verify_coassociativity_L(int N, GradedSpace sp, bool mutate_shift) {
  Report base;
  base.check = "hopf-coassoc";
  base.with("N", static_cast<long>(N)).with("m", sp.m).with("n", sp.n);
  if (mutate_shift) base.with("mutated", "yes");
  return timed_report(std::move(base), [&](Report& rep) {
    if (N != sp.N() || N > 4) throw NotApplicable("coassociativity: N = m+n <= 4");
    long failures = 0;
    std::string witness;
    for (int level : {+1, -1}) {
      int mu = level;
      for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
          // (Delta x id) Delta: split the first leg, old g1 -> g1 g2, old g2 -> g3
          NCPoly side1;
          for (int k = 1; k <= N; ++k)
            for (int l = 1; l <= N; ++l) {
              UnitMonomial a1{Rational(1), Monomial::var(vars::z) *
                                               Monomial::var(vars::g2, mu) *
                                               Monomial::var(vars::g3, mu)};
              UnitMonomial a2{Rational(1), Monomial::var(vars::z) *
                                               Monomial::var(vars::g1, -mu) *
                                               Monomial::var(vars::g3, mu)};
              UnitMonomial a3{Rational(1), Monomial::var(vars::z) *
                                               Monomial::var(vars::g1, -mu) *
                                               Monomial::var(vars::g2, -mu)};
              side1 += NCPoly::term({Lell(i, l, level, a1, sp, 1),
                                     Lell(l, k, level, a2, sp, 2),
                                     Lell(k, j, level, a3, sp, 3)},
                                    RatFunc(1L));
            }
          // (id x Delta) Delta: split the second leg, old g2 -> g2 g3
          NCPoly side2;
          for (int k = 1; k <= N; ++k)
            for (int l = 1; l <= N; ++l) {
              UnitMonomial b1{Rational(1), Monomial::var(vars::z) *
                                               Monomial::var(vars::g2, mu) *
                                               Monomial::var(vars::g3, mu)};
              UnitMonomial b2{Rational(1),
                              Monomial::var(vars::z) * Monomial::var(vars::g1, -mu) *
                                  Monomial::var(vars::g3, mutate_shift ? 0 : mu)};
              UnitMonomial b3{Rational(1), Monomial::var(vars::z) *
                                               Monomial::var(vars::g1, -mu) *
                                               Monomial::var(vars::g2, -mu)};
              side2 += NCPoly::term({Lell(i, k, level, b1, sp, 1),
                                     Lell(k, l, level, b2, sp, 2),
                                     Lell(l, j, level, b3, sp, 3)},
                                    RatFunc(1L));
            }
          if (!NCPoly::eq(side1, side2)) {
            ++failures;
            if (witness.empty())
              witness = "l_{" + std::to_string(i) + "," + std::to_string(j) +
                        "}^" + (level > 0 ? "+" : "-") + " sides differ";
          }
        }
    }
    if (mutate_shift) {
      if (failures > 0) {
        rep.status = Status::Pass;
        rep.notes.push_back("dropped shift detected as expected");
      } else {
        rep.status = Status::Fail;
        rep.residual = "mutation not detected";
      }
      return;
    }
    if (failures == 0) {
      rep.status = Status::Pass;
    } else {
      rep.status = Status::Fail;
      rep.residual = witness;
    }
  });
}

}  // namespace srll
