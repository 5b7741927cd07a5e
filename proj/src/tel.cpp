#include "ssc/tel.hpp"

#include "ssc/check.hpp"
#include "ssc/eval.hpp"

namespace ssc {

Ctx tel_append(const Ctx& ctx, const Tel& tel) {
  Ctx out = ctx;
  out.insert(out.end(), tel.entries.begin(), tel.entries.end());
  return out;
}

SubRef lift_over(const SubRef& gamma, const Tel& tel) {
  SubRef out = gamma;
  for (const TyRef& entry : tel.entries) out = sub_plus(out, entry);
  return out;
}

Tel tel_inst(const Tel& tel, const SubRef& gamma, const Ctx& dom) {
  Tel out;
  out.base = dom;
  Tel prefix{tel.base, {}};
  for (const TyRef& entry : tel.entries) {
    out.entries.push_back(ty_inst(entry, lift_over(gamma, prefix)));
    prefix.entries.push_back(entry);
  }
  return out;
}

SubStarRef star_lift_over(const SubStarRef& gamma, const Tel& tel) {
  SubStarRef out = gamma;
  for (size_t k = 0; k < tel.entries.size(); ++k) out = star_plus(out);
  return out;
}

namespace {

Tel star_tel_inst(const Tel& tel, const SubStarRef& gamma, const Ctx& dom) {
  Tel out;
  out.base = dom;
  Tel prefix{tel.base, {}};
  for (const TyRef& entry : tel.entries) {
    out.entries.push_back(star_inst_ty(entry, star_lift_over(gamma, prefix)));
    prefix.entries.push_back(entry);
  }
  return out;
}

Ctx snoc(const Ctx& ctx, const TyRef& a) {
  Ctx out = ctx;
  out.push_back(a);
  return out;
}

}  // namespace

bool check_lifted_eq(int n, const LiftedEqInstance& inst) {
  const Ctx& gma = inst.ctx;
  const TyRef& a = inst.entry;
  const TyRef& b = inst.subject_ty;
  switch (n) {
    case 1: {
      // B[p^{+W}][(g+)^{+W[p]}] = B[g^{+W}][p^{+W[g]}]
      Ctx gma_a = snoc(gma, a);
      Tel w_p = tel_inst(inst.omega, sub_p(), gma_a);
      SubRef gplus = sub_plus(inst.gamma, a);
      Ctx dom_a = snoc(inst.dom, ty_inst(a, inst.gamma));
      Tel w_pg = tel_inst(w_p, gplus, dom_a);
      Tel w_g = tel_inst(inst.omega, inst.gamma, inst.dom);
      SubRef l1 = lift_over(sub_p(), inst.omega);
      SubRef l2 = lift_over(gplus, w_p);
      SubRef r1 = lift_over(inst.gamma, inst.omega);
      SubRef r2 = lift_over(sub_p(), w_g);
      Ctx cc = tel_append(dom_a, w_pg);
      TyRef lhs_ty = ty_inst(ty_inst(b, l1), l2);
      TyRef rhs_ty = ty_inst(ty_inst(b, r1), r2);
      if (!conv_ty_u(cc, lhs_ty, rhs_ty)) return false;
      if (!inst.subject) return true;
      return conv_tm_u(cc, tm_inst(tm_inst(inst.subject, l1), l2),
                       tm_inst(tm_inst(inst.subject, r1), r2), lhs_ty);
    }
    case 2: {
      // B[p^{+W}][<a>^{+W[p]}] = B
      Ctx gma_a = snoc(gma, a);
      Tel w_p = tel_inst(inst.omega, sub_p(), gma_a);
      SubRef l1 = lift_over(sub_p(), inst.omega);
      SubRef l2 = lift_over(sub_single(inst.arg), w_p);
      Ctx cc = tel_append(gma, inst.omega);
      TyRef lhs_ty = ty_inst(ty_inst(b, l1), l2);
      if (!conv_ty_u(cc, lhs_ty, b)) return false;
      if (!inst.subject) return true;
      return conv_tm_u(cc, tm_inst(tm_inst(inst.subject, l1), l2),
                       inst.subject, b);
    }
    case 3: {
      // B[<a>^{+W}][g^{+W[<a>]}] = B[(g+)^{+W}][<a[g]>^{+W[g+]}]
      SubRef single_a = sub_single(inst.arg);
      Tel w_a = tel_inst(inst.omega, single_a, gma);
      SubRef gplus = sub_plus(inst.gamma, a);
      Ctx dom_a = snoc(inst.dom, ty_inst(a, inst.gamma));
      Tel w_gp = tel_inst(inst.omega, gplus, dom_a);
      SubRef single_ag = sub_single(tm_inst(inst.arg, inst.gamma));
      SubRef l1 = lift_over(single_a, inst.omega);
      SubRef l2 = lift_over(inst.gamma, w_a);
      SubRef r1 = lift_over(gplus, inst.omega);
      SubRef r2 = lift_over(single_ag, w_gp);
      Ctx cc = tel_append(inst.dom, tel_inst(w_a, inst.gamma, inst.dom));
      TyRef lhs_ty = ty_inst(ty_inst(b, l1), l2);
      TyRef rhs_ty = ty_inst(ty_inst(b, r1), r2);
      if (!conv_ty_u(cc, lhs_ty, rhs_ty)) return false;
      if (!inst.subject) return true;
      return conv_tm_u(cc, tm_inst(tm_inst(inst.subject, l1), l2),
                       tm_inst(tm_inst(inst.subject, r1), r2), lhs_ty);
    }
    case 4: {
      // B[(p+)^{+W}][<q>^{+W[p+]}] = B
      Ctx gma_a = snoc(gma, a);
      SubRef pplus = sub_plus(sub_p(), a);
      Ctx gma_aa = snoc(gma_a, ty_inst(a, sub_p()));
      Tel w_pp = tel_inst(inst.omega, pplus, gma_aa);
      SubRef l1 = lift_over(pplus, inst.omega);
      SubRef l2 = lift_over(sub_single(tm_q()), w_pp);
      Ctx cc = tel_append(gma_a, inst.omega);
      TyRef lhs_ty = ty_inst(ty_inst(b, l1), l2);
      if (!conv_ty_u(cc, lhs_ty, b)) return false;
      if (!inst.subject) return true;
      return conv_tm_u(cc, tm_inst(tm_inst(inst.subject, l1), l2),
                       inst.subject, b);
    }
    default:
      throw std::invalid_argument("check_lifted_eq: n must be 1..4");
  }
}

int Gen::pick(int bound) {
  if (bound <= 1) return 0;
  return static_cast<int>(rng_() % static_cast<std::uint64_t>(bound));
}

bool Gen::chance(int pct) { return pick(100) < pct; }

namespace {
// Raw type of the variable with index k: entry weakened k+1 times.
TyRef var_ty(const Ctx& ctx, int k) {
  TyRef t = ctx[ctx.size() - 1 - static_cast<size_t>(k)];
  for (int j = 0; j <= k; ++j) t = ty_inst(t, sub_p());
  return t;
}
}  // namespace

TmRef Gen::inferable(const Ctx& ctx, int depth) {
  if (!ctx.empty() && chance(50))
    return tm_var(pick(static_cast<int>(ctx.size())));
  Level i = static_cast<Level>(pick(cfg_.max_level + 1));
  return tm_code(ty_at(ctx, i, depth));
}

TyRef Gen::ty_at(const Ctx& ctx, Level level, int depth) {
  if (depth > 1 && chance(cfg_.sub_wrap_pct)) {
    // A[p][<a>] is convertible to A and exercises the explicit nodes.
    TmRef a = inferable(ctx, 2);
    TyRef inner = ty_at(ctx, level, depth - 1);
    return ty_inst(ty_inst(inner, sub_p()), sub_single(a));
  }
  if (depth <= 1) {
    if (level == 0) return ty_top();
    if (chance(50)) return ty_u(level - 1);
    return ty_lift(ty_at(ctx, level - 1, 1));
  }
  switch (pick(6)) {
    case 0: {
      TyRef a = ty_at(ctx, level, depth - 1);
      return ty_pi(a, ty_at(snoc(ctx, a), level, depth - 1));
    }
    case 1: {
      TyRef a = ty_at(ctx, level, depth - 1);
      return ty_sigma(a, ty_at(snoc(ctx, a), level, depth - 1));
    }
    case 2:
      if (level > 0) return ty_lift(ty_at(ctx, level - 1, depth - 1));
      return ty_top();
    case 3:
      return level > 0 ? ty_u(level - 1) : ty_top();
    case 4:
      try {
        return ty_el(tm_at(ctx, ty_u(level), depth - 1));
      } catch (const Exhausted&) {
        return level > 0 ? ty_u(level - 1) : ty_top();
      }
    default:
      return ty_at(ctx, level, 1);
  }
}

TyRef Gen::ty(const Ctx& ctx) {
  return ty_at(ctx, static_cast<Level>(pick(cfg_.max_level + 1)),
               cfg_.max_depth);
}

TmRef Gen::tm_at(const Ctx& ctx, const TyRef& ty, int depth) {
  if (depth > 1 && chance(cfg_.sub_wrap_pct)) {
    TmRef a = inferable(ctx, 2);
    TmRef inner = tm_at(ctx, ty, depth - 1);
    return tm_inst(tm_inst(inner, sub_p()), sub_single(a));
  }
  VTyRef v;
  try {
    v = eval_ty(ty, env_of_ctx(ctx));
  } catch (const EvalError& e) {
    throw Exhausted(std::string("uninhabitable goal: ") + e.what());
  }
  int n = static_cast<int>(ctx.size());
  switch (v->kind) {
    case VTy::Kind::Top:
      return tm_tt();
    case VTy::Kind::Pi: {
      TyRef dom = nf_ty_to_raw(quote_ty(v->a, n));
      TyRef cod = nf_ty_to_raw(
          quote_ty(apply_ty_closure(v->b, vvar(n, v->a)), n + 1));
      return tm_lam(tm_at(snoc(ctx, dom), cod, depth - 1));
    }
    case VTy::Kind::Sigma: {
      TyRef dom = nf_ty_to_raw(quote_ty(v->a, n));
      TmRef first = tm_at(ctx, dom, depth - 1);
      TyRef second = nf_ty_to_raw(
          quote_ty(apply_ty_closure(v->b, eval_tm(first, env_of_ctx(ctx))), n));
      return tm_pair(first, tm_at(ctx, second, depth - 1));
    }
    case VTy::Kind::Lift:
      return tm_mk(tm_at(ctx, nf_ty_to_raw(quote_ty(v->a, n)), depth - 1));
    case VTy::Kind::U:
      return tm_code(ty_at(ctx, v->level, depth > 1 ? depth - 1 : 1));
    case VTy::Kind::ElNe: {
      // Only variables (possibly after shuffling) can inhabit a stuck El.
      for (int k = 0; k < n; ++k) {
        if (conv_ty_u(ctx, var_ty(ctx, k), ty)) return tm_var(k);
      }
      throw Exhausted("no variable inhabits " + print_ty(ty));
    }
  }
  throw Exhausted("tm_at: bad kind");
}

TmRef Gen::tm(const Ctx& ctx, const TyRef& ty) {
  return tm_at(ctx, ty, cfg_.max_depth);
}

SubRef Gen::sub(const Ctx& dom) {
  if (dom.empty()) return sub_single(inferable(dom, 2));
  switch (pick(3)) {
    case 0:
      return sub_p();
    case 1:
      return sub_single(inferable(dom, 2));
    default: {
      Ctx inner(dom.begin(), dom.end() - 1);
      TyRef x = dom.back();
      SubRef g = sub(inner);
      try {
        TyRef entry = invert_ty_through(inner, x, g);
        if (conv_ty_u(inner, x, ty_inst(entry, g)))
          return sub_plus(g, entry);
      } catch (const CheckError&) {
      } catch (const EvalError&) {
      }
      return sub_p();
    }
  }
}

Tel Gen::tel(const Ctx& ctx) {
  Tel out;
  out.base = ctx;
  int n = pick(cfg_.max_tel + 1);
  Ctx acc = ctx;
  for (int k = 0; k < n; ++k) {
    TyRef e = ty_at(acc, static_cast<Level>(pick(cfg_.max_level + 1)),
                    cfg_.max_depth > 2 ? 2 : cfg_.max_depth);
    out.entries.push_back(e);
    acc.push_back(e);
  }
  return out;
}

LiftedEqInstance gen_lifted_instance(Gen& gen, int n, int tel_min,
                                     int tel_max) {
  LiftedEqInstance inst;
  // Base context Gamma.
  inst.ctx = tel_append(Ctx{}, gen.tel(Ctx{}));
  inst.entry = gen.ty(inst.ctx);

  if (n == 1 || n == 3) {
    // gamma : dom -> ctx; either a weakening from an extended context or a
    // single substitution from a truncated one.
    if (!inst.ctx.empty() && gen.chance(50)) {
      inst.dom = inst.ctx;
      inst.dom.pop_back();
      TyRef goal = inst.ctx.back();
      try {
        inst.gamma = sub_single(gen.tm(inst.dom, goal));
      } catch (const Exhausted&) {
        inst.dom = snoc(inst.ctx, gen.ty(inst.ctx));
        inst.gamma = sub_p();
      }
    } else {
      inst.dom = snoc(inst.ctx, gen.ty(inst.ctx));
      inst.gamma = sub_p();
    }
  }
  if (n == 2 || n == 3) {
    try {
      inst.arg = gen.tm(inst.ctx, inst.entry);
    } catch (const Exhausted&) {
      inst.entry = ty_top();
      inst.arg = tm_tt();
    }
  }

  // Telescope base: Gamma for eqs 1-2, Gamma # A for eqs 3-4.
  Ctx tbase = (n <= 2) ? inst.ctx : snoc(inst.ctx, inst.entry);
  for (int attempt = 0;; ++attempt) {
    inst.omega = gen.tel(tbase);
    int len = static_cast<int>(inst.omega.entries.size());
    if ((len >= tel_min && len <= tel_max) || attempt > 64) break;
  }
  while (static_cast<int>(inst.omega.entries.size()) < tel_min) {
    inst.omega.entries.push_back(ty_top());
  }
  while (static_cast<int>(inst.omega.entries.size()) > tel_max) {
    inst.omega.entries.pop_back();
  }

  Ctx subject_ctx = tel_append(tbase, inst.omega);
  inst.subject_ty = gen.ty(subject_ctx);
  try {
    inst.subject = gen.tm(subject_ctx, inst.subject_ty);
  } catch (const Exhausted&) {
    inst.subject = nullptr;
  }
  return inst;
}

LemmaReport lift_lemma_verify(const SubStarRef& g0, const SubStarRef& g1,
                              const Ctx& ctx, const Ctx& dom, Gen& gen,
                              int samples) {
  LemmaReport rep;
  try {
  // Hypotheses: action agrees on sampled types and on every variable.
  for (int s = 0; s < samples; ++s) {
    TyRef a = gen.ty(ctx);
    if (!conv_ty_u(dom, star_inst_ty(a, g0), star_inst_ty(a, g1))) {
      rep.detail = "type hypothesis fails on " + print_ty(a);
      return rep;
    }
  }
  for (int k = 0; k < static_cast<int>(ctx.size()); ++k) {
    TmRef x = tm_var(k);
    TyRef xt = star_inst_ty(var_ty(ctx, k), g0);
    if (!conv_tm_u(dom, star_inst_tm(x, g0), star_inst_tm(x, g1), xt)) {
      rep.detail = "variable hypothesis fails on " + print_tm(x);
      return rep;
    }
  }
  rep.hypotheses_ok = true;
  // Conclusions: telescopes, lifted types, lifted terms.
  for (int s = 0; s < samples; ++s) {
    Tel omega = gen.tel(ctx);
    Tel w0 = star_tel_inst(omega, g0, dom);
    Tel w1 = star_tel_inst(omega, g1, dom);
    Ctx acc = dom;
    for (size_t k = 0; k < omega.entries.size(); ++k) {
      if (!conv_ty_u(acc, w0.entries[k], w1.entries[k])) {
        rep.detail = "telescope conclusion fails on " +
                     print_ty(omega.entries[k]);
        return rep;
      }
      acc.push_back(w0.entries[k]);
    }
    Ctx ext = tel_append(ctx, omega);
    Ctx dext = tel_append(dom, w0);
    SubStarRef l0 = star_lift_over(g0, omega);
    SubStarRef l1 = star_lift_over(g1, omega);
    TyRef a = gen.ty(ext);
    if (!conv_ty_u(dext, star_inst_ty(a, l0), star_inst_ty(a, l1))) {
      rep.detail = "type conclusion fails on " + print_ty(a);
      return rep;
    }
    try {
      TmRef b = gen.tm(ext, a);
      if (!conv_tm_u(dext, star_inst_tm(b, l0), star_inst_tm(b, l1),
                     star_inst_ty(a, l0))) {
        rep.detail = "term conclusion fails on " + print_tm(b);
        return rep;
      }
    } catch (const Exhausted&) {
      // Goal uninhabitable at this depth; the type conclusion above stands.
    }
  }
  rep.conclusions_ok = true;
  } catch (const EvalError& e) {
    rep.detail = std::string("ill-formed action: ") + e.what();
  }
  return rep;
}

}  // namespace ssc
