#include "ssc/eval.hpp"

namespace ssc {

namespace {
VTyRef make(VTy t) { return std::make_shared<const VTy>(std::move(t)); }
VTmRef make(VTm t) { return std::make_shared<const VTm>(std::move(t)); }
VNeRef make(VNe n) { return std::make_shared<const VNe>(std::move(n)); }

VTyRef vty_u(Level i) {
  VTy t;
  t.kind = VTy::Kind::U;
  t.level = i;
  return make(std::move(t));
}
VTyRef vty_pi(VTyRef a, TyClosure b) {
  VTy t;
  t.kind = VTy::Kind::Pi;
  t.a = std::move(a);
  t.b = std::move(b);
  return make(std::move(t));
}
VTyRef vty_sigma(VTyRef a, TyClosure b) {
  VTy t;
  t.kind = VTy::Kind::Sigma;
  t.a = std::move(a);
  t.b = std::move(b);
  return make(std::move(t));
}
VTyRef vty_top() {
  static const VTyRef top = [] {
    VTy t;
    t.kind = VTy::Kind::Top;
    return make(std::move(t));
  }();
  return top;
}
VTyRef vty_lift(VTyRef a) {
  VTy t;
  t.kind = VTy::Kind::Lift;
  t.a = std::move(a);
  return make(std::move(t));
}
VTyRef vty_el(VNeRef ne) {
  VTy t;
  t.kind = VTy::Kind::ElNe;
  t.ne = std::move(ne);
  return make(std::move(t));
}

VTmRef vtm_lam(TmClosure c) {
  VTm t;
  t.kind = VTm::Kind::Lam;
  t.clos = std::move(c);
  return make(std::move(t));
}
VTmRef vtm_pair(VTmRef a, VTmRef b) {
  VTm t;
  t.kind = VTm::Kind::Pair;
  t.t = std::move(a);
  t.u = std::move(b);
  return make(std::move(t));
}
VTmRef vtm_mk(VTmRef a) {
  VTm t;
  t.kind = VTm::Kind::Mk;
  t.t = std::move(a);
  return make(std::move(t));
}
VTmRef vtm_code(VTyRef a) {
  VTm t;
  t.kind = VTm::Kind::Code;
  t.ty = std::move(a);
  return make(std::move(t));
}
VTmRef vtm_tt() {
  static const VTmRef tt = [] {
    VTm t;
    t.kind = VTm::Kind::Tt;
    return make(std::move(t));
  }();
  return tt;
}
VTmRef vtm_neut(VNeRef ne, VTyRef ty) {
  VTm t;
  t.kind = VTm::Kind::Neut;
  t.ne = std::move(ne);
  t.ty = std::move(ty);
  return make(std::move(t));
}

VNeRef vne_var(int level) {
  VNe n;
  n.kind = VNe::Kind::Var;
  n.level = level;
  return make(std::move(n));
}
VNeRef vne_app(VNeRef head, VTmRef arg, VTyRef argty) {
  VNe n;
  n.kind = VNe::Kind::App;
  n.head = std::move(head);
  n.arg = std::move(arg);
  n.argty = std::move(argty);
  return make(std::move(n));
}
VNeRef vne_proj(VNe::Kind k, VNeRef head) {
  VNe n;
  n.kind = k;
  n.head = std::move(head);
  return make(std::move(n));
}

}  // namespace

VTmRef vvar(int level, VTyRef ty) {
  return vtm_neut(vne_var(level), std::move(ty));
}

VTyRef apply_ty_closure(const TyClosure& c, const VTmRef& v) {
  Env env = c.env;
  env.push_back(v);
  return eval_ty(c.body, env);
}

namespace {
VTmRef apply_tm_closure(const TmClosure& c, const VTmRef& v) {
  Env env = c.env;
  env.push_back(v);
  return eval_tm(c.body, env);
}
}  // namespace

VTmRef vapp(const VTmRef& f, const VTmRef& a) {
  if (f->kind == VTm::Kind::Lam) return apply_tm_closure(f->clos, a);
  if (f->kind == VTm::Kind::Neut) {
    const VTyRef& fty = f->ty;
    if (fty->kind != VTy::Kind::Pi)
      throw EvalError("application head is not of Pi type");
    return vtm_neut(vne_app(f->ne, a, fty->a), apply_ty_closure(fty->b, a));
  }
  throw EvalError("application of a non-function value");
}

VTmRef vfst(const VTmRef& v) {
  if (v->kind == VTm::Kind::Pair) return v->t;
  if (v->kind == VTm::Kind::Neut) {
    if (v->ty->kind != VTy::Kind::Sigma)
      throw EvalError("fst of a non-Sigma value");
    return vtm_neut(vne_proj(VNe::Kind::Fst, v->ne), v->ty->a);
  }
  throw EvalError("fst of a non-pair value");
}

VTmRef vsnd(const VTmRef& v) {
  if (v->kind == VTm::Kind::Pair) return v->u;
  if (v->kind == VTm::Kind::Neut) {
    if (v->ty->kind != VTy::Kind::Sigma)
      throw EvalError("snd of a non-Sigma value");
    return vtm_neut(vne_proj(VNe::Kind::Snd, v->ne),
                    apply_ty_closure(v->ty->b, vfst(v)));
  }
  throw EvalError("snd of a non-pair value");
}

VTmRef vun(const VTmRef& v) {
  if (v->kind == VTm::Kind::Mk) return v->t;
  if (v->kind == VTm::Kind::Neut) {
    if (v->ty->kind != VTy::Kind::Lift)
      throw EvalError("un of a non-Lift value");
    return vtm_neut(vne_proj(VNe::Kind::Un, v->ne), v->ty->a);
  }
  throw EvalError("un of a non-mk value");
}

Env eval_sub(const SubRef& s, const Env& env) {
  switch (s->kind) {
    case Sub::Kind::P: {
      if (env.empty()) throw EvalError("p applied in an empty environment");
      Env out(env.begin(), env.end() - 1);
      return out;
    }
    case Sub::Kind::Single: {
      Env out = env;
      out.push_back(eval_tm(s->tm, env));
      return out;
    }
    case Sub::Kind::Plus: {
      if (env.empty()) throw EvalError("lifting applied in an empty environment");
      Env inner(env.begin(), env.end() - 1);
      Env out = eval_sub(s->sub, inner);
      out.push_back(env.back());
      return out;
    }
  }
  throw EvalError("eval_sub: bad kind");
}

VTyRef eval_ty(const TyRef& t, const Env& env) {
  switch (t->kind) {
    case Ty::Kind::U:
      return vty_u(t->level);
    case Ty::Kind::El: {
      VTmRef v = eval_tm(t->tm, env);
      if (v->kind == VTm::Kind::Code) return v->ty;
      if (v->kind == VTm::Kind::Neut) return vty_el(v->ne);
      throw EvalError("El applied to a non-code value");
    }
    case Ty::Kind::Pi:
      return vty_pi(eval_ty(t->a, env), TyClosure{env, t->b});
    case Ty::Kind::Sigma:
      return vty_sigma(eval_ty(t->a, env), TyClosure{env, t->b});
    case Ty::Kind::Top:
      return vty_top();
    case Ty::Kind::Lift:
      return vty_lift(eval_ty(t->a, env));
    case Ty::Kind::Inst:
      return eval_ty(t->a, eval_sub(t->sub, env));
  }
  throw EvalError("eval_ty: bad kind");
}

VTmRef eval_tm(const TmRef& t, const Env& env) {
  switch (t->kind) {
    case Tm::Kind::Q:
      if (env.empty()) throw EvalError("q in an empty environment");
      return env.back();
    case Tm::Kind::Inst:
      return eval_tm(t->t, eval_sub(t->sub, env));
    case Tm::Kind::Lam:
      return vtm_lam(TmClosure{env, t->t});
    case Tm::Kind::App:
      return vapp(eval_tm(t->t, env), eval_tm(t->u, env));
    case Tm::Kind::Code:
      return vtm_code(eval_ty(t->ty, env));
    case Tm::Kind::Mk:
      return vtm_mk(eval_tm(t->t, env));
    case Tm::Kind::Un:
      return vun(eval_tm(t->t, env));
    case Tm::Kind::Tt:
      return vtm_tt();
    case Tm::Kind::Pair:
      return vtm_pair(eval_tm(t->t, env), eval_tm(t->u, env));
    case Tm::Kind::Fst:
      return vfst(eval_tm(t->t, env));
    case Tm::Kind::Snd:
      return vsnd(eval_tm(t->t, env));
  }
  throw EvalError("eval_tm: bad kind");
}

NfTyRef quote_ty(const VTyRef& t, int depth) {
  switch (t->kind) {
    case VTy::Kind::U:
      return nf_u(t->level);
    case VTy::Kind::Pi:
    case VTy::Kind::Sigma: {
      NfTyRef a = quote_ty(t->a, depth);
      VTmRef x = vvar(depth, t->a);
      NfTyRef b = quote_ty(apply_ty_closure(t->b, x), depth + 1);
      return t->kind == VTy::Kind::Pi ? nf_pi(a, b) : nf_sigma(a, b);
    }
    case VTy::Kind::Top:
      return nf_top();
    case VTy::Kind::Lift:
      return nf_lift(quote_ty(t->a, depth));
    case VTy::Kind::ElNe:
      return nf_el(quote_ne(t->ne, depth));
  }
  throw EvalError("quote_ty: bad kind");
}

NfTmRef quote_tm(const VTmRef& v, const VTyRef& ty, int depth) {
  switch (ty->kind) {
    case VTy::Kind::Pi: {
      VTmRef x = vvar(depth, ty->a);
      VTmRef body = vapp(v, x);
      return nf_lam(quote_tm(body, apply_ty_closure(ty->b, x), depth + 1));
    }
    case VTy::Kind::Sigma: {
      VTmRef a = vfst(v);
      NfTmRef na = quote_tm(a, ty->a, depth);
      NfTmRef nb = quote_tm(vsnd(v), apply_ty_closure(ty->b, a), depth);
      return nf_pair(na, nb);
    }
    case VTy::Kind::Lift:
      return nf_mk(quote_tm(vun(v), ty->a, depth));
    case VTy::Kind::Top:
      return nf_tt();
    case VTy::Kind::U: {
      // Neutral codes read back as code(El ne); Ubeta/Ueta then hold
      // definitionally between normal forms.
      if (v->kind == VTm::Kind::Code) return nf_code(quote_ty(v->ty, depth));
      if (v->kind == VTm::Kind::Neut)
        return nf_code(nf_el(quote_ne(v->ne, depth)));
      throw EvalError("non-code value at universe type");
    }
    case VTy::Kind::ElNe: {
      if (v->kind == VTm::Kind::Neut) return nf_neut(quote_ne(v->ne, depth));
      throw EvalError("non-neutral value at neutral El type");
    }
  }
  throw EvalError("quote_tm: bad kind");
}

NfNeRef quote_ne(const VNeRef& ne, int depth) {
  switch (ne->kind) {
    case VNe::Kind::Var: {
      int index = depth - 1 - ne->level;
      if (index < 0) throw EvalError("variable level out of scope");
      return ne_var(index);
    }
    case VNe::Kind::App:
      return ne_app(quote_ne(ne->head, depth),
                    quote_tm(ne->arg, ne->argty, depth));
    case VNe::Kind::Fst:
      return ne_fst(quote_ne(ne->head, depth));
    case VNe::Kind::Snd:
      return ne_snd(quote_ne(ne->head, depth));
    case VNe::Kind::Un:
      return ne_un(quote_ne(ne->head, depth));
  }
  throw EvalError("quote_ne: bad kind");
}

Env env_of_ctx(const Ctx& ctx) {
  Env env;
  env.reserve(ctx.size());
  for (size_t k = 0; k < ctx.size(); ++k) {
    VTyRef vty = eval_ty(ctx[k], env);
    env.push_back(vvar(static_cast<int>(k), vty));
  }
  return env;
}

NfTyRef normalize_ty_u(const Ctx& ctx, const TyRef& ty) {
  Env env = env_of_ctx(ctx);
  return quote_ty(eval_ty(ty, env), static_cast<int>(ctx.size()));
}

NfTmRef normalize_tm_u(const Ctx& ctx, const TmRef& tm, const TyRef& ty) {
  Env env = env_of_ctx(ctx);
  VTyRef vty = eval_ty(ty, env);
  return quote_tm(eval_tm(tm, env), vty, static_cast<int>(ctx.size()));
}

bool conv_ty_u(const Ctx& ctx, const TyRef& x, const TyRef& y) {
  return equal_nf_ty(normalize_ty_u(ctx, x), normalize_ty_u(ctx, y));
}

bool conv_tm_u(const Ctx& ctx, const TmRef& x, const TmRef& y,
               const TyRef& ty) {
  Env env = env_of_ctx(ctx);
  VTyRef vty = eval_ty(ty, env);
  int depth = static_cast<int>(ctx.size());
  return equal_nf_tm(quote_tm(eval_tm(x, env), vty, depth),
                     quote_tm(eval_tm(y, env), vty, depth));
}

}  // namespace ssc
