#include "ssc/alphanorm.hpp"

#include "ssc/check.hpp"

namespace ssc {

namespace {

// Index of a variable spine q[p]...[p], or -1 if tm is not one.
int var_index(const TmRef& tm) {
  int k = 0;
  TmRef cur = tm;
  while (cur->kind == Tm::Kind::Inst && cur->sub->kind == Sub::Kind::P) {
    cur = cur->t;
    ++k;
  }
  return cur->kind == Tm::Kind::Q ? k : -1;
}

NSub lift(const NSub& ns) {
  NSub out = ns;
  ++out.depth;
  return out;
}

// Action of an alpha-normal substitution on a variable index.
TmRef push_var(int k, const NSub& ns) {
  if (ns.kind == NSub::Kind::Weakening)
    return tm_var(k >= ns.depth ? k + 1 : k);
  if (k < ns.depth) return tm_var(k);
  if (k > ns.depth) return tm_var(k - 1);
  // The substituted variable: weaken the payload once per lifting.
  TmRef out = ns.payload;
  NSub wk{NSub::Kind::Weakening, 0, nullptr};
  for (int j = 0; j < ns.depth; ++j) out = alpha_push_tm(out, wk);
  return out;
}

NSub norm_sub(const SubRef& sub) {
  switch (sub->kind) {
    case Sub::Kind::P:
      return {NSub::Kind::Weakening, 0, nullptr};
    case Sub::Kind::Single:
      return {NSub::Kind::NSingle, 0, alpha_norm_tm_u(sub->tm)};
    case Sub::Kind::Plus:
      return lift(norm_sub(sub->sub));
  }
  throw std::logic_error("norm_sub: bad kind");
}

}  // namespace

bool is_var(const TmRef& tm) { return var_index(tm) >= 0; }

bool is_alpha_ty(const TyRef& ty) {
  switch (ty->kind) {
    case Ty::Kind::U:
    case Ty::Kind::Top:
      return true;
    case Ty::Kind::El:
      return is_alpha_tm(ty->tm);
    case Ty::Kind::Pi:
    case Ty::Kind::Sigma:
      return is_alpha_ty(ty->a) && is_alpha_ty(ty->b);
    case Ty::Kind::Lift:
      return is_alpha_ty(ty->a);
    case Ty::Kind::Inst:
      return false;
  }
  return false;
}

bool is_alpha_tm(const TmRef& tm) {
  switch (tm->kind) {
    case Tm::Kind::Q:
      return true;
    case Tm::Kind::Inst:
      return is_var(tm);
    case Tm::Kind::Lam:
    case Tm::Kind::Mk:
    case Tm::Kind::Un:
    case Tm::Kind::Fst:
    case Tm::Kind::Snd:
      return is_alpha_tm(tm->t);
    case Tm::Kind::App:
    case Tm::Kind::Pair:
      return is_alpha_tm(tm->t) && is_alpha_tm(tm->u);
    case Tm::Kind::Code:
      return is_alpha_ty(tm->ty);
    case Tm::Kind::Tt:
      return true;
  }
  return false;
}

std::optional<NSub> classify_sub(const SubRef& sub) {
  switch (sub->kind) {
    case Sub::Kind::P:
      return NSub{NSub::Kind::Weakening, 0, nullptr};
    case Sub::Kind::Single:
      if (!is_alpha_tm(sub->tm)) return std::nullopt;
      return NSub{NSub::Kind::NSingle, 0, sub->tm};
    case Sub::Kind::Plus: {
      auto inner = classify_sub(sub->sub);
      if (!inner) return std::nullopt;
      return lift(*inner);
    }
  }
  return std::nullopt;
}

TyRef alpha_push_ty(const TyRef& ty, const NSub& ns) {
  switch (ty->kind) {
    case Ty::Kind::U:
    case Ty::Kind::Top:
      return ty;
    case Ty::Kind::El:
      return ty_el(alpha_push_tm(ty->tm, ns));
    case Ty::Kind::Pi:
      return ty_pi(alpha_push_ty(ty->a, ns), alpha_push_ty(ty->b, lift(ns)));
    case Ty::Kind::Sigma:
      return ty_sigma(alpha_push_ty(ty->a, ns),
                      alpha_push_ty(ty->b, lift(ns)));
    case Ty::Kind::Lift:
      return ty_lift(alpha_push_ty(ty->a, ns));
    case Ty::Kind::Inst:
      throw std::logic_error("alpha_push_ty: input not alpha-normal");
  }
  throw std::logic_error("alpha_push_ty: bad kind");
}

TmRef alpha_push_tm(const TmRef& tm, const NSub& ns) {
  switch (tm->kind) {
    case Tm::Kind::Q:
      return push_var(0, ns);
    case Tm::Kind::Inst: {
      int k = var_index(tm);
      if (k < 0) throw std::logic_error("alpha_push_tm: input not alpha-normal");
      return push_var(k, ns);
    }
    case Tm::Kind::Lam:
      return tm_lam(alpha_push_tm(tm->t, lift(ns)));
    case Tm::Kind::App:
      return tm_app(alpha_push_tm(tm->t, ns), alpha_push_tm(tm->u, ns));
    case Tm::Kind::Code:
      return tm_code(alpha_push_ty(tm->ty, ns));
    case Tm::Kind::Mk:
      return tm_mk(alpha_push_tm(tm->t, ns));
    case Tm::Kind::Un:
      return tm_un(alpha_push_tm(tm->t, ns));
    case Tm::Kind::Tt:
      return tm;
    case Tm::Kind::Pair:
      return tm_pair(alpha_push_tm(tm->t, ns), alpha_push_tm(tm->u, ns));
    case Tm::Kind::Fst:
      return tm_fst(alpha_push_tm(tm->t, ns));
    case Tm::Kind::Snd:
      return tm_snd(alpha_push_tm(tm->t, ns));
  }
  throw std::logic_error("alpha_push_tm: bad kind");
}

TyRef alpha_norm_ty_u(const TyRef& ty) {
  switch (ty->kind) {
    case Ty::Kind::U:
    case Ty::Kind::Top:
      return ty;
    case Ty::Kind::El:
      return ty_el(alpha_norm_tm_u(ty->tm));
    case Ty::Kind::Pi:
      return ty_pi(alpha_norm_ty_u(ty->a), alpha_norm_ty_u(ty->b));
    case Ty::Kind::Sigma:
      return ty_sigma(alpha_norm_ty_u(ty->a), alpha_norm_ty_u(ty->b));
    case Ty::Kind::Lift:
      return ty_lift(alpha_norm_ty_u(ty->a));
    case Ty::Kind::Inst:
      return alpha_push_ty(alpha_norm_ty_u(ty->a), norm_sub(ty->sub));
  }
  throw std::logic_error("alpha_norm_ty_u: bad kind");
}

TmRef alpha_norm_tm_u(const TmRef& tm) {
  switch (tm->kind) {
    case Tm::Kind::Q:
    case Tm::Kind::Tt:
      return tm;
    case Tm::Kind::Inst:
      return alpha_push_tm(alpha_norm_tm_u(tm->t), norm_sub(tm->sub));
    case Tm::Kind::Lam:
      return tm_lam(alpha_norm_tm_u(tm->t));
    case Tm::Kind::App:
      return tm_app(alpha_norm_tm_u(tm->t), alpha_norm_tm_u(tm->u));
    case Tm::Kind::Code:
      return tm_code(alpha_norm_ty_u(tm->ty));
    case Tm::Kind::Mk:
      return tm_mk(alpha_norm_tm_u(tm->t));
    case Tm::Kind::Un:
      return tm_un(alpha_norm_tm_u(tm->t));
    case Tm::Kind::Pair:
      return tm_pair(alpha_norm_tm_u(tm->t), alpha_norm_tm_u(tm->u));
    case Tm::Kind::Fst:
      return tm_fst(alpha_norm_tm_u(tm->t));
    case Tm::Kind::Snd:
      return tm_snd(alpha_norm_tm_u(tm->t));
  }
  throw std::logic_error("alpha_norm_tm_u: bad kind");
}

TyRef alpha_norm_ty(const Ctx& ctx, const TyRef& ty) {
  infer_ty_level(ctx, ty);
  return alpha_norm_ty_u(ty);
}

TmRef alpha_norm_tm(const Ctx& ctx, const TmRef& tm) {
  try {
    infer_tm(ctx, tm);
  } catch (const NotInferable&) {
    // Checked-only heads carry no type here; normalise structurally.
  }
  return alpha_norm_tm_u(tm);
}

}  // namespace ssc
