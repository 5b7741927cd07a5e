#include "ssc/check.hpp"

namespace ssc {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw CheckError(msg); }

int plus_depth(const SubRef& s, SubRef* root = nullptr) {
  int n = 0;
  SubRef cur = s;
  while (cur->kind == Sub::Kind::Plus) {
    cur = cur->sub;
    ++n;
  }
  if (root) *root = cur;
  return n;
}

VTyRef eval_expected(const Ctx& ctx, const TyRef& ty) {
  try {
    return eval_ty(ty, env_of_ctx(ctx));
  } catch (const EvalError& e) {
    fail(std::string("ill-formed type ") + print_ty(ty) + ": " + e.what());
  }
}

}  // namespace

TyRef invert_ty_through(const Ctx& dom, const TyRef& x, const SubRef& sub) {
  NfTyRef nf;
  try {
    nf = normalize_ty_u(dom, x);
  } catch (const EvalError& e) {
    fail(std::string("ill-formed type ") + print_ty(x) + ": " + e.what());
  }
  SubRef root;
  int m = plus_depth(sub, &root);
  NfTyRef shifted = root->kind == Sub::Kind::P ? strengthen_at(nf, m)
                                               : weaken_at(nf, m);
  if (!shifted)
    fail("cannot transport " + print_ty(x) +
         " through the substitution " + print_sub(sub) +
         ": the weakened variable occurs");
  return nf_ty_to_raw(shifted);
}

Ctx wf_sub(const Ctx& dom, const SubRef& sub) {
  switch (sub->kind) {
    case Sub::Kind::P: {
      if (dom.empty()) fail("p applied to the empty context");
      return Ctx(dom.begin(), dom.end() - 1);
    }
    case Sub::Kind::Single: {
      TyRef a = infer_tm(dom, sub->tm);
      Ctx cod = dom;
      cod.push_back(a);
      return cod;
    }
    case Sub::Kind::Plus: {
      if (dom.empty()) fail("lifting applied to the empty context");
      TyRef x = dom.back();
      Ctx inner_dom(dom.begin(), dom.end() - 1);
      Ctx cod = wf_sub(inner_dom, sub->sub);
      TyRef entry = sub->entry_hint;
      if (entry) {
        infer_ty_level(cod, entry);
      } else {
        entry = invert_ty_through(inner_dom, x, sub->sub);
      }
      if (!conv_ty_u(inner_dom, x, ty_inst(entry, sub->sub)))
        fail("lifted substitution domain entry " + print_ty(x) +
             " does not match " + print_ty(entry) + " instantiated by " +
             print_sub(sub->sub));
      cod.push_back(entry);
      return cod;
    }
  }
  fail("wf_sub: bad kind");
}

Level infer_ty_level(const Ctx& ctx, const TyRef& ty) {
  switch (ty->kind) {
    case Ty::Kind::U:
      return ty->level + 1;
    case Ty::Kind::El: {
      TyRef a = infer_tm(ctx, ty->tm);
      VTyRef v = eval_expected(ctx, a);
      if (v->kind != VTy::Kind::U)
        fail("El argument " + print_tm(ty->tm) + " is not of universe type");
      return v->level;
    }
    case Ty::Kind::Pi:
    case Ty::Kind::Sigma: {
      Level i = infer_ty_level(ctx, ty->a);
      Ctx ext = ctx;
      ext.push_back(ty->a);
      Level j = infer_ty_level(ext, ty->b);
      if (i != j)
        fail("domain and codomain of " + print_ty(ty) +
             " are at different levels " + std::to_string(i) + " and " +
             std::to_string(j));
      return i;
    }
    case Ty::Kind::Top:
      return 0;
    case Ty::Kind::Lift:
      return 1 + infer_ty_level(ctx, ty->a);
    case Ty::Kind::Inst: {
      Ctx cod = wf_sub(ctx, ty->sub);
      return infer_ty_level(cod, ty->a);
    }
  }
  fail("infer_ty_level: bad kind");
}

TyRef infer_tm(const Ctx& ctx, const TmRef& tm) {
  switch (tm->kind) {
    case Tm::Kind::Q:
      if (ctx.empty()) fail("q in the empty context");
      return ty_inst(ctx.back(), sub_p());
    case Tm::Kind::Inst: {
      Ctx cod = wf_sub(ctx, tm->sub);
      TyRef a = infer_tm(cod, tm->t);
      return ty_inst(a, tm->sub);
    }
    case Tm::Kind::App: {
      TyRef fty = infer_tm(ctx, tm->t);
      VTyRef v = eval_expected(ctx, fty);
      if (v->kind != VTy::Kind::Pi)
        fail("application head " + print_tm(tm->t) + " is not of Pi type");
      int depth = static_cast<int>(ctx.size());
      TyRef dom = nf_ty_to_raw(quote_ty(v->a, depth));
      check_tm_or_throw(ctx, tm->u, dom);
      VTmRef arg = eval_tm(tm->u, env_of_ctx(ctx));
      return nf_ty_to_raw(quote_ty(apply_ty_closure(v->b, arg), depth));
    }
    case Tm::Kind::Fst: {
      TyRef pty = infer_tm(ctx, tm->t);
      VTyRef v = eval_expected(ctx, pty);
      if (v->kind != VTy::Kind::Sigma)
        fail("fst subject " + print_tm(tm->t) + " is not of Sigma type");
      return nf_ty_to_raw(quote_ty(v->a, static_cast<int>(ctx.size())));
    }
    case Tm::Kind::Snd: {
      TyRef pty = infer_tm(ctx, tm->t);
      VTyRef v = eval_expected(ctx, pty);
      if (v->kind != VTy::Kind::Sigma)
        fail("snd subject " + print_tm(tm->t) + " is not of Sigma type");
      VTmRef first = vfst(eval_tm(tm->t, env_of_ctx(ctx)));
      return nf_ty_to_raw(quote_ty(apply_ty_closure(v->b, first),
                                   static_cast<int>(ctx.size())));
    }
    case Tm::Kind::Un: {
      TyRef lty = infer_tm(ctx, tm->t);
      VTyRef v = eval_expected(ctx, lty);
      if (v->kind != VTy::Kind::Lift)
        fail("un subject " + print_tm(tm->t) + " is not of Lift type");
      return nf_ty_to_raw(quote_ty(v->a, static_cast<int>(ctx.size())));
    }
    case Tm::Kind::Code:
      return ty_u(infer_ty_level(ctx, tm->ty));
    case Tm::Kind::Lam:
    case Tm::Kind::Pair:
    case Tm::Kind::Mk:
    case Tm::Kind::Tt:
      throw NotInferable("term " + print_tm(tm) +
                         " must be checked against a type");
  }
  fail("infer_tm: bad kind");
}

void check_tm_or_throw(const Ctx& ctx, const TmRef& tm, const TyRef& ty) {
  VTyRef expected = eval_expected(ctx, ty);
  int depth = static_cast<int>(ctx.size());
  switch (tm->kind) {
    case Tm::Kind::Lam: {
      if (expected->kind != VTy::Kind::Pi)
        fail("lam checked against non-Pi type " + print_ty(ty));
      TyRef dom = nf_ty_to_raw(quote_ty(expected->a, depth));
      VTmRef x = vvar(depth, expected->a);
      TyRef codom =
          nf_ty_to_raw(quote_ty(apply_ty_closure(expected->b, x), depth + 1));
      Ctx ext = ctx;
      ext.push_back(dom);
      check_tm_or_throw(ext, tm->t, codom);
      return;
    }
    case Tm::Kind::Pair: {
      if (expected->kind != VTy::Kind::Sigma)
        fail("pair checked against non-Sigma type " + print_ty(ty));
      TyRef dom = nf_ty_to_raw(quote_ty(expected->a, depth));
      check_tm_or_throw(ctx, tm->t, dom);
      VTmRef first = eval_tm(tm->t, env_of_ctx(ctx));
      TyRef second =
          nf_ty_to_raw(quote_ty(apply_ty_closure(expected->b, first), depth));
      check_tm_or_throw(ctx, tm->u, second);
      return;
    }
    case Tm::Kind::Mk: {
      if (expected->kind != VTy::Kind::Lift)
        fail("mk checked against non-Lift type " + print_ty(ty));
      check_tm_or_throw(ctx, tm->t, nf_ty_to_raw(quote_ty(expected->a, depth)));
      return;
    }
    case Tm::Kind::Tt: {
      if (expected->kind != VTy::Kind::Top)
        fail("tt checked against non-Top type " + print_ty(ty));
      return;
    }
    case Tm::Kind::Inst: {
      // Prefer the inference path; fall back to transporting the expected
      // type through the substitution when the subject is checked-only.
      try {
        TyRef got = infer_tm(ctx, tm);
        if (!conv_ty(ctx, got, ty))
          fail("type mismatch: " + print_tm(tm) + " has type " +
               print_nf_ty(normalize_ty_u(ctx, got)) + ", expected " +
               print_nf_ty(normalize_ty_u(ctx, ty)));
        return;
      } catch (const NotInferable&) {
      }
      Ctx cod = wf_sub(ctx, tm->sub);
      TyRef transported = invert_ty_through(ctx, ty, tm->sub);
      if (!conv_ty_u(ctx, ty, ty_inst(transported, tm->sub)))
        fail("cannot determine the type of " + print_tm(tm->t) +
             " under " + print_sub(tm->sub));
      check_tm_or_throw(cod, tm->t, transported);
      return;
    }
    case Tm::Kind::App: {
      try {
        TyRef got = infer_tm(ctx, tm);
        if (!conv_ty(ctx, got, ty))
          fail("type mismatch: " + print_tm(tm) + " has type " +
               print_nf_ty(normalize_ty_u(ctx, got)) + ", expected " +
               print_nf_ty(normalize_ty_u(ctx, ty)));
        return;
      } catch (const NotInferable&) {
      }
      // Beta-redex: recover the Pi type from the argument when possible.
      TyRef argty = infer_tm(ctx, tm->u);  // NotInferable propagates
      SubRef single = sub_single(tm->u);
      TyRef codom = invert_ty_through(ctx, ty, single);
      if (!conv_ty_u(ctx, ty, ty_inst(codom, single)))
        fail("cannot determine the result type of the redex " + print_tm(tm));
      check_tm_or_throw(ctx, tm->t, ty_pi(argty, codom));
      return;
    }
    default: {
      TyRef got = infer_tm(ctx, tm);
      if (!conv_ty(ctx, got, ty))
        fail("type mismatch: " + print_tm(tm) + " has type " +
             print_nf_ty(normalize_ty_u(ctx, got)) + ", expected " +
             print_nf_ty(normalize_ty_u(ctx, ty)));
      return;
    }
  }
}

Verdict check_tm(const Ctx& ctx, const TmRef& tm, const TyRef& ty) {
  try {
    check_tm_or_throw(ctx, tm, ty);
    return {true, ""};
  } catch (const CheckError& e) {
    return {false, e.what()};
  } catch (const EvalError& e) {
    return {false, e.what()};
  }
}

Verdict wf_ctx(const Ctx& ctx) {
  Ctx prefix;
  for (size_t k = 0; k < ctx.size(); ++k) {
    try {
      infer_ty_level(prefix, ctx[k]);
    } catch (const CheckError& e) {
      return {false, "entry " + std::to_string(k) + " (" + print_ty(ctx[k]) +
                         "): " + e.what()};
    } catch (const EvalError& e) {
      return {false, "entry " + std::to_string(k) + " (" + print_ty(ctx[k]) +
                         "): " + e.what()};
    }
    prefix.push_back(ctx[k]);
  }
  return {true, ""};
}

NfTyRef normalize_ty(const Ctx& ctx, const TyRef& ty) {
  infer_ty_level(ctx, ty);
  return normalize_ty_u(ctx, ty);
}

NfTmRef normalize_tm(const Ctx& ctx, const TmRef& tm, const TyRef& ty) {
  check_tm_or_throw(ctx, tm, ty);
  return normalize_tm_u(ctx, tm, ty);
}

bool conv_ty(const Ctx& ctx, const TyRef& x, const TyRef& y) {
  Level i = infer_ty_level(ctx, x);
  Level j = infer_ty_level(ctx, y);
  if (i != j) return false;
  return conv_ty_u(ctx, x, y);
}

bool conv_tm(const Ctx& ctx, const TmRef& x, const TmRef& y, const TyRef& ty) {
  check_tm_or_throw(ctx, x, ty);
  check_tm_or_throw(ctx, y, ty);
  return conv_tm_u(ctx, x, y, ty);
}

NfTmRef eta_expand(const Ctx& ctx, const NfNeRef& ne, const NfTyRef& ty) {
  return normalize_tm_u(ctx, nf_ne_to_raw(ne), nf_ty_to_raw(ty));
}

}  // namespace ssc
