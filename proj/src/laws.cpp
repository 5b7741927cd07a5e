#include "ssc/laws.hpp"

#include <stdexcept>

#include "ssc/check.hpp"
#include "ssc/eval.hpp"

namespace ssc {

namespace {
Ctx ext(Ctx c, const TyRef& t) {
  c.push_back(t);
  return c;
}
TyRef TI(const TyRef& a, const SubRef& s) { return ty_inst(a, s); }
TmRef MI(const TmRef& t, const SubRef& s) { return tm_inst(t, s); }
SubRef SS(const TmRef& t) { return sub_single(t); }
}  // namespace

const std::vector<std::string>& core_equation_names() {
  static const std::vector<std::string> v = {
      "p-plus-ty",  "p-plus-tm",     "q-plus",      "p-single-ty",
      "p-single-tm", "q-single",     "single-comp-ty", "pi-input-ty",
  };
  return v;
}

const std::vector<std::string>& former_law_names() {
  static const std::vector<std::string> v = {
      "pi-sub",   "lam-sub",  "app-sub",  "pi-beta",   "pi-eta",
      "u-sub",    "el-sub",   "code-sub", "u-beta",    "u-eta",
      "lift-sub", "mk-sub",   "un-sub",   "lift-beta", "lift-eta",
      "top-sub",  "tt-sub",   "sigma-sub", "pair-sub", "proj-sub",
  };
  return v;
}

std::pair<Ctx, SubRef> gen_sub_into(Gen& gen, const Ctx& cod) {
  if (!cod.empty() && gen.chance(40)) {
    Ctx base(cod.begin(), cod.end() - 1);
    if (gen.chance(50)) {
      try {
        TmRef a = gen.tm(base, cod.back());
        return {base, sub_single(a)};
      } catch (const Exhausted&) {
      }
    }
    auto [d0, g0] = gen_sub_into(gen, base);
    return {ext(d0, ty_inst(cod.back(), g0)), sub_plus(g0, cod.back())};
  }
  return {ext(cod, gen.ty(cod)), sub_p()};
}

bool check_equation_instance(const std::string& name, Gen& gen,
                             std::string* cex) {
  // Conversion wrappers that record the failing instance in the
  // s-expression grammar.
  auto CTY = [&](const Ctx& c, const TyRef& x, const TyRef& y) {
    if (conv_ty_u(c, x, y)) return true;
    if (cex)
      *cex = "(in " + print_ctx(c) + " " + print_ty(x) + " " + print_ty(y) +
             ")";
    return false;
  };
  auto CTM = [&](const Ctx& c, const TmRef& x, const TmRef& y,
                 const TyRef& t) {
    if (conv_tm_u(c, x, y, t)) return true;
    if (cex)
      *cex = "(in " + print_ctx(c) + " (the " + print_ty(t) + " " +
             print_tm(x) + ") (the " + print_ty(t) + " " + print_tm(y) + "))";
    return false;
  };
  Ctx G = tel_append({}, gen.tel({}));
  TyRef A = gen.ty(G);
  TyRef B = gen.ty(G);
  Level i = gen.pick(gen.config().max_level + 1);

  // --- Core equations.
  if (name == "p-plus-ty" || name == "p-plus-tm" || name == "q-plus") {
    auto [D, g] = gen_sub_into(gen, G);
    Ctx ce = ext(D, TI(A, g));
    SubRef gp = sub_plus(g, A);
    if (name == "p-plus-ty")
      return CTY(ce, TI(TI(B, sub_p()), gp), TI(TI(B, g), sub_p()));
    if (name == "q-plus")
      return CTM(ce, MI(tm_q(), gp), tm_q(), TI(TI(A, sub_p()), gp));
    TmRef b = gen.tm(G, B);
    return CTM(ce, MI(MI(b, sub_p()), gp), MI(MI(b, g), sub_p()),
                     TI(TI(B, sub_p()), gp));
  }
  if (name == "p-single-ty" || name == "p-single-tm" || name == "q-single") {
    TmRef a = gen.tm(G, A);
    if (name == "p-single-ty")
      return CTY(G, TI(TI(B, sub_p()), SS(a)), B);
    if (name == "q-single") return CTM(G, MI(tm_q(), SS(a)), a, A);
    TmRef b = gen.tm(G, B);
    return CTM(G, MI(MI(b, sub_p()), SS(a)), b, B);
  }
  Ctx e = ext(G, A);
  TyRef Bx = gen.ty(e);
  if (name == "single-comp-ty") {
    TmRef a = gen.tm(G, A);
    auto [D, g] = gen_sub_into(gen, G);
    return CTY(D, TI(TI(Bx, SS(a)), g),
                     TI(TI(Bx, sub_plus(g, A)), SS(MI(a, g))));
  }
  if (name == "pi-input-ty") {
    return CTY(e, TI(TI(Bx, sub_plus(sub_p(), A)), SS(tm_q())), Bx);
  }

  // --- Pi laws.
  if (name == "pi-sub") {
    auto [D, g] = gen_sub_into(gen, G);
    return CTY(D, TI(ty_pi(A, Bx), g),
                     ty_pi(TI(A, g), TI(Bx, sub_plus(g, A))));
  }
  if (name == "lam-sub") {
    TmRef b = gen.tm(e, Bx);
    auto [D, g] = gen_sub_into(gen, G);
    return CTM(D, MI(tm_lam(b), g), tm_lam(MI(b, sub_plus(g, A))),
                     TI(ty_pi(A, Bx), g));
  }
  if (name == "app-sub") {
    TmRef t = gen.tm(G, ty_pi(A, Bx));
    TmRef a = gen.tm(G, A);
    auto [D, g] = gen_sub_into(gen, G);
    return CTM(D, MI(tm_app(t, a), g), tm_app(MI(t, g), MI(a, g)),
                     TI(TI(Bx, SS(a)), g));
  }
  if (name == "pi-beta") {
    TmRef b = gen.tm(e, Bx);
    TmRef a = gen.tm(G, A);
    return CTM(G, tm_app(tm_lam(b), a), MI(b, SS(a)), TI(Bx, SS(a)));
  }
  if (name == "pi-eta") {
    TmRef t = gen.tm(G, ty_pi(A, Bx));
    return CTM(G, t, tm_lam(tm_app(MI(t, sub_p()), tm_q())),
                     ty_pi(A, Bx));
  }

  // --- Universe laws.
  if (name == "u-sub") {
    auto [D, g] = gen_sub_into(gen, G);
    return CTY(D, TI(ty_u(i), g), ty_u(i));
  }
  if (name == "el-sub" || name == "u-eta") {
    TmRef ahat = gen.tm(G, ty_u(i));
    if (name == "u-eta")
      return CTM(G, tm_code(ty_el(ahat)), ahat, ty_u(i));
    auto [D, g] = gen_sub_into(gen, G);
    return CTY(D, TI(ty_el(ahat), g), ty_el(MI(ahat, g)));
  }
  if (name == "code-sub") {
    auto [D, g] = gen_sub_into(gen, G);
    Level j = infer_ty_level(G, B);
    return CTM(D, MI(tm_code(B), g), tm_code(TI(B, g)), ty_u(j));
  }
  if (name == "u-beta") return CTY(G, ty_el(tm_code(B)), B);

  // --- Lift laws.
  if (name == "lift-sub") {
    auto [D, g] = gen_sub_into(gen, G);
    return CTY(D, TI(ty_lift(B), g), ty_lift(TI(B, g)));
  }
  if (name == "mk-sub") {
    TmRef b = gen.tm(G, B);
    auto [D, g] = gen_sub_into(gen, G);
    return CTM(D, MI(tm_mk(b), g), tm_mk(MI(b, g)), TI(ty_lift(B), g));
  }
  if (name == "un-sub") {
    TmRef s = gen.tm(G, ty_lift(B));
    auto [D, g] = gen_sub_into(gen, G);
    return CTM(D, MI(tm_un(s), g), tm_un(MI(s, g)), TI(B, g));
  }
  if (name == "lift-beta") {
    TmRef b = gen.tm(G, B);
    return CTM(G, tm_un(tm_mk(b)), b, B);
  }
  if (name == "lift-eta") {
    TmRef s = gen.tm(G, ty_lift(B));
    return CTM(G, tm_mk(tm_un(s)), s, ty_lift(B));
  }

  // --- Top and Sigma laws.
  if (name == "top-sub") {
    auto [D, g] = gen_sub_into(gen, G);
    return CTY(D, TI(ty_top(), g), ty_top());
  }
  if (name == "tt-sub") {
    auto [D, g] = gen_sub_into(gen, G);
    return CTM(D, MI(tm_tt(), g), tm_tt(), TI(ty_top(), g));
  }
  if (name == "sigma-sub") {
    auto [D, g] = gen_sub_into(gen, G);
    return CTY(D, TI(ty_sigma(A, Bx), g),
                     ty_sigma(TI(A, g), TI(Bx, sub_plus(g, A))));
  }
  if (name == "pair-sub") {
    TmRef x = gen.tm(G, A);
    TmRef y = gen.tm(G, TI(Bx, SS(x)));
    auto [D, g] = gen_sub_into(gen, G);
    return CTM(D, MI(tm_pair(x, y), g), tm_pair(MI(x, g), MI(y, g)),
                     TI(ty_sigma(A, Bx), g));
  }
  if (name == "proj-sub") {
    TmRef w = gen.tm(G, ty_sigma(A, Bx));
    auto [D, g] = gen_sub_into(gen, G);
    return CTM(D, MI(tm_fst(w), g), tm_fst(MI(w, g)), TI(A, g)) &&
           CTM(D, MI(tm_snd(w), g), tm_snd(MI(w, g)),
                     TI(TI(Bx, SS(tm_fst(w))), g));
  }
  throw std::invalid_argument("unknown equation: " + name);
}

}  // namespace ssc
