#include "ssc/minim.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ssc/check.hpp"
#include "ssc/eval.hpp"

namespace ssc {

namespace {
[[noreturn]] void bad(const std::string& msg) { throw CheckError(msg); }

Ctx ext(Ctx c, const TyRef& t) {
  c.push_back(t);
  return c;
}
}  // namespace

// --- Patterns ---------------------------------------------------------------

PatRef pat_meta_ty(const std::string& name) {
  auto p = std::make_shared<Pat>();
  p->kind = Pat::Kind::MetaTy;
  p->meta = name;
  return p;
}
PatRef pat_meta_tm(const std::string& name) {
  auto p = std::make_shared<Pat>();
  p->kind = Pat::Kind::MetaTm;
  p->meta = name;
  return p;
}
PatRef pat_meta_sub(const std::string& name) {
  auto p = std::make_shared<Pat>();
  p->kind = Pat::Kind::MetaSub;
  p->meta = name;
  return p;
}
PatRef pat_u(const std::string& level_name) {
  auto p = std::make_shared<Pat>();
  p->kind = Pat::Kind::U;
  p->meta = level_name;
  return p;
}
PatRef pat_node(Pat::Kind k, PatRef a, PatRef b) {
  auto p = std::make_shared<Pat>();
  p->kind = k;
  p->a = std::move(a);
  p->b = std::move(b);
  return p;
}

namespace {
template <class T, class Eq>
bool bind(std::vector<std::pair<std::string, T>>& slot, const std::string& k,
          const T& v, Eq eq) {
  for (const auto& [name, old] : slot)
    if (name == k) return eq(old, v);
  slot.emplace_back(k, v);
  return true;
}

template <class T>
const T* lookup(const std::vector<std::pair<std::string, T>>& slot,
                const std::string& k) {
  for (const auto& [name, v] : slot)
    if (name == k) return &v;
  return nullptr;
}
}  // namespace

bool match_ty(const PatRef& p, const TyRef& t, Binding& b) {
  if (!p || !t) return false;
  switch (p->kind) {
    case Pat::Kind::MetaTy:
      return bind(b.tys, p->meta, t, equal_ty);
    case Pat::Kind::U:
      return t->kind == Ty::Kind::U &&
             bind(b.levels, p->meta, t->level,
                  [](Level x, Level y) { return x == y; });
    case Pat::Kind::El:
      return t->kind == Ty::Kind::El && match_tm(p->a, t->tm, b);
    case Pat::Kind::Pi:
      return t->kind == Ty::Kind::Pi && match_ty(p->a, t->a, b) &&
             match_ty(p->b, t->b, b);
    case Pat::Kind::Lift:
      return t->kind == Ty::Kind::Lift && match_ty(p->a, t->a, b);
    case Pat::Kind::TyInst:
      return t->kind == Ty::Kind::Inst && match_ty(p->a, t->a, b) &&
             match_sub(p->b, t->sub, b);
    default:
      return false;
  }
}

bool match_tm(const PatRef& p, const TmRef& t, Binding& b) {
  if (!p || !t) return false;
  switch (p->kind) {
    case Pat::Kind::MetaTm:
      return bind(b.tms, p->meta, t, equal_tm);
    case Pat::Kind::Q:
      return t->kind == Tm::Kind::Q;
    case Pat::Kind::Lam:
      return t->kind == Tm::Kind::Lam && match_tm(p->a, t->t, b);
    case Pat::Kind::App:
      return t->kind == Tm::Kind::App && match_tm(p->a, t->t, b) &&
             match_tm(p->b, t->u, b);
    case Pat::Kind::Code:
      return t->kind == Tm::Kind::Code && match_ty(p->a, t->ty, b);
    case Pat::Kind::Mk:
      return t->kind == Tm::Kind::Mk && match_tm(p->a, t->t, b);
    case Pat::Kind::Un:
      return t->kind == Tm::Kind::Un && match_tm(p->a, t->t, b);
    case Pat::Kind::TmInst:
      return t->kind == Tm::Kind::Inst && match_tm(p->a, t->t, b) &&
             match_sub(p->b, t->sub, b);
    default:
      return false;
  }
}

bool match_sub(const PatRef& p, const SubRef& s, Binding& b) {
  if (!p || !s) return false;
  switch (p->kind) {
    case Pat::Kind::MetaSub:
      return bind(b.subs, p->meta, s, equal_sub);
    case Pat::Kind::P:
      return s->kind == Sub::Kind::P;
    case Pat::Kind::Single:
      return s->kind == Sub::Kind::Single && match_tm(p->a, s->tm, b);
    case Pat::Kind::Plus:
      return s->kind == Sub::Kind::Plus && match_sub(p->a, s->sub, b);
    default:
      return false;
  }
}

TyRef subst_pat_ty(const PatRef& p, const Binding& b) {
  switch (p->kind) {
    case Pat::Kind::MetaTy: {
      const TyRef* t = lookup(b.tys, p->meta);
      return t ? *t : nullptr;
    }
    case Pat::Kind::U: {
      const Level* l = lookup(b.levels, p->meta);
      return l ? ty_u(*l) : nullptr;
    }
    case Pat::Kind::El: {
      TmRef t = subst_pat_tm(p->a, b);
      return t ? ty_el(t) : nullptr;
    }
    case Pat::Kind::Pi: {
      TyRef x = subst_pat_ty(p->a, b), y = subst_pat_ty(p->b, b);
      return x && y ? ty_pi(x, y) : nullptr;
    }
    case Pat::Kind::Lift: {
      TyRef x = subst_pat_ty(p->a, b);
      return x ? ty_lift(x) : nullptr;
    }
    case Pat::Kind::TyInst: {
      TyRef x = subst_pat_ty(p->a, b);
      SubRef s = subst_pat_sub(p->b, b);
      return x && s ? ty_inst(x, s) : nullptr;
    }
    default:
      return nullptr;
  }
}

TmRef subst_pat_tm(const PatRef& p, const Binding& b) {
  switch (p->kind) {
    case Pat::Kind::MetaTm: {
      const TmRef* t = lookup(b.tms, p->meta);
      return t ? *t : nullptr;
    }
    case Pat::Kind::Q:
      return tm_q();
    case Pat::Kind::Lam: {
      TmRef t = subst_pat_tm(p->a, b);
      return t ? tm_lam(t) : nullptr;
    }
    case Pat::Kind::App: {
      TmRef f = subst_pat_tm(p->a, b), x = subst_pat_tm(p->b, b);
      return f && x ? tm_app(f, x) : nullptr;
    }
    case Pat::Kind::Code: {
      TyRef t = subst_pat_ty(p->a, b);
      return t ? tm_code(t) : nullptr;
    }
    case Pat::Kind::Mk: {
      TmRef t = subst_pat_tm(p->a, b);
      return t ? tm_mk(t) : nullptr;
    }
    case Pat::Kind::Un: {
      TmRef t = subst_pat_tm(p->a, b);
      return t ? tm_un(t) : nullptr;
    }
    case Pat::Kind::TmInst: {
      TmRef t = subst_pat_tm(p->a, b);
      SubRef s = subst_pat_sub(p->b, b);
      return t && s ? tm_inst(t, s) : nullptr;
    }
    default:
      return nullptr;
  }
}

SubRef subst_pat_sub(const PatRef& p, const Binding& b) {
  switch (p->kind) {
    case Pat::Kind::MetaSub: {
      const SubRef* s = lookup(b.subs, p->meta);
      return s ? *s : nullptr;
    }
    case Pat::Kind::P:
      return sub_p();
    case Pat::Kind::Single: {
      TmRef t = subst_pat_tm(p->a, b);
      return t ? sub_single(t) : nullptr;
    }
    case Pat::Kind::Plus: {
      SubRef s = subst_pat_sub(p->a, b);
      return s ? sub_plus(s) : nullptr;
    }
    default:
      return nullptr;
  }
}

// --- Axiom tables -----------------------------------------------------------

namespace {
using K = Pat::Kind;

PatRef mA() { return pat_meta_ty("A"); }
PatRef mB() { return pat_meta_ty("B"); }
PatRef mb() { return pat_meta_tm("b"); }
PatRef ma() { return pat_meta_tm("a"); }
PatRef mt() { return pat_meta_tm("t"); }
PatRef mg() { return pat_meta_sub("g"); }
PatRef pP() { return pat_node(K::P); }
PatRef pQ() { return pat_node(K::Q); }
PatRef pU() { return pat_u("i"); }

// b[p][g+] and b[g][p] shapes.
PatRef tm_pp_lhs(PatRef x) {
  return pat_node(K::TmInst, pat_node(K::TmInst, x, pP()),
                  pat_node(K::Plus, mg()));
}
PatRef tm_pp_rhs(PatRef x) {
  return pat_node(K::TmInst, pat_node(K::TmInst, x, mg()), pP());
}
PatRef ty_pp_lhs(PatRef x) {
  return pat_node(K::TyInst, pat_node(K::TyInst, x, pP()),
                  pat_node(K::Plus, mg()));
}
PatRef ty_pp_rhs(PatRef x) {
  return pat_node(K::TyInst, pat_node(K::TyInst, x, mg()), pP());
}

// B[p+][<q>] of the Pi computation rules.
PatRef ty_pi_input(PatRef x) {
  return pat_node(K::TyInst,
                  pat_node(K::TyInst, x, pat_node(K::Plus, pP())),
                  pat_node(K::Single, pQ()));
}

Axiom ty_eq(std::string name, PatRef l, PatRef r) {
  return Axiom{std::move(name), true, std::move(l), std::move(r), nullptr,
               nullptr};
}
Axiom tm_eq(std::string name, PatRef l, PatRef r) {
  return Axiom{std::move(name), false, std::move(l), std::move(r), nullptr,
               nullptr};
}
Axiom tm_cond(std::string name, PatRef l, PatRef r, PatRef hl, PatRef hr) {
  return Axiom{std::move(name), false, std::move(l), std::move(r),
               std::move(hl), std::move(hr)};
}

std::vector<Axiom> make_minimised() {
  std::vector<Axiom> v;
  // Conditional variable and application rules.
  v.push_back(tm_cond("p-plus-cond", tm_pp_lhs(mb()), tm_pp_rhs(mb()),
                      ty_pp_lhs(mB()), ty_pp_rhs(mB())));
  v.push_back(tm_cond("q-plus-cond",
                      pat_node(K::TmInst, pQ(), pat_node(K::Plus, mg())),
                      pQ(), ty_pp_lhs(mB()), ty_pp_rhs(mB())));
  v.push_back(tm_cond(
      "p-single-cond",
      pat_node(K::TmInst, pat_node(K::TmInst, mb(), pP()),
               pat_node(K::Single, ma())),
      mb(),
      pat_node(K::TyInst, pat_node(K::TyInst, mB(), pP()),
               pat_node(K::Single, ma())),
      mB()));
  v.push_back(tm_cond(
      "q-single-cond",
      pat_node(K::TmInst, pQ(), pat_node(K::Single, ma())), ma(),
      pat_node(K::TyInst, pat_node(K::TyInst, mB(), pP()),
               pat_node(K::Single, ma())),
      mB()));
  v.push_back(tm_cond(
      "app-cond",
      pat_node(K::TmInst, pat_node(K::App, mt(), ma()), mg()),
      pat_node(K::App, pat_node(K::TmInst, mt(), mg()),
               pat_node(K::TmInst, ma(), mg())),
      pat_node(K::TyInst, pat_node(K::TyInst, mB(), pat_node(K::Single, ma())),
               mg()),
      pat_node(K::TyInst, pat_node(K::TyInst, mB(), pat_node(K::Plus, mg())),
               pat_node(K::Single, pat_node(K::TmInst, ma(), mg())))));
  v.push_back(tm_cond(
      "pi-beta-cond",
      pat_node(K::App, pat_node(K::TmInst, pat_node(K::Lam, mb()), pP()),
               pQ()),
      mb(), ty_pi_input(mB()), mB()));
  v.push_back(tm_cond(
      "pi-eta-cond", mt(),
      pat_node(K::Lam,
               pat_node(K::App, pat_node(K::TmInst, mt(), pP()), pQ())),
      ty_pi_input(mB()), mB()));
  // Unconditional substitution and computation rules of the type formers.
  v.push_back(ty_eq("pi-sub",
                    pat_node(K::TyInst, pat_node(K::Pi, mA(), mB()), mg()),
                    pat_node(K::Pi, pat_node(K::TyInst, mA(), mg()),
                             pat_node(K::TyInst, mB(),
                                      pat_node(K::Plus, mg())))));
  v.push_back(tm_eq("lam-sub",
                    pat_node(K::TmInst, pat_node(K::Lam, mb()), mg()),
                    pat_node(K::Lam, pat_node(K::TmInst, mb(),
                                              pat_node(K::Plus, mg())))));
  v.push_back(ty_eq("u-sub", pat_node(K::TyInst, pU(), mg()), pU()));
  v.push_back(ty_eq("el-sub",
                    pat_node(K::TyInst, pat_node(K::El, ma()), mg()),
                    pat_node(K::El, pat_node(K::TmInst, ma(), mg()))));
  v.push_back(tm_eq("code-sub",
                    pat_node(K::TmInst, pat_node(K::Code, mA()), mg()),
                    pat_node(K::Code, pat_node(K::TyInst, mA(), mg()))));
  v.push_back(ty_eq("u-beta", pat_node(K::El, pat_node(K::Code, mA())), mA()));
  v.push_back(tm_eq("u-eta", pat_node(K::Code, pat_node(K::El, ma())), ma()));
  v.push_back(ty_eq("lift-sub",
                    pat_node(K::TyInst, pat_node(K::Lift, mA()), mg()),
                    pat_node(K::Lift, pat_node(K::TyInst, mA(), mg()))));
  v.push_back(tm_eq("mk-sub",
                    pat_node(K::TmInst, pat_node(K::Mk, ma()), mg()),
                    pat_node(K::Mk, pat_node(K::TmInst, ma(), mg()))));
  v.push_back(tm_eq("un-sub",
                    pat_node(K::TmInst, pat_node(K::Un, ma()), mg()),
                    pat_node(K::Un, pat_node(K::TmInst, ma(), mg()))));
  v.push_back(tm_eq("lift-beta", pat_node(K::Un, pat_node(K::Mk, ma())),
                    ma()));
  v.push_back(tm_eq("lift-eta", pat_node(K::Mk, pat_node(K::Un, ma())),
                    ma()));
  return v;
}

// Derived-lemma schemas, citable once their chains replay. pi-beta-u is
// only ever instantiated with a code-valued body; the registered schema is
// the general shape because first-order matching cannot see typing.
std::vector<Axiom> make_derived() {
  std::vector<Axiom> v;
  v.push_back(ty_eq("p-plus-ty", ty_pp_lhs(mB()), ty_pp_rhs(mB())));
  v.push_back(tm_eq("p-plus-tm", tm_pp_lhs(mb()), tm_pp_rhs(mb())));
  v.push_back(tm_eq("q-plus",
                    pat_node(K::TmInst, pQ(), pat_node(K::Plus, mg())),
                    pQ()));
  v.push_back(ty_eq("p-single-ty",
                    pat_node(K::TyInst, pat_node(K::TyInst, mB(), pP()),
                             pat_node(K::Single, ma())),
                    mB()));
  v.push_back(tm_eq("p-single-tm",
                    pat_node(K::TmInst, pat_node(K::TmInst, mb(), pP()),
                             pat_node(K::Single, ma())),
                    mb()));
  v.push_back(tm_eq("q-single",
                    pat_node(K::TmInst, pQ(), pat_node(K::Single, ma())),
                    ma()));
  v.push_back(tm_eq("pi-beta-u", pat_node(K::App, pat_node(K::Lam, mb()), ma()),
                    pat_node(K::TmInst, mb(), pat_node(K::Single, ma()))));
  v.push_back(ty_eq(
      "single-sub-ty",
      pat_node(K::TyInst, pat_node(K::TyInst, mB(), pat_node(K::Single, ma())),
               mg()),
      pat_node(K::TyInst, pat_node(K::TyInst, mB(), pat_node(K::Plus, mg())),
               pat_node(K::Single, pat_node(K::TmInst, ma(), mg())))));
  v.push_back(tm_eq(
      "app-full", pat_node(K::TmInst, pat_node(K::App, mt(), ma()), mg()),
      pat_node(K::App, pat_node(K::TmInst, mt(), mg()),
               pat_node(K::TmInst, ma(), mg()))));
  v.push_back(ty_eq("pi-input-ty", ty_pi_input(mB()), mB()));
  v.push_back(tm_eq("pi-beta", pat_node(K::App, pat_node(K::Lam, mb()), ma()),
                    pat_node(K::TmInst, mb(), pat_node(K::Single, ma()))));
  v.push_back(tm_eq(
      "pi-eta", mt(),
      pat_node(K::Lam,
               pat_node(K::App, pat_node(K::TmInst, mt(), pP()), pQ()))));
  return v;
}
}  // namespace

const std::vector<Axiom>& minimised_axioms() {
  static const std::vector<Axiom> v = make_minimised();
  return v;
}

const std::vector<std::string>& full_axiom_names() {
  static const std::vector<std::string> v = {
      "p-plus-ty",  "p-plus-tm", "q-plus",       "p-single-ty",
      "p-single-tm", "q-single", "single-sub-ty", "pi-input-ty",
      "app-full",   "pi-beta",   "pi-eta",
  };
  return v;
}

const Axiom* find_axiom(const std::string& name) {
  for (const Axiom& a : minimised_axioms())
    if (a.name == name) return &a;
  static const std::vector<Axiom> derived = make_derived();
  for (const Axiom& a : derived)
    if (a.name == name) return &a;
  return nullptr;
}

// --- Rewriting --------------------------------------------------------------

namespace {
// Single-position rewrites of an expression by one oriented axiom. When the
// axiom is conditional, the binding is seeded by matching the hypothesis
// schema against the supplied instance, so shared metavariables constrain
// the conclusion.
struct Rw {
  const Axiom* ax = nullptr;
  bool fwd = true;
  Binding seed;
  bool viable = true;

  Rw(const Axiom& axiom, bool forward, const Hyp* hyp) : ax(&axiom),
                                                         fwd(forward) {
    if (axiom.conditional()) {
      if (!hyp || !match_ty(axiom.hyp_lhs, hyp->lhs, seed) ||
          !match_ty(axiom.hyp_rhs, hyp->rhs, seed))
        viable = false;
    }
  }

  const PatRef& from() const { return fwd ? ax->lhs : ax->rhs; }
  const PatRef& to() const { return fwd ? ax->rhs : ax->lhs; }

  std::vector<TyRef> ty(const TyRef& e) const {
    std::vector<TyRef> out;
    if (!viable) return out;
    if (ax->is_ty) {
      Binding b = seed;
      if (match_ty(from(), e, b))
        if (TyRef r = subst_pat_ty(to(), b)) out.push_back(r);
    }
    switch (e->kind) {
      case Ty::Kind::El:
        for (const TmRef& t : tm(e->tm)) out.push_back(ty_el(t));
        break;
      case Ty::Kind::Pi:
        for (const TyRef& a : ty(e->a)) out.push_back(ty_pi(a, e->b));
        for (const TyRef& b2 : ty(e->b)) out.push_back(ty_pi(e->a, b2));
        break;
      case Ty::Kind::Sigma:
        for (const TyRef& a : ty(e->a)) out.push_back(ty_sigma(a, e->b));
        for (const TyRef& b2 : ty(e->b)) out.push_back(ty_sigma(e->a, b2));
        break;
      case Ty::Kind::Lift:
        for (const TyRef& a : ty(e->a)) out.push_back(ty_lift(a));
        break;
      case Ty::Kind::Inst:
        for (const TyRef& a : ty(e->a)) out.push_back(ty_inst(a, e->sub));
        for (const SubRef& s : sub(e->sub)) out.push_back(ty_inst(e->a, s));
        break;
      default:
        break;
    }
    return out;
  }

  std::vector<TmRef> tm(const TmRef& e) const {
    std::vector<TmRef> out;
    if (!viable) return out;
    if (!ax->is_ty) {
      Binding b = seed;
      if (match_tm(from(), e, b))
        if (TmRef r = subst_pat_tm(to(), b)) out.push_back(r);
    }
    switch (e->kind) {
      case Tm::Kind::Inst:
        for (const TmRef& t : tm(e->t)) out.push_back(tm_inst(t, e->sub));
        for (const SubRef& s : sub(e->sub)) out.push_back(tm_inst(e->t, s));
        break;
      case Tm::Kind::Lam:
        for (const TmRef& t : tm(e->t)) out.push_back(tm_lam(t));
        break;
      case Tm::Kind::App:
        for (const TmRef& t : tm(e->t)) out.push_back(tm_app(t, e->u));
        for (const TmRef& u : tm(e->u)) out.push_back(tm_app(e->t, u));
        break;
      case Tm::Kind::Code:
        for (const TyRef& t : ty(e->ty)) out.push_back(tm_code(t));
        break;
      case Tm::Kind::Mk:
        for (const TmRef& t : tm(e->t)) out.push_back(tm_mk(t));
        break;
      case Tm::Kind::Un:
        for (const TmRef& t : tm(e->t)) out.push_back(tm_un(t));
        break;
      case Tm::Kind::Pair:
        for (const TmRef& t : tm(e->t)) out.push_back(tm_pair(t, e->u));
        for (const TmRef& u : tm(e->u)) out.push_back(tm_pair(e->t, u));
        break;
      case Tm::Kind::Fst:
        for (const TmRef& t : tm(e->t)) out.push_back(tm_fst(t));
        break;
      case Tm::Kind::Snd:
        for (const TmRef& t : tm(e->t)) out.push_back(tm_snd(t));
        break;
      default:
        break;
    }
    return out;
  }

  std::vector<SubRef> sub(const SubRef& e) const {
    std::vector<SubRef> out;
    if (!viable) return out;
    switch (e->kind) {
      case Sub::Kind::Single:
        for (const TmRef& t : tm(e->tm)) out.push_back(sub_single(t));
        break;
      case Sub::Kind::Plus:
        for (const SubRef& s : sub(e->sub))
          out.push_back(sub_plus(s, e->entry_hint));
        break;
      default:
        break;
    }
    return out;
  }
};

constexpr int kMaxRewriteDepth = 3;
constexpr size_t kMaxFrontier = 400;

template <class Ref, class Rewriter, class Equal, class Print>
bool reaches(const Ref& from, const Ref& to, Rewriter rw, Equal eq,
             Print pr) {
  std::set<std::string> seen{pr(from)};
  std::vector<Ref> frontier{from};
  for (int d = 0; d < kMaxRewriteDepth && !frontier.empty(); ++d) {
    std::vector<Ref> next;
    for (const Ref& x : frontier)
      for (const Ref& y : rw(x)) {
        if (eq(y, to)) return true;
        if (seen.size() < kMaxFrontier && seen.insert(pr(y)).second)
          next.push_back(y);
      }
    frontier = std::move(next);
  }
  return false;
}

bool step_matches_ty(const TyRef& from, const TyRef& to, const Axiom& ax,
                     const Hyp* hyp) {
  for (bool fwd : {true, false}) {
    Rw rw(ax, fwd, hyp);
    if (reaches(
            from, to, [&](const TyRef& e) { return rw.ty(e); }, equal_ty,
            [](const TyRef& e) { return print_ty(e); }))
      return true;
  }
  return false;
}

bool step_matches_tm(const TmRef& from, const TmRef& to, const Axiom& ax,
                     const Hyp* hyp) {
  for (bool fwd : {true, false}) {
    Rw rw(ax, fwd, hyp);
    if (reaches(
            from, to, [&](const TmRef& e) { return rw.tm(e); }, equal_tm,
            [](const TmRef& e) { return print_tm(e); }))
      return true;
  }
  return false;
}

// Tolerant well-formedness of a chain expression: the bidirectional
// checker first, the evaluation witness when inference hits a
// checked-only head.
bool expr_wf(const Chain& c, size_t k, std::string* why) {
  try {
    if (c.is_ty) {
      try {
        (void)infer_ty_level(c.ctx, c.tys[k]);
      } catch (const NotInferable&) {
        (void)normalize_ty_u(c.ctx, c.tys[k]);
      }
    } else {
      Verdict v = check_tm(c.ctx, c.tms[k], c.subject_ty);
      if (!v.ok) {
        (void)normalize_ty_u(c.ctx, c.subject_ty);
        (void)normalize_tm_u(c.ctx, c.tms[k], c.subject_ty);
      }
    }
    return true;
  } catch (const std::runtime_error& e) {
    if (why) *why = e.what();
    return false;
  }
}
}  // namespace

// --- Replay -----------------------------------------------------------------

ReplayResult replay(const Chain& chain,
                    const std::vector<std::string>& allowed) {
  size_t n = chain.is_ty ? chain.tys.size() : chain.tms.size();
  if (n < 2 || chain.steps.size() + 1 != n)
    return {false, -1, "malformed chain: " + std::to_string(n) +
                           " expressions, " +
                           std::to_string(chain.steps.size()) + " steps"};
  for (size_t k = 0; k < n; ++k) {
    std::string why;
    if (!expr_wf(chain, k, &why))
      return {false, -1,
              "expression " + std::to_string(k) + " ill-typed: " + why};
  }
  for (size_t k = 0; k < chain.steps.size(); ++k) {
    const Step& st = chain.steps[k];
    if (std::find(allowed.begin(), allowed.end(), st.rule) == allowed.end())
      return {false, static_cast<int>(k),
              "rule " + st.rule + " is not in the allowed set"};
    const Axiom* ax = find_axiom(st.rule);
    if (!ax)
      return {false, static_cast<int>(k), "unknown rule " + st.rule};
    const Hyp* hyp = st.hyp ? &*st.hyp : nullptr;
    if (ax->conditional()) {
      if (!hyp)
        return {false, static_cast<int>(k),
                "conditional rule " + st.rule + " needs a hypothesis"};
      bool holds = false;
      try {
        holds = conv_ty_u(hyp->ctx, hyp->lhs, hyp->rhs);
      } catch (const std::runtime_error&) {
      }
      if (!holds)
        return {false, static_cast<int>(k),
                "hypothesis of step " + std::to_string(k) +
                    " does not hold: " + print_ty(hyp->lhs) +
                    " /= " + print_ty(hyp->rhs)};
    }
    bool ok = chain.is_ty
                  ? step_matches_ty(chain.tys[k], chain.tys[k + 1], *ax, hyp)
                  : step_matches_tm(chain.tms[k], chain.tms[k + 1], *ax, hyp);
    if (!ok)
      return {false, static_cast<int>(k),
              "step " + std::to_string(k) + " is not an instance of " +
                  st.rule};
  }
  return {true, -1, ""};
}

// --- Chain serialisation ----------------------------------------------------

Sexp chain_to_sexp(const Chain& c) {
  std::vector<Sexp> items;
  items.push_back(Sexp::sym("chain"));
  items.push_back(Sexp::sym(c.name));
  items.push_back(Sexp::sym(c.is_ty ? "ty" : "tm"));
  if (c.reconstructed) items.push_back(Sexp::sym("reconstructed"));
  items.push_back(ctx_to_sexp(c.ctx));
  if (!c.is_ty)
    items.push_back(
        Sexp::list({Sexp::sym("at"), ty_to_sexp(c.subject_ty)}));
  std::vector<Sexp> exprs{Sexp::sym("exprs")};
  if (c.is_ty)
    for (const TyRef& t : c.tys) exprs.push_back(ty_to_sexp(t));
  else
    for (const TmRef& t : c.tms) exprs.push_back(tm_to_sexp(t));
  items.push_back(Sexp::list(std::move(exprs)));
  std::vector<Sexp> steps{Sexp::sym("steps")};
  for (const Step& s : c.steps) {
    std::vector<Sexp> st{Sexp::sym("step"), Sexp::sym(s.rule)};
    if (s.hyp)
      st.push_back(Sexp::list({Sexp::sym("hyp"), ctx_to_sexp(s.hyp->ctx),
                               ty_to_sexp(s.hyp->lhs),
                               ty_to_sexp(s.hyp->rhs)}));
    steps.push_back(Sexp::list(std::move(st)));
  }
  items.push_back(Sexp::list(std::move(steps)));
  return Sexp::list(std::move(items));
}

Chain chain_from_sexp(const Sexp& e) {
  auto fail = [](const std::string& msg) -> Chain {
    throw ParseError("chain: " + msg);
  };
  if (e.is_atom || e.items.size() < 5 || !e.items[0].is_atom ||
      e.items[0].atom != "chain")
    return fail("expected (chain name ty|tm ...)");
  Chain c;
  size_t k = 1;
  if (!e.items[k].is_atom) return fail("expected a name");
  c.name = e.items[k++].atom;
  if (!e.items[k].is_atom) return fail("expected ty or tm");
  std::string sort = e.items[k++].atom;
  if (sort != "ty" && sort != "tm") return fail("expected ty or tm");
  c.is_ty = sort == "ty";
  if (e.items[k].is_atom && e.items[k].atom == "reconstructed") {
    c.reconstructed = true;
    ++k;
  }
  c.ctx = ctx_from_sexp(e.items[k++]);
  if (!c.is_ty) {
    const Sexp& at = e.items[k++];
    if (at.is_atom || at.items.size() != 2 || !at.items[0].is_atom ||
        at.items[0].atom != "at")
      return fail("term chain needs (at <ty>)");
    c.subject_ty = ty_from_sexp(at.items[1]);
  }
  const Sexp& exprs = e.items[k++];
  if (exprs.is_atom || exprs.items.empty() || !exprs.items[0].is_atom ||
      exprs.items[0].atom != "exprs")
    return fail("expected (exprs ...)");
  for (size_t j = 1; j < exprs.items.size(); ++j) {
    if (c.is_ty)
      c.tys.push_back(ty_from_sexp(exprs.items[j]));
    else
      c.tms.push_back(tm_from_sexp(exprs.items[j]));
  }
  if (k >= e.items.size()) return fail("expected (steps ...)");
  const Sexp& steps = e.items[k];
  if (steps.is_atom || steps.items.empty() || !steps.items[0].is_atom ||
      steps.items[0].atom != "steps")
    return fail("expected (steps ...)");
  for (size_t j = 1; j < steps.items.size(); ++j) {
    const Sexp& st = steps.items[j];
    if (st.is_atom || st.items.size() < 2 || !st.items[0].is_atom ||
        st.items[0].atom != "step" || !st.items[1].is_atom)
      return fail("expected (step <rule> [hyp])");
    Step s;
    s.rule = st.items[1].atom;
    if (st.items.size() == 3) {
      const Sexp& h = st.items[2];
      if (h.is_atom || h.items.size() != 4 || !h.items[0].is_atom ||
          h.items[0].atom != "hyp")
        return fail("expected (hyp (ctx ...) <ty> <ty>)");
      s.hyp = Hyp{ctx_from_sexp(h.items[1]), ty_from_sexp(h.items[2]),
                  ty_from_sexp(h.items[3])};
    } else if (st.items.size() > 3) {
      return fail("step has too many fields");
    }
    c.steps.push_back(std::move(s));
  }
  return c;
}

std::string print_chain(const Chain& c) { return print_sexp(chain_to_sexp(c)); }

// --- Chain builders ---------------------------------------------------------

namespace {
TyRef TI(const TyRef& a, const SubRef& s) { return ty_inst(a, s); }
TmRef MI(const TmRef& t, const SubRef& s) { return tm_inst(t, s); }
SubRef SS(const TmRef& t) { return sub_single(t); }

Step plain(const std::string& rule) { return Step{rule, std::nullopt}; }
Step with(const std::string& rule, Ctx ctx, TyRef l, TyRef r) {
  return Step{rule, Hyp{std::move(ctx), std::move(l), std::move(r)}};
}

Level subject_level(const Ctx& ctx, const TyRef& b) {
  return infer_ty_level(ctx, b);
}
}  // namespace

const std::vector<std::string>& derived_chain_names() {
  static const std::vector<std::string> v = {
      "p-plus-ty",  "p-plus-tm",    "q-plus",   "p-single-ty",
      "p-single-tm", "q-single",    "pi-beta-u", "single-sub-ty",
      "app-full",   "pi-input-ty", "pi-beta",  "pi-eta",
  };
  return v;
}

Chain build_chain(const std::string& name, const ChainParams& p) {
  const Ctx& G = p.gamma_ctx;
  const TyRef& A = p.entry;
  const TyRef& B = p.subject;
  const TmRef& b = p.subject_tm;
  const TmRef& a = p.arg;
  const SubRef& g = p.gamma;
  Chain c;
  c.name = name;

  if (name == "p-plus-ty") {
    Level i = subject_level(G, B);
    c.is_ty = true;
    c.ctx = ext(p.delta, TI(A, g));
    SubRef gp = sub_plus(g, A);
    TmRef cB = tm_code(B);
    c.tys = {TI(TI(B, sub_p()), gp),
             TI(TI(ty_el(cB), sub_p()), gp),
             ty_el(MI(MI(cB, sub_p()), gp)),
             ty_el(MI(MI(cB, g), sub_p())),
             TI(TI(ty_el(cB), g), sub_p()),
             TI(TI(B, g), sub_p())};
    c.steps = {plain("u-beta"), plain("el-sub"),
               with("p-plus-cond", c.ctx, TI(TI(ty_u(i), sub_p()), gp),
                    TI(TI(ty_u(i), g), sub_p())),
               plain("el-sub"), plain("u-beta")};
    return c;
  }
  if (name == "p-plus-tm") {
    c.ctx = ext(p.delta, TI(A, g));
    SubRef gp = sub_plus(g, A);
    c.subject_ty = TI(TI(B, sub_p()), gp);
    c.tms = {MI(MI(b, sub_p()), gp), MI(MI(b, g), sub_p())};
    c.steps = {with("p-plus-cond", c.ctx, TI(TI(B, sub_p()), gp),
                    TI(TI(B, g), sub_p()))};
    return c;
  }
  if (name == "q-plus") {
    c.ctx = ext(p.delta, TI(A, g));
    SubRef gp = sub_plus(g, A);
    c.subject_ty = TI(TI(A, sub_p()), gp);
    c.tms = {MI(tm_q(), gp), tm_q()};
    c.steps = {with("q-plus-cond", c.ctx, TI(TI(A, sub_p()), gp),
                    TI(TI(A, g), sub_p()))};
    return c;
  }
  if (name == "p-single-ty") {
    Level i = subject_level(G, B);
    c.is_ty = true;
    c.ctx = G;
    TmRef cB = tm_code(B);
    c.tys = {TI(TI(B, sub_p()), SS(a)),
             TI(TI(ty_el(cB), sub_p()), SS(a)),
             ty_el(MI(MI(cB, sub_p()), SS(a))),
             ty_el(cB),
             B};
    c.steps = {plain("u-beta"), plain("el-sub"),
               with("p-single-cond", G, TI(TI(ty_u(i), sub_p()), SS(a)),
                    ty_u(i)),
               plain("u-beta")};
    return c;
  }
  if (name == "p-single-tm") {
    c.ctx = G;
    c.subject_ty = B;
    c.tms = {MI(MI(b, sub_p()), SS(a)), b};
    c.steps = {with("p-single-cond", G, TI(TI(B, sub_p()), SS(a)), B)};
    return c;
  }
  if (name == "q-single") {
    c.ctx = G;
    c.reconstructed = true;
    c.subject_ty = A;
    c.tms = {MI(tm_q(), SS(a)), a};
    c.steps = {with("q-single-cond", G, TI(TI(A, sub_p()), SS(a)), A)};
    return c;
  }
  if (name == "pi-beta-u") {
    Level i = p.level;
    c.ctx = G;
    TmRef L = tm_lam(b);  // b is the code-valued body B-hat
    TyRef piAU = ty_pi(A, ty_u(i));
    TyRef ap = TI(A, sub_p());
    c.subject_ty = ty_u(i);
    c.tms = {tm_app(L, a),
             tm_app(L, MI(tm_q(), SS(a))),
             tm_app(MI(MI(L, sub_p()), SS(a)), MI(tm_q(), SS(a))),
             MI(tm_app(MI(L, sub_p()), tm_q()), SS(a)),
             MI(b, SS(a))};
    c.steps = {
        with("q-single-cond", G, TI(TI(A, sub_p()), SS(a)), A),
        with("p-single-cond", G, TI(TI(piAU, sub_p()), SS(a)), piAU),
        with("app-cond", G, TI(TI(ty_u(i), SS(tm_q())), SS(a)),
             TI(TI(ty_u(i), sub_plus(SS(a), ap)),
                SS(MI(tm_q(), SS(a))))),
        with("pi-beta-cond", ext(G, A),
             TI(TI(ty_u(i), sub_plus(sub_p(), A)), SS(tm_q())), ty_u(i))};
    return c;
  }
  if (name == "single-sub-ty") {
    Level i = subject_level(ext(G, A), B);
    c.is_ty = true;
    c.ctx = p.delta;
    TmRef cB = tm_code(B);
    TmRef L = tm_lam(cB);
    SubRef gp = sub_plus(g, A);
    c.tys = {TI(TI(B, SS(a)), g),
             ty_el(tm_code(TI(TI(B, SS(a)), g))),
             ty_el(MI(MI(cB, SS(a)), g)),
             ty_el(MI(tm_app(L, a), g)),
             ty_el(tm_app(MI(L, g), MI(a, g))),
             ty_el(tm_app(tm_lam(MI(cB, gp)), MI(a, g))),
             ty_el(MI(MI(cB, gp), SS(MI(a, g)))),
             ty_el(tm_code(TI(TI(B, gp), SS(MI(a, g))))),
             TI(TI(B, gp), SS(MI(a, g)))};
    c.steps = {plain("u-beta"), plain("code-sub"), plain("pi-beta-u"),
               with("app-cond", p.delta, TI(TI(ty_u(i), SS(a)), g),
                    TI(TI(ty_u(i), gp), SS(MI(a, g)))),
               plain("lam-sub"), plain("pi-beta-u"), plain("code-sub"),
               plain("u-beta")};
    return c;
  }
  if (name == "app-full") {
    c.ctx = p.delta;
    const TmRef& t = b;  // t : Tm G (Pi A B)
    SubRef gp = sub_plus(g, A);
    c.subject_ty = TI(TI(B, SS(a)), g);
    c.tms = {MI(tm_app(t, a), g), tm_app(MI(t, g), MI(a, g))};
    c.steps = {with("app-cond", p.delta, TI(TI(B, SS(a)), g),
                    TI(TI(B, gp), SS(MI(a, g))))};
    return c;
  }
  if (name == "pi-input-ty") {
    Level i = subject_level(ext(G, A), B);
    c.is_ty = true;
    c.ctx = ext(G, A);
    TmRef cB = tm_code(B);
    SubRef pp = sub_plus(sub_p(), A);
    c.tys = {TI(TI(B, pp), SS(tm_q())),
             TI(TI(ty_el(cB), pp), SS(tm_q())),
             ty_el(MI(MI(cB, pp), SS(tm_q()))),
             ty_el(tm_app(tm_lam(MI(cB, pp)), tm_q())),
             ty_el(tm_app(MI(tm_lam(cB), sub_p()), tm_q())),
             ty_el(cB),
             B};
    c.steps = {plain("u-beta"), plain("el-sub"), plain("pi-beta-u"),
               plain("lam-sub"),
               with("pi-beta-cond", c.ctx,
                    TI(TI(ty_u(i), pp), SS(tm_q())), ty_u(i)),
               plain("u-beta")};
    return c;
  }
  if (name == "pi-beta") {
    c.ctx = G;
    TmRef L = tm_lam(b);  // b : Tm (G # A) B
    TyRef piAB = ty_pi(A, B);
    TyRef bp = TI(B, sub_plus(sub_p(), A));  // B[p+]
    TyRef ap = TI(A, sub_p());
    c.subject_ty = TI(B, SS(a));
    c.tms = {tm_app(L, a),
             tm_app(L, MI(tm_q(), SS(a))),
             tm_app(MI(MI(L, sub_p()), SS(a)), MI(tm_q(), SS(a))),
             MI(tm_app(MI(L, sub_p()), tm_q()), SS(a)),
             MI(b, SS(a))};
    c.steps = {
        with("q-single-cond", G, TI(TI(A, sub_p()), SS(a)), A),
        with("p-single-cond", G, TI(TI(piAB, sub_p()), SS(a)), piAB),
        with("app-cond", G, TI(TI(bp, SS(tm_q())), SS(a)),
             TI(TI(bp, sub_plus(SS(a), ap)), SS(MI(tm_q(), SS(a))))),
        with("pi-beta-cond", ext(G, A),
             TI(TI(B, sub_plus(sub_p(), A)), SS(tm_q())), B)};
    return c;
  }
  if (name == "pi-eta") {
    c.ctx = G;
    const TmRef& t = b;  // t : Tm G (Pi A B)
    c.subject_ty = ty_pi(A, B);
    c.tms = {t, tm_lam(tm_app(MI(t, sub_p()), tm_q()))};
    c.steps = {with("pi-eta-cond", ext(G, A),
                    TI(TI(B, sub_plus(sub_p(), A)), SS(tm_q())), B)};
    return c;
  }
  throw std::invalid_argument("unknown chain: " + name);
}

// --- Fixed representative derivations ---------------------------------------

namespace {
ChainParams fixed_params(const std::string& name) {
  // G0 = (ctx (U 0)); D0 extends it so p : D0 -> G0.
  Ctx G0 = {ty_u(0)};
  Ctx D0 = {ty_u(0), ty_u(0)};
  // G1 = (ctx (U 0) (El q)) has an inhabited entry: a1 = q.
  Ctx G1 = {ty_u(0), ty_el(tm_q())};
  TyRef A1 = ty_el(tm_inst(tm_q(), sub_p()));  // over G1
  TmRef a1 = tm_q();
  Ctx E1 = ext(G1, A1);
  TmRef b1 = tm_inst(tm_inst(tm_q(), sub_p()), sub_p());  // : U 0 over E1
  ChainParams p;
  if (name == "p-plus-ty" || name == "p-plus-tm" || name == "q-plus") {
    p.gamma_ctx = G0;
    p.entry = ty_el(tm_q());
    p.subject = ty_u(0);
    p.subject_tm = tm_q();
    p.delta = D0;
    p.gamma = sub_p();
    return p;
  }
  if (name == "p-single-ty" || name == "p-single-tm" || name == "q-single") {
    p.gamma_ctx = G1;
    p.entry = A1;
    p.subject = ty_u(0);
    p.subject_tm = tm_q();  // : Tm G1 (U 0) up to conversion? q : El q [p]
    // A term of (U 0) in G1 is the first variable.
    p.subject_tm = tm_inst(tm_q(), sub_p());
    p.arg = a1;
    return p;
  }
  if (name == "pi-beta-u" || name == "pi-beta") {
    p.gamma_ctx = G1;
    p.entry = A1;
    p.subject = ty_u(0);   // B over G1 # A1 (pi-beta)
    p.subject_tm = b1;     // B-hat / b : Tm E1 (U 0)
    p.arg = a1;
    p.level = 0;
    return p;
  }
  if (name == "single-sub-ty" || name == "app-full") {
    p.gamma_ctx = G1;
    p.entry = A1;
    p.subject = ty_u(0);  // B over G1 # A1
    p.arg = a1;
    p.delta = ext(G1, ty_u(0));
    p.gamma = sub_p();
    if (name == "app-full") p.subject_tm = tm_lam(b1);  // : Pi A1 (U 0)
    return p;
  }
  if (name == "pi-input-ty" || name == "pi-eta") {
    p.gamma_ctx = G1;
    p.entry = A1;
    p.subject = ty_u(0);
    if (name == "pi-eta") p.subject_tm = tm_lam(b1);
    return p;
  }
  throw std::invalid_argument("unknown chain: " + name);
}
}  // namespace

std::vector<std::string> allowed_for(const std::string& name) {
  std::vector<std::string> allowed;
  for (const Axiom& a : minimised_axioms()) allowed.push_back(a.name);
  for (const std::string& n : derived_chain_names()) {
    if (n == name) break;
    allowed.push_back(n);
  }
  return allowed;
}

Chain derive_full_axiom(const std::string& name) {
  return build_chain(name, fixed_params(name));
}

// --- Interderivability sampling ---------------------------------------------

namespace {
Ctx gen_ctx(Gen& gen) {
  Tel t = gen.tel({});
  return tel_append({}, t);
}

// A random substitution with the given codomain, together with its domain.
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

ChainParams gen_params(const std::string& name, Gen& gen) {
  ChainParams p;
  p.gamma_ctx = gen_ctx(gen);
  p.entry = gen.ty(p.gamma_ctx);
  if (name == "p-plus-ty" || name == "p-plus-tm" || name == "q-plus") {
    p.subject = gen.ty(p.gamma_ctx);
    if (name == "p-plus-tm") p.subject_tm = gen.tm(p.gamma_ctx, p.subject);
    auto [d, g] = gen_sub_into(gen, p.gamma_ctx);
    p.delta = d;
    p.gamma = g;
    return p;
  }
  if (name == "p-single-ty" || name == "p-single-tm" || name == "q-single") {
    p.arg = gen.tm(p.gamma_ctx, p.entry);
    p.subject = gen.ty(p.gamma_ctx);
    if (name == "p-single-tm")
      p.subject_tm = gen.tm(p.gamma_ctx, p.subject);
    return p;
  }
  Ctx e = ext(p.gamma_ctx, p.entry);
  if (name == "pi-beta-u") {
    p.level = gen.pick(gen.config().max_level + 1);
    p.subject_tm = gen.tm(e, ty_u(p.level));
    p.arg = gen.tm(p.gamma_ctx, p.entry);
    return p;
  }
  p.subject = gen.ty(e);  // B over Gamma # A
  if (name == "single-sub-ty" || name == "app-full") {
    p.arg = gen.tm(p.gamma_ctx, p.entry);
    auto [d, g] = gen_sub_into(gen, p.gamma_ctx);
    p.delta = d;
    p.gamma = g;
    if (name == "app-full")
      p.subject_tm = gen.tm(p.gamma_ctx, ty_pi(p.entry, p.subject));
    return p;
  }
  if (name == "pi-input-ty") return p;
  if (name == "pi-beta") {
    p.subject_tm = gen.tm(e, p.subject);
    p.arg = gen.tm(p.gamma_ctx, p.entry);
    return p;
  }
  if (name == "pi-eta") {
    p.subject_tm = gen.tm(p.gamma_ctx, ty_pi(p.entry, p.subject));
    return p;
  }
  throw std::invalid_argument("unknown chain: " + name);
}
}  // namespace

bool check_min_axiom_instance(const std::string& name, Gen& gen) {
  Ctx G = gen_ctx(gen);
  TyRef A = gen.ty(G);
  TyRef B = gen.ty(G);
  Level i = gen.pick(gen.config().max_level + 1);

  if (name == "p-plus-cond" || name == "q-plus-cond") {
    auto [D, g] = gen_sub_into(gen, G);
    Ctx ce = ext(D, TI(A, g));
    SubRef gp = sub_plus(g, A);
    if (name == "q-plus-cond")
      return conv_tm_u(ce, MI(tm_q(), gp), tm_q(),
                       TI(TI(A, sub_p()), gp));
    TmRef b = gen.tm(G, B);
    return conv_tm_u(ce, MI(MI(b, sub_p()), gp), MI(MI(b, g), sub_p()),
                     TI(TI(B, sub_p()), gp));
  }
  if (name == "p-single-cond" || name == "q-single-cond") {
    TmRef a = gen.tm(G, A);
    if (name == "q-single-cond")
      return conv_tm_u(G, MI(tm_q(), SS(a)), a, A);
    TmRef b = gen.tm(G, B);
    return conv_tm_u(G, MI(MI(b, sub_p()), SS(a)), b, B);
  }

  Ctx e = ext(G, A);
  TyRef Bx = gen.ty(e);
  if (name == "app-cond") {
    TmRef t = gen.tm(G, ty_pi(A, Bx));
    TmRef a = gen.tm(G, A);
    auto [D, g] = gen_sub_into(gen, G);
    return conv_tm_u(D, MI(tm_app(t, a), g),
                     tm_app(MI(t, g), MI(a, g)), TI(TI(Bx, SS(a)), g));
  }
  if (name == "pi-beta-cond") {
    TmRef b = gen.tm(e, Bx);
    return conv_tm_u(e, tm_app(MI(tm_lam(b), sub_p()), tm_q()), b, Bx);
  }
  if (name == "pi-eta-cond") {
    TmRef t = gen.tm(G, ty_pi(A, Bx));
    return conv_tm_u(G, t, tm_lam(tm_app(MI(t, sub_p()), tm_q())),
                     ty_pi(A, Bx));
  }
  if (name == "pi-sub") {
    auto [D, g] = gen_sub_into(gen, G);
    return conv_ty_u(D, TI(ty_pi(A, Bx), g),
                     ty_pi(TI(A, g), TI(Bx, sub_plus(g, A))));
  }
  if (name == "lam-sub") {
    TmRef b = gen.tm(e, Bx);
    auto [D, g] = gen_sub_into(gen, G);
    return conv_tm_u(D, MI(tm_lam(b), g),
                     tm_lam(MI(b, sub_plus(g, A))), TI(ty_pi(A, Bx), g));
  }
  if (name == "u-sub") {
    auto [D, g] = gen_sub_into(gen, G);
    return conv_ty_u(D, TI(ty_u(i), g), ty_u(i));
  }
  if (name == "el-sub" || name == "u-eta") {
    TmRef ahat = gen.tm(G, ty_u(i));
    if (name == "u-eta")
      return conv_tm_u(G, tm_code(ty_el(ahat)), ahat, ty_u(i));
    auto [D, g] = gen_sub_into(gen, G);
    return conv_ty_u(D, TI(ty_el(ahat), g), ty_el(MI(ahat, g)));
  }
  if (name == "code-sub") {
    auto [D, g] = gen_sub_into(gen, G);
    Level j = infer_ty_level(G, B);
    return conv_tm_u(D, MI(tm_code(B), g), tm_code(TI(B, g)), ty_u(j));
  }
  if (name == "u-beta") return conv_ty_u(G, ty_el(tm_code(B)), B);
  if (name == "lift-sub") {
    auto [D, g] = gen_sub_into(gen, G);
    return conv_ty_u(D, TI(ty_lift(B), g), ty_lift(TI(B, g)));
  }
  if (name == "mk-sub") {
    TmRef b = gen.tm(G, B);
    auto [D, g] = gen_sub_into(gen, G);
    return conv_tm_u(D, MI(tm_mk(b), g), tm_mk(MI(b, g)),
                     TI(ty_lift(B), g));
  }
  if (name == "un-sub") {
    TmRef s = gen.tm(G, ty_lift(B));
    auto [D, g] = gen_sub_into(gen, G);
    return conv_tm_u(D, MI(tm_un(s), g), tm_un(MI(s, g)), TI(B, g));
  }
  if (name == "lift-beta") {
    TmRef b = gen.tm(G, B);
    return conv_tm_u(G, tm_un(tm_mk(b)), b, B);
  }
  if (name == "lift-eta") {
    TmRef s = gen.tm(G, ty_lift(B));
    return conv_tm_u(G, tm_mk(tm_un(s)), s, ty_lift(B));
  }
  throw std::invalid_argument("unknown minimised axiom: " + name);
}

EquivReport equivalence_check(Gen& gen, int count) {
  EquivReport r;
  constexpr int kAttempts = 40;
  for (const std::string& name : derived_chain_names()) {
    int done = 0;
    for (int k = 0; k < count * kAttempts && done < count; ++k) {
      ChainParams p;
      try {
        p = gen_params(name, gen);
      } catch (const Exhausted&) {
        continue;
      }
      Chain c;
      try {
        c = build_chain(name, p);
      } catch (const std::runtime_error&) {
        continue;
      }
      ReplayResult res = replay(c, allowed_for(name));
      ++r.full_checked;
      ++done;
      if (res.ok) {
        ++r.full_passed;
      } else if (r.detail.empty()) {
        r.detail = "chain " + name + ": " + res.detail;
      }
    }
    if (done < count && r.detail.empty())
      r.detail = "chain " + name + ": only " + std::to_string(done) +
                 " instances generated";
  }
  for (const Axiom& ax : minimised_axioms()) {
    int done = 0;
    for (int k = 0; k < count * kAttempts && done < count; ++k) {
      bool ok = false;
      try {
        ok = check_min_axiom_instance(ax.name, gen);
      } catch (const Exhausted&) {
        continue;
      }
      ++r.min_checked;
      ++done;
      if (ok) {
        ++r.min_passed;
      } else if (r.detail.empty()) {
        r.detail = "minimised axiom " + ax.name + ": instance not convertible";
      }
    }
    if (done < count && r.detail.empty())
      r.detail = "axiom " + ax.name + ": only " + std::to_string(done) +
                 " instances generated";
  }
  (void)bad;
  return r;
}

}  // namespace ssc
