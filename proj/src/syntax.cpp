#include "ssc/syntax.hpp"

#include <stdexcept>

namespace ssc {

namespace {
TyRef make_ty(Ty t) { return std::make_shared<const Ty>(std::move(t)); }
TmRef make_tm(Tm t) { return std::make_shared<const Tm>(std::move(t)); }
SubRef make_sub(Sub s) { return std::make_shared<const Sub>(std::move(s)); }
}  // namespace

TyRef ty_u(Level i) {
  Ty t;
  t.kind = Ty::Kind::U;
  t.level = i;
  return make_ty(std::move(t));
}
TyRef ty_el(TmRef tm) {
  Ty t;
  t.kind = Ty::Kind::El;
  t.tm = std::move(tm);
  return make_ty(std::move(t));
}
TyRef ty_pi(TyRef a, TyRef b) {
  Ty t;
  t.kind = Ty::Kind::Pi;
  t.a = std::move(a);
  t.b = std::move(b);
  return make_ty(std::move(t));
}
TyRef ty_sigma(TyRef a, TyRef b) {
  Ty t;
  t.kind = Ty::Kind::Sigma;
  t.a = std::move(a);
  t.b = std::move(b);
  return make_ty(std::move(t));
}
TyRef ty_top() {
  static const TyRef top = [] {
    Ty t;
    t.kind = Ty::Kind::Top;
    return make_ty(std::move(t));
  }();
  return top;
}
TyRef ty_lift(TyRef a) {
  Ty t;
  t.kind = Ty::Kind::Lift;
  t.a = std::move(a);
  return make_ty(std::move(t));
}
TyRef ty_inst(TyRef a, SubRef s) {
  Ty t;
  t.kind = Ty::Kind::Inst;
  t.a = std::move(a);
  t.sub = std::move(s);
  return make_ty(std::move(t));
}
TyRef ty_arrow(TyRef a, TyRef b) {
  return ty_pi(std::move(a), ty_inst(std::move(b), sub_p()));
}

TmRef tm_q() {
  static const TmRef q = [] {
    Tm t;
    t.kind = Tm::Kind::Q;
    return make_tm(std::move(t));
  }();
  return q;
}
TmRef tm_inst(TmRef tm, SubRef s) {
  Tm t;
  t.kind = Tm::Kind::Inst;
  t.t = std::move(tm);
  t.sub = std::move(s);
  return make_tm(std::move(t));
}
TmRef tm_lam(TmRef body) {
  Tm t;
  t.kind = Tm::Kind::Lam;
  t.t = std::move(body);
  return make_tm(std::move(t));
}
TmRef tm_app(TmRef f, TmRef arg) {
  Tm t;
  t.kind = Tm::Kind::App;
  t.t = std::move(f);
  t.u = std::move(arg);
  return make_tm(std::move(t));
}
TmRef tm_code(TyRef a) {
  Tm t;
  t.kind = Tm::Kind::Code;
  t.ty = std::move(a);
  return make_tm(std::move(t));
}
TmRef tm_mk(TmRef x) {
  Tm t;
  t.kind = Tm::Kind::Mk;
  t.t = std::move(x);
  return make_tm(std::move(t));
}
TmRef tm_un(TmRef x) {
  Tm t;
  t.kind = Tm::Kind::Un;
  t.t = std::move(x);
  return make_tm(std::move(t));
}
TmRef tm_tt() {
  static const TmRef tt = [] {
    Tm t;
    t.kind = Tm::Kind::Tt;
    return make_tm(std::move(t));
  }();
  return tt;
}
TmRef tm_pair(TmRef a, TmRef b) {
  Tm t;
  t.kind = Tm::Kind::Pair;
  t.t = std::move(a);
  t.u = std::move(b);
  return make_tm(std::move(t));
}
TmRef tm_fst(TmRef x) {
  Tm t;
  t.kind = Tm::Kind::Fst;
  t.t = std::move(x);
  return make_tm(std::move(t));
}
TmRef tm_snd(TmRef x) {
  Tm t;
  t.kind = Tm::Kind::Snd;
  t.t = std::move(x);
  return make_tm(std::move(t));
}

SubRef sub_p() {
  static const SubRef p = [] {
    Sub s;
    s.kind = Sub::Kind::P;
    return make_sub(std::move(s));
  }();
  return p;
}
SubRef sub_single(TmRef t) {
  Sub s;
  s.kind = Sub::Kind::Single;
  s.tm = std::move(t);
  return make_sub(std::move(s));
}
SubRef sub_plus(SubRef inner, TyRef entry_hint) {
  Sub s;
  s.kind = Sub::Kind::Plus;
  s.sub = std::move(inner);
  s.entry_hint = std::move(entry_hint);
  return make_sub(std::move(s));
}

TmRef tm_var(int k) {
  TmRef t = tm_q();
  for (int i = 0; i < k; ++i) t = tm_inst(t, sub_p());
  return t;
}

bool equal_ty(const TyRef& x, const TyRef& y) {
  if (x == y) return true;
  if (!x || !y) return false;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case Ty::Kind::U:
      return x->level == y->level;
    case Ty::Kind::El:
      return equal_tm(x->tm, y->tm);
    case Ty::Kind::Pi:
    case Ty::Kind::Sigma:
      return equal_ty(x->a, y->a) && equal_ty(x->b, y->b);
    case Ty::Kind::Top:
      return true;
    case Ty::Kind::Lift:
      return equal_ty(x->a, y->a);
    case Ty::Kind::Inst:
      return equal_ty(x->a, y->a) && equal_sub(x->sub, y->sub);
  }
  return false;
}

bool equal_tm(const TmRef& x, const TmRef& y) {
  if (x == y) return true;
  if (!x || !y) return false;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case Tm::Kind::Q:
    case Tm::Kind::Tt:
      return true;
    case Tm::Kind::Inst:
      return equal_tm(x->t, y->t) && equal_sub(x->sub, y->sub);
    case Tm::Kind::Lam:
    case Tm::Kind::Mk:
    case Tm::Kind::Un:
    case Tm::Kind::Fst:
    case Tm::Kind::Snd:
      return equal_tm(x->t, y->t);
    case Tm::Kind::App:
    case Tm::Kind::Pair:
      return equal_tm(x->t, y->t) && equal_tm(x->u, y->u);
    case Tm::Kind::Code:
      return equal_ty(x->ty, y->ty);
  }
  return false;
}

bool equal_sub(const SubRef& x, const SubRef& y) {
  if (x == y) return true;
  if (!x || !y) return false;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case Sub::Kind::P:
      return true;
    case Sub::Kind::Single:
      return equal_tm(x->tm, y->tm);
    case Sub::Kind::Plus:
      return equal_sub(x->sub, y->sub);
  }
  return false;
}

bool equal_ctx(const Ctx& x, const Ctx& y) {
  if (x.size() != y.size()) return false;
  for (size_t i = 0; i < x.size(); ++i)
    if (!equal_ty(x[i], y[i])) return false;
  return true;
}

Sexp ty_to_sexp(const TyRef& t) {
  switch (t->kind) {
    case Ty::Kind::U:
      return Sexp::list({Sexp::sym("U"), Sexp::sym(std::to_string(t->level))});
    case Ty::Kind::El:
      return Sexp::list({Sexp::sym("El"), tm_to_sexp(t->tm)});
    case Ty::Kind::Pi:
      return Sexp::list({Sexp::sym("Pi"), ty_to_sexp(t->a), ty_to_sexp(t->b)});
    case Ty::Kind::Sigma:
      return Sexp::list(
          {Sexp::sym("Sigma"), ty_to_sexp(t->a), ty_to_sexp(t->b)});
    case Ty::Kind::Top:
      return Sexp::sym("Top");
    case Ty::Kind::Lift:
      return Sexp::list({Sexp::sym("Lift"), ty_to_sexp(t->a)});
    case Ty::Kind::Inst:
      return Sexp::list(
          {Sexp::sym("tysub"), ty_to_sexp(t->a), sub_to_sexp(t->sub)});
  }
  throw std::logic_error("ty_to_sexp: bad kind");
}

Sexp tm_to_sexp(const TmRef& t) {
  switch (t->kind) {
    case Tm::Kind::Q:
      return Sexp::sym("q");
    case Tm::Kind::Inst:
      return Sexp::list(
          {Sexp::sym("tmsub"), tm_to_sexp(t->t), sub_to_sexp(t->sub)});
    case Tm::Kind::Lam:
      return Sexp::list({Sexp::sym("lam"), tm_to_sexp(t->t)});
    case Tm::Kind::App:
      return Sexp::list({Sexp::sym("app"), tm_to_sexp(t->t), tm_to_sexp(t->u)});
    case Tm::Kind::Code:
      return Sexp::list({Sexp::sym("code"), ty_to_sexp(t->ty)});
    case Tm::Kind::Mk:
      return Sexp::list({Sexp::sym("mk"), tm_to_sexp(t->t)});
    case Tm::Kind::Un:
      return Sexp::list({Sexp::sym("un"), tm_to_sexp(t->t)});
    case Tm::Kind::Tt:
      return Sexp::sym("tt");
    case Tm::Kind::Pair:
      return Sexp::list(
          {Sexp::sym("pair"), tm_to_sexp(t->t), tm_to_sexp(t->u)});
    case Tm::Kind::Fst:
      return Sexp::list({Sexp::sym("fst"), tm_to_sexp(t->t)});
    case Tm::Kind::Snd:
      return Sexp::list({Sexp::sym("snd"), tm_to_sexp(t->t)});
  }
  throw std::logic_error("tm_to_sexp: bad kind");
}

Sexp sub_to_sexp(const SubRef& s) {
  switch (s->kind) {
    case Sub::Kind::P:
      return Sexp::sym("p");
    case Sub::Kind::Single:
      return Sexp::list({Sexp::sym("single"), tm_to_sexp(s->tm)});
    case Sub::Kind::Plus:
      return Sexp::list({Sexp::sym("plus"), sub_to_sexp(s->sub)});
  }
  throw std::logic_error("sub_to_sexp: bad kind");
}

Sexp ctx_to_sexp(const Ctx& c) {
  std::vector<Sexp> items{Sexp::sym("ctx")};
  for (const auto& t : c) items.push_back(ty_to_sexp(t));
  return Sexp::list(std::move(items));
}

std::string print_ty(const TyRef& t) { return print_sexp(ty_to_sexp(t)); }
std::string print_tm(const TmRef& t) { return print_sexp(tm_to_sexp(t)); }
std::string print_sub(const SubRef& s) { return print_sexp(sub_to_sexp(s)); }
std::string print_ctx(const Ctx& c) { return print_sexp(ctx_to_sexp(c)); }

namespace {

[[noreturn]] void bad(const Sexp& e, const char* what) {
  throw ParseError(std::string("cannot read ") + what + " from: " +
                   print_sexp(e));
}

const std::string& head(const Sexp& e) {
  if (e.items.empty() || !e.items[0].is_atom)
    throw ParseError("expected a tagged list, got: " + print_sexp(e));
  return e.items[0].atom;
}

void expect_arity(const Sexp& e, size_t n) {
  if (e.items.size() != n)
    throw ParseError("wrong arity in: " + print_sexp(e));
}

Level parse_level(const Sexp& e) {
  if (!e.is_atom) throw ParseError("expected a level, got: " + print_sexp(e));
  try {
    size_t used = 0;
    int v = std::stoi(e.atom, &used);
    if (used != e.atom.size() || v < 0) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad universe level: " + e.atom);
  }
}

}  // namespace

TyRef ty_from_sexp(const Sexp& e) {
  if (e.is_atom) {
    if (e.atom == "Top") return ty_top();
    bad(e, "type");
  }
  const std::string& h = head(e);
  if (h == "U") {
    expect_arity(e, 2);
    return ty_u(parse_level(e.items[1]));
  }
  if (h == "El") {
    expect_arity(e, 2);
    return ty_el(tm_from_sexp(e.items[1]));
  }
  if (h == "Pi") {
    expect_arity(e, 3);
    return ty_pi(ty_from_sexp(e.items[1]), ty_from_sexp(e.items[2]));
  }
  if (h == "Sigma") {
    expect_arity(e, 3);
    return ty_sigma(ty_from_sexp(e.items[1]), ty_from_sexp(e.items[2]));
  }
  if (h == "Lift") {
    expect_arity(e, 2);
    return ty_lift(ty_from_sexp(e.items[1]));
  }
  if (h == "tysub") {
    expect_arity(e, 3);
    return ty_inst(ty_from_sexp(e.items[1]), sub_from_sexp(e.items[2]));
  }
  bad(e, "type");
}

TmRef tm_from_sexp(const Sexp& e) {
  if (e.is_atom) {
    if (e.atom == "q") return tm_q();
    if (e.atom == "tt") return tm_tt();
    bad(e, "term");
  }
  const std::string& h = head(e);
  if (h == "tmsub") {
    expect_arity(e, 3);
    return tm_inst(tm_from_sexp(e.items[1]), sub_from_sexp(e.items[2]));
  }
  if (h == "lam") {
    expect_arity(e, 2);
    return tm_lam(tm_from_sexp(e.items[1]));
  }
  if (h == "app") {
    expect_arity(e, 3);
    return tm_app(tm_from_sexp(e.items[1]), tm_from_sexp(e.items[2]));
  }
  if (h == "code") {
    expect_arity(e, 2);
    return tm_code(ty_from_sexp(e.items[1]));
  }
  if (h == "mk") {
    expect_arity(e, 2);
    return tm_mk(tm_from_sexp(e.items[1]));
  }
  if (h == "un") {
    expect_arity(e, 2);
    return tm_un(tm_from_sexp(e.items[1]));
  }
  if (h == "pair") {
    expect_arity(e, 3);
    return tm_pair(tm_from_sexp(e.items[1]), tm_from_sexp(e.items[2]));
  }
  if (h == "fst") {
    expect_arity(e, 2);
    return tm_fst(tm_from_sexp(e.items[1]));
  }
  if (h == "snd") {
    expect_arity(e, 2);
    return tm_snd(tm_from_sexp(e.items[1]));
  }
  bad(e, "term");
}

SubRef sub_from_sexp(const Sexp& e) {
  if (e.is_atom) {
    if (e.atom == "p") return sub_p();
    bad(e, "substitution");
  }
  const std::string& h = head(e);
  if (h == "single") {
    expect_arity(e, 2);
    return sub_single(tm_from_sexp(e.items[1]));
  }
  if (h == "plus") {
    expect_arity(e, 2);
    return sub_plus(sub_from_sexp(e.items[1]));
  }
  bad(e, "substitution");
}

Ctx ctx_from_sexp(const Sexp& e) {
  if (e.is_atom || e.items.empty() || !e.items[0].is_atom ||
      e.items[0].atom != "ctx")
    throw ParseError("expected (ctx ...), got: " + print_sexp(e));
  Ctx c;
  for (size_t i = 1; i < e.items.size(); ++i)
    c.push_back(ty_from_sexp(e.items[i]));
  return c;
}

}  // namespace ssc
