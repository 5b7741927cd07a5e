#include "ssc/nf.hpp"

#include <stdexcept>

namespace ssc {

namespace {
NfTyRef make(NfTy t) { return std::make_shared<const NfTy>(std::move(t)); }
NfTmRef make(NfTm t) { return std::make_shared<const NfTm>(std::move(t)); }
NfNeRef make(NfNe n) { return std::make_shared<const NfNe>(std::move(n)); }
}  // namespace

NfTyRef nf_u(Level i) {
  NfTy t;
  t.kind = NfTy::Kind::U;
  t.level = i;
  return make(std::move(t));
}
NfTyRef nf_pi(NfTyRef a, NfTyRef b) {
  NfTy t;
  t.kind = NfTy::Kind::Pi;
  t.a = std::move(a);
  t.b = std::move(b);
  return make(std::move(t));
}
NfTyRef nf_sigma(NfTyRef a, NfTyRef b) {
  NfTy t;
  t.kind = NfTy::Kind::Sigma;
  t.a = std::move(a);
  t.b = std::move(b);
  return make(std::move(t));
}
NfTyRef nf_top() {
  static const NfTyRef top = [] {
    NfTy t;
    t.kind = NfTy::Kind::Top;
    return make(std::move(t));
  }();
  return top;
}
NfTyRef nf_lift(NfTyRef a) {
  NfTy t;
  t.kind = NfTy::Kind::Lift;
  t.a = std::move(a);
  return make(std::move(t));
}
NfTyRef nf_el(NfNeRef ne) {
  NfTy t;
  t.kind = NfTy::Kind::ElNe;
  t.ne = std::move(ne);
  return make(std::move(t));
}

NfTmRef nf_lam(NfTmRef body) {
  NfTm t;
  t.kind = NfTm::Kind::Lam;
  t.t = std::move(body);
  return make(std::move(t));
}
NfTmRef nf_pair(NfTmRef a, NfTmRef b) {
  NfTm t;
  t.kind = NfTm::Kind::Pair;
  t.t = std::move(a);
  t.u = std::move(b);
  return make(std::move(t));
}
NfTmRef nf_mk(NfTmRef x) {
  NfTm t;
  t.kind = NfTm::Kind::Mk;
  t.t = std::move(x);
  return make(std::move(t));
}
NfTmRef nf_code(NfTyRef a) {
  NfTm t;
  t.kind = NfTm::Kind::Code;
  t.ty = std::move(a);
  return make(std::move(t));
}
NfTmRef nf_tt() {
  static const NfTmRef tt = [] {
    NfTm t;
    t.kind = NfTm::Kind::Tt;
    return make(std::move(t));
  }();
  return tt;
}
NfTmRef nf_neut(NfNeRef ne) {
  NfTm t;
  t.kind = NfTm::Kind::Neut;
  t.ne = std::move(ne);
  return make(std::move(t));
}

NfNeRef ne_var(int index) {
  NfNe n;
  n.kind = NfNe::Kind::Var;
  n.index = index;
  return make(std::move(n));
}
NfNeRef ne_app(NfNeRef head, NfTmRef arg) {
  NfNe n;
  n.kind = NfNe::Kind::App;
  n.head = std::move(head);
  n.arg = std::move(arg);
  return make(std::move(n));
}
NfNeRef ne_fst(NfNeRef head) {
  NfNe n;
  n.kind = NfNe::Kind::Fst;
  n.head = std::move(head);
  return make(std::move(n));
}
NfNeRef ne_snd(NfNeRef head) {
  NfNe n;
  n.kind = NfNe::Kind::Snd;
  n.head = std::move(head);
  return make(std::move(n));
}
NfNeRef ne_un(NfNeRef head) {
  NfNe n;
  n.kind = NfNe::Kind::Un;
  n.head = std::move(head);
  return make(std::move(n));
}

bool equal_nf_ty(const NfTyRef& x, const NfTyRef& y) {
  if (x == y) return true;
  if (!x || !y || x->kind != y->kind) return false;
  switch (x->kind) {
    case NfTy::Kind::U:
      return x->level == y->level;
    case NfTy::Kind::Pi:
    case NfTy::Kind::Sigma:
      return equal_nf_ty(x->a, y->a) && equal_nf_ty(x->b, y->b);
    case NfTy::Kind::Top:
      return true;
    case NfTy::Kind::Lift:
      return equal_nf_ty(x->a, y->a);
    case NfTy::Kind::ElNe:
      return equal_nf_ne(x->ne, y->ne);
  }
  return false;
}

bool equal_nf_tm(const NfTmRef& x, const NfTmRef& y) {
  if (x == y) return true;
  if (!x || !y || x->kind != y->kind) return false;
  switch (x->kind) {
    case NfTm::Kind::Lam:
    case NfTm::Kind::Mk:
      return equal_nf_tm(x->t, y->t);
    case NfTm::Kind::Pair:
      return equal_nf_tm(x->t, y->t) && equal_nf_tm(x->u, y->u);
    case NfTm::Kind::Code:
      return equal_nf_ty(x->ty, y->ty);
    case NfTm::Kind::Tt:
      return true;
    case NfTm::Kind::Neut:
      return equal_nf_ne(x->ne, y->ne);
  }
  return false;
}

bool equal_nf_ne(const NfNeRef& x, const NfNeRef& y) {
  if (x == y) return true;
  if (!x || !y || x->kind != y->kind) return false;
  switch (x->kind) {
    case NfNe::Kind::Var:
      return x->index == y->index;
    case NfNe::Kind::App:
      return equal_nf_ne(x->head, y->head) && equal_nf_tm(x->arg, y->arg);
    case NfNe::Kind::Fst:
    case NfNe::Kind::Snd:
    case NfNe::Kind::Un:
      return equal_nf_ne(x->head, y->head);
  }
  return false;
}

TyRef nf_ty_to_raw(const NfTyRef& t) {
  switch (t->kind) {
    case NfTy::Kind::U:
      return ty_u(t->level);
    case NfTy::Kind::Pi:
      return ty_pi(nf_ty_to_raw(t->a), nf_ty_to_raw(t->b));
    case NfTy::Kind::Sigma:
      return ty_sigma(nf_ty_to_raw(t->a), nf_ty_to_raw(t->b));
    case NfTy::Kind::Top:
      return ty_top();
    case NfTy::Kind::Lift:
      return ty_lift(nf_ty_to_raw(t->a));
    case NfTy::Kind::ElNe:
      return ty_el(nf_ne_to_raw(t->ne));
  }
  throw std::logic_error("nf_ty_to_raw: bad kind");
}

TmRef nf_tm_to_raw(const NfTmRef& t) {
  switch (t->kind) {
    case NfTm::Kind::Lam:
      return tm_lam(nf_tm_to_raw(t->t));
    case NfTm::Kind::Pair:
      return tm_pair(nf_tm_to_raw(t->t), nf_tm_to_raw(t->u));
    case NfTm::Kind::Mk:
      return tm_mk(nf_tm_to_raw(t->t));
    case NfTm::Kind::Code:
      return tm_code(nf_ty_to_raw(t->ty));
    case NfTm::Kind::Tt:
      return tm_tt();
    case NfTm::Kind::Neut:
      return nf_ne_to_raw(t->ne);
  }
  throw std::logic_error("nf_tm_to_raw: bad kind");
}

TmRef nf_ne_to_raw(const NfNeRef& n) {
  switch (n->kind) {
    case NfNe::Kind::Var:
      return tm_var(n->index);
    case NfNe::Kind::App:
      return tm_app(nf_ne_to_raw(n->head), nf_tm_to_raw(n->arg));
    case NfNe::Kind::Fst:
      return tm_fst(nf_ne_to_raw(n->head));
    case NfNe::Kind::Snd:
      return tm_snd(nf_ne_to_raw(n->head));
    case NfNe::Kind::Un:
      return tm_un(nf_ne_to_raw(n->head));
  }
  throw std::logic_error("nf_ne_to_raw: bad kind");
}

std::string print_nf_ty(const NfTyRef& t) { return print_ty(nf_ty_to_raw(t)); }
std::string print_nf_tm(const NfTmRef& t) { return print_tm(nf_tm_to_raw(t)); }

namespace {

// delta = +1 inserts at k, delta = -1 removes k (occurrence -> null).
NfTyRef shift_ty(const NfTyRef& t, int k, int delta);
NfTmRef shift_tm(const NfTmRef& t, int k, int delta);
NfNeRef shift_ne(const NfNeRef& n, int k, int delta);

NfTyRef shift_ty(const NfTyRef& t, int k, int delta) {
  switch (t->kind) {
    case NfTy::Kind::U:
    case NfTy::Kind::Top:
      return t;
    case NfTy::Kind::Pi:
    case NfTy::Kind::Sigma: {
      NfTyRef a = shift_ty(t->a, k, delta);
      NfTyRef b = shift_ty(t->b, k + 1, delta);
      if (!a || !b) return nullptr;
      return t->kind == NfTy::Kind::Pi ? nf_pi(a, b) : nf_sigma(a, b);
    }
    case NfTy::Kind::Lift: {
      NfTyRef a = shift_ty(t->a, k, delta);
      return a ? nf_lift(a) : nullptr;
    }
    case NfTy::Kind::ElNe: {
      NfNeRef ne = shift_ne(t->ne, k, delta);
      return ne ? nf_el(ne) : nullptr;
    }
  }
  return nullptr;
}

NfTmRef shift_tm(const NfTmRef& t, int k, int delta) {
  switch (t->kind) {
    case NfTm::Kind::Lam: {
      NfTmRef b = shift_tm(t->t, k + 1, delta);
      return b ? nf_lam(b) : nullptr;
    }
    case NfTm::Kind::Pair: {
      NfTmRef a = shift_tm(t->t, k, delta);
      NfTmRef b = shift_tm(t->u, k, delta);
      return a && b ? nf_pair(a, b) : nullptr;
    }
    case NfTm::Kind::Mk: {
      NfTmRef a = shift_tm(t->t, k, delta);
      return a ? nf_mk(a) : nullptr;
    }
    case NfTm::Kind::Code: {
      NfTyRef a = shift_ty(t->ty, k, delta);
      return a ? nf_code(a) : nullptr;
    }
    case NfTm::Kind::Tt:
      return t;
    case NfTm::Kind::Neut: {
      NfNeRef ne = shift_ne(t->ne, k, delta);
      return ne ? nf_neut(ne) : nullptr;
    }
  }
  return nullptr;
}

NfNeRef shift_ne(const NfNeRef& n, int k, int delta) {
  switch (n->kind) {
    case NfNe::Kind::Var: {
      if (delta > 0) return n->index >= k ? ne_var(n->index + 1) : n;
      if (n->index == k) return nullptr;
      return n->index > k ? ne_var(n->index - 1) : n;
    }
    case NfNe::Kind::App: {
      NfNeRef h = shift_ne(n->head, k, delta);
      NfTmRef a = shift_tm(n->arg, k, delta);
      return h && a ? ne_app(h, a) : nullptr;
    }
    case NfNe::Kind::Fst:
    case NfNe::Kind::Snd:
    case NfNe::Kind::Un: {
      NfNeRef h = shift_ne(n->head, k, delta);
      if (!h) return nullptr;
      if (n->kind == NfNe::Kind::Fst) return ne_fst(h);
      if (n->kind == NfNe::Kind::Snd) return ne_snd(h);
      return ne_un(h);
    }
  }
  return nullptr;
}

}  // namespace

NfTyRef weaken_at(const NfTyRef& t, int k) { return shift_ty(t, k, +1); }
NfTyRef strengthen_at(const NfTyRef& t, int k) { return shift_ty(t, k, -1); }

}  // namespace ssc
