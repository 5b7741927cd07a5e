#include "ssc/par.hpp"

#include <stdexcept>

namespace ssc {

namespace {
SubStarRef make(SubStar s) {
  return std::make_shared<const SubStar>(std::move(s));
}
}  // namespace

SubStarRef star_id() {
  static const SubStarRef id = [] {
    SubStar s;
    s.kind = SubStar::Kind::Id;
    return make(std::move(s));
  }();
  return id;
}

SubStarRef star_comp(SubStarRef f, SubStarRef g) {
  SubStar s;
  s.kind = SubStar::Kind::Comp;
  s.f = std::move(f);
  s.g = std::move(g);
  return make(std::move(s));
}

SubStarRef star_emb(SubRef sub) {
  SubStar s;
  s.kind = SubStar::Kind::Emb;
  s.emb = std::move(sub);
  return make(std::move(s));
}

SubStarRef star_plus(const SubStarRef& ss) {
  switch (ss->kind) {
    case SubStar::Kind::Id:
      return ss;
    case SubStar::Kind::Comp:
      return star_comp(star_plus(ss->f), star_plus(ss->g));
    case SubStar::Kind::Emb:
      return star_emb(sub_plus(ss->emb));
  }
  throw std::logic_error("star_plus: bad kind");
}

TyRef star_inst_ty(const TyRef& ty, const SubStarRef& ss) {
  switch (ss->kind) {
    case SubStar::Kind::Id:
      return ty;
    case SubStar::Kind::Comp:
      return star_inst_ty(star_inst_ty(ty, ss->f), ss->g);
    case SubStar::Kind::Emb:
      return ty_inst(ty, ss->emb);
  }
  throw std::logic_error("star_inst_ty: bad kind");
}

TmRef star_inst_tm(const TmRef& tm, const SubStarRef& ss) {
  switch (ss->kind) {
    case SubStar::Kind::Id:
      return tm;
    case SubStar::Kind::Comp:
      return star_inst_tm(star_inst_tm(tm, ss->f), ss->g);
    case SubStar::Kind::Emb:
      return tm_inst(tm, ss->emb);
  }
  throw std::logic_error("star_inst_tm: bad kind");
}

SubStarRef tms_embed(const Tms& ts, int dom_len) {
  if (ts.terms.empty()) {
    SubStarRef out = star_id();
    for (int k = 0; k < dom_len; ++k) out = star_comp(out, star_emb(sub_p()));
    return out;
  }
  Tms head = ts;
  TmRef last = head.terms.back();
  head.terms.pop_back();
  head.cod.pop_back();
  return star_comp(star_plus(tms_embed(head, dom_len)),
                   star_emb(sub_single(last)));
}

Tms tms_id(const Ctx& ctx) {
  Tms out;
  out.cod = ctx;
  int n = static_cast<int>(ctx.size());
  for (int k = 0; k < n; ++k) out.terms.push_back(tm_var(n - 1 - k));
  return out;
}

Tms tms_p(const Ctx& ctx, const TyRef& a) {
  Ctx ext = ctx;
  ext.push_back(a);
  Tms out = tms_id(ext);
  out.terms.pop_back();
  out.cod.pop_back();
  return out;
}

Tms tms_ext(const Tms& g, const TyRef& a, const TmRef& t) {
  Tms out = g;
  out.cod.push_back(a);
  out.terms.push_back(t);
  return out;
}

Tms tms_fst(const Tms& g) {
  if (g.terms.empty()) throw std::invalid_argument("tms_fst: empty list");
  Tms out = g;
  out.terms.pop_back();
  out.cod.pop_back();
  return out;
}

TmRef tms_snd(const Tms& g) {
  if (g.terms.empty()) throw std::invalid_argument("tms_snd: empty list");
  return g.terms.back();
}

Tms tms_comp(const Tms& g, const Tms& d, int dom_len) {
  SubStarRef emb = tms_embed(d, dom_len);
  Tms out;
  out.cod = g.cod;
  for (const TmRef& t : g.terms)
    out.terms.push_back(star_inst_tm(t, emb));
  return out;
}

Sexp tms_to_sexp(const Tms& ts) {
  std::vector<Sexp> items;
  items.push_back(Sexp::sym("tms"));
  for (const TmRef& t : ts.terms) items.push_back(tm_to_sexp(t));
  return Sexp::list(std::move(items));
}

Tms tms_from_sexp(const Sexp& e, const Ctx& cod) {
  if (e.is_atom || e.items.empty() || !e.items[0].is_atom ||
      e.items[0].atom != "tms")
    throw ParseError("expected (tms t1 ... tn)");
  Tms out;
  out.cod = cod;
  for (size_t k = 1; k < e.items.size(); ++k)
    out.terms.push_back(tm_from_sexp(e.items[k]));
  if (out.terms.size() != cod.size())
    throw ParseError("tms literal length does not match its codomain");
  return out;
}

std::string print_tms(const Tms& ts) { return print_sexp(tms_to_sexp(ts)); }

}  // namespace ssc
