#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ssc/check.hpp"
#include "ssc/par.hpp"
#include "ssc/sexpr.hpp"

using namespace ssc;

namespace {
Ctx C(const std::string& s) { return ctx_from_sexp(parse_sexp(s)); }
TyRef T(const std::string& s) { return ty_from_sexp(parse_sexp(s)); }
TmRef M(const std::string& s) { return tm_from_sexp(parse_sexp(s)); }
SubRef S(const std::string& s) { return sub_from_sexp(parse_sexp(s)); }
}  // namespace

TEST_CASE("free identity and composition act by pipelining") {
  TyRef a = T("(El q)");
  CHECK(equal_ty(star_inst_ty(a, star_id()), a));
  // x[f.g] = x[f][g].
  TyRef out = star_inst_ty(
      a, star_comp(star_emb(S("p")), star_emb(S("(single q)"))));
  CHECK(print_ty(out) == "(tysub (tysub (El q) p) (single q))");
  CHECK(conv_ty_u(C("(ctx (U 0))"), out, a));
  // q[g+] acts as q.
  TmRef v = star_inst_tm(M("q"), star_emb(S("(plus p)")));
  CHECK(print_tm(v) == "(tmsub q (plus p))");
  CHECK(conv_tm_u(C("(ctx Top (U 0))"), v, M("q"), T("(tysub (U 0) p)")));
}

TEST_CASE("lifting distributes through the free structure") {
  SubStarRef ss = star_comp(star_id(), star_emb(S("p")));
  SubStarRef lifted = star_plus(ss);
  REQUIRE(lifted->kind == SubStar::Kind::Comp);
  CHECK(lifted->f->kind == SubStar::Kind::Id);
  REQUIRE(lifted->g->kind == SubStar::Kind::Emb);
  CHECK(print_sub(lifted->g->emb) == "(plus p)");
}

TEST_CASE("the empty list embeds as id after iterated weakening") {
  Tms eps;
  CHECK(tms_embed(eps, 0)->kind == SubStar::Kind::Id);
  SubStarRef two = tms_embed(eps, 2);
  REQUIRE(two->kind == SubStar::Kind::Comp);
  REQUIRE(two->g->kind == SubStar::Kind::Emb);
  CHECK(print_sub(two->g->emb) == "p");
  REQUIRE(two->f->kind == SubStar::Kind::Comp);
  CHECK(two->f->f->kind == SubStar::Kind::Id);
}

TEST_CASE("identity lists the variables newest-first") {
  Tms id = tms_id(C("(ctx (U 0) (El q))"));
  REQUIRE(id.terms.size() == 2);
  CHECK(print_tm(id.terms[0]) == "(tmsub q p)");
  CHECK(print_tm(id.terms[1]) == "q");
  CHECK(print_tms(id) == "(tms (tmsub q p) q)");
}

TEST_CASE("embedded identity acts as the identity") {
  Ctx ctx = C("(ctx (U 0))");
  TyRef a = T("(El q)");
  SubStarRef emb = tms_embed(tms_id(ctx), 1);
  CHECK(conv_ty_u(ctx, star_inst_ty(a, emb), a));

  Ctx ctx2 = C("(ctx (U 0) (El q))");
  TyRef b = T("(Lift (El (tmsub q p)))");
  CHECK(conv_ty_u(ctx2, star_inst_ty(b, tms_embed(tms_id(ctx2), 2)), b));
}

TEST_CASE("list operations satisfy the extension laws") {
  Ctx ctx = C("(ctx (U 0))");
  Tms id = tms_id(ctx);
  Tms ext = tms_ext(id, T("(tysub (U 0) p)"), M("q"));
  // fst (g, a) = g and snd (g, a) = a, syntactically.
  Tms back = tms_fst(ext);
  REQUIRE(back.terms.size() == id.terms.size());
  CHECK(equal_tm(back.terms[0], id.terms[0]));
  CHECK(equal_tm(tms_snd(ext), M("q")));
  // p is the tail of the weakened identity.
  Tms pr = tms_p(C("(ctx (U 0))"), T("(tysub (U 0) p)"));
  REQUIRE(pr.terms.size() == 1);
  CHECK(print_tm(pr.terms[0]) == "(tmsub q p)");
}

TEST_CASE("composition instantiates componentwise") {
  // d : (ctx) -> (ctx (U 0)) sending the variable to (code Top).
  Ctx gamma = C("(ctx (U 0))");
  Tms d;
  d.cod = gamma;
  d.terms = {M("(code Top)")};
  Tms comp = tms_comp(tms_id(gamma), d, 0);
  REQUIRE(comp.terms.size() == 1);
  CHECK(conv_tm_u(C("(ctx)"), comp.terms[0], M("(code Top)"), T("(U 0)")));
  // A[embed (id . d)] is convertible to A[embed d].
  TyRef a = T("(El q)");
  CHECK(conv_ty_u(C("(ctx)"), star_inst_ty(a, tms_embed(comp, 0)),
                  star_inst_ty(a, tms_embed(d, 0))));
}

TEST_CASE("closed types weaken then substitute variable by variable") {
  // B over (ctx (U 0) (El q)) instantiated by (tms (code Top) tt) into (ctx).
  Ctx cod = C("(ctx (U 0) (El q))");
  Tms ts = tms_from_sexp(parse_sexp("(tms (code Top) tt)"), cod);
  TyRef b = T("(El (tmsub q p))");
  TyRef out = star_inst_ty(b, tms_embed(ts, 0));
  CHECK(conv_ty_u(C("(ctx)"), out, T("Top")));
}

TEST_CASE("tms literals round-trip") {
  Ctx cod = C("(ctx (U 0) (El q))");
  Tms ts = tms_from_sexp(parse_sexp("(tms (code Top) tt)"), cod);
  CHECK(print_tms(ts) == "(tms (code Top) tt)");
  CHECK_THROWS_AS(tms_from_sexp(parse_sexp("(tms tt)"), cod), ParseError);
}
