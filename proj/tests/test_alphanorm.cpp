#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ssc/alphanorm.hpp"
#include "ssc/check.hpp"
#include "ssc/sexpr.hpp"

using namespace ssc;

namespace {
Ctx C(const std::string& s) { return ctx_from_sexp(parse_sexp(s)); }
TyRef T(const std::string& s) { return ty_from_sexp(parse_sexp(s)); }
TmRef M(const std::string& s) { return tm_from_sexp(parse_sexp(s)); }
SubRef S(const std::string& s) { return sub_from_sexp(parse_sexp(s)); }
}  // namespace

TEST_CASE("variable spines") {
  CHECK(is_var(M("q")));
  CHECK(is_var(M("(tmsub q p)")));
  CHECK(is_var(M("(tmsub (tmsub q p) p)")));
  CHECK_FALSE(is_var(M("(tmsub q (single q))")));
  CHECK_FALSE(is_var(M("(lam q)")));
}

TEST_CASE("substitution classification") {
  auto w = classify_sub(S("(plus p)"));
  REQUIRE(w.has_value());
  CHECK(w->kind == NSub::Kind::Weakening);
  CHECK(w->depth == 1);

  auto s = classify_sub(S("(plus (single q))"));
  REQUIRE(s.has_value());
  CHECK(s->kind == NSub::Kind::NSingle);
  CHECK(s->depth == 1);

  CHECK_FALSE(classify_sub(S("(single (tmsub q (single q)))")).has_value());
}

TEST_CASE("instantiations push to variables") {
  // lam[]: (lam b)[g] = lam (b[g+]).
  CHECK(print_tm(alpha_norm_tm_u(M("(tmsub (lam q) (single tt))"))) ==
        "(lam q)");
  CHECK(print_tm(alpha_norm_tm_u(M("(tmsub (lam (tmsub q p)) (single tt))"))) ==
        "(lam tt)");
  // Pi[] distributes into the components.
  CHECK(print_ty(alpha_norm_ty_u(T("(tysub (Pi (U 0) (El q)) p)"))) ==
        "(Pi (U 0) (El q))");
  // Already alpha-normal input is untouched.
  CHECK(print_tm(alpha_norm_tm_u(M("q"))) == "q");
  // [p][+]: b[p][g+] = b[g][p] on a variable with g a weakening.
  CHECK(print_tm(alpha_norm_tm_u(M("(tmsub (tmsub q p) (plus p))"))) ==
        "(tmsub (tmsub q p) p)");
}

TEST_CASE("beta redexes are preserved") {
  TmRef redex = M("(app (lam q) tt)");
  CHECK(print_tm(alpha_norm_tm_u(redex)) == "(app (lam q) tt)");
  CHECK(is_alpha_tm(redex));
}

TEST_CASE("output satisfies the alpha-normal predicate") {
  for (const char* s :
       {"(tmsub (lam (app q (tmsub q p))) (single (code Top)))",
        "(tmsub (pair q (mk tt)) (plus p))",
        "(tmsub (tmsub (fst q) p) (single (un q)))"}) {
    TmRef out = alpha_norm_tm_u(M(s));
    CHECK(is_alpha_tm(out));
    // Idempotence.
    CHECK(equal_tm(alpha_norm_tm_u(out), out));
  }
}

TEST_CASE("alpha-normal forms are convertible to their input") {
  Ctx ctx = C("(ctx (U 0))");
  TyRef ty = T("(tysub (tysub (El q) p) (single q))");
  TyRef out = alpha_norm_ty(ctx, ty);
  CHECK(is_alpha_ty(out));
  CHECK(conv_ty(ctx, ty, out));

  TmRef tm = M("(tmsub q (single q))");
  TyRef at = T("(tysub (U 0) p)");
  TmRef tout = alpha_norm_tm(ctx, tm);
  CHECK(is_alpha_tm(tout));
  CHECK(conv_tm(ctx, tm, tout, at));
}

TEST_CASE("pushing a classified substitution preserves alpha-normality") {
  TmRef body = alpha_norm_tm_u(M("(app (lam (app q (tmsub q p))) q)"));
  REQUIRE(is_alpha_tm(body));
  for (const char* s : {"p", "(plus p)", "(single tt)", "(plus (single q))"}) {
    auto ns = classify_sub(S(s));
    REQUIRE(ns.has_value());
    CHECK(is_alpha_tm(alpha_push_tm(body, *ns)));
  }
}

TEST_CASE("checked entry points validate their input") {
  CHECK_THROWS_AS(alpha_norm_ty(C("(ctx)"), T("(El q)")), CheckError);
  CHECK_THROWS_AS(alpha_norm_tm(C("(ctx)"), M("(fst q)")), CheckError);
}
