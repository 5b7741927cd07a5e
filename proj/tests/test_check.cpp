#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ssc/check.hpp"
#include "ssc/sexpr.hpp"

using namespace ssc;

namespace {
Ctx C(const std::string& s) { return ctx_from_sexp(parse_sexp(s)); }
TyRef T(const std::string& s) { return ty_from_sexp(parse_sexp(s)); }
TmRef M(const std::string& s) { return tm_from_sexp(parse_sexp(s)); }
SubRef S(const std::string& s) { return sub_from_sexp(parse_sexp(s)); }
}  // namespace

TEST_CASE("context well-formedness") {
  CHECK(wf_ctx(C("(ctx)")).ok);
  CHECK(wf_ctx(C("(ctx (U 0) (El q))")).ok);
  CHECK_FALSE(wf_ctx(C("(ctx (El q))")).ok);
  CHECK_FALSE(wf_ctx(C("(ctx Top (El q))")).ok);
}

TEST_CASE("universe levels of types") {
  CHECK(infer_ty_level(C("(ctx)"), T("(U 0)")) == 1);
  CHECK(infer_ty_level(C("(ctx)"), T("(Pi (U 0) (Lift (El q)))")) == 1);
  CHECK(infer_ty_level(C("(ctx)"), T("(Lift Top)")) == 1);
  CHECK(infer_ty_level(C("(ctx (U 1))"), T("(El q)")) == 1);
  // Pi requires domain and codomain at the same level.
  CHECK_THROWS_AS(infer_ty_level(C("(ctx)"), T("(Pi (U 0) (El q))")),
                  CheckError);
}

TEST_CASE("type inference for variables and instantiations") {
  TyRef t = infer_tm(C("(ctx (U 0))"), M("q"));
  CHECK(print_ty(t) == "(tysub (U 0) p)");
  CHECK(conv_ty(C("(ctx (U 0))"), t, T("(U 0)")));

  TyRef u = infer_tm(C("(ctx (U 0) Top)"), M("(tmsub q p)"));
  CHECK(print_ty(u) == "(tysub (tysub (U 0) p) p)");

  CHECK_THROWS_AS(infer_tm(C("(ctx)"), M("(app q q)")), CheckError);
  CHECK_THROWS_AS(infer_tm(C("(ctx)"), M("q")), CheckError);
  CHECK_THROWS_AS(infer_tm(C("(ctx)"), M("(lam q)")), NotInferable);
}

TEST_CASE("checking against a type") {
  // Polymorphic identity on small types.
  CHECK(check_tm(C("(ctx)"), M("(lam (lam q))"),
                 T("(Pi (U 0) (Pi (Lift (El q)) (tysub (Lift (El q)) p)))"))
            .ok);
  CHECK(check_tm(C("(ctx)"), M("tt"), T("Top")).ok);
  CHECK_FALSE(check_tm(C("(ctx)"), M("(lam q)"), T("(U 0)")).ok);
  CHECK_FALSE(check_tm(C("(ctx)"), M("tt"), T("(U 0)")).ok);
  // Pair / mk against Sigma / Lift.
  CHECK(check_tm(C("(ctx)"), M("(pair tt tt)"), T("(Sigma Top Top)")).ok);
  CHECK(check_tm(C("(ctx)"), M("(mk tt)"), T("(Lift Top)")).ok);
  CHECK_FALSE(check_tm(C("(ctx)"), M("(mk tt)"), T("(Lift (U 0))")).ok);
}

TEST_CASE("codomain computation for substitutions") {
  CHECK(print_ctx(wf_sub(C("(ctx Top)"), S("p"))) == "(ctx)");
  CHECK(print_ctx(wf_sub(C("(ctx (U 0))"), S("(single q)"))) ==
        "(ctx (U 0) (tysub (U 0) p))");
  CHECK_THROWS_AS(wf_sub(C("(ctx)"), S("p")), CheckError);
}

TEST_CASE("lifted substitutions recover their codomain entry") {
  // p+ : (ctx Top (U 0)) -> (ctx (U 0)) with entry (U 0).
  Ctx cod = wf_sub(C("(ctx Top (U 0))"), S("(plus p)"));
  CHECK(print_ctx(cod) == "(ctx (U 0))");
  // <q>+ : G # (El q) -> (G # A) # E with E[<q>] = El q, for G the
  // two-entry context below and A the inferred type of q.
  Ctx cod2 =
      wf_sub(C("(ctx (U 0) (tysub (U 0) p) (El q))"), S("(plus (single q))"));
  REQUIRE(cod2.size() == 4);
  CHECK(print_ty(cod2[0]) == "(U 0)");
  // The recovered entry instantiates back to something convertible to (El q).
  CHECK(conv_ty(C("(ctx (U 0) (tysub (U 0) p))"),
                ty_inst(cod2[3], S("(single q)")), T("(El q)")));
  // An explicit annotation is verified and kept.
  SubRef annotated = sub_plus(sub_p(), T("(U 0)"));
  Ctx cod3 = wf_sub(C("(ctx Top (U 0))"), annotated);
  CHECK(print_ctx(cod3) == "(ctx (U 0))");
  // A wrong annotation is rejected.
  SubRef wrong = sub_plus(sub_p(), T("Top"));
  CHECK_THROWS_AS(wf_sub(C("(ctx Top (U 0))"), wrong), CheckError);
}

TEST_CASE("checking under an explicit substitution") {
  // (lam q)[p] checked against the transported Pi type.
  Ctx ctx = C("(ctx Top)");
  CHECK(check_tm(ctx, M("(tmsub (lam q) p)"),
                 T("(tysub (Pi (U 0) (tysub (U 0) p)) p)"))
            .ok);
  CHECK(check_tm(ctx, M("(tmsub tt p)"), T("Top")).ok);
}
