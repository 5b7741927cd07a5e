#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ssc/check.hpp"
#include "ssc/sexpr.hpp"

using namespace ssc;

namespace {
Ctx C(const std::string& s) { return ctx_from_sexp(parse_sexp(s)); }
TyRef T(const std::string& s) { return ty_from_sexp(parse_sexp(s)); }
TmRef M(const std::string& s) { return tm_from_sexp(parse_sexp(s)); }

std::string nty(const std::string& ctx, const std::string& ty) {
  return print_nf_ty(normalize_ty(C(ctx), T(ty)));
}
std::string ntm(const std::string& ctx, const std::string& tm,
                const std::string& ty) {
  return print_nf_tm(normalize_tm(C(ctx), M(tm), T(ty)));
}
}  // namespace

TEST_CASE("type-level substitution computes") {
  CHECK(nty("(ctx Top)", "(tysub (U 0) p)") == "(U 0)");
  // Pi distributes over instantiation.
  CHECK(nty("(ctx)",
            "(tysub (Pi (U 0) (Lift (El q))) (single (code Top)))") ==
        nty("(ctx)", "(Pi (U 0) (Lift (El q)))"));
  // B[p][<a>] collapses to B.
  CHECK(nty("(ctx (U 0))", "(tysub (tysub (El q) p) (single q))") ==
        nty("(ctx (U 0))", "(El q)"));
}

TEST_CASE("term-level computation rules") {
  // Beta: (lam b) . a = b[<a>].
  CHECK(ntm("(ctx (U 0))", "(app (lam q) q)", "(U 0)") ==
        ntm("(ctx (U 0))", "q", "(U 0)"));
  // q[<a>] = a.
  CHECK(ntm("(ctx (U 0))", "(tmsub q (single q))", "(tysub (U 0) p)") ==
        ntm("(ctx (U 0))", "q", "(U 0)"));
  // Top eta: everything at Top is tt.
  CHECK(ntm("(ctx Top)", "q", "Top") == "tt");
  // q[g+] = q.
  CHECK(ntm("(ctx Top (U 0))", "(tmsub q (plus p))",
            "(tysub (tysub (U 0) p) (plus p))") ==
        ntm("(ctx Top (U 0))", "q", "(tysub (U 0) p)"));
  // Projections compute on literal pairs. A bare pair is checked-only, so
  // the composite is fed to the unchecked engine (well-typed by hand).
  CHECK(print_nf_tm(normalize_tm_u(C("(ctx)"), M("(fst (pair tt (mk tt)))"),
                                   T("Top"))) == "tt");
  CHECK(print_nf_tm(normalize_tm_u(
            C("(ctx)"), M("(un (snd (pair tt (mk tt))))"), T("Top"))) == "tt");
  // Projections on neutrals stay stuck (modulo eta at U).
  CHECK(ntm("(ctx (Sigma (U 0) (tysub (U 0) p)))", "(fst q)",
            "(U 0)") == "(code (El (fst q)))");
}

TEST_CASE("conversion checking") {
  CHECK(conv_ty(C("(ctx (U 0))"), T("(El (code (El q)))"), T("(El q)")));
  CHECK(conv_tm(C("(ctx (U 0))"), M("(code (El q))"), M("q"), T("(U 0)")));
  CHECK(conv_ty(C("(ctx (U 0))"),
                T("(tysub (tysub (El q) (plus p)) (single q))"), T("(El q)")));
  CHECK_FALSE(conv_ty(C("(ctx)"), T("(U 0)"), T("(U 1)")));
  CHECK_FALSE(conv_ty(C("(ctx)"), T("Top"), T("(Lift Top)")));
  // Ill-formed input is an error, not a verdict.
  CHECK_THROWS_AS(conv_ty(C("(ctx)"), T("(El q)"), T("Top")), CheckError);
}

TEST_CASE("normal forms are eta-long") {
  // Pi: a variable eta-expands to a lambda.
  NfTmRef f = normalize_tm(C("(ctx (Pi (U 0) (tysub (U 0) p)))"), M("q"),
                           T("(tysub (Pi (U 0) (tysub (U 0) p)) p)"));
  REQUIRE(f->kind == NfTm::Kind::Lam);
  // Sigma: pair of projections.
  NfTmRef w = normalize_tm(C("(ctx (Sigma (U 0) (tysub (U 0) p)))"), M("q"),
                           T("(tysub (Sigma (U 0) (tysub (U 0) p)) p)"));
  REQUIRE(w->kind == NfTm::Kind::Pair);
  // Lift: mk of un.
  NfTmRef m = normalize_tm(C("(ctx (Lift (U 0)))"), M("q"),
                           T("(tysub (Lift (U 0)) p)"));
  REQUIRE(m->kind == NfTm::Kind::Mk);
  // U: code of El.
  CHECK(ntm("(ctx (U 0))", "q", "(U 0)") == "(code (El q))");
}

TEST_CASE("eta expansion of neutrals") {
  NfTyRef pi = normalize_ty(C("(ctx)"), T("(Pi (U 0) (tysub (U 0) p))"));
  CHECK(eta_expand(C("(ctx (Pi (U 0) (tysub (U 0) p)))"), ne_var(0), pi)
            ->kind == NfTm::Kind::Lam);
  NfTyRef sg = normalize_ty(C("(ctx)"), T("(Sigma (U 0) (tysub (U 0) p))"));
  CHECK(eta_expand(C("(ctx (Sigma (U 0) (tysub (U 0) p)))"), ne_var(0), sg)
            ->kind == NfTm::Kind::Pair);
  NfTyRef lt = normalize_ty(C("(ctx)"), T("(Lift Top)"));
  NfTmRef e = eta_expand(C("(ctx (Lift Top))"), ne_var(0), lt);
  REQUIRE(e->kind == NfTm::Kind::Mk);
  CHECK(print_nf_tm(eta_expand(C("(ctx Top)"), ne_var(0), nf_top())) == "tt");
}

TEST_CASE("normalisation requires well-typed input") {
  CHECK_THROWS_AS(normalize_ty(C("(ctx)"), T("(El q)")), CheckError);
  CHECK_THROWS_AS(normalize_tm(C("(ctx)"), M("tt"), T("(U 0)")), CheckError);
}
