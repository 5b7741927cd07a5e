#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ssc/sexpr.hpp"
#include "ssc/syntax.hpp"

using namespace ssc;

namespace {
std::string rt_ty(const std::string& s) {
  return print_ty(ty_from_sexp(parse_sexp(s)));
}
std::string rt_tm(const std::string& s) {
  return print_tm(tm_from_sexp(parse_sexp(s)));
}
std::string rt_sub(const std::string& s) {
  return print_sub(sub_from_sexp(parse_sexp(s)));
}
}  // namespace

TEST_CASE("every type former round-trips") {
  for (const char* s : {"(U 0)", "(U 3)", "(El q)", "(Pi (U 0) (El q))",
                        "(Sigma Top (U 1))", "Top", "(Lift (U 0))",
                        "(tysub (U 0) p)",
                        "(tysub (El q) (plus (single q)))"}) {
    CHECK(rt_ty(s) == s);
  }
}

TEST_CASE("every term former round-trips") {
  for (const char* s :
       {"q", "(tmsub q p)", "(lam q)", "(app q q)", "(code (U 0))", "(mk q)",
        "(un q)", "tt", "(pair q tt)", "(fst q)", "(snd q)",
        "(tmsub (lam (app q (tmsub q p))) (single (code Top)))"}) {
    CHECK(rt_tm(s) == s);
  }
}

TEST_CASE("every substitution former round-trips") {
  for (const char* s : {"p", "(single q)", "(plus p)",
                        "(plus (plus (single (mk tt))))"}) {
    CHECK(rt_sub(s) == s);
  }
}

TEST_CASE("contexts round-trip") {
  Ctx c = ctx_from_sexp(parse_sexp("(ctx (U 0) (El q))"));
  REQUIRE(c.size() == 2);
  CHECK(print_ctx(c) == "(ctx (U 0) (El q))");
  CHECK(print_ctx(ctx_from_sexp(parse_sexp("(ctx)"))) == "(ctx)");
}

TEST_CASE("arrow sugar expands to a weakened codomain") {
  TyRef a = ty_u(0);
  TyRef b = ty_top();
  CHECK(print_ty(ty_arrow(a, b)) == "(Pi (U 0) (tysub Top p))");
}

TEST_CASE("tm_var builds weakening spines") {
  CHECK(print_tm(tm_var(0)) == "q");
  CHECK(print_tm(tm_var(2)) == "(tmsub (tmsub q p) p)");
}

TEST_CASE("structural equality ignores lifting annotations") {
  SubRef bare = sub_plus(sub_p());
  SubRef hinted = sub_plus(sub_p(), ty_u(0));
  CHECK(equal_sub(bare, hinted));
  CHECK_FALSE(equal_sub(sub_p(), bare));
  CHECK(equal_ty(ty_from_sexp(parse_sexp("(Pi (U 0) (El q))")),
                 ty_from_sexp(parse_sexp("(Pi (U 0) (El q))"))));
  CHECK_FALSE(equal_tm(tm_q(), tm_tt()));
}

TEST_CASE("unknown heads raise ParseError") {
  CHECK_THROWS_AS(ty_from_sexp(parse_sexp("(Arrow Top Top)")), ParseError);
  CHECK_THROWS_AS(tm_from_sexp(parse_sexp("(lam)")), ParseError);
  CHECK_THROWS_AS(sub_from_sexp(parse_sexp("(single)")), ParseError);
  CHECK_THROWS_AS(ty_from_sexp(parse_sexp("(U x)")), ParseError);
}
