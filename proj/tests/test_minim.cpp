#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "ssc/minim.hpp"
#include "ssc/sexpr.hpp"

using namespace ssc;

namespace {
TyRef T(const std::string& s) { return ty_from_sexp(parse_sexp(s)); }
TmRef M(const std::string& s) { return tm_from_sexp(parse_sexp(s)); }

std::vector<std::string> min_names() {
  std::vector<std::string> v;
  for (const Axiom& a : minimised_axioms()) v.push_back(a.name);
  return v;
}
}  // namespace

TEST_CASE("minimised and full equation names are disjoint") {
  std::set<std::string> mins;
  for (const std::string& n : min_names()) mins.insert(n);
  CHECK(mins.size() == 19);
  for (const std::string& n : full_axiom_names()) {
    CHECK(mins.count(n) == 0);
    CHECK(find_axiom(n) != nullptr);
  }
  CHECK(full_axiom_names().size() == 11);
  CHECK(mins.count("p-plus-cond") == 1);
  CHECK(mins.count("app-cond") == 1);
  CHECK(mins.count("pi-beta-cond") == 1);
  CHECK(mins.count("lift-eta") == 1);
}

TEST_CASE("first-order matching and substitution") {
  Binding b;
  const Axiom* el = find_axiom("el-sub");
  REQUIRE(el != nullptr);
  TyRef lhs = T("(tysub (El q) p)");
  CHECK(match_ty(el->lhs, lhs, b));
  TyRef rhs = subst_pat_ty(el->rhs, b);
  REQUIRE(rhs != nullptr);
  CHECK(print_ty(rhs) == "(El (tmsub q p))");

  // A non-linear pattern must see equal instances.
  Binding b2;
  const Axiom* beta = find_axiom("pi-beta-cond");
  REQUIRE(beta != nullptr);
  CHECK(match_tm(beta->lhs, M("(app (tmsub (lam q) p) q)"), b2));
  CHECK(print_tm(subst_pat_tm(beta->rhs, b2)) == "q");
  Binding b3;
  CHECK_FALSE(match_tm(beta->lhs, M("(app (tmsub (lam q) (single tt)) q)"),
                       b3));
}

TEST_CASE("every recovered equation replays from the minimised rules") {
  for (const std::string& name : derived_chain_names()) {
    CAPTURE(name);
    Chain c = derive_full_axiom(name);
    ReplayResult r = replay(c, allowed_for(name));
    CAPTURE(r.detail);
    CHECK(r.ok);
    CHECK(c.reconstructed == (name == "q-single"));
  }
}

TEST_CASE("a corrupted chain is rejected with the failing step") {
  Chain c = derive_full_axiom("p-plus-ty");
  REQUIRE(c.steps.size() == 5);
  c.steps[1].rule = "u-beta";  // was el-sub
  ReplayResult r = replay(c, allowed_for("p-plus-ty"));
  CHECK_FALSE(r.ok);
  CHECK(r.failing_step == 1);

  // A chain citing an equation outside the allowed set is also rejected.
  Chain good = derive_full_axiom("p-plus-ty");
  ReplayResult r2 = replay(good, {"u-beta", "el-sub"});
  CHECK_FALSE(r2.ok);
  CHECK(r2.failing_step == 2);

  // A conditional step with its hypothesis removed is rejected.
  Chain nohyp = derive_full_axiom("p-plus-tm");
  nohyp.steps[0].hyp.reset();
  ReplayResult r3 = replay(nohyp, allowed_for("p-plus-tm"));
  CHECK_FALSE(r3.ok);
  CHECK(r3.failing_step == 0);
}

TEST_CASE("chains survive a serialisation roundtrip") {
  for (const std::string& name : {std::string("p-plus-ty"),
                                  std::string("pi-beta"),
                                  std::string("q-single")}) {
    CAPTURE(name);
    Chain c = derive_full_axiom(name);
    std::string printed = print_chain(c);
    Chain back = chain_from_sexp(parse_sexp(printed));
    CHECK(print_chain(back) == printed);
    ReplayResult r = replay(back, allowed_for(name));
    CAPTURE(r.detail);
    CHECK(r.ok);
  }
}

TEST_CASE("conversion decides random minimised-rule instances") {
  GenConfig cfg;
  cfg.seed = 7;
  Gen gen(cfg);
  for (const std::string& name : min_names()) {
    CAPTURE(name);
    int done = 0;
    for (int k = 0; k < 200 && done < 5; ++k) {
      try {
        CHECK(check_min_axiom_instance(name, gen));
        ++done;
      } catch (const Exhausted&) {
      }
    }
    CHECK(done == 5);
  }
}

TEST_CASE("sampled interderivability report is clean and deterministic") {
  GenConfig cfg;
  cfg.seed = 11;
  Gen g1(cfg);
  EquivReport r1 = equivalence_check(g1, 3);
  CAPTURE(r1.detail);
  CHECK(r1.ok());
  CHECK(r1.full_checked == 3 * static_cast<int>(derived_chain_names().size()));
  CHECK(r1.min_checked == 3 * 19);
  Gen g2(cfg);
  EquivReport r2 = equivalence_check(g2, 3);
  CHECK(r2.full_checked == r1.full_checked);
  CHECK(r2.full_passed == r1.full_passed);
  CHECK(r2.min_checked == r1.min_checked);
  CHECK(r2.min_passed == r1.min_passed);
}
