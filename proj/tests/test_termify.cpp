#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ssc/eval.hpp"
#include "ssc/termify.hpp"

using namespace ssc;

namespace {
TyRef pty(const std::string& s) { return ty_from_sexp(parse_sexp(s)); }
Ctx kEmpty;

// Representative contexts at levels 0, 1 and 2 so that the truncating
// subtraction is exercised with i < g, i = g and i > g.
std::vector<TCon> sample_cons() {
  return {t_empty(), TCon{1, ty_u(0)}, TCon{2, ty_u(1)}};
}
}  // namespace

TEST_CASE("iterated lifting") {
  TyRef a = pty("(U 0)");
  CHECK(lift_k(0, a) == a);
  CHECK(print_ty(lift_k(1, ty_top())) == "(Lift Top)");
  CHECK(infer_ty_level(kEmpty, lift_k(2, a)) == 3);
  // un^k . mk^k is the identity up to conversion
  TmRef t = tm_code(ty_top());
  CHECK(conv_tm_u(kEmpty, un_k(2, mk_k(2, t)), t, pty("(U 0)")));
}

TEST_CASE("payload types follow the truncating-subtraction formulas") {
  TCon g{1, ty_u(0)};
  TCon d = t_empty();
  CHECK(print_ty(tsub_payload_ty(d, g)) ==
        "(Pi (Lift Top) (tysub (U 0) p))");
  CHECK(print_ty(tsub_payload_ty(g, d)) ==
        "(Pi (U 0) (tysub (Lift Top) p))");
  CHECK(print_ty(tty_payload_ty(g, 0)) == "(Pi (U 0) (tysub (U 0) p))");
  // i = 1 over a level-1 context: one lifting on the domain
  CHECK(print_ty(tty_payload_ty(g, 1)) ==
        "(Pi (Lift (U 0)) (tysub (U 1) p))");
  for (const TCon& c : sample_cons())
    for (Level i = 0; i <= 2; ++i)
      CHECK(infer_ty_level(kEmpty, tty_payload_ty(c, i)) ==
            std::max(c.level, 1 + i));
}

TEST_CASE("structure payloads typecheck at all level combinations") {
  for (const TCon& g : sample_cons()) {
    CHECK(t_check_sub(t_id(g)).ok);
    CHECK(t_check_sub(t_eps(g)).ok);
    TTm tt0 = t_tt(g);
    CHECK(t_check_ty(t_top(g)).ok);
    CHECK(t_check_tm(tt0).ok);
    for (Level i = 0; i <= 1; ++i) {
      CHECK(t_check_ty(t_u(g, i)).ok);
      TTy u = t_u(g, i);
      TTm c = t_code(t_top(g));
      (void)u;
      (void)c;
    }
    TTy a = t_top(g);
    CHECK(t_check_sub(t_p(g, a)).ok);
    CHECK(t_check_tm(t_q(g, a)).ok);
    CHECK(t_check_ty(t_lift(a)).ok);
    CHECK(t_check_tm(t_mk(a, tt0)).ok);
    CHECK(t_check_tm(t_un(a, t_mk(a, tt0))).ok);
    TTy b = t_top(t_ext(g, a));
    CHECK(t_check_ty(t_pi(a, b)).ok);
    CHECK(t_check_ty(t_sigma(a, b)).ok);
    TTm body = t_tt(t_ext(g, a));
    CHECK(t_check_tm(t_lam(a, b, body)).ok);
    CHECK(t_check_tm(t_app(a, b, t_lam(a, b, body), tt0)).ok);
    TTm y = TTm{g, t_inst_ty(b, t_pair(t_id(g), a, tt0)),
                t_tt(g).tm};
    CHECK(t_check_tm(t_spair(a, b, tt0, y)).ok);
    for (const TCon& d : sample_cons()) {
      TSub ep = t_eps(d);
      (void)ep;
      TSub comp = t_comp(t_eps(g), t_id(g));
      CHECK(t_check_sub(comp).ok);
    }
  }
}

TEST_CASE("composition matches the fully decorated display") {
  // G = (1, U 0), D = (0, Top), Th = (0, Top):
  // gamma o delta = lam (mk^{Th-G} (un^{D-G} (gamma[p] . mk^{G-D} (un^{Th-D}
  //   (delta[p] . mk^{D-Th} (un^{G-Th} q))))))
  TCon g{1, ty_u(0)};
  TCon d = t_empty();
  TSub ga{d, g, tm_lam(tm_code(ty_top()))};
  TSub de{d, d, tm_lam(tm_q())};
  CHECK(print_tm(t_comp(ga, de).tm) ==
        "(lam (app (tmsub (lam (code Top)) p) (mk (app (tmsub (lam q) p) "
        "(un q)))))");
}

TEST_CASE("decoration erasure reproduces the undecorated display") {
  TCon g{1, ty_u(0)};
  TCon d = t_empty();
  TTy A{g, 0, tm_lam(tm_code(ty_top()))};
  TSub ga{d, g, tm_lam(tm_code(ty_top()))};
  TSub de{d, d, tm_lam(tm_q())};
  TTm a{g, A, tm_lam(tm_mk(tm_tt()))};
  TCon E = t_ext(g, A);
  TTy B{E, 0, tm_lam(tm_code(ty_top()))};
  TTm b{E, B, tm_lam(tm_mk(tm_tt()))};
  TTm aD{d, t_inst_ty(A, ga), tm_lam(tm_tt())};

  auto e = [](const TmRef& t) { return print_tm(erase_tm(t)); };
  // id := lam q
  CHECK(e(t_id(g).tm) == "(lam q)");
  // eps := lam tt
  CHECK(e(t_eps(g).tm) == "(lam tt)");
  // gamma o delta := lam (gamma[p] . (delta[p] . q))
  CHECK(e(t_comp(ga, de).tm) ==
        "(lam (app (tmsub (lam (code Top)) p) (app (tmsub (lam q) p) q)))");
  // empty := Top
  CHECK(print_ty(erase_ty(t_empty().ty)) == "Top");
  // G # A := Sigma G (El (A[p] . q))
  CHECK(print_ty(erase_ty(E.ty)) ==
        "(Sigma (U 0) (El (app (tmsub (lam (code Top)) p) q)))");
  // (gamma, a) := lam (gamma[p] . q, a[p] . q)
  CHECK(e(t_pair(ga, A, aD).tm) ==
        "(lam (pair (app (tmsub (lam (code Top)) p) q) (app (tmsub (lam tt) "
        "p) q)))");
  // A[gamma] := lam (A[p] . (gamma[p] . q))
  CHECK(e(t_inst_ty(A, ga).tm) ==
        "(lam (app (tmsub (lam (code Top)) p) (app (tmsub (lam (code Top)) "
        "p) q)))");
  // a[gamma] := lam (a[p] . (gamma[p] . q))
  CHECK(e(t_inst_tm(a, ga).tm) ==
        "(lam (app (tmsub (lam tt) p) (app (tmsub (lam (code Top)) p) "
        "q)))");
  // p := lam (fst q), q := lam (snd q)
  CHECK(e(t_p(g, A).tm) == "(lam (fst q))");
  CHECK(e(t_q(g, A).tm) == "(lam (snd q))");
  // Pi A B := lam (c (Pi (El (A[p] . q)) (El (B[p][p] . (q[p], q)))))
  CHECK(e(t_pi(A, B).tm) ==
        "(lam (code (Pi (El (app (tmsub (lam (code Top)) p) q)) (El (app "
        "(tmsub (tmsub (lam (code Top)) p) p) (pair (tmsub q p) q))))))");
  // lam b := lam (lam (b[p][p] . (q[p], q)))
  CHECK(e(t_lam(A, B, b).tm) ==
        "(lam (lam (app (tmsub (tmsub (lam tt) p) p) (pair (tmsub q p) "
        "q))))");
}

TEST_CASE("emitter is deterministic and covers every op") {
  for (const std::string& op : termify_op_names()) {
    std::string once = print_sexp(termify_emit(op));
    CHECK(once == print_sexp(termify_emit(op)));
    CHECK(!once.empty());
  }
  CHECK_THROWS_AS(termify_emit("nonsense"), std::invalid_argument);
}

TEST_CASE("every CwF law has a passing case") {
  GenConfig cfg;
  cfg.seed = 21;
  cfg.max_depth = 3;
  Gen gen(cfg);
  for (const std::string& law : cwf_law_names()) {
    int done = 0;
    for (int k = 0; k < 40 && done < 3; ++k) {
      try {
        bool ok = check_cwf_law(law, gen);
        CHECK_MESSAGE(ok, "law ", law);
        ++done;
      } catch (const Exhausted&) {
      }
    }
    CHECK_MESSAGE(done >= 3, "law ", law, " ran ", done, " instances");
  }
}

TEST_CASE("functor law endpoints") {
  // A[gamma o delta] = A[gamma][delta] on a pinned instance.
  TCon g{1, ty_u(0)};
  TCon d = t_empty();
  TTy A{g, 0, tm_lam(tm_code(ty_top()))};
  TSub ga{d, g, tm_lam(tm_code(ty_top()))};
  TSub de{d, d, tm_lam(tm_q())};
  CHECK(t_conv_ty(t_inst_ty(A, t_comp(ga, de)),
                  t_inst_ty(t_inst_ty(A, ga), de)));
}

TEST_CASE("contextual-isomorphism components") {
  TCon g{1, ty_u(0)};
  TCon d = t_empty();
  TTy A{g, 0, tm_lam(tm_code(ty_top()))};
  TSub ga{d, g, tm_lam(tm_code(ty_top()))};
  TTm a{g, A, tm_lam(tm_mk(tm_tt()))};

  // F G is a well-formed context; F A a type over it; F a a term of F A.
  CCtx fg = f_con(g);
  CHECK(cwf_wf_ctx(fg).ok);
  CTyRef fa = f_ty(A);
  CHECK(cwf_infer_ty_level(fg, fa) == 0);
  CHECK(cwf_check_tm(fg, f_tm(a), fa).ok);
  // F gamma : Sub (F D) (F G)
  CCtx fd = f_con(d);
  CHECK(cwf_wf_sub(fd, f_sub(ga)).size() == 1);

  // Preservation: F (A[gamma]) = F A [F gamma], F (a[gamma]) = F a [F gamma]
  CHECK(cwf_conv_ty(fd, f_ty(t_inst_ty(A, ga)),
                    cty_inst(fa, f_sub(ga))));
  CHECK(cwf_conv_tm(fd, f_tm(t_inst_tm(a, ga)),
                    ctm_inst(f_tm(a), f_sub(ga)),
                    f_ty(t_inst_ty(A, ga))));
  // Functoriality on identities and composites
  CHECK(cwf_conv_sub(fg, f_sub(t_id(g)), csub_id()));
  TSub de{d, d, tm_lam(tm_q())};
  CHECK(cwf_conv_sub(fd, f_sub(t_comp(ga, de)),
                     csub_comp(f_sub(ga), f_sub(de))));

  // eps : Sub (F empty) empty is an isomorphism
  CCtx fempty = f_con(t_empty());
  CSubRef inv = csub_ext(csub_eps(), ctm_tt(), cty_top());
  CHECK(cwf_conv_sub(CCtx{}, csub_comp(csub_eps(), inv), csub_id()));
  CHECK(cwf_conv_sub(fempty, csub_comp(inv, csub_eps()), csub_id()));
}

TEST_CASE("generated preservation samples") {
  GenConfig cfg;
  cfg.seed = 22;
  cfg.max_depth = 3;
  Gen gen(cfg);
  int done = 0;
  for (int k = 0; k < 60 && done < 10; ++k) {
    try {
      TCon g = gen_tcon(gen);
      TCon d = gen_tcon(gen);
      TTy a = gen_tty(gen, g, gen.pick(2));
      TSub c = gen_tsub(gen, d, g);
      CCtx fd = f_con(d);
      CHECK(cwf_conv_ty(fd, f_ty(t_inst_ty(a, c)),
                        cty_inst(f_ty(a), f_sub(c))));
      TTm t = gen_ttm(gen, g, a);
      CHECK(cwf_conv_tm(fd, f_tm(t_inst_tm(t, c)),
                        ctm_inst(f_tm(t), f_sub(c)),
                        f_ty(t_inst_ty(a, c))));
      ++done;
    } catch (const Exhausted&) {
    }
  }
  CHECK(done >= 10);
}
