// Acceptance suite: one pass/fail line per criterion, with pinned seeds.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "ssc/check.hpp"
#include "ssc/cwf.hpp"
#include "ssc/eval.hpp"
#include "ssc/laws.hpp"
#include "ssc/minim.hpp"
#include "ssc/sexpr.hpp"
#include "ssc/tel.hpp"
#include "ssc/termify.hpp"

using namespace ssc;

namespace {

void verdict(int n, const std::string& label, bool ok) {
  std::cout << "criterion " << n << " (" << label << "): "
            << (ok ? "PASS" : "FAIL") << std::endl;
  CHECK_MESSAGE(ok, "criterion ", n, " (", label, ")");
}

Ctx ext(Ctx c, const TyRef& t) {
  c.push_back(t);
  return c;
}

TyRef TI(const TyRef& a, const SubRef& s) { return ty_inst(a, s); }
TmRef MI(const TmRef& t, const SubRef& s) { return tm_inst(t, s); }
SubRef SS(const TmRef& t) { return sub_single(t); }

// Runs the command line tool; returns the exit code, captures stdout.
int run_cli(const std::string& args, std::string* out = nullptr) {
  std::string cmd = std::string(SSC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string text;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
    text.append(buf.data(), n);
  int status = pclose(p);
  if (out) *out = text;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/ssc-acceptance-") + name;
}

}  // namespace

TEST_CASE("1: every axiom holds on 200 generated instances") {
  GenConfig cfg;
  cfg.seed = 101;
  Gen gen(cfg);
  std::vector<std::string> names = core_equation_names();
  for (const std::string& n : former_law_names()) names.push_back(n);
  bool ok = true;
  for (const std::string& name : names) {
    int done = 0;
    for (int k = 0; k < 200 * 50 && done < 200; ++k) {
      try {
        if (!check_equation_instance(name, gen)) {
          ok = false;
          break;
        }
        ++done;
      } catch (const Exhausted&) {
      }
    }
    if (done < 200) ok = false;
    if (!ok) break;
  }
  verdict(1, "axiom suite, 8 core equations + 20 former laws x200", ok);
}

TEST_CASE("2: polymorphic identity computes and weakens") {
  GenConfig cfg;
  cfg.seed = 102;
  Gen gen(cfg);
  TyRef idty = ty_pi(ty_u(0), ty_pi(ty_lift(ty_el(tm_q())),
                                    TI(ty_lift(ty_el(tm_q())), sub_p())));
  TmRef idfun = tm_lam(tm_lam(tm_q()));
  bool ok = check_tm(Ctx{}, idfun, idty).ok;
  int applied = 0, weakened = 0;
  for (int k = 0; k < 800 && (applied < 20 || weakened < 20); ++k) {
    try {
      if (applied < 20) {
        TyRef a = gen.ty_at(Ctx{}, 0, 3);
        TmRef x = gen.tm(Ctx{}, a);
        TmRef app2 = tm_app(tm_app(idfun, tm_code(a)), tm_mk(x));
        if (!conv_tm_u(Ctx{}, app2, tm_mk(x), ty_lift(a))) ok = false;
        ++applied;
      } else {
        Ctx g1 = {gen.ty(Ctx{})};
        if (!conv_tm_u(g1, MI(idfun, sub_p()), idfun, TI(idty, sub_p())))
          ok = false;
        ++weakened;
      }
    } catch (const Exhausted&) {
    }
  }
  ok = ok && applied == 20 && weakened == 20;
  verdict(2, "worked example: identity application and weakening x20", ok);
}

TEST_CASE("3: lifted equations hold with telescopes of length 1-3") {
  GenConfig cfg;
  cfg.seed = 103;
  Gen gen(cfg);
  bool ok = true;
  for (int n = 1; n <= 4 && ok; ++n) {
    int with_subject = 0;
    for (int k = 0; k < 200; ++k) {
      LiftedEqInstance inst = gen_lifted_instance(gen, n, 1, 3);
      if (!check_lifted_eq(n, inst)) {
        ok = false;
        break;
      }
      if (inst.subject) ++with_subject;
    }
    // Both variants must be exercised: enough instances carry a term.
    if (with_subject < 50) ok = false;
  }
  verdict(3, "lifted equations (1)-(4), type and term variants x200", ok);
}

TEST_CASE("4: lifted-variable isomorphism roundtrips") {
  GenConfig cfg;
  cfg.seed = 104;
  cfg.max_depth = 3;
  Gen gen(cfg);
  bool ok = true;
  int fwd_done = 0, bwd_done = 0;
  for (int k = 0; k < 2000 && (fwd_done < 50 || bwd_done < 50); ++k) {
    try {
      Ctx g = tel_append({}, gen.tel({}));
      TyRef a = gen.ty(g);
      if (fwd_done < 50) {
        Ctx e = ext(g, a);
        TyRef b = gen.ty(e);
        TmRef t = gen.tm(e, b);
        TmRef f = MI(MI(t, sub_plus(sub_p(), a)), SS(tm_un(tm_q())));
        TmRef back =
            MI(MI(f, sub_plus(sub_p(), ty_lift(a))), SS(tm_mk(tm_q())));
        if (!conv_tm_u(e, back, t, b)) ok = false;
        ++fwd_done;
      } else {
        Ctx e = ext(g, ty_lift(a));
        TyRef b = gen.ty(e);
        TmRef s = gen.tm(e, b);
        TmRef f =
            MI(MI(s, sub_plus(sub_p(), ty_lift(a))), SS(tm_mk(tm_q())));
        TmRef back = MI(MI(f, sub_plus(sub_p(), a)), SS(tm_un(tm_q())));
        if (!conv_tm_u(e, back, s, b)) ok = false;
        ++bwd_done;
      }
    } catch (const Exhausted&) {
    }
  }
  ok = ok && fwd_done == 50 && bwd_done == 50;
  verdict(4, "lifted-variable isomorphism, both roundtrips x50", ok);
}

TEST_CASE("5: commutation of Lift and Pi") {
  GenConfig cfg;
  cfg.seed = 105;
  cfg.max_depth = 3;
  Gen gen(cfg);
  bool ok = true;
  int done = 0;
  for (int k = 0; k < 800 && done < 20; ++k) {
    try {
      Ctx g = tel_append({}, gen.tel({}));
      Level i = gen.pick(cfg.max_level + 1);
      TyRef a = gen.ty_at(g, i, 3);
      TyRef b = gen.ty_at(ext(g, a), i, 3);
      TyRef src = ty_lift(ty_pi(a, b));
      TyRef tgt = ty_pi(
          ty_lift(a),
          ty_lift(TI(TI(b, sub_plus(sub_p(), a)), SS(tm_un(tm_q())))));
      auto fwd = [&](const TmRef& t) {
        TmRef inner = tm_app(MI(tm_un(t), sub_p()), tm_q());
        return tm_lam(MI(MI(tm_mk(inner), sub_plus(sub_p(), a)),
                         SS(tm_un(tm_q()))));
      };
      auto bwd = [&](const TmRef& s) {
        TmRef inner = tm_app(MI(s, sub_p()), tm_q());
        return tm_mk(tm_lam(tm_un(
            MI(MI(inner, sub_plus(sub_p(), ty_lift(a))),
               SS(tm_mk(tm_q()))))));
      };
      TmRef t = gen.tm(g, src);
      if (!conv_tm_u(g, bwd(fwd(t)), t, src)) ok = false;
      TmRef s = gen.tm(g, tgt);
      if (!conv_tm_u(g, fwd(bwd(s)), s, tgt)) ok = false;
      ++done;
    } catch (const Exhausted&) {
    }
  }
  ok = ok && done == 20;
  verdict(5, "Lift/Pi commutation, both composites x20", ok);
}

TEST_CASE("6: the two syntaxes are isomorphic on generated entities") {
  GenConfig cfg;
  cfg.seed = 106;
  Gen gen(cfg);
  bool ok = true;
  std::map<std::string, int> seen;
  auto tally = [&](const std::string& printed) {
    std::istringstream in(printed);
    std::string tok;
    while (in >> tok) {
      while (!tok.empty() && tok.front() == '(') tok.erase(tok.begin());
      while (!tok.empty() && tok.back() == ')') tok.pop_back();
      if (!tok.empty()) ++seen[tok];
    }
  };
  auto rt_tm = [&](const Ctx& g, const TmRef& b, const TyRef& a) {
    tally(print_tm(b));
    if (!roundtrip_ssc_tm(g, b, a)) ok = false;
    if (!roundtrip_cwf_tm(ssc_to_cwf_ctx(g), ssc_to_cwf_tm(b),
                          ssc_to_cwf_ty(a)))
      ok = false;
  };
  int done = 0;
  for (int k = 0; k < 2000 && done < 200; ++k) {
    Ctx g = tel_append({}, gen.tel({}));
    TyRef a = gen.ty(g);
    tally(print_ty(a));
    if (!roundtrip_ssc_ty(g, a)) ok = false;
    if (!roundtrip_cwf_ty(ssc_to_cwf_ctx(g), ssc_to_cwf_ty(a))) ok = false;
    SubRef s = gen.sub(g.empty() ? Ctx{ty_top()} : g);
    tally(print_sub(s));
    try {
      TmRef b = gen.tm(g, a);
      rt_tm(g, b, a);
      // Eliminator-headed derivatives keep app/fst/snd/un in the sample.
      NfTyRef na = normalize_ty(g, a);
      if (na->kind == NfTy::Kind::Pi) {
        TmRef arg = gen.tm(g, nf_ty_to_raw(na->a));
        rt_tm(g, tm_app(b, arg),
              TI(nf_ty_to_raw(na->b), SS(arg)));
      } else if (na->kind == NfTy::Kind::Sigma) {
        rt_tm(g, tm_fst(b), nf_ty_to_raw(na->a));
        rt_tm(g, tm_snd(b), TI(nf_ty_to_raw(na->b), SS(tm_fst(b))));
      } else if (na->kind == NfTy::Kind::Lift) {
        rt_tm(g, tm_un(b), nf_ty_to_raw(na->a));
      }
    } catch (const Exhausted&) {
    }
    ++done;
  }
  ok = ok && done == 200;
  for (const char* c :
       {"U", "El", "Pi", "Sigma", "Top", "Lift", "tysub", "q", "tmsub",
        "lam", "app", "code", "mk", "un", "tt", "pair", "fst", "snd", "p",
        "single", "plus"}) {
    if (seen[c] < 5) {
      std::cout << "  constructor " << c << " seen only " << seen[c]
                << " times" << std::endl;
      ok = false;
    }
  }
  verdict(6, "syntax isomorphism roundtrips x200 with full coverage", ok);
}

TEST_CASE("7: minimised calculus interderivability") {
  bool ok = true;
  for (const std::string& name : derived_chain_names()) {
    Chain c = derive_full_axiom(name);
    if (!replay(c, allowed_for(name)).ok) ok = false;
  }
  if (run_cli("minim verify --count 100 --seed 0") != 0) ok = false;
  // Negative control: a corrupted chain must be rejected with exit 1.
  Chain good = derive_full_axiom("p-plus-ty");
  good.steps[1].rule = "u-beta";
  std::string path = temp_path("corrupt.ssc");
  {
    std::ofstream out(path);
    out << "(def broken chain " << print_chain(good) << ")\n";
  }
  if (run_cli("check " + path) != 1) ok = false;
  std::remove(path.c_str());
  verdict(7, "minimisation: chains replay, verify x100, corrupt fails", ok);
}

TEST_CASE("8: termified model satisfies the CwF laws") {
  GenConfig cfg;
  cfg.seed = 108;
  cfg.max_depth = 3;
  Gen gen(cfg);
  bool ok = true;
  for (const std::string& law : cwf_law_names()) {
    int done = 0;
    for (int k = 0; k < 50 * 40 && done < 50; ++k) {
      try {
        if (!check_cwf_law(law, gen)) {
          ok = false;
          break;
        }
        ++done;
      } catch (const Exhausted&) {
      }
    }
    if (done < 50) ok = false;
    if (!ok) break;
  }
  // Functor-law endpoints on a pinned instance.
  TCon g{1, ty_u(0)};
  TCon d = t_empty();
  TTy A{g, 0, tm_lam(tm_code(ty_top()))};
  TSub ga{d, g, tm_lam(tm_code(ty_top()))};
  TSub de{d, d, tm_lam(tm_q())};
  if (!t_conv_ty(t_inst_ty(A, t_comp(ga, de)),
                 t_inst_ty(t_inst_ty(A, ga), de)))
    ok = false;
  // Decoration erasure must reproduce the undecorated displays exactly.
  if (print_tm(erase_tm(t_id(g).tm)) != "(lam q)") ok = false;
  if (print_tm(erase_tm(t_comp(ga, de).tm)) !=
      "(lam (app (tmsub (lam (code Top)) p) (app (tmsub (lam q) p) q)))")
    ok = false;
  if (print_ty(erase_ty(t_ext(g, A).ty)) !=
      "(Sigma (U 0) (El (app (tmsub (lam (code Top)) p) q)))")
    ok = false;
  if (print_tm(erase_tm(t_p(g, A).tm)) != "(lam (fst q))") ok = false;
  if (print_tm(erase_tm(t_q(g, A).tm)) != "(lam (snd q))") ok = false;
  verdict(8, "termification: CwF laws x50, functor endpoints, erasure", ok);
}

TEST_CASE("9: contextual-isomorphism components") {
  TCon g{1, ty_u(0)};
  TCon d = t_empty();
  TTy A{g, 0, tm_lam(tm_code(ty_top()))};
  TSub ga{d, g, tm_lam(tm_code(ty_top()))};
  TTm a{g, A, tm_lam(tm_mk(tm_tt()))};
  bool ok = true;
  CCtx fg = f_con(g);
  if (!cwf_wf_ctx(fg).ok) ok = false;
  if (cwf_infer_ty_level(fg, f_ty(A)) != 0) ok = false;
  if (!cwf_check_tm(fg, f_tm(a), f_ty(A)).ok) ok = false;
  if (cwf_wf_sub(f_con(d), f_sub(ga)).size() != 1) ok = false;

  GenConfig cfg;
  cfg.seed = 109;
  cfg.max_depth = 3;
  Gen gen(cfg);
  int done = 0;
  for (int k = 0; k < 50 * 40 && done < 50; ++k) {
    try {
      TCon cg = gen_tcon(gen);
      TCon cd = gen_tcon(gen);
      TTy ca = gen_tty(gen, cg, gen.pick(2));
      TSub cc = gen_tsub(gen, cd, cg);
      CCtx fd = f_con(cd);
      if (!cwf_conv_ty(fd, f_ty(t_inst_ty(ca, cc)),
                       cty_inst(f_ty(ca), f_sub(cc))))
        ok = false;
      TTm ct = gen_ttm(gen, cg, ca);
      if (!cwf_conv_tm(fd, f_tm(t_inst_tm(ct, cc)),
                       ctm_inst(f_tm(ct), f_sub(cc)),
                       f_ty(t_inst_ty(ca, cc))))
        ok = false;
      ++done;
    } catch (const Exhausted&) {
    }
  }
  ok = ok && done == 50;
  verdict(9, "F-components typecheck and preserve instantiation x50", ok);
}

TEST_CASE("10: verify output is deterministic under a fixed seed") {
  bool ok = true;
  for (const std::string& cmd :
       {std::string("verify equations --count 20 --seed 5"),
        std::string("verify lifted --count 5 --seed 5"),
        std::string("verify cwf-laws --count 3 --seed 5")}) {
    std::string a, b;
    int ra = run_cli(cmd, &a);
    int rb = run_cli(cmd, &b);
    if (ra != 0 || rb != 0 || a != b || a.empty()) ok = false;
  }
  verdict(10, "determinism: identical seeds give identical output", ok);
}
