// Batch front end for the kernel: parse, check, normalize, convert,
// translate, verify, derive, termify.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ssc/alphanorm.hpp"
#include "ssc/check.hpp"
#include "ssc/cwf.hpp"
#include "ssc/eval.hpp"
#include "ssc/laws.hpp"
#include "ssc/minim.hpp"
#include "ssc/par.hpp"
#include "ssc/sexpr.hpp"
#include "ssc/syntax.hpp"
#include "ssc/tel.hpp"
#include "ssc/termify.hpp"

namespace {

using namespace ssc;

constexpr int kExitOk = 0;
constexpr int kExitSemantic = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Decl {
  std::string name;
  std::string kind;  // ctx | ty | tm | sub | chain
  Sexp payload;
};

Sexp resolve(const Sexp& e, const std::vector<Decl>& defs) {
  if (e.is_atom) {
    for (const Decl& d : defs)
      if (d.name == e.atom) return d.payload;
    return e;
  }
  Sexp out;
  out.is_atom = false;
  for (const Sexp& item : e.items) out.items.push_back(resolve(item, defs));
  return out;
}

std::vector<Decl> load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::vector<Sexp> top = parse_sexps(buf.str());
  std::vector<Decl> defs;
  for (const Sexp& e : top) {
    if (e.is_atom || e.items.size() != 4 || !e.items[0].is_atom ||
        e.items[0].atom != "def" || !e.items[1].is_atom ||
        !e.items[2].is_atom)
      throw ParseError("expected (def <name> <kind> <payload>)");
    Decl d;
    d.name = e.items[1].atom;
    d.kind = e.items[2].atom;
    if (d.kind != "ctx" && d.kind != "ty" && d.kind != "tm" &&
        d.kind != "sub" && d.kind != "chain")
      throw ParseError("unknown declaration kind: " + d.kind);
    d.payload = resolve(e.items[3], defs);
    defs.push_back(std::move(d));
  }
  return defs;
}

// (the <ty> <tm>) annotation on term payloads.
struct TmPayload {
  TmRef tm;
  TyRef ty;  // null when unannotated
};

TmPayload parse_tm_payload(const Sexp& e) {
  if (!e.is_atom && e.items.size() == 3 && e.items[0].is_atom &&
      e.items[0].atom == "the")
    return {tm_from_sexp(e.items[2]), ty_from_sexp(e.items[1])};
  return {tm_from_sexp(e), nullptr};
}

// Output and verdict accumulation shared by the verbs.
struct Report {
  std::ostringstream text;
  bool ok = true;
  std::string counterexample;

  void fail(const std::string& cex) {
    ok = false;
    if (counterexample.empty()) counterexample = cex;
  }
};

std::vector<std::string> all_rule_names() {
  std::vector<std::string> v;
  for (const Axiom& a : minimised_axioms()) v.push_back(a.name);
  for (const std::string& n : derived_chain_names()) v.push_back(n);
  return v;
}

// --- check ------------------------------------------------------------------

void run_check(const std::string& path, Report& rep) {
  Ctx cur;  // most recent ctx declaration
  for (const Decl& d : load_file(path)) {
    try {
      if (d.kind == "ctx") {
        cur = ctx_from_sexp(d.payload);
        Verdict v = wf_ctx(cur);
        if (!v.ok) throw CheckError(v.diagnostic);
        rep.text << d.name << ": ctx of length " << cur.size() << "\n";
      } else if (d.kind == "ty") {
        TyRef t = ty_from_sexp(d.payload);
        try {
          Level i = infer_ty_level(cur, t);
          rep.text << d.name << ": ty at level " << i << "\n";
        } catch (const NotInferable&) {
          (void)normalize_ty_u(cur, t);
          rep.text << d.name << ": ty (level via evaluation)\n";
        }
      } else if (d.kind == "tm") {
        TmPayload p = parse_tm_payload(d.payload);
        if (p.ty) {
          check_tm_or_throw(cur, p.tm, p.ty);
          rep.text << d.name << ": tm at " << print_ty(p.ty) << "\n";
        } else {
          TyRef t = infer_tm(cur, p.tm);
          rep.text << d.name << ": tm at " << print_ty(t) << "\n";
        }
      } else if (d.kind == "sub") {
        SubRef s = sub_from_sexp(d.payload);
        Ctx cod = wf_sub(cur, s);
        rep.text << d.name << ": sub into " << print_ctx(cod) << "\n";
      } else {  // chain
        Chain c = chain_from_sexp(d.payload);
        ReplayResult r = replay(c, all_rule_names());
        if (!r.ok) throw CheckError("chain does not replay: " + r.detail);
        rep.text << d.name << ": chain replays (" << c.steps.size()
                 << " steps)\n";
      }
    } catch (const CheckError& e) {
      rep.text << d.name << ": FAIL " << e.what() << "\n";
      rep.fail(e.what());
    }
  }
}

// --- normalize --------------------------------------------------------------

void run_normalize(const std::string& path, bool alpha, bool via_tms,
                   Report& rep) {
  Ctx cur;
  for (const Decl& d : load_file(path)) {
    try {
      if (d.kind == "ctx") {
        cur = ctx_from_sexp(d.payload);
        Verdict v = wf_ctx(cur);
        if (!v.ok) throw CheckError(v.diagnostic);
        continue;
      }
      if (d.kind == "ty") {
        TyRef t = ty_from_sexp(d.payload);
        if (alpha) {
          rep.text << d.name << ": " << print_ty(alpha_norm_ty(cur, t))
                   << "\n";
          continue;
        }
        NfTyRef direct = normalize_ty(cur, t);
        if (via_tms) {
          SubStarRef id = tms_embed(tms_id(cur), static_cast<int>(cur.size()));
          NfTyRef routed = normalize_ty(cur, star_inst_ty(t, id));
          if (!equal_nf_ty(direct, routed))
            throw CheckError("embedding route disagrees on " + print_ty(t));
        }
        rep.text << d.name << ": " << print_nf_ty(direct) << "\n";
      } else if (d.kind == "tm") {
        TmPayload p = parse_tm_payload(d.payload);
        TyRef ty = p.ty ? p.ty : infer_tm(cur, p.tm);
        if (p.ty) check_tm_or_throw(cur, p.tm, p.ty);
        if (alpha) {
          rep.text << d.name << ": " << print_tm(alpha_norm_tm(cur, p.tm))
                   << "\n";
          continue;
        }
        NfTmRef direct = normalize_tm(cur, p.tm, ty);
        if (via_tms) {
          SubStarRef id = tms_embed(tms_id(cur), static_cast<int>(cur.size()));
          NfTmRef routed = normalize_tm(cur, star_inst_tm(p.tm, id), ty);
          if (!equal_nf_tm(direct, routed))
            throw CheckError("embedding route disagrees on " + print_tm(p.tm));
        }
        rep.text << d.name << ": " << print_nf_tm(direct) << "\n";
      } else {
        throw UsageError("normalize handles ctx/ty/tm declarations only");
      }
    } catch (const CheckError& e) {
      rep.text << d.name << ": FAIL " << e.what() << "\n";
      rep.fail(e.what());
    }
  }
}

// --- conv -------------------------------------------------------------------

void run_conv(const std::string& path, Report& rep) {
  Ctx cur;
  TyRef common_ty;  // last ty declaration; the type at which terms compare
  std::vector<TyRef> tys;
  std::vector<TmPayload> tms;
  for (const Decl& d : load_file(path)) {
    if (d.kind == "ctx") {
      cur = ctx_from_sexp(d.payload);
    } else if (d.kind == "ty") {
      TyRef t = ty_from_sexp(d.payload);
      tys.push_back(t);
      common_ty = t;
    } else if (d.kind == "tm") {
      tms.push_back(parse_tm_payload(d.payload));
    } else {
      throw UsageError("conv expects ctx/ty/tm declarations");
    }
  }
  bool convertible = false;
  if (tms.size() == 2) {
    TyRef at = tms[0].ty ? tms[0].ty : common_ty;
    if (!at) at = tms[1].ty;
    if (!at)
      throw UsageError(
          "conv on terms needs a type: a ty declaration or a (the ...) "
          "annotation");
    check_tm_or_throw(cur, tms[0].tm, at);
    check_tm_or_throw(cur, tms[1].tm, at);
    convertible = conv_tm(cur, tms[0].tm, tms[1].tm, at);
  } else if (tms.empty() && tys.size() == 2) {
    convertible = conv_ty(cur, tys[0], tys[1]);
  } else {
    throw UsageError("conv expects exactly two ty or two tm declarations");
  }
  rep.text << (convertible ? "convertible" : "not convertible") << "\n";
  if (!convertible) rep.fail("the two declared entities are not convertible");
}

// --- translate --------------------------------------------------------------

void run_translate(const std::string& path, const std::string& to,
                   Report& rep) {
  if (to == "cwf") {
    for (const Decl& d : load_file(path)) {
      if (d.kind == "ctx") {
        rep.text << d.name << ": "
                 << print_cctx(ssc_to_cwf_ctx(ctx_from_sexp(d.payload)))
                 << "\n";
      } else if (d.kind == "ty") {
        rep.text << d.name << ": "
                 << print_cty(ssc_to_cwf_ty(ty_from_sexp(d.payload))) << "\n";
      } else if (d.kind == "tm") {
        rep.text << d.name << ": "
                 << print_ctm(ssc_to_cwf_tm(
                        parse_tm_payload(d.payload).tm))
                 << "\n";
      } else if (d.kind == "sub") {
        rep.text << d.name << ": "
                 << print_csub(ssc_to_cwf_sub(sub_from_sexp(d.payload)))
                 << "\n";
      } else {
        throw UsageError("translate handles ctx/ty/tm/sub declarations");
      }
    }
    return;
  }
  if (to != "ssc") throw UsageError("--to must be cwf or ssc");
  CCtx cur;
  for (const Decl& d : load_file(path)) {
    try {
      Ctx dom = cwf_to_ssc_ctx(cur);
      if (d.kind == "ctx") {
        cur = cctx_from_sexp(d.payload);
        rep.text << d.name << ": " << print_ctx(cwf_to_ssc_ctx(cur)) << "\n";
      } else if (d.kind == "ty") {
        rep.text << d.name << ": "
                 << print_ty(cwf_to_ssc_ty(dom, cty_from_sexp(d.payload)))
                 << "\n";
      } else if (d.kind == "tm") {
        rep.text << d.name << ": "
                 << print_tm(cwf_to_ssc_tm(dom, ctm_from_sexp(d.payload)))
                 << "\n";
      } else if (d.kind == "sub") {
        rep.text << d.name << ": "
                 << print_tms(cwf_to_ssc_sub(dom, csub_from_sexp(d.payload)))
                 << "\n";
      } else {
        throw UsageError("translate handles ctx/ty/tm/sub declarations");
      }
    } catch (const CheckError& e) {
      rep.text << d.name << ": FAIL " << e.what() << "\n";
      rep.fail(e.what());
    }
  }
}

// --- roundtrip --------------------------------------------------------------

void run_roundtrip(int count, std::uint64_t seed, Report& rep) {
  GenConfig cfg;
  cfg.seed = seed;
  Gen gen(cfg);
  int ty_pass = 0, tm_pass = 0, tm_total = 0, cty_pass = 0, ctm_pass = 0;
  for (int k = 0; k < count; ++k) {
    Ctx g = tel_append({}, gen.tel({}));
    TyRef a = gen.ty(g);
    if (roundtrip_ssc_ty(g, a)) {
      ++ty_pass;
    } else {
      rep.fail("(in " + print_ctx(g) + " " + print_ty(a) + ")");
    }
    CCtx cg = ssc_to_cwf_ctx(g);
    CTyRef ca = ssc_to_cwf_ty(a);
    if (roundtrip_cwf_ty(cg, ca)) {
      ++cty_pass;
    } else {
      rep.fail("(in " + print_cctx(cg) + " " + print_cty(ca) + ")");
    }
    try {
      TmRef b = gen.tm(g, a);
      ++tm_total;
      if (roundtrip_ssc_tm(g, b, a)) {
        ++tm_pass;
      } else {
        rep.fail("(in " + print_ctx(g) + " (the " + print_ty(a) + " " +
                 print_tm(b) + "))");
      }
      if (roundtrip_cwf_tm(cg, ssc_to_cwf_tm(b), ca)) {
        ++ctm_pass;
      } else {
        rep.fail("(in " + print_cctx(cg) + " " + print_ctm(ssc_to_cwf_tm(b)) +
                 ")");
      }
    } catch (const Exhausted&) {
    }
  }
  rep.text << "ssc->cwf->ssc ty: " << ty_pass << "/" << count << "\n";
  rep.text << "ssc->cwf->ssc tm: " << tm_pass << "/" << tm_total << "\n";
  rep.text << "cwf->ssc->cwf ty: " << cty_pass << "/" << count << "\n";
  rep.text << "cwf->ssc->cwf tm: " << ctm_pass << "/" << tm_total << "\n";
  if (ty_pass != count || tm_pass != tm_total || cty_pass != count ||
      ctm_pass != tm_total)
    rep.ok = false;
}

// --- verify -----------------------------------------------------------------

void run_verify_equations(int count, std::uint64_t seed, int depth, int tel,
                          Report& rep) {
  GenConfig cfg;
  cfg.seed = seed;
  cfg.max_depth = depth;
  cfg.max_tel = tel;
  Gen gen(cfg);
  std::vector<std::string> names = core_equation_names();
  for (const std::string& n : former_law_names()) names.push_back(n);
  for (const std::string& name : names) {
    int done = 0;
    std::string cex;
    bool row_ok = true;
    for (int k = 0; k < count * 50 && done < count; ++k) {
      try {
        if (!check_equation_instance(name, gen, &cex)) {
          row_ok = false;
          ++done;
          break;
        }
        ++done;
      } catch (const Exhausted&) {
      }
    }
    if (row_ok && done == count) {
      rep.text << name << ": pass (" << done << " instances)\n";
    } else if (!row_ok) {
      rep.text << name << ": FAIL " << cex << "\n";
      rep.fail(cex);
    } else {
      rep.text << name << ": FAIL only " << done << " instances generated\n";
      rep.fail("generator exhausted for " + name);
    }
  }
}

void run_verify_lifted(int count, std::uint64_t seed, int depth, int tel,
                       Report& rep) {
  GenConfig cfg;
  cfg.seed = seed;
  cfg.max_depth = depth;
  cfg.max_tel = tel;
  Gen gen(cfg);
  for (int n = 1; n <= 4; ++n) {
    int pass = 0;
    std::string cex;
    for (int k = 0; k < count; ++k) {
      LiftedEqInstance inst = gen_lifted_instance(gen, n, 1, tel);
      if (check_lifted_eq(n, inst)) {
        ++pass;
      } else if (cex.empty()) {
        cex = "(in " + print_ctx(inst.ctx) + " " + print_ty(inst.subject_ty) +
              ")";
      }
    }
    if (pass == count) {
      rep.text << "lifted-eq-" << n << ": pass (" << pass << " instances)\n";
    } else {
      rep.text << "lifted-eq-" << n << ": FAIL " << cex << "\n";
      rep.fail(cex);
    }
  }
}

void run_verify_cwf_laws(int count, std::uint64_t seed, Report& rep) {
  GenConfig cfg;
  cfg.seed = seed;
  Gen gen(cfg);
  for (const std::string& law : cwf_law_names()) {
    int done = 0;
    bool row_ok = true;
    for (int k = 0; k < count * 50 && done < count; ++k) {
      try {
        if (!check_cwf_law(law, gen)) {
          row_ok = false;
          ++done;
          break;
        }
        ++done;
      } catch (const Exhausted&) {
      }
    }
    if (row_ok && done == count) {
      rep.text << law << ": pass (" << done << " instances)\n";
    } else {
      rep.text << law << ": FAIL\n";
      rep.fail("law " + law + " failed on a sampled instance");
    }
  }
}

// --- minim ------------------------------------------------------------------

void run_minim_derive(const std::string& name, Report& rep) {
  Chain c;
  try {
    c = derive_full_axiom(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  rep.text << print_chain(c) << "\n";
  ReplayResult r = replay(c, allowed_for(name));
  if (r.ok) {
    rep.text << "replay: ok\n";
  } else {
    rep.text << "replay: FAIL " << r.detail << "\n";
    rep.fail(r.detail);
  }
}

void run_minim_verify(int count, std::uint64_t seed, Report& rep) {
  GenConfig cfg;
  cfg.seed = seed;
  Gen gen(cfg);
  EquivReport r = equivalence_check(gen, count);
  rep.text << "chains replayed: " << r.full_passed << "/" << r.full_checked
           << "\n";
  rep.text << "axiom instances: " << r.min_passed << "/" << r.min_checked
           << "\n";
  if (!r.ok()) {
    rep.text << "FAIL " << r.detail << "\n";
    rep.fail(r.detail);
  }
}

// --- termify ----------------------------------------------------------------

void run_termify_emit(const std::string& op, Report& rep) {
  const std::vector<std::string>& ops = termify_op_names();
  if (std::find(ops.begin(), ops.end(), op) == ops.end())
    throw UsageError("unknown operation: " + op);
  rep.text << print_sexp(termify_emit(op)) << "\n";
}

void run_termify_check(int count, std::uint64_t seed, Report& rep) {
  run_verify_cwf_laws(count, seed, rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kernel for a single substitution calculus"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  bool json = false;
  app.add_option("--seed", seed, "random seed")->capture_default_str();
  app.add_flag("--json", json, "machine-readable verdict");

  std::string file, to = "cwf", what, name, op, laws = "all";
  int count = 100, depth = 4, tel = 3;

  CLI::App* c_check = app.add_subcommand("check", "check declarations");
  c_check->add_option("file", file)->required();

  CLI::App* c_norm = app.add_subcommand("normalize", "print normal forms");
  bool alpha = false;
  std::string via;
  c_norm->add_option("file", file)->required();
  c_norm->add_flag("--alpha", alpha, "alpha-normalise only");
  c_norm->add_option("--via", via, "route through an embedding (tms)");

  CLI::App* c_conv = app.add_subcommand("conv", "decide convertibility");
  c_conv->add_option("file", file)->required();

  CLI::App* c_tr = app.add_subcommand("translate", "translate declarations");
  c_tr->add_option("file", file)->required();
  c_tr->add_option("--to", to, "target calculus (cwf or ssc)")->required();

  CLI::App* c_rt = app.add_subcommand("roundtrip", "sampled roundtrips");
  c_rt->add_option("--count", count)->capture_default_str();

  CLI::App* c_vf = app.add_subcommand("verify", "sampled equation suites");
  c_vf->add_option("what", what, "equations | lifted | cwf-laws")->required();
  c_vf->add_option("--count", count)->capture_default_str();
  c_vf->add_option("--depth", depth)->capture_default_str();
  c_vf->add_option("--tel", tel)->capture_default_str();

  CLI::App* c_mn = app.add_subcommand("minim", "minimised-calculus chains");
  std::string action;
  c_mn->add_option("action", action, "derive | verify")->required();
  c_mn->add_option("name", name, "chain name (derive)");
  c_mn->add_option("--count", count)->capture_default_str();

  CLI::App* c_tf = app.add_subcommand("termify", "termified model");
  std::string taction;
  c_tf->add_option("action", taction, "emit | check")->required();
  c_tf->add_option("op", op, "operation name (emit)");
  c_tf->add_option("--laws", laws)->capture_default_str();
  c_tf->add_option("--count", count)->capture_default_str();

  for (CLI::App* sub : app.get_subcommands({}))
    sub->fallthrough();  // accept --seed / --json after the verb too

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  Report rep;
  std::string verb;
  try {
    if (c_check->parsed()) {
      verb = "check";
      run_check(file, rep);
    } else if (c_norm->parsed()) {
      verb = "normalize";
      if (!via.empty() && via != "tms")
        throw UsageError("--via supports only tms");
      if (alpha && !via.empty())
        throw UsageError("--alpha and --via are mutually exclusive");
      run_normalize(file, alpha, via == "tms", rep);
    } else if (c_conv->parsed()) {
      verb = "conv";
      run_conv(file, rep);
    } else if (c_tr->parsed()) {
      verb = "translate";
      run_translate(file, to, rep);
    } else if (c_rt->parsed()) {
      verb = "roundtrip";
      run_roundtrip(count, seed, rep);
    } else if (c_vf->parsed()) {
      verb = "verify";
      if (what == "equations")
        run_verify_equations(count, seed, depth, tel, rep);
      else if (what == "lifted")
        run_verify_lifted(count, seed, depth, tel, rep);
      else if (what == "cwf-laws")
        run_verify_cwf_laws(count, seed, rep);
      else
        throw UsageError("verify expects equations, lifted or cwf-laws");
    } else if (c_mn->parsed()) {
      verb = "minim";
      if (action == "derive") {
        if (name.empty()) throw UsageError("minim derive needs a chain name");
        run_minim_derive(name, rep);
      } else if (action == "verify") {
        run_minim_verify(count, seed, rep);
      } else {
        throw UsageError("minim expects derive or verify");
      }
    } else if (c_tf->parsed()) {
      verb = "termify";
      if (taction == "emit") {
        if (op.empty()) throw UsageError("termify emit needs an operation");
        run_termify_emit(op, rep);
      } else if (taction == "check") {
        if (laws != "all") throw UsageError("--laws supports only all");
        run_termify_check(count, seed, rep);
      } else {
        throw UsageError("termify expects emit or check");
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    rep.text << "error: " << e.what() << "\n";
    rep.fail(e.what());
  }

  if (json) {
    nlohmann::json out = {{"verb", verb},
                          {"status", rep.ok ? "ok" : "fail"},
                          {"counterexample", rep.counterexample}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << rep.text.str();
  }
  return rep.ok ? kExitOk : kExitSemantic;
}
