#ifndef SSC_CWF_HPP
#define SSC_CWF_HPP

#include <memory>
#include <string>
#include <vector>

#include "ssc/check.hpp"
#include "ssc/par.hpp"
#include "ssc/sexpr.hpp"
#include "ssc/syntax.hpp"

namespace ssc {

// The parallel-substitution (CwF) calculus: same type/term formers as the
// core calculus, but substitutions form a category with id, composition,
// the terminal map, first projection, and extension. Conversion is decided
// by translating to the core calculus and normalising there; the two
// syntaxes are isomorphic, so this is sound and complete.

struct CTy;
struct CTm;
struct CSub;
using CTyRef = std::shared_ptr<const CTy>;
using CTmRef = std::shared_ptr<const CTm>;
using CSubRef = std::shared_ptr<const CSub>;

struct CSub {
  enum class Kind { Id, Comp, Eps, P, Ext };
  Kind kind;
  CSubRef f, g;  // Comp: f after g (x[comp f g] acts as x[g]-then-f's env)
  CSubRef sub;   // Ext base
  CTmRef tm;     // Ext payload
  // Codomain entry A in Ext(g, a) : Sub D (G # A); optional, never printed
  // or compared. Translator output is always annotated.
  CTyRef entry_hint;
};

struct CTy {
  enum class Kind { U, El, Pi, Sigma, Top, Lift, Inst };
  Kind kind;
  Level level = 0;
  CTmRef tm;   // El
  CTyRef a, b;
  CSubRef sub;  // Inst
};

struct CTm {
  enum class Kind { Q, Inst, Lam, App, Code, Mk, Un, Tt, Pair, Fst, Snd };
  Kind kind;
  CTmRef t, u;
  CTyRef ty;   // Code
  CSubRef sub;  // Inst
};

using CCtx = std::vector<CTyRef>;

CSubRef csub_id();
CSubRef csub_comp(CSubRef f, CSubRef g);
CSubRef csub_eps();
CSubRef csub_p();
CSubRef csub_ext(CSubRef g, CTmRef t, CTyRef entry_hint = nullptr);

CTyRef cty_u(Level i);
CTyRef cty_el(CTmRef t);
CTyRef cty_pi(CTyRef a, CTyRef b);
CTyRef cty_sigma(CTyRef a, CTyRef b);
CTyRef cty_top();
CTyRef cty_lift(CTyRef a);
CTyRef cty_inst(CTyRef a, CSubRef s);

CTmRef ctm_q();
CTmRef ctm_inst(CTmRef t, CSubRef s);
CTmRef ctm_lam(CTmRef body);
CTmRef ctm_app(CTmRef f, CTmRef a);
CTmRef ctm_code(CTyRef a);
CTmRef ctm_mk(CTmRef t);
CTmRef ctm_un(CTmRef t);
CTmRef ctm_tt();
CTmRef ctm_pair(CTmRef a, CTmRef b);
CTmRef ctm_fst(CTmRef t);
CTmRef ctm_snd(CTmRef t);

bool equal_cty(const CTyRef& x, const CTyRef& y);
bool equal_ctm(const CTmRef& x, const CTmRef& y);
bool equal_csub(const CSubRef& x, const CSubRef& y);

Sexp cty_to_sexp(const CTyRef& t);
Sexp ctm_to_sexp(const CTmRef& t);
Sexp csub_to_sexp(const CSubRef& s);
Sexp cctx_to_sexp(const CCtx& c);
std::string print_cty(const CTyRef& t);
std::string print_ctm(const CTmRef& t);
std::string print_csub(const CSubRef& s);
std::string print_cctx(const CCtx& c);
CTyRef cty_from_sexp(const Sexp& e);
CTmRef ctm_from_sexp(const Sexp& e);
CSubRef csub_from_sexp(const Sexp& e);
CCtx cctx_from_sexp(const Sexp& e);

// Translation into the core calculus. Substitutions land in parallel
// substitution lists; dom is the core-side domain context.
Ctx cwf_to_ssc_ctx(const CCtx& c);
TyRef cwf_to_ssc_ty(const Ctx& dom, const CTyRef& t);
TmRef cwf_to_ssc_tm(const Ctx& dom, const CTmRef& t);
Tms cwf_to_ssc_sub(const Ctx& dom, const CSubRef& s);

// Structure-preserving embedding of the core calculus.
CCtx ssc_to_cwf_ctx(const Ctx& c);
CTyRef ssc_to_cwf_ty(const TyRef& t);
CTmRef ssc_to_cwf_tm(const TmRef& t);
CSubRef ssc_to_cwf_sub(const SubRef& s);

// Checking and conversion for the CwF calculus.
Verdict cwf_wf_ctx(const CCtx& ctx);
Level cwf_infer_ty_level(const CCtx& ctx, const CTyRef& ty);
CTyRef cwf_infer_tm(const CCtx& ctx, const CTmRef& tm);
Verdict cwf_check_tm(const CCtx& ctx, const CTmRef& tm, const CTyRef& ty);
void cwf_check_tm_or_throw(const CCtx& ctx, const CTmRef& tm,
                           const CTyRef& ty);
CCtx cwf_wf_sub(const CCtx& dom, const CSubRef& sub);
bool cwf_conv_ty(const CCtx& ctx, const CTyRef& x, const CTyRef& y);
bool cwf_conv_tm(const CCtx& ctx, const CTmRef& x, const CTmRef& y,
                 const CTyRef& ty);
// Substitution convertibility, decided componentwise after translation to
// parallel substitution lists.
bool cwf_conv_sub(const CCtx& dom, const CSubRef& x, const CSubRef& y);
NfTyRef cwf_normalize_ty(const CCtx& ctx, const CTyRef& ty);
NfTmRef cwf_normalize_tm(const CCtx& ctx, const CTmRef& tm, const CTyRef& ty);

// Roundtrips up to conversion.
bool roundtrip_ssc_ty(const Ctx& ctx, const TyRef& ty);
bool roundtrip_ssc_tm(const Ctx& ctx, const TmRef& tm, const TyRef& ty);
bool roundtrip_cwf_ty(const CCtx& ctx, const CTyRef& ty);
bool roundtrip_cwf_tm(const CCtx& ctx, const CTmRef& tm, const CTyRef& ty);

}  // namespace ssc

#endif
