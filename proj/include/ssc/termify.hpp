#ifndef SSC_TERMIFY_HPP
#define SSC_TERMIFY_HPP

#include <string>
#include <vector>

#include "ssc/check.hpp"
#include "ssc/cwf.hpp"
#include "ssc/syntax.hpp"
#include "ssc/tel.hpp"

namespace ssc {

// Termification: the CwF whose contexts are closed types, substitutions are
// closed functions between them, types are closed functions into the
// universe and terms are closed dependent functions. All payloads live in
// the empty context of the core calculus; CwF laws are decided by core
// conversion. Level bookkeeping uses truncating subtraction, and every
// definition carries its lifting decorations (mk/un insertions at each
// level mismatch).

Level trunc_sub(Level a, Level b);

TyRef lift_k(int k, TyRef a);
TmRef mk_k(int k, TmRef t);
TmRef un_k(int k, TmRef t);

struct TCon {
  Level level = 0;
  TyRef ty;  // closed
};

struct TSub {
  TCon dom, cod;
  TmRef tm;  // closed, of type tsub_payload_ty(dom, cod)
};

struct TTy {
  TCon con;
  Level level = 0;
  TmRef tm;  // closed, of type tty_payload_ty(con, level)
};

struct TTm {
  TCon con;
  TTy ty;
  TmRef tm;  // closed, of type ttm_payload_ty(con, ty)
};

TyRef tsub_payload_ty(const TCon& dom, const TCon& cod);
TyRef tty_payload_ty(const TCon& con, Level i);
TyRef ttm_payload_ty(const TCon& con, const TTy& a);

// CwF structure.
TCon t_empty();
TCon t_ext(const TCon& g, const TTy& a);
TSub t_id(const TCon& g);
TSub t_comp(const TSub& g, const TSub& d);  // g after d
TSub t_eps(const TCon& g);
TSub t_p(const TCon& g, const TTy& a);
TTm t_q(const TCon& g, const TTy& a);
// (g, t) : Sub dom (cod(g) # a); t at a[g].
TSub t_pair(const TSub& g, const TTy& a, const TTm& t);
TTy t_inst_ty(const TTy& a, const TSub& g);
TTm t_inst_tm(const TTm& t, const TSub& g);

// Type and term formers.
TTy t_u(const TCon& g, Level j);           // at level 1+j
TTy t_el(const TTm& t, Level j);           // t : Tm g (U j)
TTm t_code(const TTy& a);                  // : Tm g (U a.level)
TTy t_top(const TCon& g);
TTm t_tt(const TCon& g);
TTy t_lift(const TTy& a);                  // at level 1+a.level
TTm t_mk(const TTy& a, const TTm& t);
TTm t_un(const TTy& a, const TTm& t);
TTy t_pi(const TTy& a, const TTy& b);      // b over t_ext(a.con, a)
TTy t_sigma(const TTy& a, const TTy& b);
TTm t_lam(const TTy& a, const TTy& b, const TTm& body);
TTm t_app(const TTy& a, const TTy& b, const TTm& f, const TTm& arg);
TTm t_spair(const TTy& a, const TTy& b, const TTm& x, const TTm& y);
TTm t_sfst(const TTy& a, const TTy& b, const TTm& t);
TTm t_ssnd(const TTy& a, const TTy& b, const TTm& t);

// Payload well-typedness (core checker, empty context).
Verdict t_check_sub(const TSub& s);
Verdict t_check_ty(const TTy& a);
Verdict t_check_tm(const TTm& t);

// Equality of termified entities: payloads convertible in the empty context.
bool t_conv_sub(const TSub& x, const TSub& y);
bool t_conv_ty(const TTy& x, const TTy& y);
bool t_conv_tm(const TTm& x, const TTm& y);

// Decoration erasure: strips every Lift, mk and un node. Purely syntactic;
// the result is generally ill-typed and only used for display comparison.
TyRef erase_ty(const TyRef& t);
TmRef erase_tm(const TmRef& t);
SubRef erase_sub(const SubRef& s);

// Random termified entities: payloads drawn at the payload types.
TCon gen_tcon(Gen& g);
TTy gen_tty(Gen& g, const TCon& con, Level i);
TSub gen_tsub(Gen& g, const TCon& dom, const TCon& cod);
TTm gen_ttm(Gen& g, const TCon& con, const TTy& a);

// The CwF laws, one named case per law in the signature; each call builds
// one random instance and decides it by conversion.
const std::vector<std::string>& cwf_law_names();
bool check_cwf_law(const std::string& name, Gen& gen);

// Components of the contextual isomorphism between the termified model and
// the parallel-substitution calculus: F G := empty # G, F g := (p, g[p].q),
// F A := El (A[p].q), F a := a[p].q, with lifting decorations.
CCtx f_con(const TCon& g);
CSubRef f_sub(const TSub& s);
CTyRef f_ty(const TTy& a);
CTmRef f_tm(const TTm& t);

// Canonical displayed definitions for the emitter: op name -> payload of a
// fixed representative instance (a closed term, or a closed type for the
// context operations).
const std::vector<std::string>& termify_op_names();
Sexp termify_emit(const std::string& op);

}  // namespace ssc

#endif
