#ifndef SSC_SYNTAX_HPP
#define SSC_SYNTAX_HPP

#include <memory>
#include <string>
#include <vector>

#include "ssc/sexpr.hpp"

namespace ssc {

// Raw syntax of the single substitution calculus. Trees are immutable and
// shared; all "mutation" builds new nodes.

struct Ty;
struct Tm;
struct Sub;
using TyRef = std::shared_ptr<const Ty>;
using TmRef = std::shared_ptr<const Tm>;
using SubRef = std::shared_ptr<const Sub>;

using Level = int;  // universe level, a non-negative integer

struct Ty {
  enum class Kind { U, El, Pi, Sigma, Top, Lift, Inst };
  Kind kind;
  Level level = 0;  // U
  TmRef tm;         // El
  TyRef a;          // Pi/Sigma domain, Lift/Inst subject
  TyRef b;          // Pi/Sigma codomain (lives in ctx extended by a)
  SubRef sub;       // Inst
};

struct Tm {
  enum class Kind { Q, Inst, Lam, App, Code, Mk, Un, Tt, Pair, Fst, Snd };
  Kind kind;
  TmRef t;     // Inst/Lam/App head, Mk/Un/Fst/Snd subject, Pair first
  TmRef u;     // App argument, Pair second
  TyRef ty;    // Code
  SubRef sub;  // Inst
};

struct Sub {
  enum class Kind { P, Single, Plus };
  Kind kind;
  TmRef tm;     // Single
  SubRef sub;   // Plus
  // Optional codomain-entry hint for Plus: the type A in
  // Plus(g) : Sub (D # A[g]) (G # A). Never printed and never compared;
  // unannotated nodes get a canonical entry during checking.
  TyRef entry_hint;
};

using Ctx = std::vector<TyRef>;  // oldest entry first

// Constructors.
TyRef ty_u(Level i);
TyRef ty_el(TmRef t);
TyRef ty_pi(TyRef a, TyRef b);
TyRef ty_sigma(TyRef a, TyRef b);
TyRef ty_top();
TyRef ty_lift(TyRef a);
TyRef ty_inst(TyRef a, SubRef s);
// Nondependent arrow, desugared to Pi(a, b[p]).
TyRef ty_arrow(TyRef a, TyRef b);

TmRef tm_q();
TmRef tm_inst(TmRef t, SubRef s);
TmRef tm_lam(TmRef body);
TmRef tm_app(TmRef f, TmRef arg);
TmRef tm_code(TyRef a);
TmRef tm_mk(TmRef t);
TmRef tm_un(TmRef t);
TmRef tm_tt();
TmRef tm_pair(TmRef a, TmRef b);
TmRef tm_fst(TmRef t);
TmRef tm_snd(TmRef t);

SubRef sub_p();
SubRef sub_single(TmRef t);
SubRef sub_plus(SubRef s, TyRef entry_hint = nullptr);

// Variable with de Bruijn index k, i.e. q under k weakenings.
TmRef tm_var(int k);

// Structural equality; Plus entry hints are ignored.
bool equal_ty(const TyRef& x, const TyRef& y);
bool equal_tm(const TmRef& x, const TmRef& y);
bool equal_sub(const SubRef& x, const SubRef& y);
bool equal_ctx(const Ctx& x, const Ctx& y);

// Concrete syntax.
Sexp ty_to_sexp(const TyRef& t);
Sexp tm_to_sexp(const TmRef& t);
Sexp sub_to_sexp(const SubRef& s);
Sexp ctx_to_sexp(const Ctx& c);

std::string print_ty(const TyRef& t);
std::string print_tm(const TmRef& t);
std::string print_sub(const SubRef& s);
std::string print_ctx(const Ctx& c);

TyRef ty_from_sexp(const Sexp& e);
TmRef tm_from_sexp(const Sexp& e);
SubRef sub_from_sexp(const Sexp& e);
Ctx ctx_from_sexp(const Sexp& e);

}  // namespace ssc

#endif
