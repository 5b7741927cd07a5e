#ifndef SSC_EVAL_HPP
#define SSC_EVAL_HPP

#include <memory>
#include <stdexcept>
#include <vector>

#include "ssc/nf.hpp"
#include "ssc/syntax.hpp"

namespace ssc {

// Normalisation by evaluation: environment-based evaluation into a semantic
// domain, then type-directed readback at de Bruijn levels. Evaluation is
// untyped; readback uses the type to produce eta-long forms. Only meaningful
// on well-typed input; the checked entry points live in check.hpp.

struct VTy;
struct VTm;
struct VNe;
using VTyRef = std::shared_ptr<const VTy>;
using VTmRef = std::shared_ptr<const VTm>;
using VNeRef = std::shared_ptr<const VNe>;

using Env = std::vector<VTmRef>;  // one value per context entry, oldest first

struct TyClosure {
  Env env;
  TyRef body;  // type over the closure context extended by one entry
};

struct VTy {
  enum class Kind { U, Pi, Sigma, Top, Lift, ElNe };
  Kind kind;
  Level level = 0;  // U
  VTyRef a;         // Pi/Sigma domain, Lift payload
  TyClosure b;      // Pi/Sigma codomain
  VNeRef ne;        // ElNe
};

struct TmClosure {
  Env env;
  TmRef body;
};

struct VTm {
  enum class Kind { Lam, Pair, Mk, Code, Tt, Neut };
  Kind kind;
  TmClosure clos;  // Lam
  VTmRef t, u;     // Pair components / Mk payload
  VTyRef ty;       // Code payload; for Neut, the type of the neutral
  VNeRef ne;       // Neut
};

struct VNe {
  enum class Kind { Var, App, Fst, Snd, Un };
  Kind kind;
  int level = 0;  // Var (de Bruijn level)
  VNeRef head;
  VTmRef arg;    // App
  VTyRef argty;  // App (for readback)
};

struct EvalError : std::runtime_error {
  explicit EvalError(const std::string& msg) : std::runtime_error(msg) {}
};

VTyRef eval_ty(const TyRef& t, const Env& env);
VTmRef eval_tm(const TmRef& t, const Env& env);
Env eval_sub(const SubRef& s, const Env& env);

VTyRef apply_ty_closure(const TyClosure& c, const VTmRef& v);
VTmRef vapp(const VTmRef& f, const VTmRef& a);
VTmRef vfst(const VTmRef& v);
VTmRef vsnd(const VTmRef& v);
VTmRef vun(const VTmRef& v);

// Fresh variable of the given type at the given de Bruijn level.
VTmRef vvar(int level, VTyRef ty);

NfTyRef quote_ty(const VTyRef& t, int depth);
NfTmRef quote_tm(const VTmRef& v, const VTyRef& ty, int depth);
NfNeRef quote_ne(const VNeRef& ne, int depth);

// Environment of fresh variables for a raw context. No well-formedness
// checking; garbage in, garbage out.
Env env_of_ctx(const Ctx& ctx);

// Unchecked normalisation and conversion (suffix _u). These assume
// well-typed input and are the engine behind the checked module API.
NfTyRef normalize_ty_u(const Ctx& ctx, const TyRef& ty);
NfTmRef normalize_tm_u(const Ctx& ctx, const TmRef& tm, const TyRef& ty);
bool conv_ty_u(const Ctx& ctx, const TyRef& x, const TyRef& y);
bool conv_tm_u(const Ctx& ctx, const TmRef& x, const TmRef& y,
               const TyRef& ty);

}  // namespace ssc

#endif
