#ifndef SSC_CHECK_HPP
#define SSC_CHECK_HPP

#include <stdexcept>
#include <string>

#include "ssc/eval.hpp"
#include "ssc/nf.hpp"
#include "ssc/syntax.hpp"

namespace ssc {

// Bidirectional typechecker for the single substitution calculus.
// Lam/Pair/Mk/Tt are checked-only; everything else infers.

struct CheckError : std::runtime_error {
  explicit CheckError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when infer_tm hits a checked-only head.
struct NotInferable : CheckError {
  explicit NotInferable(const std::string& msg) : CheckError(msg) {}
};

struct Verdict {
  bool ok;
  std::string diagnostic;  // empty when ok
};

Verdict wf_ctx(const Ctx& ctx);

// Level i such that ty : Ty ctx i; throws CheckError on ill-formed input.
Level infer_ty_level(const Ctx& ctx, const TyRef& ty);

// Unique type up to conversion; throws CheckError / NotInferable.
TyRef infer_tm(const Ctx& ctx, const TmRef& tm);

Verdict check_tm(const Ctx& ctx, const TmRef& tm, const TyRef& ty);
void check_tm_or_throw(const Ctx& ctx, const TmRef& tm, const TyRef& ty);

// Codomain context of sub with the given domain; throws CheckError.
Ctx wf_sub(const Ctx& dom, const SubRef& sub);

// Canonical inversion: a type E in the codomain of sub with E[sub]
// convertible to x (x lives in dom). Exact for weakening-rooted subs;
// for single-rooted subs the canonical solution is the weakened normal
// form of x. Throws CheckError when no canonical solution exists.
TyRef invert_ty_through(const Ctx& dom, const TyRef& x, const SubRef& sub);

// Checked normalisation and conversion (the eval module's public face).
NfTyRef normalize_ty(const Ctx& ctx, const TyRef& ty);
NfTmRef normalize_tm(const Ctx& ctx, const TmRef& tm, const TyRef& ty);
bool conv_ty(const Ctx& ctx, const TyRef& x, const TyRef& y);
bool conv_tm(const Ctx& ctx, const TmRef& x, const TmRef& y, const TyRef& ty);

// Type-directed eta expansion of a neutral at a normal type.
NfTmRef eta_expand(const Ctx& ctx, const NfNeRef& ne, const NfTyRef& ty);

}  // namespace ssc

#endif
