#ifndef SSC_ALPHANORM_HPP
#define SSC_ALPHANORM_HPP

#include <optional>

#include "ssc/syntax.hpp"

namespace ssc {

// Alpha-normalisation: push instantiations down to variables without
// performing any beta/eta reduction. An alpha-normal tree contains tysub/
// tmsub nodes only as variable spines q[p]...[p]. Alpha-normal substitutions
// are either weakenings p+...+ or single substitutions <a>+...+ with an
// alpha-normal payload.

// True iff tm is q under a stack of weakening instantiations.
bool is_var(const TmRef& tm);

bool is_alpha_ty(const TyRef& ty);
bool is_alpha_tm(const TmRef& tm);

struct NSub {
  enum class Kind { Weakening, NSingle };
  Kind kind;
  int depth = 0;  // number of + wrappers
  TmRef payload;  // NSingle only; alpha-normal
};

// Classification per the four clauses; nullopt when a single-substitution
// payload is not alpha-normal.
std::optional<NSub> classify_sub(const SubRef& sub);

// Structural engines; assume nothing about typing.
TyRef alpha_push_ty(const TyRef& ty, const NSub& ns);
TmRef alpha_push_tm(const TmRef& tm, const NSub& ns);
TyRef alpha_norm_ty_u(const TyRef& ty);
TmRef alpha_norm_tm_u(const TmRef& tm);

// Checked entry points: validate the input (types fully; terms when their
// type is inferable) before normalising.
TyRef alpha_norm_ty(const Ctx& ctx, const TyRef& ty);
TmRef alpha_norm_tm(const Ctx& ctx, const TmRef& tm);

}  // namespace ssc

#endif
