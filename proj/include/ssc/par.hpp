#ifndef SSC_PAR_HPP
#define SSC_PAR_HPP

#include <memory>
#include <vector>

#include "ssc/sexpr.hpp"
#include "ssc/syntax.hpp"

namespace ssc {

// Sub with freely added identity and composition. Never compared for
// equality directly; only its action on types and terms matters.
struct SubStar;
using SubStarRef = std::shared_ptr<const SubStar>;

struct SubStar {
  enum class Kind { Id, Comp, Emb };
  Kind kind;
  SubStarRef f, g;  // Comp
  SubRef emb;       // Emb
};

SubStarRef star_id();
// Composite f . g read as a pipeline on the subject: x[f.g] = x[f][g].
SubStarRef star_comp(SubStarRef f, SubStarRef g);
SubStarRef star_emb(SubRef s);
// Lifting, distributed through Id/Comp and applied to embedded subs.
SubStarRef star_plus(const SubStarRef& ss);

TyRef star_inst_ty(const TyRef& ty, const SubStarRef& ss);
TmRef star_inst_tm(const TmRef& tm, const SubStarRef& ss);

// Parallel substitutions as lists of terms, newest-last; cod names the
// codomain context, with terms.size() == cod.size().
struct Tms {
  Ctx cod;
  std::vector<TmRef> terms;
};

// The embedding into SubStar: the empty list at a domain of length n is
// id.p.....p (n weakenings); (g, a) embeds as (embed g)+ . <a>.
SubStarRef tms_embed(const Tms& ts, int dom_len);

Tms tms_id(const Ctx& ctx);
Tms tms_p(const Ctx& ctx, const TyRef& a);
Tms tms_ext(const Tms& g, const TyRef& a, const TmRef& t);
Tms tms_fst(const Tms& g);
TmRef tms_snd(const Tms& g);
// Componentwise instantiation of g by the embedding of d.
Tms tms_comp(const Tms& g, const Tms& d, int dom_len);

Sexp tms_to_sexp(const Tms& ts);
// Payload only; the codomain is supplied by the caller.
Tms tms_from_sexp(const Sexp& e, const Ctx& cod);

std::string print_tms(const Tms& ts);

}  // namespace ssc

#endif
