#ifndef SSC_NF_HPP
#define SSC_NF_HPP

#include <memory>
#include <string>

#include "ssc/syntax.hpp"

namespace ssc {

// Beta/eta-long, instantiation-free normal forms. Variables are canonical
// de Bruijn indices; neutral spines are rooted at a variable under
// eliminators. Printed via to_raw, where index k becomes q under k
// weakenings, so normal forms stay inside the core grammar.

struct NfTy;
struct NfTm;
struct NfNe;
using NfTyRef = std::shared_ptr<const NfTy>;
using NfTmRef = std::shared_ptr<const NfTm>;
using NfNeRef = std::shared_ptr<const NfNe>;

struct NfTy {
  enum class Kind { U, Pi, Sigma, Top, Lift, ElNe };
  Kind kind;
  Level level = 0;  // U
  NfTyRef a, b;     // Pi/Sigma; Lift uses a
  NfNeRef ne;       // ElNe
};

struct NfTm {
  enum class Kind { Lam, Pair, Mk, Code, Tt, Neut };
  Kind kind;
  NfTmRef t, u;  // Lam body / Pair components / Mk payload
  NfTyRef ty;    // Code
  NfNeRef ne;    // Neut
};

struct NfNe {
  enum class Kind { Var, App, Fst, Snd, Un };
  Kind kind;
  int index = 0;  // Var (de Bruijn index)
  NfNeRef head;
  NfTmRef arg;  // App
};

NfTyRef nf_u(Level i);
NfTyRef nf_pi(NfTyRef a, NfTyRef b);
NfTyRef nf_sigma(NfTyRef a, NfTyRef b);
NfTyRef nf_top();
NfTyRef nf_lift(NfTyRef a);
NfTyRef nf_el(NfNeRef ne);

NfTmRef nf_lam(NfTmRef body);
NfTmRef nf_pair(NfTmRef a, NfTmRef b);
NfTmRef nf_mk(NfTmRef t);
NfTmRef nf_code(NfTyRef a);
NfTmRef nf_tt();
NfTmRef nf_neut(NfNeRef ne);

NfNeRef ne_var(int index);
NfNeRef ne_app(NfNeRef head, NfTmRef arg);
NfNeRef ne_fst(NfNeRef head);
NfNeRef ne_snd(NfNeRef head);
NfNeRef ne_un(NfNeRef head);

bool equal_nf_ty(const NfTyRef& x, const NfTyRef& y);
bool equal_nf_tm(const NfTmRef& x, const NfTmRef& y);
bool equal_nf_ne(const NfNeRef& x, const NfNeRef& y);

TyRef nf_ty_to_raw(const NfTyRef& t);
TmRef nf_tm_to_raw(const NfTmRef& t);
TmRef nf_ne_to_raw(const NfNeRef& n);

std::string print_nf_ty(const NfTyRef& t);
std::string print_nf_tm(const NfTmRef& t);

// Index surgery used when inverting instantiations. weaken_at inserts a
// fresh entry at distance k from the end (indices >= k bump by one);
// strengthen_at removes entry k and fails (returns null) if it occurs.
NfTyRef weaken_at(const NfTyRef& t, int k);
NfTyRef strengthen_at(const NfTyRef& t, int k);

}  // namespace ssc

#endif
