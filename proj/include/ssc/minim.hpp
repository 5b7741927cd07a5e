#ifndef SSC_MINIM_HPP
#define SSC_MINIM_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ssc/syntax.hpp"
#include "ssc/tel.hpp"

namespace ssc {

// The minimised calculus: the substitution core with Pi, U and Lift where
// the four variable equations, the application substitution rule and the
// Pi computation rules are conditional on a type equation. A derivation
// replayer certifies the chains that recover the full equations: every
// step must be a literal first-order instance of an allowed rule, oriented
// either way; conversion is used only to discharge the hypothesis side
// conditions of conditional rules, never to justify a step.

// --- Equation schemas -------------------------------------------------------

// Pattern syntax over the three sorts, with named metavariables.
struct Pat;
using PatRef = std::shared_ptr<const Pat>;

struct Pat {
  enum class Kind {
    MetaTy,  // type metavariable
    MetaTm,  // term metavariable
    MetaSub, // substitution metavariable
    U,       // any universe; binds its level to `meta`
    El,
    Pi,
    Lift,
    TyInst,
    Q,
    Lam,
    App,
    Code,
    Mk,
    Un,
    TmInst,
    P,
    Single,
    Plus,
  };
  Kind kind;
  std::string meta;  // metavariable / level binder name
  PatRef a, b;       // children, in constructor order
};

PatRef pat_meta_ty(const std::string& name);
PatRef pat_meta_tm(const std::string& name);
PatRef pat_meta_sub(const std::string& name);
PatRef pat_u(const std::string& level_name);
PatRef pat_node(Pat::Kind k, PatRef a = nullptr, PatRef b = nullptr);

// Collected metavariable assignment.
struct Binding {
  std::vector<std::pair<std::string, TyRef>> tys;
  std::vector<std::pair<std::string, TmRef>> tms;
  std::vector<std::pair<std::string, SubRef>> subs;
  std::vector<std::pair<std::string, Level>> levels;
};

bool match_ty(const PatRef& p, const TyRef& t, Binding& b);
bool match_tm(const PatRef& p, const TmRef& t, Binding& b);
bool match_sub(const PatRef& p, const SubRef& s, Binding& b);

TyRef subst_pat_ty(const PatRef& p, const Binding& b);
TmRef subst_pat_tm(const PatRef& p, const Binding& b);
SubRef subst_pat_sub(const PatRef& p, const Binding& b);

// An equation schema. Conditional rules carry a type-equation hypothesis;
// its instance is supplied by the chain step and checked by conversion.
struct Axiom {
  std::string name;
  bool is_ty = false;  // conclusion relates types rather than terms
  PatRef lhs, rhs;
  PatRef hyp_lhs, hyp_rhs;  // type patterns; null when unconditional
  bool conditional() const { return hyp_lhs != nullptr; }
};

// Exactly the rules of the minimised calculus.
const std::vector<Axiom>& minimised_axioms();
// Names of the full-calculus equations that the minimised set drops or
// weakens; disjoint from the minimised names.
const std::vector<std::string>& full_axiom_names();
// Lookup across minimised axioms and derived-lemma schemas.
const Axiom* find_axiom(const std::string& name);

// --- Chains -----------------------------------------------------------------

struct Hyp {
  Ctx ctx;
  TyRef lhs, rhs;
};

struct Step {
  std::string rule;
  std::optional<Hyp> hyp;
};

struct Chain {
  std::string name;
  bool reconstructed = false;  // built by analogy, not transcribed
  bool is_ty = false;
  Ctx ctx;
  TyRef subject_ty;         // common type of a term chain's expressions
  std::vector<TyRef> tys;   // type chain expressions
  std::vector<TmRef> tms;   // term chain expressions
  std::vector<Step> steps;  // steps.size() + 1 == expression count
};

Sexp chain_to_sexp(const Chain& c);
Chain chain_from_sexp(const Sexp& e);
std::string print_chain(const Chain& c);

struct ReplayResult {
  bool ok = false;
  int failing_step = -1;  // 0-based; -1 when ok or a global failure
  std::string detail;
};

ReplayResult replay(const Chain& chain,
                    const std::vector<std::string>& allowed);

// --- Derivations ------------------------------------------------------------

// Concrete parameters a chain is instantiated at. Unused fields may be
// left null depending on the chain.
struct ChainParams {
  Ctx gamma_ctx;   // Gamma
  TyRef entry;     // A, the context entry
  TyRef subject;   // B
  TmRef subject_tm;  // b or t
  TmRef arg;       // a
  Ctx delta;       // Delta
  SubRef gamma;    // gamma : Sub Delta Gamma
  Level level = 0; // universe level of the subject, where needed
};

// Derivation order; each chain may cite lemmas earlier in the list.
const std::vector<std::string>& derived_chain_names();

Chain build_chain(const std::string& name, const ChainParams& p);

// The paper's chain at fixed representative parameters, replayed with
// allowed = minimised axioms + previously derived lemmas. Throws
// std::invalid_argument on an unknown name.
Chain derive_full_axiom(const std::string& name);

// Allowed set for replaying the named chain: minimised axioms plus the
// lemmas derived before it.
std::vector<std::string> allowed_for(const std::string& name);

// --- Interderivability sampling ---------------------------------------------

struct EquivReport {
  int full_checked = 0, full_passed = 0;
  int min_checked = 0, min_passed = 0;
  std::string detail;
  bool ok() const {
    return full_checked > 0 && min_checked > 0 &&
           full_passed == full_checked && min_passed == min_checked;
  }
};

// One random instance of a minimised axiom, decided by conversion.
bool check_min_axiom_instance(const std::string& name, Gen& gen);

// count instances per direction: full-calculus equations replayed through
// their chains at random parameters, minimised equations checked by
// conversion.
EquivReport equivalence_check(Gen& gen, int count);

}  // namespace ssc

#endif
