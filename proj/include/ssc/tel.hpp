#ifndef SSC_TEL_HPP
#define SSC_TEL_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ssc/par.hpp"
#include "ssc/syntax.hpp"

namespace ssc {

// Telescopes over a base context, the lifting of a substitution over a
// telescope, the four lifted admissible equations, a sampling verifier for
// the telescope-lifting lemma, and the type-directed random generator used
// by the property suites.

struct Tel {
  Ctx base;
  std::vector<TyRef> entries;  // entry k well-formed in base + entries 0..k-1
};

Ctx tel_append(const Ctx& ctx, const Tel& tel);

// gamma : Sub dom base. Rebases tel at the domain of gamma.
Tel tel_inst(const Tel& tel, const SubRef& gamma, const Ctx& dom);

// gamma^{+tel}: Plus applied once per entry, annotated with the entries.
SubRef lift_over(const SubRef& gamma, const Tel& tel);
SubStarRef star_lift_over(const SubStarRef& gamma, const Tel& tel);

// One instance of a lifted equation (1)-(4). gamma maps dom to ctx for
// equations 1 and 3; entry is the context entry A; subject/subject_ty give
// the term variant when subject is non-null.
struct LiftedEqInstance {
  Ctx ctx;        // Gamma
  Ctx dom;        // Delta (eqs 1 and 3)
  SubRef gamma;   // eqs 1 and 3
  TyRef entry;    // A
  TmRef arg;      // a (eqs 2 and 3)
  Tel omega;      // based per equation shape
  TyRef subject_ty;  // B
  TmRef subject;     // b, optional
};

bool check_lifted_eq(int n, const LiftedEqInstance& inst);

struct LemmaReport {
  bool hypotheses_ok = false;
  bool conclusions_ok = false;
  std::string detail;
  bool ok() const { return hypotheses_ok && conclusions_ok; }
};

// Generator configuration; identical seeds give identical output.
struct GenConfig {
  int max_depth = 4;
  int max_level = 1;
  int max_tel = 3;
  std::uint64_t seed = 0;
  // Probability (percent) of wrapping output in an explicit instantiation.
  int sub_wrap_pct = 40;
};

struct Exhausted : std::runtime_error {
  explicit Exhausted(const std::string& msg) : std::runtime_error(msg) {}
};

class Gen {
 public:
  explicit Gen(const GenConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {}

  TyRef ty(const Ctx& ctx);
  TyRef ty_at(const Ctx& ctx, Level level, int depth);
  TmRef tm(const Ctx& ctx, const TyRef& ty);
  TmRef tm_at(const Ctx& ctx, const TyRef& ty, int depth);
  SubRef sub(const Ctx& dom);
  Tel tel(const Ctx& ctx);
  // Inferable closed-form payloads for single substitutions.
  TmRef inferable(const Ctx& ctx, int depth);

  int pick(int bound);  // uniform in [0, bound)
  bool chance(int pct);

  const GenConfig& config() const { return cfg_; }

 private:
  GenConfig cfg_;
  std::mt19937_64 rng_;
};

// Random well-typed instance of lifted equation n with telescope length in
// [tel_min, tel_max]; the term variant is filled in when a subject can be
// synthesised.
LiftedEqInstance gen_lifted_instance(Gen& gen, int n, int tel_min,
                                     int tel_max);

// Samples hypotheses and conclusions of the telescope-lifting lemma for a
// parallel pair of starred substitutions dom -> ctx.
LemmaReport lift_lemma_verify(const SubStarRef& g0, const SubStarRef& g1,
                              const Ctx& ctx, const Ctx& dom, Gen& gen,
                              int samples);

}  // namespace ssc

#endif
