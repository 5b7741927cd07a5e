#ifndef SSC_LAWS_HPP
#define SSC_LAWS_HPP

#include <string>
#include <utility>
#include <vector>

#include "ssc/syntax.hpp"
#include "ssc/tel.hpp"

namespace ssc {

// The axiom table of the calculus, as random-instance checks decided by
// conversion: the eight core substitution equations, and the per-former
// substitution/computation laws of the full listing.

// The eight core equations: the variable rules with their type-level
// counterparts, the single-substitution composition rule and the rule on
// the Pi computation input.
const std::vector<std::string>& core_equation_names();

// The twenty per-former laws: substitution and beta/eta for Pi, U, Lift,
// plus the substitution laws for Top, Sigma and their introductions (the
// two Sigma projections share one row).
const std::vector<std::string>& former_law_names();

// A random substitution into cod together with its domain context.
std::pair<Ctx, SubRef> gen_sub_into(Gen& gen, const Ctx& cod);

// One random instance of the named equation, decided by conversion.
// Throws Exhausted when no instance could be generated at this draw and
// std::invalid_argument on an unknown name.
bool check_equation_instance(const std::string& name, Gen& gen,
                             std::string* cex = nullptr);

}  // namespace ssc

#endif
