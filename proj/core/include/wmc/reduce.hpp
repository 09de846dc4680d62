#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wmc/formula.hpp"

namespace wmc {

// The nine rewrite rules, in strict priority order. Every application
// preserves scale * WMC(formula, weights) and strictly shrinks
// potential(formula).
enum class RuleId {
  kDuplicateLiteral = 1,  // drop a repeated literal inside a clause
  kTautology,             // drop a clause holding l and -l
  kSubsumption,           // drop a superset clause
  kUnitClause,            // (l): fold w(l) into scale, assign l
  kIsolatedVariable,      // 0-degree v: fold w(v)+w(-v) into scale
  kStrengthening,         // (a b) plus a clause with a and -b: strip -b
  kEquivalence,           // (a b) and (-a -b): substitute a := -b
  kDisjointComponent,     // count a small var-disjoint part by enumeration
  kCutVariable,           // fold a small one-variable-overlap part into w(x)
};

int rule_index(RuleId r);          // 1..9
const char* rule_label(RuleId r);  // "R1".."R9"

// Where a rule fires. Field use depends on the rule:
//   R1: clause, lit (the duplicated literal)
//   R2: clause
//   R3: clause (kept subset), other_clause (dropped superset)
//   R4: clause, lit
//   R5: var
//   R6: clause (the 2-clause), other_clause, lit (literal removed from other)
//   R7: clause, other_clause, lit (a), lit2 (b) with clause = (a b)
//   R8: side (the component's variables)
//   R9: var (cut variable), side (variables folded away, cut excluded)
struct RuleSite {
  int clause = -1;
  int other_clause = -1;
  Lit lit = 0;
  Lit lit2 = 0;
  Var var = 0;
  std::vector<Var> side;
};

struct ReduceLog {
  long long applications = 0;
  std::array<long long, 9> by_rule{};
};

// Lowest-priority-number applicable rule with a deterministic witness site,
// or nothing when the instance is fully reduced. small_limit caps the size of
// the sub-formulas R8/R9 hand to enumeration.
std::optional<std::pair<RuleId, RuleSite>> find_applicable(
    const Instance& inst, int small_limit = 10);

// Apply one rule at one site. Throws ContractViolation when the site does not
// match the rule's pattern.
Instance apply_rule(const Instance& inst, RuleId rule, const RuleSite& site,
                    int small_limit = 10);

// Apply rules until none fits. Terminates within potential(formula) steps.
Instance reduce_fixpoint(Instance inst, int small_limit = 10,
                         ReduceLog* log = nullptr);

// Everything a fully reduced formula must look like, phrased as violations:
// an empty list means the shape is as guaranteed. A formula holding an empty
// clause short-circuits (the solver answers 0 for it) and reports nothing.
// Checked always: no 1-clauses; every 2-clause built from degree >= 2
// variables; around any 2-clause (a b), no other clause containing {a,b},
// {-a,b}, or {a,-b}, and no 2-clause (-a -b). With two_cnf_input set, also:
// only 2-clauses, every variable of degree >= 2, n <= m, and no clause
// holding two degree-2 co-occurrents of the same variable.
std::vector<std::string> reduced_structure_violations(const Formula& f,
                                                      bool two_cnf_input);

}  // namespace wmc
