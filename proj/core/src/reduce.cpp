#include "wmc/reduce.hpp"

#include <algorithm>
#include <string>

#include "wmc/errors.hpp"
#include "wmc/graph.hpp"
#include "wmc/oracle.hpp"

namespace wmc {

int rule_index(RuleId r) { return static_cast<int>(r); }

const char* rule_label(RuleId r) {
  static const char* labels[] = {"R1", "R2", "R3", "R4", "R5",
                                 "R6", "R7", "R8", "R9"};
  return labels[rule_index(r) - 1];
}

namespace {

std::map<Var, int> occurrence_counts(const Formula& f) {
  std::map<Var, int> occ;
  for (Var v : f.vars) occ[v] = 0;
  for (const Clause& c : f.clauses) {
    for (Lit l : c.lits) ++occ[var_of(l)];
  }
  return occ;
}

// Split f's clauses by whether their variables sit inside `side`. Clauses
// without variables never go inside. Throws when a clause straddles the
// boundary, except that clauses containing `pivot` may combine it with side
// variables.
struct Split {
  Formula inside;   // vars = side (plus pivot when used)
  Formula outside;  // vars = the rest
};

Split split_on_side(const Formula& f, const std::vector<Var>& side, Var pivot) {
  std::set<Var> side_set(side.begin(), side.end());
  Split s;
  s.inside.vars = side_set;
  if (pivot) s.inside.vars.insert(pivot);
  for (Var v : f.vars) {
    if (!side_set.count(v)) s.outside.vars.insert(v);
  }
  for (const Clause& c : f.clauses) {
    bool touches_side = false, touches_rest = false;
    for (Lit l : c.lits) {
      Var v = var_of(l);
      if (v == pivot) continue;
      (side_set.count(v) ? touches_side : touches_rest) = true;
    }
    if (touches_side && touches_rest) {
      throw ContractViolation("rule site does not split the formula");
    }
    if (touches_side) {
      s.inside.clauses.push_back(c);
    } else {
      s.outside.clauses.push_back(c);  // includes variable-free clauses
    }
  }
  return s;
}

std::optional<RuleSite> find_duplicate_literal(const Formula& f) {
  for (int i = 0; i < f.clause_count(); ++i) {
    const auto& ls = f.clauses[i].lits;
    for (size_t k = 0; k + 1 < ls.size(); ++k) {
      if (ls[k] == ls[k + 1]) {
        RuleSite s;
        s.clause = i;
        s.lit = ls[k];
        return s;
      }
    }
  }
  return std::nullopt;
}

std::optional<RuleSite> find_tautology(const Formula& f) {
  for (int i = 0; i < f.clause_count(); ++i) {
    if (f.clauses[i].is_tautology()) {
      RuleSite s;
      s.clause = i;
      return s;
    }
  }
  return std::nullopt;
}

std::optional<RuleSite> find_subsumption(const Formula& f) {
  for (int i = 0; i < f.clause_count(); ++i) {
    for (int j = i + 1; j < f.clause_count(); ++j) {
      if (f.clauses[i].subset_of(f.clauses[j])) {
        RuleSite s;
        s.clause = i;
        s.other_clause = j;
        return s;
      }
      if (f.clauses[j].subset_of(f.clauses[i])) {
        RuleSite s;
        s.clause = j;
        s.other_clause = i;
        return s;
      }
    }
  }
  return std::nullopt;
}

std::optional<RuleSite> find_unit_clause(const Formula& f) {
  for (int i = 0; i < f.clause_count(); ++i) {
    if (f.clauses[i].size() == 1) {
      RuleSite s;
      s.clause = i;
      s.lit = f.clauses[i].lits[0];
      return s;
    }
  }
  return std::nullopt;
}

std::optional<RuleSite> find_isolated_variable(const Formula& f) {
  for (const auto& [v, n] : occurrence_counts(f)) {
    if (n == 0) {
      RuleSite s;
      s.var = v;
      return s;
    }
  }
  return std::nullopt;
}

std::optional<RuleSite> find_strengthening(const Formula& f) {
  for (int i = 0; i < f.clause_count(); ++i) {
    if (f.clauses[i].size() != 2) continue;
    Lit p = f.clauses[i].lits[0];
    Lit q = f.clauses[i].lits[1];
    for (int j = 0; j < f.clause_count(); ++j) {
      if (j == i) continue;
      const Clause& d = f.clauses[j];
      if (d.contains(p) && d.contains(-q)) {
        RuleSite s;
        s.clause = i;
        s.other_clause = j;
        s.lit = -q;
        return s;
      }
      if (d.contains(q) && d.contains(-p)) {
        RuleSite s;
        s.clause = i;
        s.other_clause = j;
        s.lit = -p;
        return s;
      }
    }
  }
  return std::nullopt;
}

std::optional<RuleSite> find_equivalence(const Formula& f) {
  for (int i = 0; i < f.clause_count(); ++i) {
    if (f.clauses[i].size() != 2) continue;
    Lit a = f.clauses[i].lits[0];
    Lit b = f.clauses[i].lits[1];
    Clause flipped({-a, -b});
    for (int j = i + 1; j < f.clause_count(); ++j) {
      if (f.clauses[j] == flipped) {
        RuleSite s;
        s.clause = i;
        s.other_clause = j;
        s.lit = a;
        s.lit2 = b;
        return s;
      }
    }
  }
  return std::nullopt;
}

bool has_clause_with_vars(const Formula& f) {
  for (const Clause& c : f.clauses) {
    if (!c.empty()) return true;
  }
  return false;
}

std::optional<RuleSite> find_disjoint_component(const Formula& f, int limit) {
  Graph g = primal_graph(f);
  if (auto comp = small_component(g, limit)) {
    RuleSite s;
    s.side = std::move(*comp);
    return s;
  }
  // Whole-formula case: one component covering every variable still counts,
  // leaving the empty remainder behind.
  if (f.var_count() >= 1 && f.var_count() <= limit && has_clause_with_vars(f)) {
    RuleSite s;
    s.side.assign(f.vars.begin(), f.vars.end());
    return s;
  }
  return std::nullopt;
}

std::optional<RuleSite> find_cut_variable(const Formula& f, int limit) {
  Graph g = primal_graph(f);
  for (const CutSplit& cand : cut_split_candidates(g, limit)) {
    // Check the clause-level conditions: the folded part must share exactly
    // the cut variable with the rest, and both parts must hold clauses.
    std::set<Var> side_set(cand.side.begin(), cand.side.end());
    bool inside_has_cut = false, inside_nonempty = false, rest_nonempty = false;
    bool clean = true;
    for (const Clause& c : f.clauses) {
      bool touches_side = false, touches_rest = false, touches_cut = false;
      for (Lit l : c.lits) {
        Var v = var_of(l);
        if (v == cand.cut_vertex) touches_cut = true;
        else if (side_set.count(v)) touches_side = true;
        else touches_rest = true;
      }
      if (touches_side && touches_rest) {
        clean = false;
        break;
      }
      if (touches_side) {
        inside_nonempty = true;
        if (touches_cut) inside_has_cut = true;
      } else {
        rest_nonempty = true;
      }
    }
    if (clean && inside_has_cut && inside_nonempty && rest_nonempty) {
      RuleSite s;
      s.var = cand.cut_vertex;
      s.side = cand.side;
      return s;
    }
  }
  return std::nullopt;
}

Instance apply_duplicate_literal(const Instance& inst, const RuleSite& site) {
  const Formula& f = inst.formula;
  if (site.clause < 0 || site.clause >= f.clause_count()) {
    throw ContractViolation("R1: clause index out of range");
  }
  const Clause& c = f.clauses[site.clause];
  int copies = static_cast<int>(std::count(c.lits.begin(), c.lits.end(), site.lit));
  if (copies < 2) throw ContractViolation("R1: literal is not duplicated");

  Instance out = inst;
  Clause& cl = out.formula.clauses[site.clause];
  auto first = std::find(cl.lits.begin(), cl.lits.end(), site.lit);
  cl.lits.erase(std::remove(first + 1, cl.lits.end(), site.lit), cl.lits.end());
  return out;
}

Instance apply_tautology(const Instance& inst, const RuleSite& site) {
  const Formula& f = inst.formula;
  if (site.clause < 0 || site.clause >= f.clause_count() ||
      !f.clauses[site.clause].is_tautology()) {
    throw ContractViolation("R2: clause is not a tautology");
  }
  Instance out = inst;
  out.formula.clauses.erase(out.formula.clauses.begin() + site.clause);
  return out;
}

Instance apply_subsumption(const Instance& inst, const RuleSite& site) {
  const Formula& f = inst.formula;
  if (site.clause < 0 || site.other_clause < 0 ||
      site.clause >= f.clause_count() ||
      site.other_clause >= f.clause_count() ||
      site.clause == site.other_clause ||
      !f.clauses[site.clause].subset_of(f.clauses[site.other_clause])) {
    throw ContractViolation("R3: clause pair is not a subsumption");
  }
  Instance out = inst;
  out.formula.clauses.erase(out.formula.clauses.begin() + site.other_clause);
  return out;
}

Instance apply_unit_clause(const Instance& inst, const RuleSite& site) {
  const Formula& f = inst.formula;
  if (site.clause < 0 || site.clause >= f.clause_count() ||
      f.clauses[site.clause].size() != 1 ||
      f.clauses[site.clause].lits[0] != site.lit) {
    throw ContractViolation("R4: site is not a unit clause");
  }
  Instance out = inst;
  out.scale *= inst.weights.get(site.lit);
  out.formula = assign_literal(f, site.lit);
  return out;
}

Instance apply_isolated_variable(const Instance& inst, const RuleSite& site) {
  const Formula& f = inst.formula;
  if (!f.vars.count(site.var)) {
    throw ContractViolation("R5: variable not in formula");
  }
  for (const Clause& c : f.clauses) {
    if (c.contains_var(site.var)) {
      throw ContractViolation("R5: variable still occurs in a clause");
    }
  }
  Instance out = inst;
  out.scale *= inst.weights.get(site.var) + inst.weights.get(-site.var);
  out.formula.vars.erase(site.var);
  return out;
}

Instance apply_strengthening(const Instance& inst, const RuleSite& site) {
  const Formula& f = inst.formula;
  bool shaped =
      site.clause >= 0 && site.clause < f.clause_count() &&
      site.other_clause >= 0 && site.other_clause < f.clause_count() &&
      site.clause != site.other_clause && f.clauses[site.clause].size() == 2 &&
      f.clauses[site.clause].contains(-site.lit) &&
      f.clauses[site.other_clause].contains(site.lit);
  if (shaped) {
    // The 2-clause's other literal must sit in the strengthened clause too.
    Lit other = f.clauses[site.clause].lits[0] == -site.lit
                    ? f.clauses[site.clause].lits[1]
                    : f.clauses[site.clause].lits[0];
    shaped = f.clauses[site.other_clause].contains(other);
  }
  if (!shaped) throw ContractViolation("R6: site does not match the pattern");

  Instance out = inst;
  auto& lits = out.formula.clauses[site.other_clause].lits;
  lits.erase(std::remove(lits.begin(), lits.end(), site.lit), lits.end());
  return out;
}

Instance apply_equivalence(const Instance& inst, const RuleSite& site) {
  const Formula& f = inst.formula;
  Lit a = site.lit, b = site.lit2;
  bool shaped = site.clause >= 0 && site.clause < f.clause_count() &&
                site.other_clause >= 0 &&
                site.other_clause < f.clause_count() &&
                site.clause != site.other_clause && a != 0 && b != 0 &&
                var_of(a) != var_of(b) &&
                f.clauses[site.clause] == Clause({a, b}) &&
                f.clauses[site.other_clause] == Clause({-a, -b});
  if (!shaped) throw ContractViolation("R7: site does not match the pattern");

  Instance out = inst;
  // The pair forces a == -b, so a's weight folds into b's phases.
  out.weights.set(-b, inst.weights.get(-b) * inst.weights.get(a));
  out.weights.set(b, inst.weights.get(b) * inst.weights.get(-a));

  std::vector<int> changed;
  for (int i = 0; i < out.formula.clause_count(); ++i) {
    Clause& c = out.formula.clauses[i];
    bool touched = false;
    for (Lit& l : c.lits) {
      if (l == a) {
        l = -b;
        touched = true;
      } else if (l == -a) {
        l = b;
        touched = true;
      }
    }
    if (touched) {
      std::sort(c.lits.begin(), c.lits.end(), lit_less);
      changed.push_back(i);
    }
  }
  out.formula.vars.erase(var_of(a));
  // Substituted clauses may have become tautologies (the two pattern clauses
  // always do); drop them right away.
  for (auto it = changed.rbegin(); it != changed.rend(); ++it) {
    if (out.formula.clauses[*it].is_tautology()) {
      out.formula.clauses.erase(out.formula.clauses.begin() + *it);
    }
  }
  return out;
}

Instance apply_disjoint_component(const Instance& inst, const RuleSite& site,
                                  int small_limit) {
  if (site.side.empty() || static_cast<int>(site.side.size()) > small_limit) {
    throw ContractViolation("R8: side size out of bounds");
  }
  for (Var v : site.side) {
    if (!inst.formula.vars.count(v)) {
      throw ContractViolation("R8: side variable not in formula");
    }
  }
  Split s = split_on_side(inst.formula, site.side, 0);
  if (s.inside.clauses.empty()) {
    throw ContractViolation("R8: side holds no clauses");
  }
  Instance out = inst;
  out.scale *= brute_wmc(s.inside, inst.weights, small_limit);
  out.formula = std::move(s.outside);
  return out;
}

Instance apply_cut_variable(const Instance& inst, const RuleSite& site,
                            int small_limit) {
  if (site.var == 0 || site.side.empty() ||
      static_cast<int>(site.side.size()) + 1 > small_limit) {
    throw ContractViolation("R9: side size out of bounds");
  }
  if (!inst.formula.vars.count(site.var)) {
    throw ContractViolation("R9: cut variable not in formula");
  }
  if (std::count(site.side.begin(), site.side.end(), site.var)) {
    throw ContractViolation("R9: cut variable inside its own side");
  }
  for (Var v : site.side) {
    if (!inst.formula.vars.count(v)) {
      throw ContractViolation("R9: side variable not in formula");
    }
  }
  Split s = split_on_side(inst.formula, site.side, site.var);
  bool inside_has_cut = false;
  for (const Clause& c : s.inside.clauses) {
    if (c.contains_var(site.var)) inside_has_cut = true;
  }
  bool rest_has_cut = false;
  for (const Clause& c : s.outside.clauses) {
    if (c.contains_var(site.var)) rest_has_cut = true;
  }
  if (s.inside.clauses.empty() || s.outside.clauses.empty() ||
      !inside_has_cut || !rest_has_cut) {
    throw ContractViolation("R9: parts do not overlap in exactly the cut");
  }

  Instance out = inst;
  mpz_class w_true =
      brute_wmc(assign_literal(s.inside, site.var), inst.weights, small_limit);
  mpz_class w_false =
      brute_wmc(assign_literal(s.inside, -site.var), inst.weights, small_limit);
  out.weights.set(site.var, inst.weights.get(site.var) * w_true);
  out.weights.set(-site.var, inst.weights.get(-site.var) * w_false);
  out.formula = std::move(s.outside);
  return out;
}

}  // namespace

std::optional<std::pair<RuleId, RuleSite>> find_applicable(const Instance& inst,
                                                           int small_limit) {
  const Formula& f = inst.formula;
  if (auto s = find_duplicate_literal(f))
    return {{RuleId::kDuplicateLiteral, *s}};
  if (auto s = find_tautology(f)) return {{RuleId::kTautology, *s}};
  if (auto s = find_subsumption(f)) return {{RuleId::kSubsumption, *s}};
  if (auto s = find_unit_clause(f)) return {{RuleId::kUnitClause, *s}};
  if (auto s = find_isolated_variable(f))
    return {{RuleId::kIsolatedVariable, *s}};
  if (auto s = find_strengthening(f)) return {{RuleId::kStrengthening, *s}};
  if (auto s = find_equivalence(f)) return {{RuleId::kEquivalence, *s}};
  if (auto s = find_disjoint_component(f, small_limit))
    return {{RuleId::kDisjointComponent, *s}};
  if (auto s = find_cut_variable(f, small_limit))
    return {{RuleId::kCutVariable, *s}};
  return std::nullopt;
}

Instance apply_rule(const Instance& inst, RuleId rule, const RuleSite& site,
                    int small_limit) {
  switch (rule) {
    case RuleId::kDuplicateLiteral:
      return apply_duplicate_literal(inst, site);
    case RuleId::kTautology:
      return apply_tautology(inst, site);
    case RuleId::kSubsumption:
      return apply_subsumption(inst, site);
    case RuleId::kUnitClause:
      return apply_unit_clause(inst, site);
    case RuleId::kIsolatedVariable:
      return apply_isolated_variable(inst, site);
    case RuleId::kStrengthening:
      return apply_strengthening(inst, site);
    case RuleId::kEquivalence:
      return apply_equivalence(inst, site);
    case RuleId::kDisjointComponent:
      return apply_disjoint_component(inst, site, small_limit);
    case RuleId::kCutVariable:
      return apply_cut_variable(inst, site, small_limit);
  }
  throw ContractViolation("apply_rule: unknown rule");
}

Instance reduce_fixpoint(Instance inst, int small_limit, ReduceLog* log) {
  const long long budget = potential(inst.formula);
  long long used = 0;
  while (auto hit = find_applicable(inst, small_limit)) {
    if (used >= budget) {
      throw ContractViolation(
          "reduce_fixpoint: exceeded the potential-function step budget");
    }
    inst = apply_rule(inst, hit->first, hit->second, small_limit);
    ++used;
    if (log) {
      ++log->applications;
      ++log->by_rule[rule_index(hit->first) - 1];
    }
  }
  return inst;
}

std::vector<std::string> reduced_structure_violations(const Formula& f,
                                                      bool two_cnf_input) {
  std::vector<std::string> out;
  if (f.has_empty_clause()) return out;

  DegreeProfile prof = degree_profile(f);
  auto clause_text = [](const Clause& c) {
    std::string s = "(";
    for (size_t i = 0; i < c.lits.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c.lits[i]);
    }
    return s + ")";
  };

  for (const Clause& c : f.clauses) {
    if (c.size() == 1) {
      out.push_back("unit clause " + clause_text(c) + " survived");
    }
    if (c.size() == 2) {
      for (Lit l : c.lits) {
        if (prof.degree.at(var_of(l)) < 2) {
          out.push_back("2-clause " + clause_text(c) + " holds degree-1 variable " +
                        std::to_string(var_of(l)));
        }
      }
    }
  }

  for (size_t i = 0; i < f.clauses.size(); ++i) {
    const Clause& c = f.clauses[i];
    if (c.size() != 2) continue;
    Lit a = c.lits[0], b = c.lits[1];
    for (size_t j = 0; j < f.clauses.size(); ++j) {
      if (j == i) continue;
      const Clause& d = f.clauses[j];
      if (d.contains(a) && d.contains(b)) {
        out.push_back("clause " + clause_text(d) + " repeats the pair of " +
                      clause_text(c));
      }
      if (d.contains(-a) && d.contains(b)) {
        out.push_back("clause " + clause_text(d) + " should have lost " +
                      std::to_string(-a) + " against " + clause_text(c));
      }
      if (d.contains(a) && d.contains(-b)) {
        out.push_back("clause " + clause_text(d) + " should have lost " +
                      std::to_string(-b) + " against " + clause_text(c));
      }
      if (d.size() == 2 && d.contains(-a) && d.contains(-b)) {
        out.push_back("2-clauses " + clause_text(c) + " and " + clause_text(d) +
                      " form an unfolded equivalence");
      }
    }
  }

  if (two_cnf_input) {
    for (const Clause& c : f.clauses) {
      if (c.size() != 2) {
        out.push_back("clause " + clause_text(c) +
                      " is not a 2-clause in a reduced 2-CNF");
      }
    }
    for (const auto& [v, d] : prof.degree) {
      if (d < 2) {
        out.push_back("variable " + std::to_string(v) + " has degree " +
                      std::to_string(d) + " in a reduced 2-CNF");
      }
    }
    if (f.var_count() > f.clause_count()) {
      out.push_back("reduced 2-CNF has more variables (" +
                    std::to_string(f.var_count()) + ") than clauses (" +
                    std::to_string(f.clause_count()) + ")");
    }
    for (Var x : f.vars) {
      Neighborhood nb = neighborhood(f, x);
      auto it = nb.by_degree.find(2);
      if (it == nb.by_degree.end() || it->second.size() < 2) continue;
      const std::set<Var>& n2 = it->second;
      for (const Clause& c : f.clauses) {
        int hits = 0;
        for (Var v : n2) hits += c.contains_var(v) ? 1 : 0;
        if (hits >= 2) {
          out.push_back("clause " + clause_text(c) +
                        " joins two degree-2 co-occurrents of variable " +
                        std::to_string(x));
        }
      }
    }
  }
  return out;
}

}  // namespace wmc
