#include "wmc/formula.hpp"

#include <algorithm>
#include <iostream>

#include "wmc/errors.hpp"

namespace wmc {

Clause::Clause(std::vector<Lit> ls) : lits(std::move(ls)) {
  for (Lit l : lits) {
    if (l == 0) throw ContractViolation("clause literal must be nonzero");
  }
  std::sort(lits.begin(), lits.end(), lit_less);
}

bool Clause::contains(Lit l) const {
  return std::binary_search(lits.begin(), lits.end(), l, lit_less);
}

bool Clause::contains_var(Var v) const { return contains(v) || contains(-v); }

bool Clause::is_tautology() const {
  for (size_t i = 0; i + 1 < lits.size(); ++i) {
    if (lits[i] == -lits[i + 1]) return true;
  }
  return false;
}

bool Clause::has_duplicate_lit() const {
  for (size_t i = 0; i + 1 < lits.size(); ++i) {
    if (lits[i] == lits[i + 1]) return true;
  }
  return false;
}

bool Clause::subset_of(const Clause& other) const {
  return std::includes(other.lits.begin(), other.lits.end(), lits.begin(),
                       lits.end(), lit_less);
}

long long Formula::literal_count() const {
  long long total = 0;
  for (const Clause& c : clauses) total += c.size();
  return total;
}

bool Formula::has_empty_clause() const {
  for (const Clause& c : clauses) {
    if (c.empty()) return true;
  }
  return false;
}

int Formula::max_clause_len() const {
  int len = 0;
  for (const Clause& c : clauses) len = std::max(len, c.size());
  return len;
}

Formula make_formula(const std::vector<std::vector<Lit>>& clauses,
                     const std::vector<Var>& extra_vars) {
  Formula f;
  for (const auto& ls : clauses) {
    Clause c(ls);
    for (Lit l : c.lits) f.vars.insert(var_of(l));
    f.clauses.push_back(std::move(c));
  }
  for (Var v : extra_vars) {
    if (v <= 0) throw ContractViolation("variable ids are positive");
    f.vars.insert(v);
  }
  return f;
}

const mpz_class& WeightFn::get(Lit l) const {
  static const mpz_class one = 1;
  auto it = w_.find(l);
  return it == w_.end() ? one : it->second;
}

void WeightFn::set(Lit l, mpz_class v) {
  if (l == 0) throw ContractViolation("weight on the zero literal");
  if (v < 0) throw ContractViolation("negative literal weight");
  if (v == 1) {
    w_.erase(l);  // default, keep the map canonical
  } else {
    w_[l] = std::move(v);
  }
}

Formula assign_literal(const Formula& f, Lit l) {
  if (!f.vars.count(var_of(l))) {
    throw ContractViolation("assign_literal: variable " +
                            std::to_string(var_of(l)) + " not in formula");
  }
  Formula out;
  out.vars = f.vars;
  out.vars.erase(var_of(l));
  for (const Clause& c : f.clauses) {
    if (c.contains(l)) continue;  // satisfied, drop
    Clause kept;
    kept.lits.reserve(c.lits.size());
    for (Lit x : c.lits) {
      if (x != -l) kept.lits.push_back(x);
    }
    out.clauses.push_back(std::move(kept));  // possibly empty now
  }
  return out;
}

DegreeProfile degree_profile(const Formula& f) {
  DegreeProfile p;
  for (Var v : f.vars) p.degree[v] = 0;
  for (const Clause& c : f.clauses) {
    for (Lit l : c.lits) ++p.degree[var_of(l)];
    if (c.size() == 2) ++p.len2_clauses;
    if (c.size() == 3) ++p.len3_clauses;
  }
  for (const auto& [v, d] : p.degree) {
    ++p.histogram[d];
    p.max_degree = std::max(p.max_degree, d);
  }
  return p;
}

Neighborhood neighborhood(const Formula& f, Var x) {
  if (!f.vars.count(x)) {
    throw ContractViolation("neighborhood: variable not in formula");
  }
  Neighborhood n;
  for (const Clause& c : f.clauses) {
    if (!c.contains_var(x)) continue;
    for (Lit l : c.lits) {
      if (var_of(l) != x) n.all.insert(var_of(l));
    }
  }
  if (!n.all.empty()) {
    DegreeProfile p = degree_profile(f);
    for (Var v : n.all) n.by_degree[p.degree.at(v)].insert(v);
  }
  return n;
}

double clause_measure(const Formula& f, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ConfigError("measure weight alpha must lie in (0,1)");
  }
  int m2 = 0, m3 = 0, shorter = 0;
  for (const Clause& c : f.clauses) {
    if (c.size() == 2) ++m2;
    else if (c.size() == 3) ++m3;
    else if (c.size() < 2) ++shorter;
  }
  if (shorter > 0) {
    std::cerr << "warning: clause measure ignores " << shorter
              << " clause(s) shorter than 2 literals\n";
  }
  return m3 + alpha * m2;
}

long long potential(const Formula& f) {
  return f.var_count() + f.clause_count() + f.literal_count();
}

}  // namespace wmc
