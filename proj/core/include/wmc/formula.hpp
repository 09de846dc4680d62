#pragma once

#include <gmpxx.h>

#include <map>
#include <set>
#include <vector>

namespace wmc {

// Variables are positive ints; a literal is +v or -v, never 0.
using Var = int;
using Lit = int;

inline Var var_of(Lit l) { return l < 0 ? -l : l; }
inline bool is_positive(Lit l) { return l > 0; }

// Literal order: by variable, negative phase first. Keeps complementary
// literals adjacent in sorted clauses.
inline bool lit_less(Lit a, Lit b) {
  if (var_of(a) != var_of(b)) return var_of(a) < var_of(b);
  return a < b;
}

// Sorted multiset of literals. Duplicate literals and complementary pairs are
// representable on purpose; the reduction rules are what remove them.
struct Clause {
  std::vector<Lit> lits;

  Clause() = default;
  explicit Clause(std::vector<Lit> ls);

  int size() const { return static_cast<int>(lits.size()); }
  bool empty() const { return lits.empty(); }
  bool contains(Lit l) const;
  bool contains_var(Var v) const;
  bool is_tautology() const;
  bool has_duplicate_lit() const;
  // Subset as literal sets (multiset-aware: every literal of *this occurs at
  // least as often in other).
  bool subset_of(const Clause& other) const;

  bool operator==(const Clause&) const = default;
};

// Clause multiset plus an explicit variable set. vars always contains every
// variable occurring in a clause and may additionally hold 0-degree variables;
// those still contribute assignments (and weight) to the model count.
struct Formula {
  std::vector<Clause> clauses;
  std::set<Var> vars;

  int clause_count() const { return static_cast<int>(clauses.size()); }
  int var_count() const { return static_cast<int>(vars.size()); }
  long long literal_count() const;
  bool empty() const { return clauses.empty(); }
  bool has_empty_clause() const;
  int max_clause_len() const;

  bool operator==(const Formula&) const = default;
};

// Build from literal lists; vars defaults to the union of clause variables,
// extra_vars adds 0-degree ones.
Formula make_formula(const std::vector<std::vector<Lit>>& clauses,
                     const std::vector<Var>& extra_vars = {});

// Literal weights, default 1. Weights are non-negative integers; zero only
// ever appears through internal rewriting, never from input files.
class WeightFn {
 public:
  const mpz_class& get(Lit l) const;
  void set(Lit l, mpz_class v);
  bool all_unit() const { return w_.empty(); }
  const std::map<Lit, mpz_class>& entries() const { return w_; }

  bool operator==(const WeightFn&) const = default;

 private:
  std::map<Lit, mpz_class> w_;
};

// Working triple: every transformation preserves scale * WMC(formula, weights).
// Top-level instances start with scale = 1.
struct Instance {
  Formula formula;
  WeightFn weights;
  mpz_class scale = 1;
};

using Assignment = std::map<Var, bool>;

struct DegreeProfile {
  std::map<Var, int> degree;        // occurrences of v and -v, duplicates count
  std::map<int, int> histogram;     // degree -> number of variables
  int max_degree = 0;               // 0 on formulas without variables
  int len2_clauses = 0;             // clauses of length exactly 2
  int len3_clauses = 0;             // clauses of length exactly 3
};

// Co-occurrence neighborhood of x, partitioned by neighbor degree.
struct Neighborhood {
  std::set<Var> all;
  std::map<int, std::set<Var>> by_degree;

  int count(int degree) const {
    auto it = by_degree.find(degree);
    return it == by_degree.end() ? 0 : static_cast<int>(it->second.size());
  }
};

// F[l = true]: drop clauses containing l, strip -l from the rest, remove
// var(l) from vars. Clauses that lose their last literal stay as empty
// clauses. Throws ContractViolation if var(l) is not in f.vars.
Formula assign_literal(const Formula& f, Lit l);

DegreeProfile degree_profile(const Formula& f);

// Throws ContractViolation if x is not in f.vars.
Neighborhood neighborhood(const Formula& f, Var x);

// len3_clauses + alpha * len2_clauses. Shorter clauses contribute nothing and
// emit a stderr warning (callers are expected to have reduced them away).
// Throws ConfigError unless 0 < alpha < 1.
double clause_measure(const Formula& f, double alpha);

// n + m + total literal count; every reduction step strictly decreases it.
long long potential(const Formula& f);

}  // namespace wmc
