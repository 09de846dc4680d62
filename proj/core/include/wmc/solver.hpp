#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "wmc/formula.hpp"

namespace wmc {

struct SolverConfig {
  // Weight of 2-clauses in the branching measure for 3-CNF inputs.
  double alpha = 0.6309297;
  // Below this many variables, a fully-reduced unbranchable formula is
  // counted by enumeration instead of decomposition.
  int brute_cap = 20;
  // Size bound for the sub-formulas the R8/R9 rewrites fold away.
  int small_rule_limit = 10;
  // Advisory: decomposition widths beyond this are logged to stderr.
  int width_cap = 64;
  // Dense DP table budget, see DpOptions.
  int dense_bits = 20;
  // Turn the per-branch shrink checks into hard failures.
  bool paranoid = false;
};

// One branch of the 2-CNF search: measured clause-count drops of both
// children against their guaranteed lower bounds.
struct DeltaSample2 {
  int degree = 0;       // branch variable degree = formula degree
  int n2 = 0;           // degree-2 co-occurring variables
  int drop_true = 0;    // m(F) - m(reduce(F[x=1]))
  int drop_false = 0;
  int lb_each = 0;
  std::optional<int> lb_sum;  // present while degree <= 7
};

// One branch of the 3-CNF search: measure drops of both children.
struct DeltaSample3 {
  int c2 = 0;  // 2-clauses containing the branch variable
  int c3 = 0;  // 3-clauses containing it
  double drop_true = 0;
  double drop_false = 0;
  double lb_each = 0;
  double lb_sum = 0;
};

struct SearchStats {
  long long nodes = 0;  // branch steps taken
  std::array<long long, 9> rule_counts{};
  std::vector<DeltaSample2> deltas2;
  std::vector<DeltaSample3> deltas3;
  std::vector<int> widths;  // decomposition widths of DP leaves
  long long dp_leaves = 0;
  long long brute_leaves = 0;
  long long delta_violations = 0;   // measured drop under its lower bound
  long long phase3_violations = 0;  // structure checks failed at a DP entry
  std::size_t max_dp_states = 0;
  double wall_seconds = 0.0;
};

// Branch variable for a reduced 2-CNF: the maximum-degree variable while the
// formula degree is >= 5, otherwise a 4-variable with at least three
// 4-variable co-occurrences; nothing when the formula is ready for dynamic
// programming. Ties break to the lowest id.
std::optional<Var> select_var_2cnf(const Formula& f);

// Branch variable for a reduced 3-CNF: the lowest-id maximum-degree variable
// while the formula degree is >= 3.
std::optional<Var> select_var_3cnf(const Formula& f);

// Guaranteed clause-count drops when branching a reduced 2-CNF on its
// maximum-degree variable x: each child drops at least deg(x) + |N2(x)|, and
// while deg(x) <= 7 the children together drop at least
// 2 deg(x) + |N2(x)| + ceil(sum_{i>=2} (i-1) |Ni(x)| / 2) + 1.
// Throws ContractViolation unless deg(x) = deg(F).
struct BranchBounds2 {
  int lb_each = 0;
  std::optional<int> lb_sum;
};
BranchBounds2 branch_bounds_2cnf(const Formula& f, Var x);

// Guaranteed measure drops when branching a 3-CNF on x, from the clauses
// containing x: each child drops at least c2 * alpha + c3 * (1 - alpha), both
// together at least 2 c2 * alpha + c3 * (2 - alpha).
struct BranchBounds3 {
  double lb_each = 0;
  double lb_sum = 0;
};
BranchBounds3 branch_bounds_3cnf(const Formula& f, Var x, double alpha);

// Exact weighted count of a 2-CNF instance (clauses of length <= 2);
// branch-and-reduce with a decomposition sweep or enumeration at the leaves.
// Returns scale * WMC(formula, weights).
mpz_class alg2cnf(const Instance& inst, const SolverConfig& cfg = {},
                  SearchStats* stats = nullptr);

// Same for 3-CNF instances (clauses of length <= 3).
mpz_class alg3cnf(const Instance& inst, const SolverConfig& cfg = {},
                  SearchStats* stats = nullptr);

}  // namespace wmc
