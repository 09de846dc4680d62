#pragma once

#include <gmpxx.h>

#include <cstddef>

#include "wmc/formula.hpp"
#include "wmc/path_decomposition.hpp"

namespace wmc {

struct DpOptions {
  // Tables index states densely while width + 1 <= dense_bits, and fall back
  // to hash maps above that.
  int dense_bits = 20;
};

struct DpStats {
  std::size_t max_states = 0;  // peak count of reachable (nonzero) states
  std::size_t steps = 0;
};

// Sweep a decomposition of the primal graph. States assign the live
// variables; clauses are enforced once, at the first step where all their
// variables are live. Forgetting a variable folds its weights in. Requires a
// valid decomposition and no empty clause (the caller maps that to 0).
mpz_class primal_count(const Formula& f, const WeightFn& w,
                       const PathDecomposition& pd, const DpOptions& opt = {},
                       DpStats* stats = nullptr);

// Sweep a decomposition of the dual graph (vertices = clause ids 1..m).
// States mark which live clauses are already satisfied; a variable is summed
// out at the first step where every clause containing it is live, and
// forgetting a clause keeps only states that satisfied it. 0-degree variables
// contribute (w(v) + w(-v)) factors. Same preconditions as primal_count.
mpz_class dual_count(const Formula& f, const WeightFn& w,
                     const PathDecomposition& pd, const DpOptions& opt = {},
                     DpStats* stats = nullptr);

}  // namespace wmc
