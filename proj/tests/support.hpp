#pragma once

// Shared test plumbing: a deterministic RNG wrapper, random formula builders,
// and a from-scratch enumerator kept deliberately independent of the library
// oracle so the two can vouch for each other.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "wmc/formula.hpp"

namespace testutil {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed) {}

  int below(int bound) { return static_cast<int>(s_() % static_cast<std::uint64_t>(bound)); }
  bool flip() { return below(2) == 1; }

 private:
  std::mt19937_64 s_;
};

// Clauses of length 1..max_len over variables 1..n, signs at random.
// With degenerate set, a clause may repeat a variable (so duplicate literals
// and tautologies appear); otherwise variables within a clause are distinct.
inline wmc::Formula random_formula(Rng& rng, int n, int m, int max_len,
                                   bool degenerate = false) {
  std::vector<std::vector<wmc::Lit>> clauses;
  for (int i = 0; i < m; ++i) {
    int len = 1 + rng.below(max_len);
    // Distinct variables cannot outnumber the pool.
    if (!degenerate && len > n) len = n;
    std::vector<wmc::Lit> lits;
    while (static_cast<int>(lits.size()) < len) {
      int v = 1 + rng.below(n);
      if (!degenerate) {
        bool seen = false;
        for (wmc::Lit l : lits) seen = seen || wmc::var_of(l) == v;
        if (seen) continue;
      }
      lits.push_back(rng.flip() ? v : -v);
    }
    clauses.push_back(std::move(lits));
  }
  return wmc::make_formula(clauses);
}

// Clauses of length exactly k, distinct variables inside each clause.
inline wmc::Formula random_kcnf(Rng& rng, int n, int m, int k) {
  if (k > n) throw std::invalid_argument("random_kcnf: k exceeds n");
  std::vector<std::vector<wmc::Lit>> clauses;
  for (int i = 0; i < m; ++i) {
    std::vector<wmc::Lit> lits;
    while (static_cast<int>(lits.size()) < k) {
      int v = 1 + rng.below(n);
      bool seen = false;
      for (wmc::Lit l : lits) seen = seen || wmc::var_of(l) == v;
      if (!seen) lits.push_back(rng.flip() ? v : -v);
    }
    clauses.push_back(std::move(lits));
  }
  return wmc::make_formula(clauses);
}

inline wmc::WeightFn random_weights(Rng& rng, int n, int max_w) {
  wmc::WeightFn w;
  for (int v = 1; v <= n; ++v) {
    w.set(v, 1 + rng.below(max_w));
    w.set(-v, 1 + rng.below(max_w));
  }
  return w;
}

// Reference count by plain recursion over f.vars, sharing no code with the
// library's enumeration (different traversal, different clause test).
inline mpz_class enumerate_wmc(const wmc::Formula& f, const wmc::WeightFn& w) {
  std::vector<wmc::Var> vars(f.vars.begin(), f.vars.end());
  std::vector<bool> value(vars.size(), false);

  auto satisfied = [&](const wmc::Clause& c) {
    for (wmc::Lit l : c.lits) {
      size_t i = 0;
      while (i < vars.size() && vars[i] != wmc::var_of(l)) ++i;
      if (i == vars.size()) continue;  // cannot happen on well-formed input
      if (value[i] == wmc::is_positive(l)) return true;
    }
    return false;
  };

  mpz_class total = 0;
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == vars.size()) {
      for (const wmc::Clause& c : f.clauses) {
        if (!satisfied(c)) return;
      }
      mpz_class prod = 1;
      for (size_t j = 0; j < vars.size(); ++j) {
        prod *= w.get(value[j] ? vars[j] : -vars[j]);
      }
      total += prod;
      return;
    }
    value[i] = false;
    self(self, i + 1);
    value[i] = true;
    self(self, i + 1);
  };
  rec(rec, 0);
  return total;
}

}  // namespace testutil
