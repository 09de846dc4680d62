#include "wmc/oracle.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "wmc/errors.hpp"

namespace wmc {

mpz_class brute_wmc(const Formula& f, const WeightFn& w, int cap) {
  if (f.var_count() > cap) {
    throw SizeError("brute_wmc: " + std::to_string(f.var_count()) +
                    " variables exceed the enumeration cap " +
                    std::to_string(cap));
  }
  if (f.has_empty_clause()) return 0;

  std::vector<Var> active;
  std::map<Var, int> slot;
  for (const Clause& c : f.clauses) {
    for (Lit l : c.lits) {
      if (!slot.count(var_of(l))) {
        slot[var_of(l)] = static_cast<int>(active.size());
        active.push_back(var_of(l));
      }
    }
  }

  mpz_class idle_factor = 1;
  for (Var v : f.vars) {
    if (!slot.count(v)) idle_factor *= w.get(v) + w.get(-v);
  }

  // Per-clause literal tests against the assignment mask (bit set = true).
  struct Test {
    int bit;
    uint64_t want;  // 0 or 1 at that bit
  };
  std::vector<std::vector<Test>> tests;
  tests.reserve(f.clauses.size());
  for (const Clause& c : f.clauses) {
    std::vector<Test> t;
    for (Lit l : c.lits) {
      t.push_back({slot.at(var_of(l)), is_positive(l) ? 1ull : 0ull});
    }
    tests.push_back(std::move(t));
  }

  const int k = static_cast<int>(active.size());
  mpz_class total = 0;
  mpz_class prod;
  for (uint64_t mask = 0; mask < (1ull << k); ++mask) {
    bool sat = true;
    for (const auto& clause_tests : tests) {
      bool clause_sat = false;
      for (const Test& t : clause_tests) {
        if (((mask >> t.bit) & 1ull) == t.want) {
          clause_sat = true;
          break;
        }
      }
      if (!clause_sat) {
        sat = false;
        break;
      }
    }
    if (!sat) continue;
    prod = 1;
    for (int i = 0; i < k; ++i) {
      prod *= w.get((mask >> i) & 1ull ? active[i] : -active[i]);
    }
    total += prod;
  }
  return total * idle_factor;
}

}  // namespace wmc
