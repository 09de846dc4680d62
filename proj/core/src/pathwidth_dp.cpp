#include "wmc/pathwidth_dp.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "wmc/errors.hpp"
#include "wmc/graph.hpp"

namespace wmc {

namespace {

// State table over bit masks of the live vertices. Dense = plain vector
// indexed by mask; sparse = hash map holding only reachable states. The
// backend is fixed up front from the decomposition width.
class StateTable {
 public:
  StateTable(bool dense, int max_bits) : dense_(dense) {
    if (max_bits > 62) {
      throw SizeError("state table: width over 62 cannot be bit-packed");
    }
    if (dense_) {
      dense_t_.assign(1, 0);
      dense_t_[0] = 1;
    } else {
      sparse_t_[0] = 1;
    }
  }

  int bits() const { return bits_; }

  // New top bit, both phases copied (variable introduction).
  void push_bit_both() {
    if (dense_) {
      const size_t half = dense_t_.size();
      dense_t_.resize(half * 2);
      for (size_t m = 0; m < half; ++m) dense_t_[half + m] = dense_t_[m];
    } else {
      std::unordered_map<uint64_t, mpz_class> next;
      next.reserve(sparse_t_.size() * 2);
      for (auto& [m, v] : sparse_t_) {
        next[m] = v;
        next[m | (1ull << bits_)] = std::move(v);
      }
      sparse_t_ = std::move(next);
    }
    ++bits_;
  }

  // New top bit stuck at 0 (clause introduction).
  void push_bit_zero() {
    if (dense_) {
      dense_t_.resize(dense_t_.size() * 2);  // upper half zero-filled
    }
    ++bits_;
  }

  // Drop bit p, combining the two phases as w0 * (bit = 0) + w1 * (bit = 1).
  void fold_bit(int p, const mpz_class& w0, const mpz_class& w1) {
    const uint64_t low = (1ull << p) - 1;
    if (dense_) {
      std::vector<mpz_class> next(dense_t_.size() / 2);
      for (uint64_t m = 0; m < next.size(); ++m) {
        uint64_t m0 = (m & low) | ((m & ~low) << 1);
        next[m] = w0 * dense_t_[m0] + w1 * dense_t_[m0 | (1ull << p)];
      }
      dense_t_ = std::move(next);
    } else {
      std::unordered_map<uint64_t, mpz_class> next;
      next.reserve(sparse_t_.size());
      for (const auto& [m, v] : sparse_t_) {
        uint64_t folded = (m & low) | ((m >> 1) & ~low);
        next[folded] += ((m >> p) & 1ull) ? w1 * v : w0 * v;
      }
      sparse_t_ = std::move(next);
    }
    --bits_;
  }

  // Drop bit p keeping only states where it is set.
  void drop_bit_keep_set(int p) {
    const uint64_t low = (1ull << p) - 1;
    if (dense_) {
      std::vector<mpz_class> next(dense_t_.size() / 2);
      for (uint64_t m = 0; m < next.size(); ++m) {
        uint64_t src = (m & low) | ((m & ~low) << 1) | (1ull << p);
        next[m] = std::move(dense_t_[src]);
      }
      dense_t_ = std::move(next);
    } else {
      std::unordered_map<uint64_t, mpz_class> next;
      for (auto& [m, v] : sparse_t_) {
        if ((m >> p) & 1ull) {
          next[(m & low) | ((m >> 1) & ~low)] = std::move(v);
        }
      }
      sparse_t_ = std::move(next);
    }
    --bits_;
  }

  // Zero out states failing pred.
  template <class Pred>
  void filter(Pred pred) {
    if (dense_) {
      for (uint64_t m = 0; m < dense_t_.size(); ++m) {
        if (dense_t_[m] != 0 && !pred(m)) dense_t_[m] = 0;
      }
    } else {
      for (auto it = sparse_t_.begin(); it != sparse_t_.end();) {
        it = pred(it->first) ? std::next(it) : sparse_t_.erase(it);
      }
    }
  }

  // Replace every state m by up-to-two successors m | or0 and m | or1 with
  // the respective weight factors, summing collisions (variable expiry in the
  // dual sweep).
  void spread(uint64_t or0, const mpz_class& w0, uint64_t or1,
              const mpz_class& w1) {
    if (dense_) {
      std::vector<mpz_class> next(dense_t_.size());
      for (uint64_t m = 0; m < dense_t_.size(); ++m) {
        if (dense_t_[m] == 0) continue;
        next[m | or0] += w0 * dense_t_[m];
        next[m | or1] += w1 * dense_t_[m];
      }
      dense_t_ = std::move(next);
    } else {
      std::unordered_map<uint64_t, mpz_class> next;
      next.reserve(sparse_t_.size() * 2);
      for (const auto& [m, v] : sparse_t_) {
        next[m | or0] += w0 * v;
        next[m | or1] += w1 * v;
      }
      sparse_t_ = std::move(next);
    }
  }

  std::size_t live_states() const {
    if (!dense_) return sparse_t_.size();
    std::size_t n = 0;
    for (const auto& v : dense_t_) {
      if (v != 0) ++n;
    }
    return n;
  }

  // Value once every bit is folded away.
  mpz_class final_value() const {
    if (bits_ != 0) throw ContractViolation("state table: bits still live");
    if (dense_) return dense_t_[0];
    auto it = sparse_t_.find(0);
    return it == sparse_t_.end() ? mpz_class(0) : it->second;
  }

 private:
  bool dense_;
  int bits_ = 0;
  std::vector<mpz_class> dense_t_;
  std::unordered_map<uint64_t, mpz_class> sparse_t_;
};

int position_of(const std::vector<int>& live, int v, const char* who) {
  auto it = std::find(live.begin(), live.end(), v);
  if (it == live.end()) {
    throw ContractViolation(std::string(who) + ": vertex not live");
  }
  return static_cast<int>(it - live.begin());
}

}  // namespace

mpz_class primal_count(const Formula& f, const WeightFn& w,
                       const PathDecomposition& pd, const DpOptions& opt,
                       DpStats* stats) {
  if (f.has_empty_clause()) {
    throw ContractViolation("primal_count: formula holds an empty clause");
  }
  Graph g = primal_graph(f);
  PdCheck chk = validate(pd, g);
  if (!chk.ok) {
    throw ContractViolation("primal_count: invalid decomposition: " +
                            chk.detail);
  }
  auto steps = to_nice(pd);

  // A clause is enforced at the first step after which all its variables are
  // live together. Validity guarantees such a step exists.
  std::vector<int> checkpoint(f.clauses.size(), -1);
  {
    std::set<Var> live;
    for (int t = 0; t < static_cast<int>(steps.size()); ++t) {
      if (steps[t].kind == NiceStep::kIntroduce) live.insert(steps[t].vertex);
      else live.erase(steps[t].vertex);
      for (size_t ci = 0; ci < f.clauses.size(); ++ci) {
        if (checkpoint[ci] >= 0) continue;
        bool all_live = true;
        for (Lit l : f.clauses[ci].lits) {
          if (!live.count(var_of(l))) {
            all_live = false;
            break;
          }
        }
        if (all_live) checkpoint[ci] = t;
      }
    }
    for (int cp : checkpoint) {
      if (cp < 0) {
        throw ContractViolation("primal_count: clause never fully live");
      }
    }
  }

  const bool dense = pd.width() + 1 <= opt.dense_bits;
  StateTable table(dense, pd.width() + 1);
  std::vector<int> live;

  for (int t = 0; t < static_cast<int>(steps.size()); ++t) {
    if (steps[t].kind == NiceStep::kIntroduce) {
      table.push_bit_both();
      live.push_back(steps[t].vertex);
    } else {
      Var x = steps[t].vertex;
      int p = position_of(live, x, "primal_count");
      table.fold_bit(p, w.get(-x), w.get(x));
      live.erase(live.begin() + p);
    }
    for (size_t ci = 0; ci < f.clauses.size(); ++ci) {
      if (checkpoint[ci] != t) continue;
      // Keep states satisfying the clause.
      std::vector<std::pair<int, uint64_t>> tests;
      for (Lit l : f.clauses[ci].lits) {
        tests.push_back({position_of(live, var_of(l), "primal_count"),
                         is_positive(l) ? 1ull : 0ull});
      }
      table.filter([&](uint64_t m) {
        for (auto [bit, want] : tests) {
          if (((m >> bit) & 1ull) == want) return true;
        }
        return false;
      });
    }
    if (stats) {
      stats->max_states = std::max(stats->max_states, table.live_states());
      ++stats->steps;
    }
  }
  return table.final_value();
}

mpz_class dual_count(const Formula& f, const WeightFn& w,
                     const PathDecomposition& pd, const DpOptions& opt,
                     DpStats* stats) {
  if (f.has_empty_clause()) {
    throw ContractViolation("dual_count: formula holds an empty clause");
  }
  Graph g = dual_graph(f);
  PdCheck chk = validate(pd, g);
  if (!chk.ok) {
    throw ContractViolation("dual_count: invalid decomposition: " + chk.detail);
  }
  auto steps = to_nice(pd);

  // clause id (1-based) -> introduction step; variable -> expiry step = the
  // step where its last clause shows up. All of a variable's clauses are
  // pairwise adjacent in the dual graph, so they are still live then.
  std::map<int, int> intro_step;
  for (int t = 0; t < static_cast<int>(steps.size()); ++t) {
    if (steps[t].kind == NiceStep::kIntroduce) intro_step[steps[t].vertex] = t;
  }
  std::map<Var, std::vector<int>> clauses_of;
  for (int i = 0; i < f.clause_count(); ++i) {
    for (Lit l : f.clauses[i].lits) {
      auto& ids = clauses_of[var_of(l)];
      if (ids.empty() || ids.back() != i + 1) ids.push_back(i + 1);
    }
  }
  std::map<int, std::vector<Var>> expiring_at;  // step -> vars, ascending
  for (const auto& [v, ids] : clauses_of) {
    int last = -1;
    for (int id : ids) last = std::max(last, intro_step.at(id));
    expiring_at[last].push_back(v);
  }

  mpz_class idle_factor = 1;
  for (Var v : f.vars) {
    if (!clauses_of.count(v)) idle_factor *= w.get(v) + w.get(-v);
  }

  const bool dense = pd.width() + 1 <= opt.dense_bits;
  StateTable table(dense, pd.width() + 1);
  std::vector<int> live;
  std::map<Var, int> expired_at;

  for (int t = 0; t < static_cast<int>(steps.size()); ++t) {
    if (steps[t].kind == NiceStep::kIntroduce) {
      table.push_bit_zero();
      live.push_back(steps[t].vertex);
      auto exp = expiring_at.find(t);
      if (exp != expiring_at.end()) {
        for (Var x : exp->second) {
          uint64_t sat_true = 0, sat_false = 0;
          for (int id : clauses_of.at(x)) {
            int p = position_of(live, id, "dual_count expiry");
            if (f.clauses[id - 1].contains(x)) sat_true |= 1ull << p;
            if (f.clauses[id - 1].contains(-x)) sat_false |= 1ull << p;
          }
          table.spread(sat_false, w.get(-x), sat_true, w.get(x));
          expired_at[x] = t;
        }
      }
    } else {
      int id = steps[t].vertex;
      for (Lit l : f.clauses[id - 1].lits) {
        if (!expired_at.count(var_of(l))) {
          throw ContractViolation(
              "dual_count: clause forgotten before variable " +
              std::to_string(var_of(l)) + " was summed out");
        }
      }
      int p = position_of(live, id, "dual_count");
      table.drop_bit_keep_set(p);
      live.erase(live.begin() + p);
    }
    if (stats) {
      stats->max_states = std::max(stats->max_states, table.live_states());
      ++stats->steps;
    }
  }
  return table.final_value() * idle_factor;
}

}  // namespace wmc
