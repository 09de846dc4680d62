#include "wmc/solver.hpp"

#include <chrono>
#include <cmath>
#include <iostream>
#include <string>

#include "wmc/errors.hpp"
#include "wmc/graph.hpp"
#include "wmc/oracle.hpp"
#include "wmc/path_decomposition.hpp"
#include "wmc/pathwidth_dp.hpp"
#include "wmc/reduce.hpp"

namespace wmc {

std::optional<Var> select_var_2cnf(const Formula& f) {
  DegreeProfile p = degree_profile(f);
  if (p.max_degree >= 5) {
    for (const auto& [v, d] : p.degree) {
      if (d == p.max_degree) return v;
    }
  }
  if (p.max_degree == 4) {
    for (const auto& [v, d] : p.degree) {
      if (d == 4 && neighborhood(f, v).count(4) >= 3) return v;
    }
  }
  return std::nullopt;
}

std::optional<Var> select_var_3cnf(const Formula& f) {
  DegreeProfile p = degree_profile(f);
  if (p.max_degree < 3) return std::nullopt;
  for (const auto& [v, d] : p.degree) {
    if (d == p.max_degree) return v;
  }
  return std::nullopt;
}

BranchBounds2 branch_bounds_2cnf(const Formula& f, Var x) {
  DegreeProfile p = degree_profile(f);
  auto it = p.degree.find(x);
  if (it == p.degree.end() || it->second != p.max_degree) {
    throw ContractViolation("branch_bounds_2cnf: x must have maximum degree");
  }
  const int d = p.max_degree;
  Neighborhood nb = neighborhood(f, x);

  BranchBounds2 out;
  out.lb_each = d + nb.count(2);
  if (d <= 7) {
    int weighted = 0;
    for (const auto& [deg, vars] : nb.by_degree) {
      if (deg >= 2) weighted += (deg - 1) * static_cast<int>(vars.size());
    }
    out.lb_sum = 2 * d + nb.count(2) + (weighted + 1) / 2 + 1;
  }
  return out;
}

BranchBounds3 branch_bounds_3cnf(const Formula& f, Var x, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ConfigError("branch_bounds_3cnf: alpha must lie in (0,1)");
  }
  if (!f.vars.count(x)) {
    throw ContractViolation("branch_bounds_3cnf: variable not in formula");
  }
  int c2 = 0, c3 = 0;
  for (const Clause& c : f.clauses) {
    if (!c.contains_var(x)) continue;
    if (c.size() == 2) ++c2;
    if (c.size() == 3) ++c3;
  }
  BranchBounds3 out;
  out.lb_each = c2 * alpha + c3 * (1.0 - alpha);
  out.lb_sum = 2.0 * c2 * alpha + c3 * (2.0 - alpha);
  return out;
}

namespace {

constexpr double kDeltaSlack = 1e-9;

struct RecResult {
  mpz_class value;
  int reduced_m = 0;         // clause count after this call's reduction
  double reduced_measure = 0;  // 3-CNF only
};

void note_rules(SearchStats* stats, const ReduceLog& log) {
  if (!stats) return;
  for (size_t i = 0; i < log.by_rule.size(); ++i) {
    stats->rule_counts[i] += log.by_rule[i];
  }
}

// Structure expected when the 2-CNF search stops branching: degree at most 4,
// 4-variables nearly isolated from each other, and few high-degree variables
// relative to the clause count.
bool dp_entry_ok_2cnf(const Formula& f) {
  DegreeProfile p = degree_profile(f);
  if (p.max_degree > 4) return false;
  for (const auto& [v, d] : p.degree) {
    if (d == 4 && neighborhood(f, v).count(4) > 2) return false;
  }
  Graph g = primal_graph(f);
  long long n3 = 0, n4 = 0;
  for (const auto& [deg, cnt] : graph_degree_histogram(g)) {
    if (deg == 3) n3 = cnt;
    if (deg == 4) n4 = cnt;
  }
  long long m = f.clause_count();
  return n3 + 2 * n4 <= (8 * m + 8) / 9;
}

// Structure expected when the 3-CNF search stops branching: every variable in
// at most two clauses, so the dual graph has degree at most 3.
bool dp_entry_ok_3cnf(const Formula& f) {
  if (degree_profile(f).max_degree > 2) return false;
  Graph g = dual_graph(f);
  for (int v : g.vertices) {
    if (g.degree(v) > 3) return false;
  }
  return true;
}

class Search {
 public:
  Search(const SolverConfig& cfg, SearchStats* stats, bool three)
      : cfg_(cfg), stats_(stats), three_(three) {}

  RecResult run(Instance inst) {
    ReduceLog log;
    inst = reduce_fixpoint(std::move(inst), cfg_.small_rule_limit, &log);
    note_rules(stats_, log);

    RecResult res;
    res.reduced_m = inst.formula.clause_count();

    if (inst.formula.empty()) {
      res.value = inst.scale;
      return res;
    }
    if (inst.formula.has_empty_clause()) {
      // A contradictory fixpoint is exactly {()}, whose measure is 0; skip
      // the call (and its short-clause warning) and keep the default 0.
      res.value = 0;
      return res;
    }
    res.reduced_measure =
        three_ ? clause_measure(inst.formula, cfg_.alpha) : 0.0;

    std::optional<Var> x = three_ ? select_var_3cnf(inst.formula)
                                  : select_var_2cnf(inst.formula);
    if (x) {
      res.value = branch(inst, *x, res);
      return res;
    }

    res.value = inst.scale * dp_leaf(inst);
    return res;
  }

 private:
  mpz_class branch(const Instance& inst, Var x, const RecResult& here) {
    if (stats_) ++stats_->nodes;

    BranchBounds2 b2;
    BranchBounds3 b3;
    int n2 = 0, c2 = 0, c3 = 0, degree = 0;
    if (three_) {
      b3 = branch_bounds_3cnf(inst.formula, x, cfg_.alpha);
      for (const Clause& c : inst.formula.clauses) {
        if (!c.contains_var(x)) continue;
        if (c.size() == 2) ++c2;
        if (c.size() == 3) ++c3;
      }
    } else {
      b2 = branch_bounds_2cnf(inst.formula, x);
      degree = degree_profile(inst.formula).max_degree;
      n2 = neighborhood(inst.formula, x).count(2);
    }

    Instance child_true{assign_literal(inst.formula, x), inst.weights,
                        inst.scale};
    Instance child_false{assign_literal(inst.formula, -x), inst.weights,
                         inst.scale};
    RecResult rt = run(std::move(child_true));
    RecResult rf = run(std::move(child_false));

    if (three_) {
      DeltaSample3 s;
      s.c2 = c2;
      s.c3 = c3;
      s.drop_true = here.reduced_measure - rt.reduced_measure;
      s.drop_false = here.reduced_measure - rf.reduced_measure;
      s.lb_each = b3.lb_each;
      s.lb_sum = b3.lb_sum;
      bool ok = s.drop_true >= s.lb_each - kDeltaSlack &&
                s.drop_false >= s.lb_each - kDeltaSlack &&
                s.drop_true + s.drop_false >= s.lb_sum - kDeltaSlack;
      if (!ok) flag_delta("3-CNF", x);
      if (stats_) stats_->deltas3.push_back(s);
    } else {
      DeltaSample2 s;
      s.degree = degree;
      s.n2 = n2;
      s.drop_true = here.reduced_m - rt.reduced_m;
      s.drop_false = here.reduced_m - rf.reduced_m;
      s.lb_each = b2.lb_each;
      s.lb_sum = b2.lb_sum;
      bool ok = s.drop_true >= s.lb_each && s.drop_false >= s.lb_each &&
                (!s.lb_sum || s.drop_true + s.drop_false >= *s.lb_sum);
      if (!ok) flag_delta("2-CNF", x);
      if (stats_) stats_->deltas2.push_back(s);
    }

    return inst.weights.get(x) * rt.value + inst.weights.get(-x) * rf.value;
  }

  void flag_delta(const char* kind, Var x) {
    if (stats_) ++stats_->delta_violations;
    if (cfg_.paranoid) {
      throw ContractViolation(std::string(kind) + " branch on variable " +
                              std::to_string(x) +
                              " shrank less than guaranteed");
    }
  }

  // Fully-reduced, unbranchable formula: enumerate when small, otherwise
  // sweep a path decomposition of the matching graph.
  mpz_class dp_leaf(const Instance& inst) {
    const Formula& f = inst.formula;
    bool structured = three_ ? dp_entry_ok_3cnf(f) : dp_entry_ok_2cnf(f);
    if (!structured) {
      if (stats_) ++stats_->phase3_violations;
      if (cfg_.paranoid) {
        throw ContractViolation(
            "reduced formula missed the expected end-phase structure");
      }
    }

    if (f.var_count() <= cfg_.brute_cap) {
      if (stats_) ++stats_->brute_leaves;
      return brute_wmc(f, inst.weights, std::max(cfg_.brute_cap, 30));
    }

    Graph g = three_ ? dual_graph(f) : primal_graph(f);
    PathDecomposition pd = heuristic_decompose(g);
    if (pd.width() > cfg_.width_cap) {
      std::cerr << "note: decomposition width " << pd.width()
                << " exceeds the advisory cap " << cfg_.width_cap << "\n";
    }
    if (stats_) {
      ++stats_->dp_leaves;
      stats_->widths.push_back(pd.width());
    }
    DpOptions opt;
    opt.dense_bits = cfg_.dense_bits;
    DpStats dps;
    mpz_class count = three_ ? dual_count(f, inst.weights, pd, opt, &dps)
                             : primal_count(f, inst.weights, pd, opt, &dps);
    if (stats_) {
      stats_->max_dp_states = std::max(stats_->max_dp_states, dps.max_states);
    }
    return count;
  }

  const SolverConfig& cfg_;
  SearchStats* stats_;
  const bool three_;
};

mpz_class solve(const Instance& inst, const SolverConfig& cfg,
                SearchStats* stats, bool three) {
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) {
    throw ConfigError("solver alpha must lie in (0,1)");
  }
  const int max_len = three ? 3 : 2;
  if (inst.formula.max_clause_len() > max_len) {
    throw ContractViolation(std::string(three ? "alg3cnf" : "alg2cnf") +
                            ": clause longer than " + std::to_string(max_len));
  }
  auto start = std::chrono::steady_clock::now();
  mpz_class out = Search(cfg, stats, three).run(inst).value;
  if (stats) {
    stats->wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
  }
  return out;
}

}  // namespace

mpz_class alg2cnf(const Instance& inst, const SolverConfig& cfg,
                  SearchStats* stats) {
  return solve(inst, cfg, stats, false);
}

mpz_class alg3cnf(const Instance& inst, const SolverConfig& cfg,
                  SearchStats* stats) {
  return solve(inst, cfg, stats, true);
}

}  // namespace wmc
