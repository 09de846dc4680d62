// Command-line front end: count (exact WMC via the branch-and-reduce solvers,
// enumeration, or a direct decomposition sweep), gen (seeded random DIMACS),
// and check (reduction report plus structural diagnostics).

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wmc/errors.hpp"
#include "wmc/formula.hpp"
#include "wmc/graph.hpp"
#include "wmc/io.hpp"
#include "wmc/oracle.hpp"
#include "wmc/path_decomposition.hpp"
#include "wmc/pathwidth_dp.hpp"
#include "wmc/reduce.hpp"
#include "wmc/solver.hpp"

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw wmc::ConfigError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw wmc::ConfigError("cannot write '" + path + "'");
  out << text;
  if (!out.flush()) throw wmc::ConfigError("cannot write '" + path + "'");
}

struct CountOpts {
  std::string file;
  std::string algo = "auto";
  double alpha = 0.6309297;
  std::string stats_path;
  int brute_cap = 0;  // 0 = keep the per-algo default
  bool paranoid = false;
};

json stats_to_json(const wmc::SearchStats& s, const std::string& algo,
                   int input_m, bool weighted) {
  json deltas = json::array();
  for (const auto& d : s.deltas2) {
    json e{{"degree", d.degree},   {"n2", d.n2},
           {"drop_true", d.drop_true}, {"drop_false", d.drop_false},
           {"lb_each", d.lb_each}};
    if (d.lb_sum) e["lb_sum"] = *d.lb_sum;
    deltas.push_back(std::move(e));
  }
  for (const auto& d : s.deltas3) {
    deltas.push_back(json{{"c2", d.c2},
                          {"c3", d.c3},
                          {"drop_true", d.drop_true},
                          {"drop_false", d.drop_false},
                          {"lb_each", d.lb_each},
                          {"lb_sum", d.lb_sum}});
  }
  json rules;
  for (int i = 0; i < 9; ++i) {
    rules["R" + std::to_string(i + 1)] = s.rule_counts[i];
  }
  json out{{"algo", algo},
           {"nodes", s.nodes},
           {"rule_counts", std::move(rules)},
           {"deltas", std::move(deltas)},
           {"widths", s.widths},
           {"terminal", json{{"dp", s.dp_leaves}, {"brute", s.brute_leaves}}},
           {"delta_violations", s.delta_violations},
           {"phase3_violations", s.phase3_violations},
           {"max_dp_states", s.max_dp_states},
           {"wall_time", s.wall_seconds},
           {"weighted", weighted}};
  if (s.nodes >= 1 && input_m >= 1) {
    // Growth rate against the worst-case branching factors the analysis
    // promises: 1.1058^m for the 2-CNF search, 1.4423^m for the 3-CNF one.
    out["bound_ratio"] = std::log2(static_cast<double>(s.nodes)) / input_m;
    out["bound_ref"] = std::log2(algo == "alg2" ? 1.1058 : 1.4423);
  }
  return out;
}

int run_count(const CountOpts& o) {
  wmc::ParsedInput pi = wmc::parse_dimacs(slurp(o.file));
  const wmc::Instance& inst = pi.instance;
  const int maxlen = inst.formula.max_clause_len();
  const bool weighted = !inst.weights.all_unit();

  std::string algo = o.algo;
  if (algo == "auto") {
    if (maxlen <= 2) {
      algo = "alg2";
    } else if (maxlen == 3) {
      algo = "alg3";
    } else {
      std::cerr << "error: a clause has " << maxlen
                << " literals; the search handles at most 3. Use --algo "
                   "brute, primal-pw, or dual-pw.\n";
      return 1;
    }
  }
  if (algo == "alg2" && maxlen > 2) {
    std::cerr << "error: --algo alg2 needs a 2-CNF; a clause here has "
              << maxlen << " literals\n";
    return 1;
  }
  if (algo == "alg3" && maxlen > 3) {
    std::cerr << "error: --algo alg3 needs a 3-CNF; a clause here has "
              << maxlen << " literals\n";
    return 1;
  }

  wmc::SolverConfig cfg;
  cfg.alpha = o.alpha;
  cfg.paranoid = o.paranoid;
  if (o.brute_cap > 0) cfg.brute_cap = o.brute_cap;

  wmc::SearchStats stats;
  mpz_class count;
  auto t0 = std::chrono::steady_clock::now();
  if (algo == "alg2") {
    count = wmc::alg2cnf(inst, cfg, &stats);
  } else if (algo == "alg3") {
    count = wmc::alg3cnf(inst, cfg, &stats);
  } else if (algo == "brute") {
    count = wmc::brute_wmc(inst.formula, inst.weights,
                           o.brute_cap > 0 ? o.brute_cap : 30);
    ++stats.brute_leaves;
  } else if (algo == "primal-pw" || algo == "dual-pw") {
    if (inst.formula.has_empty_clause()) {
      count = 0;
    } else {
      bool primal = algo == "primal-pw";
      wmc::Graph g = primal ? wmc::primal_graph(inst.formula)
                            : wmc::dual_graph(inst.formula);
      wmc::PathDecomposition pd = wmc::heuristic_decompose(g);
      wmc::DpOptions opt;
      opt.dense_bits = cfg.dense_bits;
      wmc::DpStats ds;
      count = primal
                  ? wmc::primal_count(inst.formula, inst.weights, pd, opt, &ds)
                  : wmc::dual_count(inst.formula, inst.weights, pd, opt, &ds);
      stats.widths.push_back(pd.width());
      stats.max_dp_states = ds.max_states;
      ++stats.dp_leaves;
    }
  } else {
    std::cerr << "error: unknown --algo '" << algo << "'\n";
    return 1;
  }
  if (stats.wall_seconds == 0.0) {
    stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
  }

  std::cout << count.get_str() << "\n";
  if (!o.stats_path.empty()) {
    json j = stats_to_json(stats, algo, inst.formula.clause_count(), weighted);
    spill(o.stats_path, j.dump(2) + "\n");
  }
  return 0;
}

struct CheckOpts {
  std::string file;
  std::string pd_file;
  std::string pd_graph = "primal";
  std::string dot_primal;
  std::string dot_dual;
};

int run_check(const CheckOpts& o) {
  wmc::ParsedInput pi = wmc::parse_dimacs(slurp(o.file));
  const wmc::Formula& f = pi.instance.formula;
  wmc::DegreeProfile prof = wmc::degree_profile(f);

  std::cout << "input: " << f.var_count() << " variables, " << f.clause_count()
            << " clauses, longest clause " << f.max_clause_len()
            << ", max degree " << prof.max_degree << "\n";
  std::cout << "input: " << prof.len2_clauses << " 2-clauses, "
            << prof.len3_clauses << " 3-clauses, "
            << (pi.weight_lines > 0 ? "weighted" : "unweighted") << "\n";

  const bool two_cnf_input = f.max_clause_len() <= 2;
  wmc::ReduceLog log;
  wmc::Instance red = wmc::reduce_fixpoint(pi.instance, 10, &log);

  std::cout << "reduction: " << log.applications << " steps (";
  for (int i = 0; i < 9; ++i) {
    if (i) std::cout << ' ';
    std::cout << "R" << i + 1 << "=" << log.by_rule[i];
  }
  std::cout << ")\n";
  std::cout << "reduced: " << red.formula.var_count() << " variables, "
            << red.formula.clause_count() << " clauses";
  if (red.formula.has_empty_clause()) std::cout << ", empty clause (count 0)";
  std::cout << ", carried factor " << red.scale.get_str() << "\n";

  bool all_ok = true;
  std::vector<std::string> bad =
      wmc::reduced_structure_violations(red.formula, two_cnf_input);
  if (bad.empty()) {
    std::cout << "reduced structure: ok\n";
  } else {
    all_ok = false;
    for (const std::string& v : bad) {
      std::cout << "reduced structure: VIOLATION: " << v << "\n";
    }
  }

  if (!o.dot_primal.empty()) {
    spill(o.dot_primal, wmc::to_dot(wmc::primal_graph(f), "primal"));
  }
  if (!o.dot_dual.empty()) {
    spill(o.dot_dual, wmc::to_dot(wmc::dual_graph(f), "dual"));
  }

  if (!o.pd_file.empty()) {
    std::ifstream in(o.pd_file);
    if (!in) throw wmc::ConfigError("cannot open '" + o.pd_file + "'");
    wmc::PathDecomposition pd = wmc::parse_path_decomposition(in);
    wmc::Graph g =
        o.pd_graph == "dual" ? wmc::dual_graph(f) : wmc::primal_graph(f);
    wmc::PdCheck chk = wmc::validate(pd, g);
    if (chk.ok) {
      std::cout << "decomposition: valid for the " << o.pd_graph
                << " graph, width " << pd.width() << "\n";
    } else {
      all_ok = false;
      std::cout << "decomposition: INVALID (condition " << chk.condition
                << "): " << chk.detail << "\n";
    }
  }
  return all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact weighted model counting for 2-CNF and 3-CNF"};
  app.require_subcommand(1);

  CountOpts co;
  CLI::App* count = app.add_subcommand(
      "count", "Print the exact weighted model count of a DIMACS file");
  count->add_option("file", co.file, "DIMACS CNF input")->required();
  count
      ->add_option("--algo", co.algo,
                   "auto, alg2, alg3, brute, primal-pw, dual-pw")
      ->check(CLI::IsMember(
          {"auto", "alg2", "alg3", "brute", "primal-pw", "dual-pw"}))
      ->capture_default_str();
  count->add_option("--alpha", co.alpha, "2-clause weight in the 3-CNF measure")
      ->capture_default_str();
  count->add_option("--stats-json", co.stats_path,
                    "write search statistics to this file");
  count->add_option("--brute-cap", co.brute_cap,
                    "variable budget for enumeration (default: 20 inside the "
                    "search, 30 for --algo brute)");
  count->add_flag("--paranoid", co.paranoid,
                  "abort (exit 2) if a branch shrinks less than guaranteed");

  wmc::GenSpec gs;
  CLI::App* gen =
      app.add_subcommand("gen", "Print a seeded random DIMACS instance");
  gen->add_option("--vars", gs.vars, "variable count")->required();
  gen->add_option("--clauses", gs.clauses, "clause count")->required();
  gen->add_option("--width", gs.width, "literals per clause (2 or 3)")
      ->required();
  gen->add_option("--seed", gs.seed, "RNG seed")->required();
  gen->add_option("--max-weight", gs.max_weight,
                  "draw literal weights from 1..N (1 = unweighted)")
      ->capture_default_str();

  CheckOpts ko;
  CLI::App* check = app.add_subcommand(
      "check", "Reduce a DIMACS file and report its structure");
  check->add_option("file", ko.file, "DIMACS CNF input")->required();
  check->add_option("--pd", ko.pd_file,
                    "validate this decomposition (one bag per line) against "
                    "the input formula");
  check->add_option("--graph", ko.pd_graph, "graph the decomposition is for")
      ->check(CLI::IsMember({"primal", "dual"}))
      ->capture_default_str();
  check->add_option("--dot-primal", ko.dot_primal,
                    "write the primal graph as DOT to this file");
  check->add_option("--dot-dual", ko.dot_dual,
                    "write the dual graph as DOT to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (count->parsed()) return run_count(co);
    if (gen->parsed()) {
      std::cout << wmc::generate_random(gs);
      return 0;
    }
    if (check->parsed()) return run_check(ko);
  } catch (const wmc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const wmc::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const wmc::SizeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const wmc::ContractViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
