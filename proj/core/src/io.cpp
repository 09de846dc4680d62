#include "wmc/io.hpp"

#include <charconv>
#include <cstdlib>
#include <random>
#include <sstream>
#include <utility>
#include <vector>

#include "wmc/errors.hpp"

namespace wmc {

namespace {

bool parse_ll(const std::string& tok, long long* out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, *out);
  return ec == std::errc() && ptr == last;
}

mpz_class parse_weight(const std::string& tok, int lineno) {
  // mpz accepts a leading minus and digits; anything else throws.
  try {
    mpz_class w(tok, 10);
    if (w < 1) throw ParseError(lineno, "weight must be at least 1");
    return w;
  } catch (const std::invalid_argument&) {
    throw ParseError(lineno, "malformed weight '" + tok + "'");
  }
}

void reject_extra(std::istringstream& ls, int lineno, const char* what) {
  std::string extra;
  if (ls >> extra) {
    throw ParseError(lineno,
                     std::string("unexpected token '") + extra + "' after " + what);
  }
}

}  // namespace

ParsedInput parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  bool have_header = false;
  long long declared_n = 0, declared_m = 0;
  std::vector<std::vector<Lit>> clauses;
  std::vector<Lit> open_clause;
  std::vector<std::pair<Lit, mpz_class>> weights;
  int weight_lines = 0;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;

    if (tok == "c") {
      std::string p, kw;
      if (ls >> p && p == "p" && ls >> kw && kw == "weight") {
        if (!have_header) {
          throw ParseError(lineno, "weight line before 'p cnf' header");
        }
        std::string lit_tok, w_tok, end_tok;
        if (!(ls >> lit_tok >> w_tok >> end_tok) || end_tok != "0") {
          throw ParseError(lineno,
                           "weight line must read 'c p weight <lit> <w> 0'");
        }
        reject_extra(ls, lineno, "weight line");
        long long lit;
        if (!parse_ll(lit_tok, &lit) || lit == 0 || lit > declared_n ||
            lit < -declared_n) {
          throw ParseError(lineno, "literal '" + lit_tok + "' out of range");
        }
        weights.emplace_back(static_cast<Lit>(lit), parse_weight(w_tok, lineno));
        ++weight_lines;
      }
      continue;
    }

    if (tok == "p") {
      if (have_header) throw ParseError(lineno, "duplicate 'p cnf' header");
      std::string fmt, n_tok, m_tok;
      if (!(ls >> fmt >> n_tok >> m_tok) || fmt != "cnf" ||
          !parse_ll(n_tok, &declared_n) || !parse_ll(m_tok, &declared_m) ||
          declared_n < 0 || declared_m < 0) {
        throw ParseError(lineno, "header must read 'p cnf <vars> <clauses>'");
      }
      reject_extra(ls, lineno, "header");
      if (declared_n > 1000000) {
        throw ParseError(lineno, "variable count too large");
      }
      have_header = true;
      continue;
    }

    if (!have_header) {
      throw ParseError(lineno, "clause data before 'p cnf' header");
    }
    do {
      long long lit;
      if (!parse_ll(tok, &lit)) {
        throw ParseError(lineno, "expected a literal, got '" + tok + "'");
      }
      if (lit == 0) {
        clauses.push_back(std::move(open_clause));
        open_clause.clear();
      } else if (lit > declared_n || lit < -declared_n) {
        throw ParseError(lineno, "literal '" + tok + "' out of range");
      } else {
        open_clause.push_back(static_cast<Lit>(lit));
      }
    } while (ls >> tok);
  }

  if (!have_header) throw ParseError(lineno + 1, "missing 'p cnf' header");
  if (!open_clause.empty()) {
    throw ParseError(lineno, "clause still open at end of input");
  }
  if (static_cast<long long>(clauses.size()) != declared_m) {
    throw ParseError(lineno, "header declares " + std::to_string(declared_m) +
                                 " clauses but the file has " +
                                 std::to_string(clauses.size()));
  }

  ParsedInput out;
  out.declared_vars = static_cast<int>(declared_n);
  out.declared_clauses = static_cast<int>(declared_m);
  out.weight_lines = weight_lines;
  std::vector<Var> all_vars(static_cast<size_t>(declared_n));
  for (long long v = 1; v <= declared_n; ++v) all_vars[v - 1] = static_cast<Var>(v);
  out.instance.formula = make_formula(clauses, all_vars);
  for (auto& [lit, w] : weights) out.instance.weights.set(lit, std::move(w));
  return out;
}

std::string emit_dimacs(const Instance& inst) {
  if (inst.scale != 1) {
    throw ContractViolation("emit_dimacs: scale factor is not representable");
  }
  std::ostringstream out;
  int n = inst.formula.vars.empty() ? 0 : *inst.formula.vars.rbegin();
  out << "p cnf " << n << ' ' << inst.formula.clause_count() << '\n';
  for (const auto& [lit, w] : inst.weights.entries()) {
    if (w == 0) {
      throw ContractViolation("emit_dimacs: zero weight is not representable");
    }
    out << "c p weight " << lit << ' ' << w << " 0\n";
  }
  for (const Clause& c : inst.formula.clauses) {
    for (Lit l : c.lits) out << l << ' ';
    out << "0\n";
  }
  return out.str();
}

std::string generate_random(const GenSpec& spec) {
  if (spec.width != 2 && spec.width != 3) {
    throw ConfigError("clause width must be 2 or 3");
  }
  if (spec.vars < spec.width) {
    throw ConfigError("need at least " + std::to_string(spec.width) +
                      " variables for width-" + std::to_string(spec.width) +
                      " clauses");
  }
  if (spec.clauses < 0) throw ConfigError("clause count must be non-negative");
  if (spec.max_weight < 1) throw ConfigError("max weight must be at least 1");

  // Plain modulo keeps the byte stream identical across standard libraries;
  // uniform_int_distribution is not pinned down by the standard.
  std::mt19937_64 rng(spec.seed);
  auto below = [&rng](long long bound) {
    return static_cast<long long>(rng() % static_cast<std::uint64_t>(bound));
  };

  std::ostringstream out;
  out << "p cnf " << spec.vars << ' ' << spec.clauses << '\n';
  if (spec.max_weight > 1) {
    for (int v = 1; v <= spec.vars; ++v) {
      out << "c p weight " << v << ' ' << 1 + below(spec.max_weight) << " 0\n";
      out << "c p weight " << -v << ' ' << 1 + below(spec.max_weight) << " 0\n";
    }
  }
  std::vector<int> picked;
  for (int i = 0; i < spec.clauses; ++i) {
    picked.clear();
    while (static_cast<int>(picked.size()) < spec.width) {
      int v = 1 + static_cast<int>(below(spec.vars));
      bool seen = false;
      for (int u : picked) seen = seen || u == v;
      if (!seen) picked.push_back(v);
    }
    for (int v : picked) out << (below(2) ? v : -v) << ' ';
    out << "0\n";
  }
  return out.str();
}

}  // namespace wmc
