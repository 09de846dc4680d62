#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "support.hpp"
#include "wmc/errors.hpp"
#include "wmc/formula.hpp"
#include "wmc/io.hpp"
#include "wmc/oracle.hpp"

using namespace wmc;

namespace {

// Line number the parser complains about, or 0 when it accepts the text.
int rejected_line(const std::string& text) {
  try {
    parse_dimacs(text);
  } catch (const ParseError& e) {
    return e.line;
  }
  return 0;
}

}  // namespace

TEST_CASE("plain DIMACS parses") {
  ParsedInput in = parse_dimacs("p cnf 2 1\n1 2 0\n");
  CHECK(in.declared_vars == 2);
  CHECK(in.declared_clauses == 1);
  CHECK(in.weight_lines == 0);
  CHECK(in.instance.formula == make_formula({{1, 2}}));
  CHECK(in.instance.weights.all_unit());
  CHECK(in.instance.scale == 1);
}

TEST_CASE("weight lines attach to literals") {
  ParsedInput in = parse_dimacs("p cnf 1 1\nc p weight 1 3 0\n-1 0\n");
  CHECK(in.weight_lines == 1);
  CHECK(in.instance.weights.get(1) == 3);
  CHECK(in.instance.weights.get(-1) == 1);
  CHECK(in.instance.formula == make_formula({{-1}}));

  // Arbitrary-precision weights survive.
  in = parse_dimacs(
      "p cnf 1 1\nc p weight -1 123456789012345678901234567890 0\n1 0\n");
  CHECK(in.instance.weights.get(-1) == mpz_class("123456789012345678901234567890"));

  // The last line wins on repeats.
  in = parse_dimacs("p cnf 1 1\nc p weight 1 3 0\nc p weight 1 8 0\n1 0\n");
  CHECK(in.instance.weights.get(1) == 8);
  CHECK(in.weight_lines == 2);
}

TEST_CASE("clause tokens flow across lines") {
  ParsedInput in = parse_dimacs("p cnf 3 1\n1 2\n3 0\n");
  CHECK(in.instance.formula == make_formula({{1, 2, 3}}));

  in = parse_dimacs("p cnf 2 2\n1 0 2 0\n");
  CHECK(in.instance.formula == make_formula({{1}, {2}}));

  // CRLF, comments, and blank lines are all tolerated.
  in = parse_dimacs("c made by hand\r\np cnf 2 1\r\n\r\n1 -2 0\r\n");
  CHECK(in.instance.formula == make_formula({{1, -2}}));
}

TEST_CASE("declared but unused variables stay in the instance") {
  ParsedInput in = parse_dimacs("p cnf 4 1\n1 2 0\n");
  CHECK(in.instance.formula.vars == std::set<Var>{1, 2, 3, 4});
  CHECK(brute_wmc(in.instance.formula, in.instance.weights) == 12);
}

TEST_CASE("parse failures name the offending line") {
  CHECK(rejected_line("") == 1);                      // no header at all
  CHECK(rejected_line("c hi\nc ho\n") == 3);          // still no header
  CHECK(rejected_line("1 2 0\n") == 1);               // clause before header
  CHECK(rejected_line("c p weight 1 2 0\np cnf 1 0\n") == 1);
  CHECK(rejected_line("p cnf 2 1\np cnf 2 1\n1 2 0\n") == 2);
  CHECK(rejected_line("p cnf two 1\n1 0\n") == 1);    // malformed header
  CHECK(rejected_line("p cnf -2 1\n1 0\n") == 1);
  CHECK(rejected_line("p cnf 2000000 0\n") == 1);     // over the size cap
  CHECK(rejected_line("p cnf 2 1\n1 x 0\n") == 2);    // junk literal
  CHECK(rejected_line("p cnf 2 1\n1 3 0\n") == 2);    // literal out of range
  CHECK(rejected_line("p cnf 1 1\n2 0\n") == 2);
  CHECK(rejected_line("p cnf 2 1\n1 2\n") == 2);      // clause never closed
  CHECK(rejected_line("p cnf 2 2\n1 2 0\n") == 2);    // fewer clauses than declared
  CHECK(rejected_line("p cnf 2 1\n1 0\n2 0\n") == 3); // more clauses than declared
  CHECK(rejected_line("p cnf 1 1\nc p weight 1 0 0\n1 0\n") == 2);   // weight < 1
  CHECK(rejected_line("p cnf 1 1\nc p weight 1 -4 0\n1 0\n") == 2);
  CHECK(rejected_line("p cnf 1 1\nc p weight 2 3 0\n1 0\n") == 2);   // bad literal
  CHECK(rejected_line("p cnf 1 1\nc p weight 1 3\n1 0\n") == 2);     // no terminator
  CHECK(rejected_line("p cnf 1 1\nc p weight 1 3 0 9\n1 0\n") == 2); // trailing junk
  CHECK(rejected_line("p cnf 1 1\nc p weight 1 3.5 0\n1 0\n") == 2);
}

TEST_CASE("emit round-trips through parse") {
  testutil::Rng rng(7701);
  for (int round = 0; round < 30; ++round) {
    GenSpec spec;
    spec.vars = 3 + rng.below(10);
    spec.clauses = rng.below(15);
    spec.width = round % 2 == 0 ? 2 : 3;
    spec.max_weight = round % 3 == 0 ? 1 : 9;
    spec.seed = rng.below(1 << 30);
    ParsedInput in = parse_dimacs(generate_random(spec));

    ParsedInput again = parse_dimacs(emit_dimacs(in.instance));
    CHECK(again.instance.formula == in.instance.formula);
    CHECK(again.instance.weights == in.instance.weights);
  }

  // Weight-1 lines are dropped rather than echoed.
  ParsedInput in = parse_dimacs("p cnf 2 1\nc p weight 1 1 0\n1 2 0\n");
  std::string out = emit_dimacs(in.instance);
  CHECK(out.find("weight") == std::string::npos);
  CHECK(out == "p cnf 2 1\n1 2 0\n");
}

TEST_CASE("emit refuses what DIMACS cannot say") {
  Instance inst;
  inst.formula = make_formula({{1, 2}});
  inst.scale = 3;
  CHECK_THROWS_AS(emit_dimacs(inst), ContractViolation);

  inst.scale = 1;
  inst.weights.set(1, 0);  // zeroed weights only arise internally
  CHECK_THROWS_AS(emit_dimacs(inst), ContractViolation);
}

TEST_CASE("generated instances are deterministic and in range") {
  GenSpec spec;
  spec.vars = 12;
  spec.clauses = 20;
  spec.width = 3;
  spec.max_weight = 6;
  spec.seed = 42;
  std::string text = generate_random(spec);
  CHECK(text == generate_random(spec));

  GenSpec other = spec;
  other.seed = 43;
  CHECK(text != generate_random(other));

  ParsedInput in = parse_dimacs(text);
  CHECK(in.declared_vars == 12);
  CHECK(in.declared_clauses == 20);
  CHECK(in.instance.formula.clause_count() == 20);
  for (const Clause& c : in.instance.formula.clauses) {
    CHECK(c.size() == 3);
    CHECK_FALSE(c.has_duplicate_lit());
    CHECK_FALSE(c.is_tautology());
  }
  for (const auto& [lit, w] : in.instance.weights.entries()) {
    CHECK(w >= 1);
    CHECK(w <= 6);
  }

  // Width-2 generation, no weights.
  spec.width = 2;
  spec.max_weight = 1;
  in = parse_dimacs(generate_random(spec));
  CHECK(in.weight_lines == 0);
  CHECK(in.instance.formula.max_clause_len() == 2);
}

TEST_CASE("generator specs are validated") {
  GenSpec spec;
  spec.vars = 3;
  spec.clauses = 2;
  spec.width = 4;
  CHECK_THROWS_AS(generate_random(spec), ConfigError);
  spec.width = 1;
  CHECK_THROWS_AS(generate_random(spec), ConfigError);
  spec.width = 3;
  spec.vars = 2;
  CHECK_THROWS_AS(generate_random(spec), ConfigError);
  spec.vars = 3;
  spec.clauses = -1;
  CHECK_THROWS_AS(generate_random(spec), ConfigError);
  spec.clauses = 2;
  spec.max_weight = 0;
  CHECK_THROWS_AS(generate_random(spec), ConfigError);
}
