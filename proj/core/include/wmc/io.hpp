#pragma once

#include <cstdint>
#include <string>

#include "wmc/formula.hpp"

namespace wmc {

// A parsed DIMACS file plus what the header and comments claimed, so callers
// can report discrepancies and tooling can echo the original shape.
struct ParsedInput {
  Instance instance;
  int declared_vars = 0;
  int declared_clauses = 0;
  int weight_lines = 0;
};

// DIMACS CNF with a literal-weight extension:
//
//   c p weight <lit> <w> 0
//
// where w is a positive integer (arbitrary precision). Unmentioned literals
// weigh 1. The `p cnf <vars> <clauses>` header must precede clauses and
// weight lines. Clause tokens may span lines; each clause ends at a 0.
// Variables are numbered 1..vars; ids the clauses never use still count as
// 0-degree variables of the instance. Throws ParseError (with the offending
// line number) on a missing header, out-of-range literals, weights below 1,
// a clause open at end of input, or a clause-count mismatch.
ParsedInput parse_dimacs(const std::string& text);

// Inverse of parse_dimacs for top-level instances (scale must be 1; a scale
// factor has no DIMACS representation). Weight lines for weight-1 literals
// are omitted, so parse(emit(parse(t))) reproduces parse(t) exactly.
// Internally-zeroed weights would not re-parse; emit refuses them.
std::string emit_dimacs(const Instance& inst);

// Recipe for a random instance. Clauses use `width` distinct variables each;
// max_weight = 1 means no weight lines at all.
struct GenSpec {
  int vars = 0;
  int clauses = 0;
  int width = 3;
  long long max_weight = 1;
  std::uint64_t seed = 0;
};

// Deterministic DIMACS text for a recipe: one fixed seed, one byte sequence,
// independent of platform. Throws ConfigError when width is not 2 or 3,
// width exceeds vars, clauses is negative, or max_weight < 1.
std::string generate_random(const GenSpec& spec);

}  // namespace wmc
