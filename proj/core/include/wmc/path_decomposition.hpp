#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wmc/graph.hpp"

namespace wmc {

// Ordered bag list. Valid against a graph when (1) bags cover exactly the
// vertex set, (2) every edge lies inside some bag, (3) each vertex occupies a
// contiguous run of bags.
struct PathDecomposition {
  std::vector<std::vector<int>> bags;  // each sorted ascending

  // max |bag| - 1; -1 for an empty bag list (valid only for the empty graph).
  int width() const;
};

struct PdCheck {
  bool ok = true;
  int condition = 0;  // 1 = vertex cover, 2 = edge cover, 3 = contiguity
  std::string detail;
};

PdCheck validate(const PathDecomposition& pd, const Graph& g);

// Bag i = {order[i]} + every earlier vertex that still has a neighbor at or
// after position i. The result always validates; width depends on the order.
// Throws ContractViolation unless order is a permutation of the vertices.
PathDecomposition from_layout(const Graph& g, const std::vector<int>& order);

// Best-effort small-width decomposition: tries several deterministic layouts
// (exact search on tiny graphs, BFS orders, degree-sorted BFS, greedy
// min-boundary growth) and keeps the lexicographically-least minimum-width
// one. No width guarantee beyond "valid".
PathDecomposition heuristic_decompose(const Graph& g);

struct NiceStep {
  enum Kind { kIntroduce, kForget } kind;
  int vertex;

  bool operator==(const NiceStep&) const = default;
};

// Introduce/forget walk equivalent to the decomposition: introduce the first
// bag, then per transition forget bag_i \ bag_{i+1} and introduce
// bag_{i+1} \ bag_i, then forget the last bag. Ascending ids within a batch.
// Throws ContractViolation when a vertex re-appears after being dropped.
std::vector<NiceStep> to_nice(const PathDecomposition& pd);

// One bag per line, ids whitespace-separated. Blank lines and lines starting
// with 'c' or '#' are skipped on parse.
std::string to_text(const PathDecomposition& pd);
PathDecomposition parse_path_decomposition(std::istream& in);

}  // namespace wmc
