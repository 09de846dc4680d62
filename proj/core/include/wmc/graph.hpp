#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wmc/formula.hpp"

namespace wmc {

// Small undirected graph over sparse int vertex ids. No self loops, no
// parallel edges. Sized for formulas on a desk, not for bulk graph work.
struct Graph {
  std::set<int> vertices;
  std::map<int, std::set<int>> adj;

  void add_vertex(int v) { vertices.insert(v); }
  void add_edge(int u, int v);
  bool has_vertex(int v) const { return vertices.count(v) != 0; }
  int degree(int v) const;
  int vertex_count() const { return static_cast<int>(vertices.size()); }
  long long edge_count() const;
  const std::set<int>& neighbors(int v) const;
};

// Vertices = f.vars (0-degree variables become isolated vertices); edges join
// variables sharing a clause.
Graph primal_graph(const Formula& f);

// Vertices = clause ids 1..m; edges join clauses sharing a variable. Empty
// clauses become isolated vertices.
Graph dual_graph(const Formula& f);

// Connected components, each sorted ascending, ordered by smallest member.
std::vector<std::vector<int>> components(const Graph& g);

// A component with <= limit vertices and a non-empty complement, or nothing.
// Ties: smallest size, then smallest member id.
std::optional<std::vector<int>> small_component(const Graph& g, int limit);

struct CutSplit {
  int cut_vertex = 0;
  std::vector<int> side;  // sorted, excludes cut_vertex
};

// All articulation vertices, ascending.
std::vector<int> articulation_points(const Graph& g);

// Candidate splits (x, K): x an articulation vertex, K a component of g - x
// with |K| + 1 <= limit and a non-empty remainder. Sorted by (|K|, x, min K).
std::vector<CutSplit> cut_split_candidates(const Graph& g, int limit);

// First candidate from cut_split_candidates, or nothing.
std::optional<CutSplit> small_cut_split(const Graph& g, int limit);

// Degree histogram: degree -> number of vertices.
std::map<int, int> graph_degree_histogram(const Graph& g);

// DOT text for debugging; vertices labeled by their id.
std::string to_dot(const Graph& g, const std::string& name);

}  // namespace wmc
