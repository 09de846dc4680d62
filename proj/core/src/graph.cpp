#include "wmc/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "wmc/errors.hpp"

namespace wmc {

void Graph::add_edge(int u, int v) {
  if (u == v) return;
  vertices.insert(u);
  vertices.insert(v);
  adj[u].insert(v);
  adj[v].insert(u);
}

int Graph::degree(int v) const {
  auto it = adj.find(v);
  return it == adj.end() ? 0 : static_cast<int>(it->second.size());
}

long long Graph::edge_count() const {
  long long twice = 0;
  for (const auto& [v, ns] : adj) {
    (void)v;
    twice += static_cast<long long>(ns.size());
  }
  return twice / 2;
}

const std::set<int>& Graph::neighbors(int v) const {
  static const std::set<int> none;
  auto it = adj.find(v);
  return it == adj.end() ? none : it->second;
}

Graph primal_graph(const Formula& f) {
  Graph g;
  for (Var v : f.vars) g.add_vertex(v);
  for (const Clause& c : f.clauses) {
    std::vector<Var> vs;
    for (Lit l : c.lits) vs.push_back(var_of(l));
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (size_t i = 0; i < vs.size(); ++i) {
      for (size_t j = i + 1; j < vs.size(); ++j) g.add_edge(vs[i], vs[j]);
    }
  }
  return g;
}

Graph dual_graph(const Formula& f) {
  Graph g;
  for (int i = 1; i <= f.clause_count(); ++i) g.add_vertex(i);
  std::map<Var, std::vector<int>> occ;
  for (int i = 0; i < f.clause_count(); ++i) {
    for (Lit l : f.clauses[i].lits) occ[var_of(l)].push_back(i + 1);
  }
  for (const auto& [v, ids] : occ) {
    (void)v;
    for (size_t i = 0; i < ids.size(); ++i) {
      for (size_t j = i + 1; j < ids.size(); ++j) g.add_edge(ids[i], ids[j]);
    }
  }
  return g;
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::set<int> seen;
  for (int start : g.vertices) {
    if (seen.count(start)) continue;
    std::vector<int> comp, queue{start};
    seen.insert(start);
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      comp.push_back(v);
      for (int u : g.neighbors(v)) {
        if (seen.insert(u).second) queue.push_back(u);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::optional<std::vector<int>> small_component(const Graph& g, int limit) {
  std::optional<std::vector<int>> best;
  for (auto& comp : components(g)) {
    if (static_cast<int>(comp.size()) > limit) continue;
    if (static_cast<int>(comp.size()) == g.vertex_count()) continue;
    if (!best || comp.size() < best->size() ||
        (comp.size() == best->size() && comp.front() < best->front())) {
      best = std::move(comp);
    }
  }
  return best;
}

std::vector<int> articulation_points(const Graph& g) {
  std::map<int, int> disc, low;
  std::set<int> cuts;
  int timer = 0;

  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = ++timer;
    int children = 0;
    for (int u : g.neighbors(v)) {
      if (u == parent) continue;
      if (disc.count(u)) {
        low[v] = std::min(low[v], disc[u]);
      } else {
        ++children;
        dfs(u, v);
        low[v] = std::min(low[v], low[u]);
        if (parent != 0 && low[u] >= disc[v]) cuts.insert(v);
      }
    }
    if (parent == 0 && children > 1) cuts.insert(v);
  };

  for (int v : g.vertices) {
    if (!disc.count(v)) dfs(v, 0);
  }
  return {cuts.begin(), cuts.end()};
}

std::vector<CutSplit> cut_split_candidates(const Graph& g, int limit) {
  std::vector<CutSplit> out;
  for (int x : articulation_points(g)) {
    Graph rest;
    for (int v : g.vertices) {
      if (v != x) rest.add_vertex(v);
    }
    for (const auto& [u, ns] : g.adj) {
      if (u == x) continue;
      for (int v : ns) {
        if (v != x) rest.add_edge(u, v);
      }
    }
    for (auto& comp : components(rest)) {
      if (static_cast<int>(comp.size()) + 1 > limit) continue;
      // Remainder = the other components of g - x; non-empty by x being a cut
      // vertex only within its own component, so check explicitly.
      if (static_cast<int>(comp.size()) + 1 >= g.vertex_count()) continue;
      out.push_back({x, std::move(comp)});
    }
  }
  std::sort(out.begin(), out.end(), [](const CutSplit& a, const CutSplit& b) {
    if (a.side.size() != b.side.size()) return a.side.size() < b.side.size();
    if (a.cut_vertex != b.cut_vertex) return a.cut_vertex < b.cut_vertex;
    return a.side < b.side;
  });
  return out;
}

std::optional<CutSplit> small_cut_split(const Graph& g, int limit) {
  auto all = cut_split_candidates(g, limit);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::map<int, int> graph_degree_histogram(const Graph& g) {
  std::map<int, int> h;
  for (int v : g.vertices) ++h[g.degree(v)];
  return h;
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v : g.vertices) {
    if (g.degree(v) == 0) os << "  " << v << ";\n";
  }
  for (const auto& [u, ns] : g.adj) {
    for (int v : ns) {
      if (u < v) os << "  " << u << " -- " << v << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace wmc
