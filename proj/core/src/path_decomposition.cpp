#include "wmc/path_decomposition.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <sstream>

#include "wmc/errors.hpp"

namespace wmc {

int PathDecomposition::width() const {
  int w = -1;
  for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
  return w;
}

PdCheck validate(const PathDecomposition& pd, const Graph& g) {
  std::set<int> covered;
  for (const auto& bag : pd.bags) {
    for (int v : bag) {
      if (!g.has_vertex(v)) {
        return {false, 1, "bag vertex " + std::to_string(v) + " not in graph"};
      }
      covered.insert(v);
    }
  }
  for (int v : g.vertices) {
    if (!covered.count(v)) {
      return {false, 1, "vertex " + std::to_string(v) + " in no bag"};
    }
  }

  for (const auto& [u, ns] : g.adj) {
    for (int v : ns) {
      if (u > v) continue;
      bool inside = false;
      for (const auto& bag : pd.bags) {
        if (std::binary_search(bag.begin(), bag.end(), u) &&
            std::binary_search(bag.begin(), bag.end(), v)) {
          inside = true;
          break;
        }
      }
      if (!inside) {
        return {false, 2,
                "edge {" + std::to_string(u) + "," + std::to_string(v) +
                    "} in no bag"};
      }
    }
  }

  std::map<int, std::pair<int, int>> span;  // vertex -> [first, last] bag
  for (int i = 0; i < static_cast<int>(pd.bags.size()); ++i) {
    for (int v : pd.bags[i]) {
      auto it = span.find(v);
      if (it == span.end()) {
        span[v] = {i, i};
      } else {
        it->second.second = i;
      }
    }
  }
  for (const auto& [v, range] : span) {
    for (int i = range.first; i <= range.second; ++i) {
      if (!std::binary_search(pd.bags[i].begin(), pd.bags[i].end(), v)) {
        return {false, 3,
                "vertex " + std::to_string(v) + " absent from bag " +
                    std::to_string(i) + " inside its run"};
      }
    }
  }
  return {};
}

PathDecomposition from_layout(const Graph& g, const std::vector<int>& order) {
  std::vector<int> sorted_order = order;
  std::sort(sorted_order.begin(), sorted_order.end());
  std::vector<int> verts(g.vertices.begin(), g.vertices.end());
  if (sorted_order != verts) {
    throw ContractViolation("from_layout: order is not a vertex permutation");
  }

  std::map<int, int> pos;
  for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
  // Highest position among a vertex's neighbors; the vertex stays live until
  // that bag.
  std::map<int, int> last_needed;
  for (int v : g.vertices) {
    int last = pos[v];
    for (int u : g.neighbors(v)) last = std::max(last, pos[u]);
    last_needed[v] = last;
  }

  PathDecomposition pd;
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    std::vector<int> bag{order[i]};
    for (int j = 0; j < i; ++j) {
      if (last_needed[order[j]] >= i) bag.push_back(order[j]);
    }
    std::sort(bag.begin(), bag.end());
    pd.bags.push_back(std::move(bag));
  }
  return pd;
}

namespace {

int layout_cost(const Graph& g, const std::vector<int>& order) {
  return from_layout(g, order).width();
}

std::vector<int> bfs_layout(const Graph& g, int root,
                            bool sort_by_degree) {
  std::vector<int> order;
  std::set<int> seen;
  auto run = [&](int start) {
    std::vector<int> queue{start};
    seen.insert(start);
    size_t head = 0;
    while (head < queue.size()) {
      int v = queue[head++];
      order.push_back(v);
      std::vector<int> next(g.neighbors(v).begin(), g.neighbors(v).end());
      if (sort_by_degree) {
        std::stable_sort(next.begin(), next.end(), [&](int a, int b) {
          return g.degree(a) < g.degree(b);
        });
      }
      for (int u : next) {
        if (seen.insert(u).second) queue.push_back(u);
      }
    }
  };
  if (g.has_vertex(root)) run(root);
  for (int v : g.vertices) {
    if (!seen.count(v)) run(v);
  }
  return order;
}

// Greedy vertex separation: repeatedly append the vertex whose placement
// leaves the smallest boundary (placed vertices with unplaced neighbors).
std::vector<int> greedy_layout(const Graph& g) {
  std::vector<int> order;
  std::set<int> placed;
  while (order.size() < g.vertices.size()) {
    int best = 0;
    int best_boundary = -1;
    for (int v : g.vertices) {
      if (placed.count(v)) continue;
      int boundary = 0;
      for (int u : g.vertices) {
        if (u != v && !placed.count(u)) continue;
        bool open = false;
        for (int nb : g.neighbors(u)) {
          if (nb != v && !placed.count(nb)) {
            open = true;
            break;
          }
        }
        if (open) ++boundary;
      }
      if (best_boundary < 0 || boundary < best_boundary) {
        best_boundary = boundary;
        best = v;
      }
    }
    placed.insert(best);
    order.push_back(best);
  }
  return order;
}

// Exact minimum-width layout by subset DP; only called for small graphs.
std::vector<int> exact_layout(const Graph& g) {
  std::vector<int> verts(g.vertices.begin(), g.vertices.end());
  const int n = static_cast<int>(verts.size());
  std::vector<std::vector<int>> nb_bits(n);
  for (int i = 0; i < n; ++i) {
    for (int u : g.neighbors(verts[i])) {
      nb_bits[i].push_back(
          static_cast<int>(std::lower_bound(verts.begin(), verts.end(), u) -
                           verts.begin()));
    }
  }
  auto boundary = [&](uint32_t set) {
    int b = 0;
    for (int i = 0; i < n; ++i) {
      if (!((set >> i) & 1u)) continue;
      for (int j : nb_bits[i]) {
        if (!((set >> j) & 1u)) {
          ++b;
          break;
        }
      }
    }
    return b;
  };

  const uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1u);
  std::vector<int> cost(full + 1, 0);
  for (uint32_t s = 1; s <= full; ++s) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (!((s >> v) & 1u)) continue;
      uint32_t prev = s & ~(1u << v);
      int c = std::max(cost[prev], 1 + boundary(prev));
      if (best < 0 || c < best) best = c;
    }
    cost[s] = best;
  }

  std::vector<int> rev;
  uint32_t s = full;
  while (s) {
    for (int v = 0; v < n; ++v) {
      if (!((s >> v) & 1u)) continue;
      uint32_t prev = s & ~(1u << v);
      if (std::max(cost[prev], 1 + boundary(prev)) == cost[s]) {
        rev.push_back(verts[v]);
        s = prev;
        break;
      }
    }
  }
  return {rev.rbegin(), rev.rend()};
}

}  // namespace

PathDecomposition heuristic_decompose(const Graph& g) {
  if (g.vertex_count() == 0) return {};

  std::vector<std::vector<int>> candidates;
  if (g.vertex_count() <= 13) candidates.push_back(exact_layout(g));
  candidates.emplace_back(g.vertices.begin(), g.vertices.end());

  int lowest = *g.vertices.begin();
  int max_deg_v = lowest, min_deg_v = lowest;
  for (int v : g.vertices) {
    if (g.degree(v) > g.degree(max_deg_v)) max_deg_v = v;
    if (g.degree(v) < g.degree(min_deg_v)) min_deg_v = v;
  }
  candidates.push_back(bfs_layout(g, lowest, false));
  candidates.push_back(bfs_layout(g, max_deg_v, false));
  candidates.push_back(bfs_layout(g, min_deg_v, true));
  auto rcm = bfs_layout(g, min_deg_v, true);
  std::reverse(rcm.begin(), rcm.end());
  candidates.push_back(std::move(rcm));
  candidates.push_back(greedy_layout(g));

  const std::vector<int>* best = nullptr;
  int best_width = 0;
  for (const auto& cand : candidates) {
    int w = layout_cost(g, cand);
    if (!best || w < best_width || (w == best_width && cand < *best)) {
      best = &cand;
      best_width = w;
    }
  }
  return from_layout(g, *best);
}

std::vector<NiceStep> to_nice(const PathDecomposition& pd) {
  // Contiguity is required; a vertex that returns after leaving would be
  // introduced twice.
  std::map<int, std::pair<int, int>> span;
  for (int i = 0; i < static_cast<int>(pd.bags.size()); ++i) {
    for (int v : pd.bags[i]) {
      auto it = span.find(v);
      if (it == span.end()) {
        span[v] = {i, i};
      } else {
        it->second.second = i;
      }
    }
  }
  for (const auto& [v, range] : span) {
    for (int i = range.first; i <= range.second; ++i) {
      if (!std::binary_search(pd.bags[i].begin(), pd.bags[i].end(), v)) {
        throw ContractViolation("to_nice: vertex " + std::to_string(v) +
                                " occupies a non-contiguous bag run");
      }
    }
  }

  std::vector<NiceStep> steps;
  std::vector<int> prev;
  for (const auto& bag : pd.bags) {
    for (int v : prev) {
      if (!std::binary_search(bag.begin(), bag.end(), v)) {
        steps.push_back({NiceStep::kForget, v});
      }
    }
    for (int v : bag) {
      if (!std::binary_search(prev.begin(), prev.end(), v)) {
        steps.push_back({NiceStep::kIntroduce, v});
      }
    }
    prev = bag;
  }
  for (int v : prev) steps.push_back({NiceStep::kForget, v});
  return steps;
}

std::string to_text(const PathDecomposition& pd) {
  std::ostringstream os;
  for (const auto& bag : pd.bags) {
    for (size_t i = 0; i < bag.size(); ++i) {
      if (i) os << ' ';
      os << bag[i];
    }
    os << '\n';
  }
  return os.str();
}

PathDecomposition parse_path_decomposition(std::istream& in) {
  PathDecomposition pd;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c" || first[0] == '#') continue;
    std::vector<int> bag;
    ls.clear();
    ls.str(line);
    int v;
    while (ls >> v) {
      if (v <= 0) throw ParseError(line_no, "bag ids are positive integers");
      bag.push_back(v);
    }
    if (!ls.eof()) throw ParseError(line_no, "bag line holds non-integer text");
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    pd.bags.push_back(std::move(bag));
  }
  return pd;
}

}  // namespace wmc
