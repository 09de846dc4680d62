#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "wmc/graph.hpp"

using namespace wmc;

namespace {

Graph path_graph(const std::vector<int>& vs) {
  Graph g;
  for (int v : vs) g.add_vertex(v);
  for (size_t i = 0; i + 1 < vs.size(); ++i) g.add_edge(vs[i], vs[i + 1]);
  return g;
}

// Independent articulation test: removing v must leave more components.
bool is_cut_vertex_slow(const Graph& g, int v) {
  Graph h;
  for (int u : g.vertices) {
    if (u != v) h.add_vertex(u);
  }
  for (const auto& [u, nbrs] : g.adj) {
    for (int w : nbrs) {
      if (u < w && u != v && w != v) h.add_edge(u, w);
    }
  }
  return components(h).size() > components(g).size();
}

Graph random_graph(testutil::Rng& rng, int n, int extra_edges) {
  Graph g;
  for (int v = 1; v <= n; ++v) g.add_vertex(v);
  for (int i = 0; i < extra_edges; ++i) {
    int u = 1 + rng.below(n), v = 1 + rng.below(n);
    if (u != v) g.add_edge(u, v);
  }
  return g;
}

}  // namespace

TEST_CASE("graph basics: no self loops, no parallel edges") {
  Graph g;
  g.add_edge(1, 2);
  g.add_edge(2, 1);
  g.add_edge(1, 1);
  CHECK(g.edge_count() == 1);
  CHECK(g.degree(1) == 1);
  CHECK(g.neighbors(1) == std::set<int>{2});
  CHECK(g.neighbors(99).empty());
  long long deg_sum = 0;
  for (int v : g.vertices) deg_sum += g.degree(v);
  CHECK(deg_sum == 2 * g.edge_count());
}

TEST_CASE("primal graph joins clause-mates") {
  CHECK(primal_graph(make_formula({{1, 2, 3}})).edge_count() == 3);

  Graph path = primal_graph(make_formula({{1, 2}, {2, 3}}));
  CHECK(path.edge_count() == 2);
  CHECK(path.neighbors(2) == std::set<int>{1, 3});
  CHECK(!path.neighbors(1).count(3));

  Graph lone = primal_graph(make_formula({}, {7}));
  CHECK(lone.vertices == std::set<int>{7});
  CHECK(lone.edge_count() == 0);

  // Polarity does not matter; duplicate pairs collapse.
  Graph g = primal_graph(make_formula({{1, -2}, {-1, 2}}));
  CHECK(g.edge_count() == 1);
}

TEST_CASE("every clause is a primal clique") {
  testutil::Rng rng(52);
  for (int round = 0; round < 30; ++round) {
    Formula f = testutil::random_formula(rng, 8, 8, 3, false);
    Graph g = primal_graph(f);
    for (const Clause& c : f.clauses) {
      for (Lit a : c.lits) {
        for (Lit b : c.lits) {
          if (var_of(a) != var_of(b)) {
            CHECK(g.neighbors(var_of(a)).count(var_of(b)));
          }
        }
      }
    }
  }
}

TEST_CASE("dual graph joins clauses sharing a variable") {
  Graph e = dual_graph(make_formula({{1, 2}, {-2, 3}}));
  CHECK(e.vertices == std::set<int>{1, 2});
  CHECK(e.edge_count() == 1);

  Graph iso = dual_graph(make_formula({{1}, {2}}));
  CHECK(iso.vertex_count() == 2);
  CHECK(iso.edge_count() == 0);

  Graph tri = dual_graph(make_formula({{1, 2}, {-1, 3}, {2, 3}}));
  CHECK(tri.edge_count() == 3);

  // A variable's clause set is a dual clique.
  testutil::Rng rng(53);
  for (int round = 0; round < 20; ++round) {
    Formula f = testutil::random_formula(rng, 6, 8, 3, false);
    Graph g = dual_graph(f);
    for (Var x : f.vars) {
      std::vector<int> holders;
      for (size_t i = 0; i < f.clauses.size(); ++i) {
        if (f.clauses[i].contains_var(x)) holders.push_back(static_cast<int>(i) + 1);
      }
      for (int a : holders) {
        for (int b : holders) {
          if (a != b) CHECK(g.neighbors(a).count(b));
        }
      }
    }
  }
}

TEST_CASE("components come out sorted") {
  Graph g = path_graph({1, 2, 3});
  g.add_vertex(9);
  g.add_edge(5, 6);
  auto comps = components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<int>{1, 2, 3});
  CHECK(comps[1] == std::vector<int>{5, 6});
  CHECK(comps[2] == std::vector<int>{9});
}

TEST_CASE("small_component wants a small part and a non-empty rest") {
  Graph g = path_graph({1, 2});
  for (int v = 10; v < 25; ++v) g.add_vertex(v);
  for (int v = 10; v < 24; ++v) g.add_edge(v, v + 1);
  auto found = small_component(g, 10);
  REQUIRE(found);
  CHECK(*found == std::vector<int>{1, 2});

  // Whole graph in one component: nothing to split off.
  CHECK(!small_component(path_graph({1, 2, 3, 4, 5}), 10));

  // Components of 12 and 11 are both over the limit.
  Graph big;
  for (int v = 1; v <= 12; ++v) big.add_vertex(v);
  for (int v = 1; v < 12; ++v) big.add_edge(v, v + 1);
  for (int v = 21; v <= 31; ++v) big.add_vertex(v);
  for (int v = 21; v < 31; ++v) big.add_edge(v, v + 1);
  CHECK(!small_component(big, 10));

  // Ties break to the smaller side, then the smaller id.
  Graph tie;
  tie.add_edge(5, 6);
  tie.add_edge(1, 2);
  tie.add_vertex(9);
  auto t = small_component(tie, 10);
  REQUIRE(t);
  CHECK(*t == std::vector<int>{9});
}

TEST_CASE("articulation points match the remove-and-count oracle") {
  testutil::Rng rng(54);
  for (int round = 0; round < 40; ++round) {
    int n = 3 + rng.below(8);
    Graph g = random_graph(rng, n, n + rng.below(8));
    std::vector<int> fast = articulation_points(g);
    for (int v : g.vertices) {
      bool slow = is_cut_vertex_slow(g, v);
      bool listed = std::find(fast.begin(), fast.end(), v) != fast.end();
      INFO("vertex ", v, " round ", round);
      CHECK(slow == listed);
    }
  }
}

TEST_CASE("cut splits: path, biconnected ring, star") {
  Graph g = path_graph({1, 2, 3, 4, 5});
  auto s = small_cut_split(g, 10);
  REQUIRE(s);
  CHECK(s->cut_vertex == 2);
  CHECK(s->side == std::vector<int>{1});

  Graph ring;
  for (int v = 1; v <= 6; ++v) ring.add_edge(v, v % 6 + 1);
  CHECK(articulation_points(ring).empty());
  CHECK(!small_cut_split(ring, 10));

  Graph star;
  for (int leaf = 2; leaf <= 13; ++leaf) star.add_edge(1, leaf);
  auto hub = small_cut_split(star, 10);
  REQUIRE(hub);
  CHECK(hub->cut_vertex == 1);
  CHECK(hub->side == std::vector<int>{2});  // smallest side, smallest id

  // Every candidate respects the size bound and leaves a remainder.
  for (const CutSplit& c : cut_split_candidates(star, 10)) {
    CHECK(static_cast<int>(c.side.size()) + 1 <= 10);
    CHECK(static_cast<int>(c.side.size()) + 1 < star.vertex_count());
  }
}

TEST_CASE("degree histogram agrees with adjacency") {
  testutil::Rng rng(55);
  for (int round = 0; round < 20; ++round) {
    Graph g = random_graph(rng, 7, 9);
    auto hist = graph_degree_histogram(g);
    int total = 0;
    long long weighted = 0;
    for (const auto& [d, cnt] : hist) {
      total += cnt;
      weighted += static_cast<long long>(d) * cnt;
    }
    CHECK(total == g.vertex_count());
    CHECK(weighted == 2 * g.edge_count());
  }
}

TEST_CASE("dot output lists isolated vertices and each edge once") {
  Graph g;
  g.add_edge(1, 2);
  g.add_vertex(5);
  std::string dot = to_dot(g, "primal");
  CHECK(dot.find("graph primal") != std::string::npos);
  CHECK(dot.find("1 -- 2;") != std::string::npos);
  CHECK(dot.find("2 -- 1;") == std::string::npos);
  CHECK(dot.find("5;") != std::string::npos);
}
