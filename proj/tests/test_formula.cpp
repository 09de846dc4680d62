#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "wmc/errors.hpp"
#include "wmc/formula.hpp"

using namespace wmc;

TEST_CASE("literal helpers") {
  CHECK(var_of(7) == 7);
  CHECK(var_of(-7) == 7);
  CHECK(is_positive(3));
  CHECK(!is_positive(-3));
  CHECK(-(-5) == 5);  // negation is its own inverse
  // Ordering groups literals by variable, negative phase first.
  CHECK(lit_less(-2, 2));
  CHECK(lit_less(2, -3));
  CHECK(!lit_less(2, 2));
}

TEST_CASE("clauses normalize to sorted literal lists") {
  Clause c({3, -1, 2, 3});
  CHECK(c.lits == std::vector<Lit>{-1, 2, 3, 3});
  CHECK(c.size() == 4);
  CHECK(c.contains(3));
  CHECK(!c.contains(-3));
  CHECK(c.contains_var(1));
  CHECK(c.has_duplicate_lit());
  CHECK(!c.is_tautology());
  CHECK(Clause({4, -4, 1}).is_tautology());
  CHECK(!Clause({1, 2}).has_duplicate_lit());
  CHECK_THROWS_AS(Clause({1, 0}), ContractViolation);
}

TEST_CASE("clause subset relation") {
  CHECK(Clause({1, 2}).subset_of(Clause({1, 2, 3})));
  CHECK(Clause(std::vector<Lit>{}).subset_of(Clause({1})));
  CHECK(!Clause({1, 2}).subset_of(Clause({1, -2, 3})));
  CHECK(Clause({1, 1}).subset_of(Clause({1, 1, 2})));
  CHECK(!Clause({1, 1}).subset_of(Clause({1, 2})));  // multiset containment
}

TEST_CASE("make_formula collects variables and counts") {
  Formula f = make_formula({{1, 2}, {-1, 3}}, {5});
  CHECK(f.clause_count() == 2);
  CHECK(f.var_count() == 4);  // 1,2,3 used plus isolated 5
  CHECK(f.vars.count(5) == 1);
  CHECK(f.literal_count() == 4);
  CHECK(f.max_clause_len() == 2);
  CHECK(!f.has_empty_clause());
  CHECK(!f.empty());
  CHECK(Formula{}.empty());
  CHECK(make_formula({{}}).has_empty_clause());
}

TEST_CASE("assign_literal drops satisfied clauses and strips the rest") {
  Formula f = make_formula({{1, 2}, {-1, 3}});

  Formula t = assign_literal(f, 1);
  CHECK(t.clauses == std::vector<Clause>{Clause({3})});
  CHECK(t.vars == std::set<Var>{2, 3});  // 2 stays as a 0-degree variable

  Formula e = assign_literal(f, -1);
  CHECK(e.clauses == std::vector<Clause>{Clause({2})});
  CHECK(e.vars == std::set<Var>{2, 3});

  Formula contradiction = assign_literal(make_formula({{1}}), -1);
  CHECK(contradiction.has_empty_clause());
  CHECK(contradiction.clause_count() == 1);

  CHECK_THROWS_AS(assign_literal(f, 9), ContractViolation);
}

TEST_CASE("assign_literal shrinks monotonically") {
  testutil::Rng rng(31);
  for (int round = 0; round < 50; ++round) {
    Formula f = testutil::random_formula(rng, 6, 8, 3, true);
    Var x = 1 + rng.below(6);
    if (!f.vars.count(x)) continue;
    Lit l = rng.flip() ? x : -x;
    Formula g = assign_literal(f, l);
    CHECK(g.clause_count() <= f.clause_count());
    int containing = 0;
    for (const Clause& c : f.clauses) containing += c.contains(l) ? 1 : 0;
    CHECK(f.clause_count() - g.clause_count() == containing);
    CHECK(g.vars.count(var_of(l)) == 0);
  }
}

TEST_CASE("degree_profile counts literal occurrences") {
  Formula f = make_formula({{1, 2}, {-1, 3}, {2, 3}});
  DegreeProfile p = degree_profile(f);
  CHECK(p.degree == std::map<Var, int>{{1, 2}, {2, 2}, {3, 2}});
  CHECK(p.histogram == std::map<int, int>{{2, 3}});
  CHECK(p.max_degree == 2);
  CHECK(p.len2_clauses == 3);
  CHECK(p.len3_clauses == 0);

  Formula iso = make_formula({}, {4});
  DegreeProfile q = degree_profile(iso);
  CHECK(q.degree == std::map<Var, int>{{4, 0}});
  CHECK(q.max_degree == 0);

  // Identical 3-clauses are still two clauses; duplicates add to degree.
  Formula twice = make_formula({{1, 2, 3}, {1, 2, 3}});
  DegreeProfile r = degree_profile(twice);
  CHECK(r.degree.at(1) == 2);
  CHECK(r.len3_clauses == 2);

  Formula dup = make_formula({{1, 1, -2}});
  CHECK(degree_profile(dup).degree.at(1) == 2);
}

TEST_CASE("degree handshake: degrees sum to total clause length") {
  testutil::Rng rng(77);
  for (int round = 0; round < 60; ++round) {
    Formula f = testutil::random_formula(rng, 8, 10, 3, true);
    DegreeProfile p = degree_profile(f);
    long long deg_sum = 0;
    for (const auto& [v, d] : p.degree) deg_sum += d;
    CHECK(deg_sum == f.literal_count());
    long long hist_sum = 0;
    for (const auto& [d, cnt] : p.histogram) hist_sum += static_cast<long long>(d) * cnt;
    CHECK(hist_sum == deg_sum);
  }
}

TEST_CASE("neighborhood partitions co-occurring variables by degree") {
  Formula f = make_formula({{1, 2}, {1, 3}, {2, 3}});
  Neighborhood nb = neighborhood(f, 1);
  CHECK(nb.all == std::set<Var>{2, 3});
  CHECK(nb.count(2) == 2);  // both neighbors have degree 2
  CHECK(nb.count(3) == 0);

  Formula g = make_formula({{1, 2, 3}});
  Neighborhood ng = neighborhood(g, 1);
  CHECK(ng.all == std::set<Var>{2, 3});
  CHECK(ng.count(1) == 2);

  Formula iso = make_formula({}, {4});
  CHECK(neighborhood(iso, 4).all.empty());

  CHECK_THROWS_AS(neighborhood(f, 9), ContractViolation);
}

TEST_CASE("clause_measure weighs 2-clauses by alpha") {
  Formula f = make_formula({{1, 2, 3}, {2, 3, 4}, {1, 2}, {1, 3}, {1, 4}});
  CHECK(clause_measure(f, 0.6309297) == doctest::Approx(3.8927891).epsilon(1e-9));
  CHECK(clause_measure(Formula{}, 0.5) == 0.0);
  Formula g = make_formula({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  CHECK(clause_measure(g, 0.5) == doctest::Approx(2.5));
  CHECK_THROWS_AS(clause_measure(f, 0.0), ConfigError);
  CHECK_THROWS_AS(clause_measure(f, 1.0), ConfigError);
  CHECK_THROWS_AS(clause_measure(f, -2.0), ConfigError);
}

TEST_CASE("potential adds variables, clauses, and literals") {
  Formula f = make_formula({{1, 2}, {-1, 3}}, {5});
  CHECK(potential(f) == 4 + 2 + 4);
  CHECK(potential(Formula{}) == 0);
}

TEST_CASE("weights default to 1 and normalize stored units away") {
  WeightFn w;
  CHECK(w.get(3) == 1);
  CHECK(w.all_unit());
  w.set(3, 5);
  w.set(-3, 2);
  CHECK(w.get(3) == 5);
  CHECK(w.get(-3) == 2);
  CHECK(!w.all_unit());
  w.set(3, 1);
  w.set(-3, 1);
  CHECK(w.all_unit());  // storing 1 erases the entry
  w.set(4, 0);          // zero is legal internally (cut-variable updates)
  CHECK(w.get(4) == 0);
  CHECK_THROWS_AS(w.set(5, -1), ContractViolation);
  CHECK_THROWS_AS(w.set(0, 2), ContractViolation);
}
