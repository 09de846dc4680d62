#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "wmc/branching.hpp"
#include "wmc/errors.hpp"

using namespace wmc;

namespace {

// Residual of the defining equation; the factor should zero it out.
double residual(const BranchingVector& v, double x) {
  double s = 1.0;
  for (double a : v) s -= std::pow(x, -a);
  return s;
}

}  // namespace

TEST_CASE("closed-form factors") {
  // (1,1): 1 - 2/x = 0 at x = 2.
  CHECK(branching_factor({1, 1}) == doctest::Approx(2.0).epsilon(1e-9));
  // (2,2): x^2 = 2.
  CHECK(branching_factor({2, 2}) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
  // (8,8): x^8 = 2.
  CHECK(branching_factor({8, 8}) ==
        doctest::Approx(std::pow(2.0, 1.0 / 8.0)).epsilon(1e-9));
  // (1,2): x^2 = x + 1, the golden ratio.
  CHECK(branching_factor({1, 2}) ==
        doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-9));
}

TEST_CASE("factors used by the 2-CNF analysis") {
  double t = branching_factor({5, 11});
  CHECK(t > 1.0955);
  CHECK(t < 1.0956);
  // The worst 2-CNF step stays under the advertised 1.1058 base.
  CHECK(branching_factor({4, 11}) < 1.1058);
}

TEST_CASE("factors used by the 3-CNF analysis") {
  const double a = 0.6309297;
  CHECK(branching_factor({3, 3 - 3 * a}) == doctest::Approx(1.4423).epsilon(5e-4));
  CHECK(branching_factor({2 + a, 2 - a}) ==
        doctest::Approx(1.4324).epsilon(5e-4));
  CHECK(branching_factor({1 + 2 * a, 1 + a}) ==
        doctest::Approx(1.4325).epsilon(5e-4));
  CHECK(branching_factor({3 * a, 3 * a}) ==
        doctest::Approx(1.4423).epsilon(5e-4));
}

TEST_CASE("the returned root actually solves the equation") {
  std::vector<BranchingVector> cases = {
      {1, 1},          {1, 5},        {2, 3},       {0.5, 0.5},
      {4, 11},         {5, 11},       {1, 1, 1},    {2, 3, 4, 5},
      {0.25, 9},       {7, 7, 7, 7},  {1.5, 2.5},   {10, 0.1},
  };
  for (const auto& v : cases) {
    double x = branching_factor(v);
    CHECK(x > 1.0);
    CHECK(std::abs(residual(v, x)) <= 1e-9);
  }
}

TEST_CASE("longer or shallower branchings grow the factor") {
  // Adding a branch raises the root; decreasing more per branch lowers it.
  CHECK(branching_factor({1, 1, 1}) > branching_factor({1, 1}));
  CHECK(branching_factor({3, 3}) < branching_factor({2, 2}));
  CHECK(branching_factor({2, 7}) < branching_factor({2, 3}));
}

TEST_CASE("degenerate vectors are rejected") {
  CHECK_THROWS_AS(branching_factor({}), ContractViolation);
  CHECK_THROWS_AS(branching_factor({3.0}), ContractViolation);
  CHECK_THROWS_AS(branching_factor({1.0, 0.0}), ContractViolation);
  CHECK_THROWS_AS(branching_factor({1.0, -2.0}), ContractViolation);
}
