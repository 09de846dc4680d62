#include "wmc/branching.hpp"

#include <algorithm>
#include <cmath>

#include "wmc/errors.hpp"

namespace wmc {

double branching_factor(const BranchingVector& v) {
  if (v.size() < 2) {
    throw ContractViolation("branching_factor: need at least two entries");
  }
  for (double a : v) {
    if (!(a > 0.0)) {
      throw ContractViolation("branching_factor: entries must be positive");
    }
  }

  auto f = [&](double x) {
    double s = 0.0;
    for (double a : v) s += std::pow(x, -a);
    return 1.0 - s;
  };

  double amin = *std::min_element(v.begin(), v.end());
  double lo = 1.0 + 1e-12;                            // f(lo) < 0
  double hi = std::pow(double(v.size()), 1.0 / amin);  // f(hi) >= 0
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace wmc
