#pragma once

#include <vector>

namespace wmc {

// Decrease amounts (a1, ..., al) of one branching step; at least two entries,
// all positive.
using BranchingVector = std::vector<double>;

// The unique root > 1 of 1 - sum_i x^(-a_i), found by bisection on
// [1 + eps, l^(1/min a_i)] to well under 1e-9 absolute error. A search tree
// whose steps all decrease the measure by at least this vector has at most
// root^measure leaves.
double branching_factor(const BranchingVector& v);

}  // namespace wmc
