#pragma once

#include <gmpxx.h>

#include "wmc/formula.hpp"

namespace wmc {

// Reference weighted model count by exhaustive enumeration over the variables
// that occur in clauses; 0-degree variables contribute a (w(v) + w(-v)) factor
// instead of doubling the enumeration. Throws SizeError when n(f) > cap.
//
// Kept deliberately simple: this is the ground truth the rest of the code is
// tested against, and the small-subformula rewrite steps call it on <= 10
// variables.
mpz_class brute_wmc(const Formula& f, const WeightFn& w, int cap = 30);

}  // namespace wmc
