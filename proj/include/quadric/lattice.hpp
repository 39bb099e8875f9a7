#pragma once

#include <vector>

#include "quadric/arith.hpp"
#include "quadric/chern.hpp"

namespace quadric {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;  // row major

IntVector to_vector(const KClass& v);  // (r, a, b, chi)
KClass from_vector(const IntVector& x);

// Z-basis (as rows) of {x in Z^n : A x = 0} for an m x n matrix A.
IntMatrix integer_kernel(const IntMatrix& a);

// Nonzero diagonal entries d1 | d2 | ... of the Smith normal form.
std::vector<Integer> smith_invariants(IntMatrix a);

// Rows are linearly independent and span a saturated sublattice of Z^n.
bool is_saturated(const IntMatrix& rows);

}  // namespace quadric
