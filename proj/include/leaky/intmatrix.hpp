#pragma once

#include "leaky/rational.hpp"

#include <vector>

namespace leaky {

// Dense integer matrix with arbitrary-precision entries; just enough linear
// algebra for lattice indices.
using IntMatrix = std::vector<std::vector<BigInt>>;

// Exact determinant by Bareiss fraction-free elimination. Requires a square
// matrix.
BigInt determinant(IntMatrix m);

// gcd of the absolute values of all k x k minors; 0 if every minor vanishes.
BigInt gcd_of_minors(const IntMatrix& m, int k);

}  // namespace leaky
