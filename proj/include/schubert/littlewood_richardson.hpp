#pragma once

#include <map>
#include <vector>

#include "schubert/bigint.hpp"
#include "schubert/tableaux.hpp"

// Littlewood-Richardson coefficients by direct lattice-word enumeration,
// the decomposition of a skew shape into straight shapes, and dimensions
// and characters of the corresponding GL_n modules with bounded entries.

namespace schubert {

// Content vector: component i counts the boxes holding value i+1.
using WeightVector = std::vector<int>;

// All partitions of n; parts capped by max_part and row count by max_rows
// when those are nonnegative. Decreasing lexicographic order.
std::vector<Partition> partitions_of(int n, int max_part = -1, int max_rows = -1);

// Multiplicity of nu in the straight-shape decomposition of lambda/mu,
// counted by semistandard fillings of lambda/mu with content nu whose
// reverse row-reading word is a lattice word. Degenerate inputs (mu not
// contained in lambda, or sizes off) give 0.
long long lr_coefficient(const Partition& lambda, const Partition& mu,
                         const Partition& nu);

// { nu -> lr_coefficient(lambda, mu, nu) }, nonzero entries only. The empty
// shape decomposes as the empty partition with multiplicity 1.
std::map<Partition, long long> skew_weyl_decomposition(const SkewShape& sh);

// Number of semistandard fillings with entries at most n, via the binomial
// determinant; cross-checked against weyl_dimension_by_enumeration in tests.
BigInt weyl_dimension(const SkewShape& sh, int n);

// Same count by explicit enumeration; the reference implementation.
BigInt weyl_dimension_by_enumeration(const SkewShape& sh, int n);

// Multiset of content vectors over all fillings with entries at most n:
// the skew Schur polynomial in n variables, as exponent data.
std::map<WeightVector, long long> weyl_character(const SkewShape& sh, int n);

}  // namespace schubert
