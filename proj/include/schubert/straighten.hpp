#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "schubert/grassmann.hpp"

// Straightening of products of Pluecker coordinates: the signed two-row
// shuffle, rewriting arbitrary monomials in the standard basis, restriction
// to the subvariety of w, the raising/lowering operator action on monomials,
// and an exact numeric oracle that evaluates monomials as products of minors
// on integer matrices.

namespace schubert {

// Product of coordinates, one word per factor, in left-to-right order.
using Monomial = std::vector<Word>;

// Standard expansion: every key has weakly decreasing factors, coefficients
// are nonzero integers.
using Expansion = std::map<Monomial, long long>;

bool is_standard(const Monomial& m);

struct ShuffleTerm {
    int sign;  // +1 or -1
    Word alpha;
    Word beta;
};

// Quadratic relation for a violating pair (tau not >= phi): p_tau p_phi =
// sum of sign * p_alpha p_beta with alpha > tau and beta < phi. Terms whose
// words would repeat an entry are dropped (zero coordinate).
std::vector<ShuffleTerm> shuffle(const Word& tau, const Word& phi);

// Rewrites m in the standard basis by repeatedly shuffling the leftmost
// adjacent violating pair. Standard input returns {m: +1}.
Expansion straighten(const Monomial& m);

// Drops terms whose leading (largest) factor is not <= w.
Expansion restrict_to_schubert(const Expansion& e, const Word& w);

// Leibniz action of the raising operator for index i (replace i by i+1 in one
// factor) or the lowering operator (replace i+1 by i); factors that do not
// admit the substitution contribute nothing. Every emitted term has
// coefficient +1; results need not be standard.
std::vector<Monomial> chevalley_action(const Monomial& m, int i, bool raise);

// Dense N x d integer matrix; at(i, j) = row i, column j, both 0-based.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;  // row-major

    long long& at(int i, int j) { return a[(size_t)i * cols + j]; }
    long long at(int i, int j) const { return a[(size_t)i * cols + j]; }
};

// Exact determinant of the d x d submatrix with 1-based row set tau.
BigInt evaluate_plucker(const Word& tau, const IntMatrix& M);

// Deterministic pseudo-random point of the dense open cell of the subvariety
// of w: an upper-unitriangular integer matrix applied to the coordinate
// columns of w. Every coordinate indexed by tau not <= w vanishes on it.
IntMatrix sample_point_on_schubert(const SchubertContext& ctx, std::uint64_t seed);

// Random integer matrix with entries in [-9, 9], reproducible from the seed.
IntMatrix random_matrix(int N, int d, std::uint64_t seed);

BigInt evaluate_monomial(const Monomial& m, const IntMatrix& M);
BigInt evaluate_expansion(const Expansion& e, const IntMatrix& M);

// True iff m and e take equal values on `trials` seeded random matrices.
bool verify_expansion(const Monomial& m, const Expansion& e, int N, int trials,
                      std::uint64_t seed);

std::string to_string(const Monomial& m);
std::string to_string(const Expansion& e);  // "+1·(2,4)(1,3) -1·(3,4)(1,2)"

// Parses juxtaposed parenthesized tuples, e.g. "(1,4)(2,3)".
Monomial parse_monomial(const std::string& text);

}  // namespace schubert
