#pragma once

#include <string>
#include <vector>

#include "schubert/bigint.hpp"

// Core combinatorics of the index poset I_{d,N}: strictly increasing d-tuples
// in [1,N] ordered componentwise, lower intervals below a fixed word w, Hasse
// diagrams with simple-reflection edge labels, the stabilizer reflection set
// of w, and counting of weakly decreasing tuples (standard monomials).

namespace schubert {

// Strictly increasing tuple of 1-based row indices.
using Word = std::vector<int>;

bool is_valid_word(const Word& tau, int d, int N);

// Ambient dimensions together with the word w cutting out the subvariety.
struct SchubertContext {
    int N;
    int d;
    Word w;

    SchubertContext(int N_, int d_, Word w_);
};

// Componentwise comparison; both words must have equal length.
bool bruhat_leq(const Word& a, const Word& b);

// All words componentwise <= w, in lexicographic order.
std::vector<Word> lower_interval(const SchubertContext& ctx);

struct HasseEdge {
    Word lower;
    Word upper;
    int label;  // simple-reflection index m: lower = upper with entry m+1 -> m

    bool operator==(const HasseEdge&) const = default;
};

struct HasseDiagram {
    std::vector<Word> nodes;       // lexicographic order
    std::vector<HasseEdge> edges;  // sorted by (upper, lower)
};

// Covering relations of the componentwise order restricted to the interval
// below ctx.w; each cover decrements exactly one entry by one.
HasseDiagram hasse_diagram(const SchubertContext& ctx);

// Word obtained from tau by exchanging the values m and m+1 (entries sorted).
// Equals tau when tau contains both or neither of m, m+1.
Word apply_reflection(const Word& tau, int m);

// Indices m in [1, N-1] with apply_reflection(w, m) <= w; complement of the
// break set { w_j : w_j <= N-1 and w_{j+1} != w_j + 1 }.
std::vector<int> stabilizer_set(const SchubertContext& ctx);

// Number of weakly decreasing r-tuples tau_1 >= ... >= tau_r with tau_1 <= w.
BigInt count_std_monomials(const SchubertContext& ctx, int r);

std::string to_string(const Word& tau);

// Accepts "(3,6,9)" or "3,6,9".
Word parse_word(const std::string& text);

}  // namespace schubert
