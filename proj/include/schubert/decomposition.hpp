#pragma once

#include <map>
#include <string>
#include <vector>

#include "schubert/littlewood_richardson.hpp"

// Degree-by-degree decomposition of the graded coordinate ring into modules
// for the block Levi subgroup: one summand per standard head sequence, each
// a tensor product of skew Weyl modules over the blocks, further split into
// irreducibles by Littlewood-Richardson data. Constituents are recorded by
// their pre-dual partition tuples.

namespace schubert {

struct IrreducibleLabel {
    std::vector<Partition> parts;  // one partition per block
    int degree = 0;

    bool operator==(const IrreducibleLabel&) const = default;
    bool operator<(const IrreducibleLabel& o) const {
        return std::tie(parts, degree) < std::tie(o.parts, o.degree);
    }
};

struct ReportEntry {
    std::vector<Word> heads;
    std::vector<SkewShape> shapes;
    BigInt tensor_dim = 0;
    std::map<IrreducibleLabel, long long> constituents;

    bool operator==(const ReportEntry&) const = default;
};

struct DecompositionReport {
    int N = 0;
    int d = 0;
    Word w;
    std::vector<int> r_q;
    int degree = 0;
    std::vector<ReportEntry> entries;
    BigInt total_dim = 0;

    bool operator==(const DecompositionReport&) const = default;
};

// All weakly decreasing degree-r factor lists below w, grouped nowhere:
// the standard monomial basis of the degree-r component.
std::vector<Monomial> enumerate_standard_monomials(const SchubertContext& ctx, int r);

// Shapes, tensor dimension and irreducible constituents attached to one
// standard head sequence. Constituent multiplicities multiply across blocks;
// partitions taller than their block are dropped (their module vanishes).
ReportEntry module_of_head(const std::vector<Word>& heads, const LeviContext& levi);

// One entry per standard head sequence of degree r, in the canonical
// descending order. Throws std::logic_error if the assembled total misses
// the standard monomial count, which would mean a broken invariant.
DecompositionReport decompose_degree(const LeviContext& levi, int r);

// Compares, per head sequence, the letter-count multiset over the actual
// standard monomials against the block-character product predicted by the
// shapes. True when every head sequence matches.
bool character_check(const LeviContext& levi, int r);

// Branching of the degree-r component of the full Grassmannian coordinate
// ring from GL_N to the Levi with the given block sizes (N = their sum).
DecompositionReport branching_of_rectangle(const std::vector<int>& block_sizes,
                                           int d, int r);

// Stable JSON form; big integers are decimal strings.
std::string report_to_json(const DecompositionReport& rep);
DecompositionReport report_from_json(const std::string& text);

}  // namespace schubert
