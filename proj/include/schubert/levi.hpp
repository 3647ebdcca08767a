#pragma once

#include <map>
#include <vector>

#include "schubert/grassmann.hpp"

// Block-diagonal Levi subgroups acting on the subvariety cut out by w: blocks
// and classes, the head elements (per-block top-packed words), the partition
// of the Hasse diagram into head components, weakly decreasing head
// sequences, and the sequence order used by the decomposition reports.

namespace schubert {

// Levi determined by the reflection subset r_q; the complement of r_q in
// [1, N-1] gives the cut points separating the diagonal blocks.
struct LeviContext {
    SchubertContext ctx;
    std::vector<int> r_q;   // sorted, subset of stabilizer_set(ctx)
    std::vector<int> cuts;  // 0 = a_0 < a_1 < ... < a_s = N

    LeviContext(SchubertContext ctx_, std::vector<int> r_q_);

    int block_count() const { return (int)cuts.size() - 1; }
    int block_size(int k) const { return cuts[k + 1] - cuts[k]; }  // 0-based k
    int block_of(int value) const;                                 // 0-based block index
};

// Levi of the full stabilizer parabolic of w.
LeviContext levi_of_schubert(const SchubertContext& ctx);

// 1-based block index of each entry.
std::vector<int> class_of(const LeviContext& levi, const Word& tau);

// True iff each block's share of tau sits at the top of the block.
bool is_head(const LeviContext& levi, const Word& tau);

// All heads below w, lexicographic order.
std::vector<Word> heads(const LeviContext& levi);

// Top-packs each block's share of tau; the unique head with the class of tau.
Word head_of(const LeviContext& levi, const Word& tau);

// Components of the Hasse diagram after deleting edges whose label crosses a
// block boundary, keyed by each component's unique maximal element (a head).
std::map<Word, std::vector<Word>> hasse_partition(const LeviContext& levi);

enum class SeqOrder { less, equal, greater, incomparable };

// Position-lexicographic comparison of equal-length word sequences, each
// position compared componentwise; the first differing position decides, and
// an incomparable difference makes the sequences incomparable.
SeqOrder str_compare(const std::vector<Word>& a, const std::vector<Word>& b);

// All weakly decreasing r-tuples of heads, in descending lexicographic order
// (a linear extension of the sequence order above).
std::vector<std::vector<Word>> standard_head_sequences(const LeviContext& levi, int r);

}  // namespace schubert
