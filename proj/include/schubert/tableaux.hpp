#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "schubert/levi.hpp"
#include "schubert/straighten.hpp"

// Partitions, skew shapes and semistandard tableaux, plus the rectangular
// tableau attached to a standard monomial and its per-block skew pieces.
// The monomial <-> tableau-tuple correspondence implemented here is the
// workhorse behind the module decomposition of graded components.

namespace schubert {

// Weakly decreasing positive parts; trailing zeros are never stored.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
int partition_weight(const Partition& p);  // sum of parts

// Skew diagram outer/inner in English notation: row i occupies columns
// [inner[i], outer[i]). Normalized: no empty rows, no empty columns.
struct SkewShape {
    Partition outer;
    Partition inner;  // padded conceptually with zeros to outer's length

    bool operator==(const SkewShape&) const = default;
    bool operator<(const SkewShape& o) const {
        return std::tie(outer, inner) < std::tie(o.outer, o.inner);
    }
    int rows() const { return (int)outer.size(); }
    int inner_at(int i) const { return i < (int)inner.size() ? inner[i] : 0; }
    int box_count() const;
};

// Throws std::invalid_argument unless outer/inner are partitions with
// inner contained in outer.
void validate_shape(const SkewShape& sh);

// Deletes empty rows and empty columns, preserving the relative position of
// the remaining boxes.
SkewShape normalize_shape(const SkewShape& sh);

// Row i holds the outer[i]-inner[i] filled entries left to right.
struct SkewTableau {
    SkewShape shape;
    std::vector<std::vector<int>> rows;

    bool operator==(const SkewTableau&) const = default;
    bool operator<(const SkewTableau& o) const {
        return std::tie(shape, rows) < std::tie(o.shape, o.rows);
    }
};

// Weak increase along rows, strict increase down columns.
bool is_semistandard(const SkewTableau& t);

// Number of boxes holding each value 1..max_entry.
std::vector<int> tableau_content(const SkewTableau& t, int max_entry);

// The d x r rectangle whose column j (0-based) is factor r-1-j written top
// to bottom; semistandard exactly because the factor list is standard.
// Throws std::invalid_argument on nonstandard input.
SkewTableau tableau_of_monomial(const Monomial& factors);

// Keeps the boxes whose values lie in block k (0-based, as in LeviContext),
// shifts values to [1, block_size(k)], and drops empty rows and columns.
// The result of restricting a standard monomial's rectangle is always a
// valid skew tableau.
SkewTableau block_restriction(const SkewTableau& t, const LeviContext& levi, int k);

// Skew shapes of the per-block restrictions of the rectangle of heads.
// Any standard monomial with this head sequence yields the same shapes,
// since the block pattern of the rectangle depends only on the heads.
std::vector<SkewShape> shapes_of_head(const std::vector<Word>& heads,
                                      const LeviContext& levi);

// 180-degree rotation of the diagram, renormalized. Rotating the complement
// shape of a rectangle gives a straight partition.
SkewShape pi_rotation(const SkewShape& sh);

// All semistandard fillings with entries in [1, max_entry], ordered
// lexicographically by row-reading word (top row first, left to right).
// The empty shape yields exactly one empty tableau.
std::vector<SkewTableau> enumerate_ssyt(const SkewShape& sh, int max_entry);

// Inverse of the restriction map: places each filling back into the
// rectangle of the head sequence, undoes the value shift, and reads the
// columns off as factors. fillings[k] must live on shapes_of_head(...)[k]
// with entries at most the size of block k+1.
Monomial reconstruct_monomial(const std::vector<SkewTableau>& fillings,
                              const std::vector<Word>& heads,
                              const LeviContext& levi);

// Partition shares its representation with Word, so its formatter gets its
// own name: "(3,2)", or "∅" when empty.
std::string format_partition(const Partition& p);
std::string to_string(const SkewShape& sh);   // "(2,1)/(1)", "(3,2)/∅"
std::string to_string(const SkewTableau& t);  // grid, "·" marks inner boxes

}  // namespace schubert
