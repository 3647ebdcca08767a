#include "schubert/tableaux.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace schubert {

bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
    }
    return true;
}

int partition_weight(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

int SkewShape::box_count() const {
    int s = 0;
    for (int i = 0; i < rows(); ++i) s += outer[i] - inner_at(i);
    return s;
}

void validate_shape(const SkewShape& sh) {
    if (!is_partition(sh.outer) || !is_partition(sh.inner))
        throw std::invalid_argument("skew shape: outer/inner must be partitions");
    if (sh.inner.size() > sh.outer.size())
        throw std::invalid_argument("skew shape: inner has more rows than outer");
    for (size_t i = 0; i < sh.inner.size(); ++i)
        if (sh.inner[i] > sh.outer[i])
            throw std::invalid_argument("skew shape: inner not contained in outer");
}

namespace {

void trim_trailing_zeros(Partition& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Rebuilds a normalized tableau from value-carrying boxes, compressing away
// unused row and column indices. The box pattern must form a skew diagram
// after compression; anything else is a broken internal invariant.
SkewTableau from_cells(const std::map<std::pair<int, int>, int>& cells) {
    if (cells.empty()) return {};
    std::set<int> rset, cset;
    for (const auto& [rc, v] : cells) {
        rset.insert(rc.first);
        cset.insert(rc.second);
    }
    std::map<int, int> rmap, cmap;
    for (int r : rset) rmap.emplace(r, (int)rmap.size());
    for (int c : cset) cmap.emplace(c, (int)cmap.size());

    int nrows = (int)rmap.size();
    std::vector<int> lo(nrows, (int)cmap.size()), hi(nrows, -1), cnt(nrows, 0);
    for (const auto& [rc, v] : cells) {
        int i = rmap.at(rc.first), j = cmap.at(rc.second);
        lo[i] = std::min(lo[i], j);
        hi[i] = std::max(hi[i], j);
        ++cnt[i];
    }
    SkewTableau t;
    t.shape.outer.resize(nrows);
    t.shape.inner.resize(nrows);
    t.rows.assign(nrows, {});
    for (int i = 0; i < nrows; ++i) {
        if (cnt[i] != hi[i] - lo[i] + 1)
            throw std::logic_error("box pattern has a gap inside a row");
        t.shape.outer[i] = hi[i] + 1;
        t.shape.inner[i] = lo[i];
        t.rows[i].resize(cnt[i]);
    }
    for (const auto& [rc, v] : cells) {
        int i = rmap.at(rc.first), j = cmap.at(rc.second);
        t.rows[i][j - lo[i]] = v;
    }
    trim_trailing_zeros(t.shape.inner);
    if (!is_partition(t.shape.outer) ||
        (!t.shape.inner.empty() && !is_partition(t.shape.inner)))
        throw std::logic_error("box pattern does not compress to a skew shape");
    for (size_t i = 0; i < t.shape.inner.size(); ++i)
        if (t.shape.inner[i] > t.shape.outer[i])
            throw std::logic_error("box pattern does not compress to a skew shape");
    return t;
}

}  // namespace

SkewShape normalize_shape(const SkewShape& sh) {
    validate_shape(sh);
    std::map<std::pair<int, int>, int> cells;
    for (int i = 0; i < sh.rows(); ++i)
        for (int j = sh.inner_at(i); j < sh.outer[i]; ++j) cells[{i, j}] = 1;
    return from_cells(cells).shape;
}

bool is_semistandard(const SkewTableau& t) {
    const SkewShape& sh = t.shape;
    if ((int)t.rows.size() != sh.rows()) return false;
    for (int i = 0; i < sh.rows(); ++i) {
        int len = sh.outer[i] - sh.inner_at(i);
        if ((int)t.rows[i].size() != len) return false;
        for (int a = 0; a < len; ++a) {
            if (t.rows[i][a] < 1) return false;
            if (a > 0 && t.rows[i][a - 1] > t.rows[i][a]) return false;
        }
    }
    for (int i = 0; i + 1 < sh.rows(); ++i)
        for (int j = sh.inner_at(i + 1); j < sh.outer[i + 1]; ++j) {
            if (j < sh.inner_at(i) || j >= sh.outer[i]) continue;
            int above = t.rows[i][j - sh.inner_at(i)];
            int below = t.rows[i + 1][j - sh.inner_at(i + 1)];
            if (above >= below) return false;
        }
    return true;
}

std::vector<int> tableau_content(const SkewTableau& t, int max_entry) {
    std::vector<int> c(max_entry, 0);
    for (const auto& row : t.rows)
        for (int v : row) {
            if (v < 1 || v > max_entry)
                throw std::invalid_argument("tableau_content: entry out of range");
            ++c[v - 1];
        }
    return c;
}

SkewTableau tableau_of_monomial(const Monomial& factors) {
    if (factors.empty())
        throw std::invalid_argument("tableau_of_monomial: empty monomial");
    int r = (int)factors.size();
    int d = (int)factors[0].size();
    for (const Word& f : factors) {
        if ((int)f.size() != d)
            throw std::invalid_argument("tableau_of_monomial: mixed factor lengths");
        for (int i = 0; i < d; ++i)
            if (f[i] < 1 || (i > 0 && f[i - 1] >= f[i]))
                throw std::invalid_argument("tableau_of_monomial: invalid factor " +
                                            to_string(f));
    }
    if (!is_standard(factors))
        throw std::invalid_argument("tableau_of_monomial: nonstandard monomial");
    SkewTableau t;
    t.shape.outer.assign(d, r);
    t.rows.assign(d, std::vector<int>(r));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < r; ++j) t.rows[i][j] = factors[r - 1 - j][i];
    return t;
}

SkewTableau block_restriction(const SkewTableau& t, const LeviContext& levi, int k) {
    if (k < 0 || k >= levi.block_count())
        throw std::invalid_argument("block_restriction: block index out of range");
    if (!is_semistandard(t))
        throw std::invalid_argument("block_restriction: input not semistandard");
    std::map<std::pair<int, int>, int> cells;
    for (int i = 0; i < t.shape.rows(); ++i)
        for (int j = t.shape.inner_at(i); j < t.shape.outer[i]; ++j) {
            int v = t.rows[i][j - t.shape.inner_at(i)];
            if (v < 1 || v > levi.ctx.N)
                throw std::invalid_argument("block_restriction: entry out of range");
            if (levi.block_of(v) == k) cells[{i, j}] = v - levi.cuts[k];
        }
    SkewTableau out = from_cells(cells);
    if (!is_semistandard(out))
        throw std::logic_error("block_restriction: compression broke the tableau");
    return out;
}

std::vector<SkewShape> shapes_of_head(const std::vector<Word>& heads,
                                      const LeviContext& levi) {
    for (const Word& h : heads)
        if (!is_head(levi, h))
            throw std::invalid_argument("shapes_of_head: " + to_string(h) +
                                        " is not a head");
    SkewTableau rect = tableau_of_monomial(heads);
    std::vector<SkewShape> out;
    for (int k = 0; k < levi.block_count(); ++k)
        out.push_back(block_restriction(rect, levi, k).shape);
    return out;
}

SkewShape pi_rotation(const SkewShape& sh) {
    validate_shape(sh);
    if (sh.outer.empty()) return {};
    int R = sh.rows(), C = sh.outer[0];
    std::map<std::pair<int, int>, int> cells;
    for (int i = 0; i < R; ++i)
        for (int j = sh.inner_at(i); j < sh.outer[i]; ++j)
            cells[{R - 1 - i, C - 1 - j}] = 1;
    return from_cells(cells).shape;
}

std::vector<SkewTableau> enumerate_ssyt(const SkewShape& sh, int max_entry) {
    validate_shape(sh);
    if (max_entry < 1) throw std::invalid_argument("enumerate_ssyt: max_entry < 1");

    SkewTableau t;
    t.shape = sh;
    t.rows.resize(sh.rows());
    for (int i = 0; i < sh.rows(); ++i) t.rows[i].resize(sh.outer[i] - sh.inner_at(i));

    std::vector<std::pair<int, int>> order;  // row-major box order
    for (int i = 0; i < sh.rows(); ++i)
        for (int j = sh.inner_at(i); j < sh.outer[i]; ++j) order.emplace_back(i, j);

    std::vector<SkewTableau> out;
    auto fill = [&](auto&& self, size_t pos) -> void {
        if (pos == order.size()) {
            out.push_back(t);
            return;
        }
        auto [i, j] = order[pos];
        int low = 1;
        if (j > sh.inner_at(i)) low = std::max(low, t.rows[i][j - 1 - sh.inner_at(i)]);
        if (i > 0 && j >= sh.inner_at(i - 1) && j < sh.outer[i - 1])
            low = std::max(low, t.rows[i - 1][j - sh.inner_at(i - 1)] + 1);
        for (int v = low; v <= max_entry; ++v) {
            t.rows[i][j - sh.inner_at(i)] = v;
            self(self, pos + 1);
        }
    };
    fill(fill, 0);
    return out;
}

Monomial reconstruct_monomial(const std::vector<SkewTableau>& fillings,
                              const std::vector<Word>& heads,
                              const LeviContext& levi) {
    std::vector<SkewShape> shapes = shapes_of_head(heads, levi);
    if (fillings.size() != shapes.size())
        throw std::invalid_argument("reconstruct_monomial: expected one filling per block");
    for (size_t k = 0; k < shapes.size(); ++k) {
        if (fillings[k].shape != shapes[k])
            throw std::invalid_argument("reconstruct_monomial: filling shape mismatch at block " +
                                        std::to_string(k));
        if (!is_semistandard(fillings[k]))
            throw std::invalid_argument("reconstruct_monomial: filling not semistandard");
        for (const auto& row : fillings[k].rows)
            for (int v : row)
                if (v < 1 || v > levi.block_size((int)k))
                    throw std::invalid_argument("reconstruct_monomial: entry exceeds block size");
    }

    SkewTableau rect = tableau_of_monomial(heads);
    int d = rect.shape.rows();
    int r = d > 0 ? rect.shape.outer[0] : 0;

    // Walk the rectangle's block-k boxes and the filling's boxes in the same
    // row-major order; the restriction map is exactly this correspondence.
    std::vector<std::vector<int>> grid(d, std::vector<int>(r, 0));
    for (int k = 0; k < levi.block_count(); ++k) {
        std::vector<int> vals;
        for (const auto& row : fillings[k].rows)
            for (int v : row) vals.push_back(v + levi.cuts[k]);
        size_t pos = 0;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < r; ++j)
                if (levi.block_of(rect.rows[i][j]) == k) {
                    if (pos >= vals.size())
                        throw std::logic_error("reconstruct_monomial: box count mismatch");
                    grid[i][j] = vals[pos++];
                }
        if (pos != vals.size())
            throw std::logic_error("reconstruct_monomial: box count mismatch");
    }

    Monomial m(r, Word(d));
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < d; ++i) m[r - 1 - j][i] = grid[i][j];
    for (const Word& f : m)
        for (size_t i = 0; i + 1 < f.size(); ++i)
            if (f[i] >= f[i + 1])
                throw std::logic_error("reconstruct_monomial: factor not increasing");
    if (!is_standard(m))
        throw std::logic_error("reconstruct_monomial: result not standard");
    return m;
}

std::string format_partition(const Partition& p) {
    if (p.empty()) return "∅";
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p[i]);
    }
    return s + ")";
}

std::string to_string(const SkewShape& sh) {
    return format_partition(sh.outer) + "/" + format_partition(sh.inner);
}

std::string to_string(const SkewTableau& t) {
    size_t width = 1;
    for (const auto& row : t.rows)
        for (int v : row) width = std::max(width, std::to_string(v).size());
    std::string s;
    for (int i = 0; i < t.shape.rows(); ++i) {
        if (i) s += '\n';
        for (int j = 0; j < t.shape.outer[i]; ++j) {
            if (j) s += ' ';
            std::string cell = j < t.shape.inner_at(i)
                                   ? "·"
                                   : std::to_string(t.rows[i][j - t.shape.inner_at(i)]);
            size_t pad = width - (cell == "·" ? 1 : cell.size());
            s += std::string(pad, ' ');
            s += cell;
        }
    }
    return s;
}

}  // namespace schubert
