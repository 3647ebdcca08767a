#include "schubert/levi.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert {

LeviContext::LeviContext(SchubertContext ctx_, std::vector<int> r_q_)
    : ctx(std::move(ctx_)), r_q(std::move(r_q_)) {
    std::sort(r_q.begin(), r_q.end());
    r_q.erase(std::unique(r_q.begin(), r_q.end()), r_q.end());
    auto stab = stabilizer_set(ctx);
    for (int m : r_q) {
        if (m < 1 || m > ctx.N - 1)
            throw std::invalid_argument("LeviContext: reflection index " + std::to_string(m) +
                                        " out of range");
        if (!std::binary_search(stab.begin(), stab.end(), m))
            throw std::invalid_argument("LeviContext: reflection index " + std::to_string(m) +
                                        " is not in the stabilizer of w");
    }
    cuts.push_back(0);
    for (int m = 1; m <= ctx.N - 1; ++m)
        if (!std::binary_search(r_q.begin(), r_q.end(), m)) cuts.push_back(m);
    cuts.push_back(ctx.N);
}

int LeviContext::block_of(int value) const {
    if (value < 1 || value > ctx.N) throw std::invalid_argument("block_of: value out of range");
    // first cut >= value marks the end of its block
    auto it = std::lower_bound(cuts.begin() + 1, cuts.end(), value);
    return (int)(it - cuts.begin()) - 1;
}

LeviContext levi_of_schubert(const SchubertContext& ctx) {
    return LeviContext(ctx, stabilizer_set(ctx));
}

std::vector<int> class_of(const LeviContext& levi, const Word& tau) {
    if (!is_valid_word(tau, levi.ctx.d, levi.ctx.N))
        throw std::invalid_argument("class_of: invalid word");
    std::vector<int> out(tau.size());
    for (size_t j = 0; j < tau.size(); ++j) out[j] = levi.block_of(tau[j]) + 1;
    return out;
}

bool is_head(const LeviContext& levi, const Word& tau) {
    int s = levi.block_count();
    std::vector<int> count(s, 0);
    for (int x : tau) ++count[levi.block_of(x)];
    // occupied part of each block must be its top values
    for (int x : tau) {
        int k = levi.block_of(x);
        if (x <= levi.cuts[k + 1] - count[k]) return false;
    }
    return true;
}

Word head_of(const LeviContext& levi, const Word& tau) {
    int s = levi.block_count();
    std::vector<int> count(s, 0);
    for (int x : tau) ++count[levi.block_of(x)];
    Word out;
    out.reserve(tau.size());
    for (int k = 0; k < s; ++k)
        for (int v = levi.cuts[k + 1] - count[k] + 1; v <= levi.cuts[k + 1]; ++v)
            out.push_back(v);
    return out;
}

std::vector<Word> heads(const LeviContext& levi) {
    std::vector<Word> out;
    for (const auto& tau : lower_interval(levi.ctx))
        if (is_head(levi, tau)) out.push_back(tau);
    return out;
}

std::map<Word, std::vector<Word>> hasse_partition(const LeviContext& levi) {
    auto h = hasse_diagram(levi.ctx);
    std::map<Word, int> index;
    for (size_t i = 0; i < h.nodes.size(); ++i) index[h.nodes[i]] = (int)i;

    std::vector<int> parent(h.nodes.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = (int)i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    for (const auto& e : h.edges)
        if (std::binary_search(levi.r_q.begin(), levi.r_q.end(), e.label))
            parent[find(index[e.lower])] = find(index[e.upper]);

    std::map<int, std::vector<Word>> groups;
    for (size_t i = 0; i < h.nodes.size(); ++i) groups[find((int)i)].push_back(h.nodes[i]);

    std::map<Word, std::vector<Word>> out;
    for (auto& [root, members] : groups) {
        const Word* max = nullptr;
        for (const auto& t : members) {
            bool dominates = true;
            for (const auto& u : members)
                if (!bruhat_leq(u, t)) { dominates = false; break; }
            if (dominates) { max = &t; break; }
        }
        if (!max) throw std::logic_error("hasse_partition: component without a maximal element");
        out[*max] = members;  // members already in lexicographic order
    }
    return out;
}

SeqOrder str_compare(const std::vector<Word>& a, const std::vector<Word>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("str_compare: length mismatch");
    for (size_t q = 0; q < a.size(); ++q) {
        if (a[q] == b[q]) continue;
        bool ge = bruhat_leq(b[q], a[q]);
        bool le = bruhat_leq(a[q], b[q]);
        if (ge) return SeqOrder::greater;
        if (le) return SeqOrder::less;
        return SeqOrder::incomparable;
    }
    return SeqOrder::equal;
}

std::vector<std::vector<Word>> standard_head_sequences(const LeviContext& levi, int r) {
    if (r < 1) throw std::invalid_argument("standard_head_sequences: r must be >= 1");
    auto hs = heads(levi);
    std::sort(hs.begin(), hs.end(), std::greater<>());  // descending lex
    size_t n = hs.size();
    std::vector<std::vector<int>> down(n);  // indices of heads <= hs[i], descending lex
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (bruhat_leq(hs[j], hs[i])) down[i].push_back((int)j);

    // DFS: candidates at depth 0 are all heads; deeper levels use the
    // memoized down-set of the previous choice, both in descending lex, so
    // sequences come out in descending lexicographic order overall
    std::vector<std::vector<Word>> result;
    std::vector<int> stack;
    auto dfs = [&](auto&& self, int depth, int prev) -> void {
        if (depth == r) {
            std::vector<Word> seq;
            seq.reserve(r);
            for (int i : stack) seq.push_back(hs[i]);
            result.push_back(std::move(seq));
            return;
        }
        if (depth == 0) {
            for (size_t i = 0; i < n; ++i) {
                stack.push_back((int)i);
                self(self, depth + 1, (int)i);
                stack.pop_back();
            }
        } else {
            for (int j : down[prev]) {
                stack.push_back(j);
                self(self, depth + 1, j);
                stack.pop_back();
            }
        }
    };
    dfs(dfs, 0, -1);
    return result;
}

}  // namespace schubert
