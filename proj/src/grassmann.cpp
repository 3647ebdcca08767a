#include "schubert/grassmann.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert {

bool is_valid_word(const Word& tau, int d, int N) {
    if ((int)tau.size() != d) return false;
    int prev = 0;
    for (int x : tau) {
        if (x <= prev || x > N) return false;
        prev = x;
    }
    return true;
}

SchubertContext::SchubertContext(int N_, int d_, Word w_) : N(N_), d(d_), w(std::move(w_)) {
    if (N < 2) throw std::invalid_argument("SchubertContext: N must be at least 2");
    if (d < 1 || d > N - 1) throw std::invalid_argument("SchubertContext: need 1 <= d <= N-1");
    if (!is_valid_word(w, d, N))
        throw std::invalid_argument("SchubertContext: w is not a strictly increasing d-tuple in [1,N]");
}

bool bruhat_leq(const Word& a, const Word& b) {
    if (a.size() != b.size()) throw std::invalid_argument("bruhat_leq: length mismatch");
    for (size_t j = 0; j < a.size(); ++j)
        if (a[j] > b[j]) return false;
    return true;
}

namespace {

void collect_interval(const Word& w, int pos, int prev, Word& cur, std::vector<Word>& out) {
    if (pos == (int)w.size()) {
        out.push_back(cur);
        return;
    }
    for (int v = prev + 1; v <= w[pos]; ++v) {
        cur.push_back(v);
        collect_interval(w, pos + 1, v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Word> lower_interval(const SchubertContext& ctx) {
    std::vector<Word> out;
    Word cur;
    collect_interval(ctx.w, 0, 0, cur, out);
    return out;
}

HasseDiagram hasse_diagram(const SchubertContext& ctx) {
    HasseDiagram h;
    h.nodes = lower_interval(ctx);
    for (const Word& upper : h.nodes) {
        for (int j = 0; j < ctx.d; ++j) {
            int x = upper[j];
            // decrement entry j; valid iff it stays above its left neighbor
            if (x - 1 >= 1 && (j == 0 || upper[j - 1] < x - 1)) {
                Word lower = upper;
                lower[j] = x - 1;
                h.edges.push_back({std::move(lower), upper, x - 1});
            }
        }
    }
    std::sort(h.edges.begin(), h.edges.end(), [](const HasseEdge& a, const HasseEdge& b) {
        if (a.upper != b.upper) return a.upper < b.upper;
        return a.lower < b.lower;
    });
    return h;
}

Word apply_reflection(const Word& tau, int m) {
    bool has_m = std::find(tau.begin(), tau.end(), m) != tau.end();
    bool has_m1 = std::find(tau.begin(), tau.end(), m + 1) != tau.end();
    if (has_m == has_m1) return tau;
    Word out = tau;
    for (int& x : out) {
        if (has_m && x == m) x = m + 1;
        else if (has_m1 && x == m + 1) x = m;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> stabilizer_set(const SchubertContext& ctx) {
    std::vector<bool> broken(ctx.N, false);
    for (int j = 0; j < ctx.d; ++j) {
        int x = ctx.w[j];
        if (x > ctx.N - 1) continue;
        int next = (j + 1 < ctx.d) ? ctx.w[j + 1] : ctx.N + 1;  // sentinel: past the end
        if (next != x + 1) broken[x] = true;
    }
    std::vector<int> out;
    for (int m = 1; m <= ctx.N - 1; ++m)
        if (!broken[m]) out.push_back(m);
    return out;
}

BigInt count_std_monomials(const SchubertContext& ctx, int r) {
    if (r < 1) throw std::invalid_argument("count_std_monomials: r must be >= 1");
    std::vector<Word> nodes = lower_interval(ctx);
    size_t n = nodes.size();
    std::vector<std::vector<int>> below(n);  // indices of nodes <= nodes[i]
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (bruhat_leq(nodes[j], nodes[i])) below[i].push_back((int)j);
    // chains counted from the bottom factor upward
    std::vector<BigInt> f(n, 1);
    for (int k = 1; k < r; ++k) {
        std::vector<BigInt> g(n, 0);
        for (size_t i = 0; i < n; ++i)
            for (int j : below[i]) g[i] += f[j];
        f = std::move(g);
    }
    BigInt total = 0;
    for (size_t i = 0; i < n; ++i) total += f[i];
    return total;
}

std::string to_string(const Word& tau) {
    std::string s = "(";
    for (size_t j = 0; j < tau.size(); ++j) {
        if (j) s += ',';
        s += std::to_string(tau[j]);
    }
    s += ')';
    return s;
}

Word parse_word(const std::string& text) {
    Word out;
    size_t i = 0, n = text.size();
    auto skip_ws = [&] { while (i < n && (text[i] == ' ' || text[i] == '\t')) ++i; };
    skip_ws();
    bool parens = i < n && text[i] == '(';
    if (parens) ++i;
    while (true) {
        skip_ws();
        if (i >= n || !isdigit((unsigned char)text[i]))
            throw std::invalid_argument("parse_word: expected digit in '" + text + "'");
        int v = 0;
        while (i < n && isdigit((unsigned char)text[i])) v = v * 10 + (text[i++] - '0');
        out.push_back(v);
        skip_ws();
        if (i < n && text[i] == ',') { ++i; continue; }
        break;
    }
    if (parens) {
        if (i >= n || text[i] != ')') throw std::invalid_argument("parse_word: missing ')' in '" + text + "'");
        ++i;
    }
    skip_ws();
    if (i != n) throw std::invalid_argument("parse_word: trailing characters in '" + text + "'");
    return out;
}

}  // namespace schubert
