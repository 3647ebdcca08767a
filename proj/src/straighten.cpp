#include "schubert/straighten.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace schubert {

bool is_standard(const Monomial& m) {
    for (size_t k = 0; k + 1 < m.size(); ++k)
        if (!bruhat_leq(m[k + 1], m[k])) return false;
    return true;
}

namespace {

// Sign of the permutation sorting seq ascending; 0 when entries repeat.
int sort_sign(const std::vector<int>& seq) {
    int inv = 0;
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = i + 1; j < seq.size(); ++j) {
            if (seq[i] == seq[j]) return 0;
            if (seq[i] > seq[j]) ++inv;
        }
    return inv % 2 ? -1 : 1;
}

}  // namespace

std::vector<ShuffleTerm> shuffle(const Word& tau, const Word& phi) {
    if (tau.size() != phi.size()) throw std::invalid_argument("shuffle: length mismatch");
    int d = (int)tau.size();
    int t = -1;
    for (int j = 0; j < d; ++j)
        if (tau[j] < phi[j]) { t = j; break; }
    if (t < 0) throw std::invalid_argument("shuffle: factors already in order");

    // merged values tau[0..t], phi[t..d-1]; ascending because tau[t] < phi[t]
    std::vector<int> vals(tau.begin(), tau.begin() + t + 1);
    vals.insert(vals.end(), phi.begin() + t, phi.end());
    int n = (int)vals.size();  // d + 1

    std::vector<ShuffleTerm> out;
    std::vector<int> pick(t + 1);
    for (int j = 0; j <= t; ++j) pick[j] = j;
    // iterate (t+1)-subsets of the n merged values in index order; the
    // initial pick {0..t} is the identity split and is skipped
    bool first = true;
    while (true) {
        if (!first) {
            std::vector<char> in(n, 0);
            for (int idx : pick) in[idx] = 1;
            // inversions between the subset and its complement: pairs
            // (x in S, y not in S) with x > y
            int riffle = 0;
            for (int x = 0; x < n; ++x)
                if (in[x])
                    for (int y = 0; y < x; ++y)
                        if (!in[y]) ++riffle;

            std::vector<int> araw, braw;
            for (int idx : pick) araw.push_back(vals[idx]);
            araw.insert(araw.end(), tau.begin() + t + 1, tau.end());
            braw.assign(phi.begin(), phi.begin() + t);
            for (int idx = 0; idx < n; ++idx)
                if (!in[idx]) braw.push_back(vals[idx]);

            int ea = sort_sign(araw);
            int eb = sort_sign(braw);
            if (ea != 0 && eb != 0) {
                std::sort(araw.begin(), araw.end());
                std::sort(braw.begin(), braw.end());
                int sign = -(riffle % 2 ? -1 : 1) * ea * eb;
                out.push_back({sign, Word(araw.begin(), araw.end()), Word(braw.begin(), braw.end())});
            }
        }
        first = false;
        // next combination
        int j = t;
        while (j >= 0 && pick[j] == n - (t + 1) + j) --j;
        if (j < 0) break;
        ++pick[j];
        for (int k = j + 1; k <= t; ++k) pick[k] = pick[k - 1] + 1;
    }
    return out;
}

Expansion straighten(const Monomial& m) {
    if (m.empty()) throw std::invalid_argument("straighten: empty monomial");
    for (const auto& f : m)
        if (f.size() != m[0].size()) throw std::invalid_argument("straighten: mixed factor lengths");

    Expansion work, done;
    work[m] = 1;
    while (!work.empty()) {
        auto it = work.begin();
        Monomial mono = it->first;
        long long c = it->second;
        work.erase(it);
        if (c == 0) continue;
        int k = -1;
        for (size_t j = 0; j + 1 < mono.size(); ++j)
            if (!bruhat_leq(mono[j + 1], mono[j])) { k = (int)j; break; }
        if (k < 0) {
            done[mono] += c;
            continue;
        }
        for (const auto& term : shuffle(mono[k], mono[k + 1])) {
            Monomial next = mono;
            next[k] = term.alpha;
            next[k + 1] = term.beta;
            work[next] += c * term.sign;
        }
    }
    for (auto it = done.begin(); it != done.end();)
        it = (it->second == 0) ? done.erase(it) : std::next(it);
    return done;
}

Expansion restrict_to_schubert(const Expansion& e, const Word& w) {
    Expansion out;
    for (const auto& [mono, c] : e)
        if (bruhat_leq(mono.front(), w)) out.emplace(mono, c);
    return out;
}

std::vector<Monomial> chevalley_action(const Monomial& m, int i, bool raise) {
    if (i < 1) throw std::invalid_argument("chevalley_action: index must be >= 1");
    int from = raise ? i : i + 1;
    int to = raise ? i + 1 : i;
    std::vector<Monomial> out;
    for (size_t j = 0; j < m.size(); ++j) {
        const Word& f = m[j];
        bool has_from = std::find(f.begin(), f.end(), from) != f.end();
        bool has_to = std::find(f.begin(), f.end(), to) != f.end();
        if (!has_from || has_to) continue;
        Monomial next = m;
        for (int& x : next[j])
            if (x == from) x = to;
        std::sort(next[j].begin(), next[j].end());
        out.push_back(std::move(next));
    }
    return out;
}

BigInt evaluate_plucker(const Word& tau, const IntMatrix& M) {
    int d = M.cols;
    if ((int)tau.size() != d) throw std::invalid_argument("evaluate_plucker: size mismatch");
    for (int x : tau)
        if (x < 1 || x > M.rows) throw std::invalid_argument("evaluate_plucker: row out of range");

    // fraction-free elimination; divisions are exact
    std::vector<BigInt> a((size_t)d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a[(size_t)i * d + j] = M.at(tau[i] - 1, j);

    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < d - 1; ++k) {
        if (a[(size_t)k * d + k] == 0) {
            int p = -1;
            for (int i = k + 1; i < d; ++i)
                if (a[(size_t)i * d + k] != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < d; ++j) std::swap(a[(size_t)k * d + j], a[(size_t)p * d + j]);
            sign = -sign;
        }
        for (int i = k + 1; i < d; ++i)
            for (int j = k + 1; j < d; ++j) {
                a[(size_t)i * d + j] =
                    (a[(size_t)k * d + k] * a[(size_t)i * d + j] -
                     a[(size_t)i * d + k] * a[(size_t)k * d + j]) /
                    prev;
            }
        prev = a[(size_t)k * d + k];
    }
    return sign * a[(size_t)(d - 1) * d + (d - 1)];
}

IntMatrix sample_point_on_schubert(const SchubertContext& ctx, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-9, 9);
    // upper unitriangular b, generated row-major above the diagonal
    std::vector<long long> b((size_t)ctx.N * ctx.N, 0);
    for (int i = 0; i < ctx.N; ++i) {
        b[(size_t)i * ctx.N + i] = 1;
        for (int k = i + 1; k < ctx.N; ++k) b[(size_t)i * ctx.N + k] = dist(rng);
    }
    IntMatrix M{ctx.N, ctx.d, std::vector<long long>((size_t)ctx.N * ctx.d)};
    for (int i = 0; i < ctx.N; ++i)
        for (int j = 0; j < ctx.d; ++j) M.at(i, j) = b[(size_t)i * ctx.N + (ctx.w[j] - 1)];
    return M;
}

IntMatrix random_matrix(int N, int d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-9, 9);
    IntMatrix M{N, d, std::vector<long long>((size_t)N * d)};
    for (auto& x : M.a) x = dist(rng);
    return M;
}

BigInt evaluate_monomial(const Monomial& m, const IntMatrix& M) {
    BigInt p = 1;
    for (const auto& f : m) {
        p *= evaluate_plucker(f, M);
        if (p == 0) return 0;
    }
    return p;
}

BigInt evaluate_expansion(const Expansion& e, const IntMatrix& M) {
    BigInt s = 0;
    for (const auto& [mono, c] : e) s += c * evaluate_monomial(mono, M);
    return s;
}

bool verify_expansion(const Monomial& m, const Expansion& e, int N, int trials,
                      std::uint64_t seed) {
    int d = (int)m.front().size();
    for (int t = 0; t < trials; ++t) {
        IntMatrix M = random_matrix(N, d, seed + (std::uint64_t)t);
        if (evaluate_monomial(m, M) != evaluate_expansion(e, M)) return false;
    }
    return true;
}

std::string to_string(const Monomial& m) {
    std::string s;
    for (const auto& f : m) s += to_string(f);
    return s;
}

std::string to_string(const Expansion& e) {
    if (e.empty()) return "0";
    std::string s;
    // ascending lexicographic order; lex refines the positional Bruhat order
    for (const auto& [mono, c] : e) {
        if (!s.empty()) s += ' ';
        s += (c > 0 ? "+" : "-");
        s += std::to_string(c > 0 ? c : -c);
        s += "·";
        s += to_string(mono);
    }
    return s;
}

Monomial parse_monomial(const std::string& text) {
    Monomial out;
    size_t i = 0, n = text.size();
    while (i < n && (text[i] == ' ' || text[i] == '\t')) ++i;
    while (i < n) {
        if (text[i] != '(') throw std::invalid_argument("parse_monomial: expected '(' in '" + text + "'");
        size_t close = text.find(')', i);
        if (close == std::string::npos)
            throw std::invalid_argument("parse_monomial: missing ')' in '" + text + "'");
        out.push_back(parse_word(text.substr(i, close - i + 1)));
        i = close + 1;
        while (i < n && (text[i] == ' ' || text[i] == '\t')) ++i;
    }
    if (out.empty()) throw std::invalid_argument("parse_monomial: no factors in '" + text + "'");
    return out;
}

}  // namespace schubert
