#include "schubert/sphericity.hpp"

#include <stdexcept>

namespace schubert {

std::optional<SmoothForm> smooth_form(const SchubertContext& ctx) {
    const Word& w = ctx.w;
    int d = ctx.d;
    int p = 0;
    while (p < d && w[p] == p + 1) ++p;
    if (p == d) return SmoothForm{d, 0, 0};
    // the remaining entries must be one consecutive run m+1..m+i; maximality
    // of the prefix gives m != p for free
    for (int j = p + 1; j < d; ++j)
        if (w[j] != w[j - 1] + 1) return std::nullopt;
    return SmoothForm{p, w[p] - 1, d - p};
}

std::optional<int> determinantal_parameter(const SchubertContext& ctx) {
    const Word& w = ctx.w;
    int d = ctx.d, N = ctx.N;
    int t = w[0] - 1;
    if (t < 1 || t >= std::min(d, N - d)) return std::nullopt;
    for (int j = 0; j < d - t; ++j)
        if (w[j] != t + 1 + j) return std::nullopt;
    for (int j = 0; j < t; ++j)
        if (w[d - t + j] != N - t + 1 + j) return std::nullopt;
    return t;
}

SphericityVerdict classify(const SchubertContext& ctx) {
    SphericityVerdict v;
    v.w = ctx.w;
    v.smooth_form = smooth_form(ctx);
    v.determinantal_form = determinantal_parameter(ctx);
    v.block_count = (int)(ctx.N - 1 - stabilizer_set(ctx).size()) + 1;
    v.last_entry_is_N = ctx.w.back() == ctx.N;
    bool certified =
        v.block_count <= 2 || (v.block_count == 3 && !v.last_entry_is_N);
    v.theorem_verdict =
        certified ? Verdict::multiplicity_free_certified : Verdict::not_covered;
    return v;
}

EmpiricalResult empirical_multiplicity_check(const LeviContext& levi, int max_degree) {
    if (max_degree < 1)
        throw std::invalid_argument("empirical_multiplicity_check: bound < 1");
    EmpiricalResult res;
    res.max_degree_checked = max_degree;
    for (int r = 1; r <= max_degree; ++r) {
        DecompositionReport rep = decompose_degree(levi, r);
        std::map<IrreducibleLabel, long long> total;
        for (const ReportEntry& e : rep.entries)
            for (const auto& [label, mult] : e.constituents) total[label] += mult;
        for (const auto& [label, mult] : total)
            if (mult > 1) {
                res.multiplicity_free = false;
                res.first_violation = {r, label};
                return res;
            }
    }
    return res;
}

std::vector<SphericityVerdict> scan(int N, int d, int max_degree) {
    if (N > 9) throw std::invalid_argument("scan: N capped at 9");
    if (max_degree < 1) throw std::invalid_argument("scan: bound < 1");
    SchubertContext probe(N, d, [&] {
        Word top(d);
        for (int j = 0; j < d; ++j) top[j] = N - d + 1 + j;
        return top;
    }());

    std::vector<SphericityVerdict> table;
    for (const Word& w : lower_interval(probe)) {
        SchubertContext ctx(N, d, w);
        SphericityVerdict v = classify(ctx);
        LeviContext levi(ctx, stabilizer_set(ctx));
        v.empirical = empirical_multiplicity_check(levi, max_degree);
        if (v.theorem_verdict == Verdict::multiplicity_free_certified &&
            !v.empirical->multiplicity_free)
            throw std::logic_error("scan: certified yet empirically violated at w = " +
                                   to_string(w));
        table.push_back(std::move(v));
    }
    return table;
}

}  // namespace schubert
