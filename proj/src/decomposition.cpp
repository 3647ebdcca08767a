#include "schubert/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace schubert {

std::vector<Monomial> enumerate_standard_monomials(const SchubertContext& ctx, int r) {
    if (r < 1) throw std::invalid_argument("enumerate_standard_monomials: degree < 1");
    std::vector<Word> H = lower_interval(ctx);
    std::vector<Monomial> out;
    Monomial cur;
    auto rec = [&](auto&& self) -> void {
        if ((int)cur.size() == r) {
            out.push_back(cur);
            return;
        }
        for (const Word& tau : H) {
            if (!cur.empty() && !bruhat_leq(tau, cur.back())) continue;
            cur.push_back(tau);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

ReportEntry module_of_head(const std::vector<Word>& heads, const LeviContext& levi) {
    ReportEntry entry;
    entry.heads = heads;
    entry.shapes = shapes_of_head(heads, levi);
    int s = levi.block_count();
    int r = (int)heads.size();

    entry.tensor_dim = 1;
    for (int k = 0; k < s; ++k)
        entry.tensor_dim *= weyl_dimension(entry.shapes[k], levi.block_size(k));

    // Littlewood-Richardson product across blocks; a partition with more
    // rows than the block has no nonzero module and is dropped.
    std::vector<std::pair<IrreducibleLabel, long long>> acc{{{{}, r}, 1}};
    for (int k = 0; k < s; ++k) {
        std::vector<std::pair<IrreducibleLabel, long long>> next;
        for (const auto& [nu, c] : skew_weyl_decomposition(entry.shapes[k])) {
            if ((int)nu.size() > levi.block_size(k)) continue;
            for (const auto& [label, mult] : acc) {
                IrreducibleLabel ext = label;
                ext.parts.push_back(nu);
                next.emplace_back(std::move(ext), mult * c);
            }
        }
        acc = std::move(next);
    }
    for (auto& [label, mult] : acc) entry.constituents[std::move(label)] += mult;

    BigInt recon = 0;
    for (const auto& [label, mult] : entry.constituents) {
        BigInt dim = 1;
        for (int k = 0; k < s; ++k)
            dim *= weyl_dimension({label.parts[k], {}}, levi.block_size(k));
        recon += mult * dim;
    }
    if (recon != entry.tensor_dim)
        throw std::logic_error("module_of_head: constituent dimensions disagree");
    return entry;
}

DecompositionReport decompose_degree(const LeviContext& levi, int r) {
    if (r < 1) throw std::invalid_argument("decompose_degree: degree < 1");
    DecompositionReport rep;
    rep.N = levi.ctx.N;
    rep.d = levi.ctx.d;
    rep.w = levi.ctx.w;
    rep.r_q = levi.r_q;
    rep.degree = r;
    rep.total_dim = 0;
    for (const auto& hs : standard_head_sequences(levi, r)) {
        rep.entries.push_back(module_of_head(hs, levi));
        rep.total_dim += rep.entries.back().tensor_dim;
    }
    if (rep.total_dim != count_std_monomials(levi.ctx, r))
        throw std::logic_error("decompose_degree: totals miss the monomial count");
    return rep;
}

bool character_check(const LeviContext& levi, int r) {
    if (r < 1) throw std::invalid_argument("character_check: degree < 1");
    int N = levi.ctx.N;

    std::map<std::vector<Word>, std::map<std::vector<int>, long long>> lhs;
    for (const Monomial& m : enumerate_standard_monomials(levi.ctx, r)) {
        std::vector<Word> hs;
        for (const Word& f : m) hs.push_back(head_of(levi, f));
        std::vector<int> wt(N, 0);
        for (const Word& f : m)
            for (int x : f) ++wt[x - 1];
        ++lhs[hs][wt];
    }

    for (const auto& hs : standard_head_sequences(levi, r)) {
        std::vector<SkewShape> shapes = shapes_of_head(hs, levi);
        std::map<std::vector<int>, long long> rhs{{std::vector<int>(N, 0), 1}};
        for (int k = 0; k < levi.block_count(); ++k) {
            std::map<std::vector<int>, long long> next;
            for (const auto& [content, c] : weyl_character(shapes[k], levi.block_size(k)))
                for (const auto& [wt, m] : rhs) {
                    std::vector<int> merged = wt;
                    for (int v = 0; v < levi.block_size(k); ++v)
                        merged[levi.cuts[k] + v] += content[v];
                    next[merged] += c * m;
                }
            rhs = std::move(next);
        }
        if (lhs[hs] != rhs) return false;
        lhs.erase(hs);
    }
    return lhs.empty();
}

DecompositionReport branching_of_rectangle(const std::vector<int>& block_sizes,
                                           int d, int r) {
    if (block_sizes.empty())
        throw std::invalid_argument("branching_of_rectangle: no blocks");
    for (int b : block_sizes)
        if (b < 1) throw std::invalid_argument("branching_of_rectangle: bad block size");
    int N = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
    if (d < 1 || d > N - 1)
        throw std::invalid_argument("branching_of_rectangle: d out of range");

    Word top(d);
    std::iota(top.begin(), top.end(), N - d + 1);
    std::vector<int> cuts_interior;
    int acc = 0;
    for (size_t k = 0; k + 1 < block_sizes.size(); ++k) {
        acc += block_sizes[k];
        cuts_interior.push_back(acc);
    }
    std::vector<int> r_q;
    for (int i = 1; i <= N - 1; ++i)
        if (std::find(cuts_interior.begin(), cuts_interior.end(), i) ==
            cuts_interior.end())
            r_q.push_back(i);
    LeviContext levi(SchubertContext(N, d, top), r_q);
    return decompose_degree(levi, r);
}

std::string report_to_json(const DecompositionReport& rep) {
    nlohmann::json j;
    j["N"] = rep.N;
    j["d"] = rep.d;
    j["w"] = rep.w;
    j["r_q"] = rep.r_q;
    j["degree"] = rep.degree;
    j["entries"] = nlohmann::json::array();
    for (const ReportEntry& e : rep.entries) {
        nlohmann::json je;
        je["heads"] = e.heads;
        je["shapes"] = nlohmann::json::array();
        for (const SkewShape& sh : e.shapes)
            je["shapes"].push_back({{"outer", sh.outer}, {"inner", sh.inner}});
        je["tensor_dim"] = e.tensor_dim.str();
        je["constituents"] = nlohmann::json::array();
        for (const auto& [label, mult] : e.constituents)
            je["constituents"].push_back(
                {{"parts", label.parts}, {"multiplicity", mult}});
        j["entries"].push_back(std::move(je));
    }
    j["total_dim"] = rep.total_dim.str();
    return j.dump(2);
}

DecompositionReport report_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("report_from_json: ") + e.what());
    }
    try {
        DecompositionReport rep;
        rep.N = j.at("N").get<int>();
        rep.d = j.at("d").get<int>();
        rep.w = j.at("w").get<Word>();
        rep.r_q = j.at("r_q").get<std::vector<int>>();
        rep.degree = j.at("degree").get<int>();
        for (const auto& je : j.at("entries")) {
            ReportEntry e;
            e.heads = je.at("heads").get<std::vector<Word>>();
            for (const auto& js : je.at("shapes")) {
                SkewShape sh{js.at("outer").get<Partition>(),
                             js.at("inner").get<Partition>()};
                validate_shape(sh);
                e.shapes.push_back(std::move(sh));
            }
            e.tensor_dim = BigInt(je.at("tensor_dim").get<std::string>());
            for (const auto& jc : je.at("constituents")) {
                IrreducibleLabel label{jc.at("parts").get<std::vector<Partition>>(),
                                       rep.degree};
                e.constituents[label] = jc.at("multiplicity").get<long long>();
            }
            rep.entries.push_back(std::move(e));
        }
        rep.total_dim = BigInt(j.at("total_dim").get<std::string>());
        return rep;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("report_from_json: ") + e.what());
    } catch (const std::runtime_error& e) {  // bad big-integer literals
        throw std::invalid_argument(std::string("report_from_json: ") + e.what());
    }
}

}  // namespace schubert
