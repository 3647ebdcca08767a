#include "doctest.h"

#include <algorithm>
#include <set>

#include "schubert/levi.hpp"

using namespace schubert;

namespace {

SchubertContext running_example() { return SchubertContext(9, 3, {3, 6, 9}); }

Word top_word(int N, int d) {
    Word w(d);
    for (int j = 0; j < d; ++j) w[j] = N - d + 1 + j;
    return w;
}

// Climbing oracle: raise entries of each block to the top of the block one
// reflection at a time, checking each step uses an index inside r_q.
Word head_by_climbing(const LeviContext& levi, Word tau) {
    for (int k = 0; k < levi.block_count(); ++k) {
        int hi = levi.cuts[k + 1];
        int count = 0;
        for (int x : tau)
            if (levi.block_of(x) == k) ++count;
        // push the largest block entry up first so entries never collide
        for (int target = hi; target > hi - count; --target) {
            int have = -1;
            for (int x : tau)
                if (levi.block_of(x) == k && x <= target &&
                    std::find(tau.begin(), tau.end(), target) == tau.end())
                    have = std::max(have, x);
            if (have < 0) continue;
            for (int v = have; v < target; ++v) {
                REQUIRE(std::binary_search(levi.r_q.begin(), levi.r_q.end(), v));
                tau = apply_reflection(tau, v);
            }
        }
    }
    return tau;
}

std::vector<std::vector<int>> subsets_of(const std::vector<int>& base) {
    std::vector<std::vector<int>> out;
    for (size_t mask = 0; mask < (size_t(1) << base.size()); ++mask) {
        std::vector<int> s;
        for (size_t b = 0; b < base.size(); ++b)
            if (mask >> b & 1) s.push_back(base[b]);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

TEST_SUITE("levi") {

TEST_CASE("context construction and blocks") {
    LeviContext levi = levi_of_schubert(running_example());
    CHECK(levi.r_q == std::vector<int>{1, 2, 4, 5, 7, 8});
    CHECK(levi.cuts == std::vector<int>{0, 3, 6, 9});
    CHECK(levi.block_count() == 3);
    CHECK(levi.block_size(0) == 3);
    CHECK(levi.block_of(1) == 0);
    CHECK(levi.block_of(3) == 0);
    CHECK(levi.block_of(4) == 1);
    CHECK(levi.block_of(9) == 2);
    // reflection 3 crosses a block boundary of the stabilizer; must reject
    CHECK_THROWS_AS(LeviContext(running_example(), {1, 3}), std::invalid_argument);
}

TEST_CASE("class_of") {
    LeviContext levi = levi_of_schubert(running_example());
    CHECK(class_of(levi, {2, 3, 6}) == std::vector<int>{1, 1, 2});
    CHECK(class_of(levi, {1, 2, 3}) == std::vector<int>{1, 1, 1});
    CHECK(class_of(levi, {3, 5, 9}) == std::vector<int>{1, 2, 3});
}

TEST_CASE("is_head and heads") {
    LeviContext levi = levi_of_schubert(running_example());
    CHECK(is_head(levi, {2, 3, 6}));
    CHECK(!is_head(levi, {1, 2, 4}));
    CHECK(is_head(levi, {1, 2, 3}));
    CHECK(heads(levi) == std::vector<Word>{{1, 2, 3}, {2, 3, 6}, {2, 3, 9}, {3, 5, 6}, {3, 6, 9}});

    // single block: only the top-packed word below w is a head
    LeviContext single(SchubertContext(4, 2, {3, 4}), {1, 2, 3});
    CHECK(heads(single) == std::vector<Word>{{3, 4}});
}

TEST_CASE("head_of closed form, climbing oracle, idempotence") {
    LeviContext levi = levi_of_schubert(running_example());
    CHECK(head_of(levi, {2, 5, 9}) == Word{3, 6, 9});
    CHECK(head_of(levi, {1, 2, 4}) == Word{2, 3, 6});
    for (const auto& theta : heads(levi)) CHECK(head_of(levi, theta) == theta);

    for (const auto& tau : lower_interval(levi.ctx)) {
        Word h = head_of(levi, tau);
        CHECK(h == head_by_climbing(levi, tau));
        CHECK(is_head(levi, h));
        CHECK(bruhat_leq(tau, h));
        CHECK(class_of(levi, h) == class_of(levi, tau));
    }
}

TEST_CASE("head criteria agree: top-packing, stabilizer, weight dominance") {
    for (int N = 4; N <= 8; ++N) {
        int d = N / 2;
        SchubertContext top(N, d, top_word(N, d));
        auto all = lower_interval(top);
        for (const auto& r_q : subsets_of(stabilizer_set(top))) {
            LeviContext levi(top, r_q);
            for (const auto& tau : all) {
                bool by_packing = is_head(levi, tau);

                // stabilizer criterion: the reflections of r_q stabilize tau
                auto tau_stab = stabilizer_set(SchubertContext(N, d, tau));
                bool by_stab = std::includes(tau_stab.begin(), tau_stab.end(), r_q.begin(),
                                             r_q.end());

                // weight criterion: -1 at positions of tau, non-increasing in blocks
                std::vector<int> wt(N, 0);
                for (int x : tau) wt[x - 1] = -1;
                bool by_weight = true;
                for (int k = 0; k < levi.block_count(); ++k)
                    for (int v = levi.cuts[k] + 1; v < levi.cuts[k + 1]; ++v)
                        if (wt[v - 1] < wt[v]) by_weight = false;

                CHECK(by_packing == by_stab);
                CHECK(by_packing == by_weight);
            }
        }
    }
}

TEST_CASE("hasse_partition of the running example") {
    LeviContext levi = levi_of_schubert(running_example());
    auto parts = hasse_partition(levi);
    REQUIRE(parts.size() == 5);
    auto hs = heads(levi);
    for (const auto& theta : hs) CHECK(parts.count(theta) == 1);

    CHECK(parts[{1, 2, 3}] == std::vector<Word>{{1, 2, 3}});

    size_t total = 0;
    std::set<Word> seen;
    for (const auto& [theta, members] : parts) {
        total += members.size();
        for (const auto& t : members) {
            CHECK(seen.insert(t).second);
            CHECK(head_of(levi, t) == theta);
            CHECK(bruhat_leq(t, theta));
        }
    }
    CHECK(total == 55);
    CHECK(parts[{3, 6, 9}].size() == 27);
    CHECK(parts[{2, 3, 6}].size() == 9);
    CHECK(parts[{2, 3, 9}].size() == 9);
    CHECK(parts[{3, 5, 6}].size() == 9);

    // figure spot checks
    auto member_of = [&](const Word& t) {
        for (const auto& [theta, members] : parts)
            if (std::find(members.begin(), members.end(), t) != members.end()) return theta;
        return Word{};
    };
    CHECK(member_of({2, 5, 9}) == Word{3, 6, 9});
    CHECK(member_of({1, 2, 4}) == Word{2, 3, 6});
}

TEST_CASE("hasse_partition equals head_of fibers for assorted contexts") {
    for (const auto& [N, d, w] : std::vector<std::tuple<int, int, Word>>{
             {6, 3, {4, 5, 6}}, {6, 2, {3, 6}}, {7, 3, {3, 5, 7}}}) {
        SchubertContext ctx(N, d, w);
        for (const auto& r_q : subsets_of(stabilizer_set(ctx))) {
            LeviContext levi(ctx, r_q);
            auto parts = hasse_partition(levi);
            std::map<Word, std::vector<Word>> fibers;
            for (const auto& tau : lower_interval(ctx)) fibers[head_of(levi, tau)].push_back(tau);
            CHECK(parts == fibers);
        }
    }
}

TEST_CASE("str_compare") {
    std::vector<Word> a{{3, 6, 9}, {1, 2, 3}};
    std::vector<Word> b{{2, 3, 6}, {2, 3, 6}};
    CHECK(str_compare(a, a) == SeqOrder::equal);
    CHECK(str_compare(a, b) == SeqOrder::greater);
    CHECK(str_compare(b, a) == SeqOrder::less);
    std::vector<Word> c{{2, 3, 9}, {1, 2, 3}};
    std::vector<Word> d{{3, 5, 6}, {1, 2, 3}};
    CHECK(str_compare(c, d) == SeqOrder::incomparable);
    // first comparable difference decides even if later entries disagree wildly
    std::vector<Word> e{{3, 6, 9}, {1, 2, 3}};
    std::vector<Word> f{{2, 3, 6}, {3, 5, 6}};
    CHECK(str_compare(e, f) == SeqOrder::greater);
    CHECK_THROWS_AS(str_compare(a, std::vector<Word>{{1, 2, 3}}), std::invalid_argument);
}

TEST_CASE("standard_head_sequences") {
    LeviContext levi = levi_of_schubert(running_example());
    auto r1 = standard_head_sequences(levi, 1);
    REQUIRE(r1.size() == 5);
    auto r2 = standard_head_sequences(levi, 2);
    CHECK(r2.size() == 14);

    // oracle: brute force over all ordered pairs of heads
    auto hs = heads(levi);
    std::set<std::vector<Word>> expected;
    for (const auto& a : hs)
        for (const auto& b : hs)
            if (bruhat_leq(b, a)) expected.insert({a, b});
    CHECK(std::set<std::vector<Word>>(r2.begin(), r2.end()) == expected);

    // descending lexicographic enumeration, no duplicates
    CHECK(std::is_sorted(r2.begin(), r2.end(), std::greater<>()));
    for (const auto& seq : r2) CHECK(bruhat_leq(seq[1], seq[0]));

    // single-block Levi: exactly one sequence (w, ..., w)
    LeviContext single(SchubertContext(4, 2, {3, 4}), {1, 2, 3});
    for (int r = 1; r <= 3; ++r) {
        auto seqs = standard_head_sequences(single, r);
        REQUIRE(seqs.size() == 1);
        CHECK(seqs[0] == std::vector<Word>(r, Word{3, 4}));
    }
}

TEST_CASE("head monotonicity along the order") {
    for (int N = 5; N <= 8; ++N) {
        int d = (N <= 6) ? 2 : 3;
        SchubertContext top(N, d, top_word(N, d));
        auto all = lower_interval(top);
        for (const auto& r_q : subsets_of(stabilizer_set(top))) {
            LeviContext levi(top, r_q);
            std::vector<Word> hd(all.size());
            for (size_t i = 0; i < all.size(); ++i) hd[i] = head_of(levi, all[i]);
            for (size_t i = 0; i < all.size(); ++i)
                for (size_t j = 0; j < all.size(); ++j)
                    if (bruhat_leq(all[i], all[j])) CHECK(bruhat_leq(hd[i], hd[j]));
        }
    }
}

TEST_CASE("distinct heads have distinct classes") {
    LeviContext levi = levi_of_schubert(running_example());
    std::set<std::vector<int>> classes;
    for (const auto& theta : heads(levi)) CHECK(classes.insert(class_of(levi, theta)).second);
}

}  // TEST_SUITE
