#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "schubert/grassmann.hpp"

using namespace schubert;

namespace {

// Independent covering oracle: all comparable pairs with nothing strictly between.
std::vector<std::pair<Word, Word>> brute_force_covers(const SchubertContext& ctx) {
    auto nodes = lower_interval(ctx);
    std::vector<std::pair<Word, Word>> covers;
    for (const auto& a : nodes)
        for (const auto& b : nodes) {
            if (a == b || !bruhat_leq(a, b)) continue;
            bool between = false;
            for (const auto& c : nodes)
                if (c != a && c != b && bruhat_leq(a, c) && bruhat_leq(c, b)) { between = true; break; }
            if (!between) covers.emplace_back(a, b);
        }
    std::sort(covers.begin(), covers.end(), [](const auto& x, const auto& y) {
        if (x.second != y.second) return x.second < y.second;
        return x.first < y.first;
    });
    return covers;
}

}  // namespace

TEST_SUITE("grassmann") {

TEST_CASE("word validation") {
    CHECK(is_valid_word({3, 6, 9}, 3, 9));
    CHECK(!is_valid_word({3, 3, 9}, 3, 9));
    CHECK(!is_valid_word({3, 6}, 3, 9));
    CHECK(!is_valid_word({0, 6, 9}, 3, 9));
    CHECK(!is_valid_word({3, 6, 10}, 3, 9));
    CHECK_THROWS_AS(SchubertContext(9, 3, {9, 6, 3}), std::invalid_argument);
    CHECK_THROWS_AS(SchubertContext(4, 4, {1, 2, 3, 4}), std::invalid_argument);
}

TEST_CASE("bruhat_leq basics") {
    CHECK(bruhat_leq({1, 2, 4}, {3, 6, 9}));
    CHECK(!bruhat_leq({2, 5, 9}, {3, 4, 8}));
    CHECK(!bruhat_leq({3, 4, 8}, {2, 5, 9}));
    CHECK(bruhat_leq({3, 6, 9}, {3, 6, 9}));
    CHECK_THROWS_AS(bruhat_leq({1, 2}, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("bruhat_leq is a partial order on random triples") {
    std::mt19937_64 rng(2024);
    for (int N = 4; N <= 8; ++N) {
        int d = 2 + (int)(rng() % (N - 2));
        SchubertContext top(N, d, [&] {
            Word w(d);
            for (int j = 0; j < d; ++j) w[j] = N - d + 1 + j;
            return w;
        }());
        auto all = lower_interval(top);
        for (int trial = 0; trial < 200; ++trial) {
            const Word& a = all[rng() % all.size()];
            const Word& b = all[rng() % all.size()];
            const Word& c = all[rng() % all.size()];
            if (bruhat_leq(a, b) && bruhat_leq(b, a)) CHECK(a == b);
            if (bruhat_leq(a, b) && bruhat_leq(b, c)) CHECK(bruhat_leq(a, c));
            CHECK(bruhat_leq(a, a));
        }
    }
}

TEST_CASE("lower_interval sizes and order") {
    SchubertContext ex(9, 3, {3, 6, 9});
    auto iv = lower_interval(ex);
    CHECK(iv.size() == 55);
    CHECK(std::is_sorted(iv.begin(), iv.end()));
    CHECK(std::set<Word>(iv.begin(), iv.end()).size() == 55);
    for (const auto& t : iv) CHECK(bruhat_leq(t, ex.w));

    CHECK(lower_interval(SchubertContext(4, 2, {3, 4})).size() == 6);
    auto bottom = lower_interval(SchubertContext(5, 2, {1, 2}));
    CHECK(bottom == std::vector<Word>{{1, 2}});
}

TEST_CASE("hasse_diagram matches the covering oracle") {
    for (const auto& [N, d, w] : std::vector<std::tuple<int, int, Word>>{
             {4, 2, {3, 4}}, {5, 2, {2, 5}}, {6, 3, {3, 5, 6}}, {7, 3, {2, 5, 7}}}) {
        SchubertContext ctx(N, d, w);
        auto h = hasse_diagram(ctx);
        auto oracle = brute_force_covers(ctx);
        REQUIRE(h.edges.size() == oracle.size());
        for (size_t i = 0; i < oracle.size(); ++i) {
            CHECK(h.edges[i].lower == oracle[i].first);
            CHECK(h.edges[i].upper == oracle[i].second);
        }
    }
}

TEST_CASE("hasse_diagram frozen counts and labels") {
    auto h = hasse_diagram(SchubertContext(4, 2, {3, 4}));
    CHECK(h.nodes.size() == 6);
    CHECK(h.edges.size() == 6);

    auto ex = hasse_diagram(SchubertContext(9, 3, {3, 6, 9}));
    CHECK(ex.nodes.size() == 55);
    // the top node covers exactly (2,6,9), (3,5,9), (3,6,8)
    std::vector<Word> lowers;
    int label_269 = 0;
    for (const auto& e : ex.edges)
        if (e.upper == Word{3, 6, 9}) {
            lowers.push_back(e.lower);
            if (e.lower == Word{2, 6, 9}) label_269 = e.label;
        }
    CHECK(lowers == std::vector<Word>{{2, 6, 9}, {3, 5, 9}, {3, 6, 8}});
    CHECK(label_269 == 2);

    // label invariant: lower = upper with one entry x -> x-1 and label x-1
    for (const auto& e : ex.edges) {
        int diffs = 0;
        for (int j = 0; j < 3; ++j)
            if (e.lower[j] != e.upper[j]) {
                ++diffs;
                CHECK(e.lower[j] == e.upper[j] - 1);
                CHECK(e.label == e.upper[j] - 1);
            }
        CHECK(diffs == 1);
        CHECK(apply_reflection(e.upper, e.label) == e.lower);
    }
}

TEST_CASE("stabilizer_set formula and reflection criterion agree") {
    SchubertContext ex(9, 3, {3, 6, 9});
    CHECK(stabilizer_set(ex) == std::vector<int>{1, 2, 4, 5, 7, 8});

    SchubertContext top(9, 3, {7, 8, 9});
    CHECK(stabilizer_set(top) == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8});

    // determinantal pattern (t+1..d, N-t+1..N): breaks exactly at d
    SchubertContext det(8, 5, {3, 4, 5, 7, 8});
    CHECK(stabilizer_set(det) == std::vector<int>{1, 2, 3, 4, 6, 7});

    // exhaustive agreement with the reflection criterion s_m * w <= w
    for (int N = 2; N <= 7; ++N)
        for (int d = 1; d <= N - 1; ++d) {
            Word topw(d);
            for (int j = 0; j < d; ++j) topw[j] = N - d + 1 + j;
            for (const auto& w : lower_interval(SchubertContext(N, d, topw))) {
                SchubertContext ctx(N, d, w);
                auto stab = stabilizer_set(ctx);
                for (int m = 1; m <= N - 1; ++m) {
                    bool in_stab = std::find(stab.begin(), stab.end(), m) != stab.end();
                    CHECK(in_stab == bruhat_leq(apply_reflection(w, m), w));
                }
            }
        }
}

TEST_CASE("count_std_monomials") {
    CHECK(count_std_monomials(SchubertContext(4, 2, {3, 4}), 1) == 6);
    CHECK(count_std_monomials(SchubertContext(4, 2, {3, 4}), 2) == 20);
    CHECK(count_std_monomials(SchubertContext(9, 3, {3, 6, 9}), 1) == 55);
    CHECK(count_std_monomials(SchubertContext(9, 3, {3, 6, 9}), 2) == 1001);

    // r = 1 equals the interval size; brute-force chain count for r = 2, 3
    for (const auto& [N, d, w] : std::vector<std::tuple<int, int, Word>>{
             {5, 2, {3, 5}}, {6, 3, {3, 5, 6}}, {6, 2, {4, 6}}}) {
        SchubertContext ctx(N, d, w);
        auto iv = lower_interval(ctx);
        CHECK(count_std_monomials(ctx, 1) == (long long)iv.size());
        long long pairs = 0, triples = 0;
        for (const auto& a : iv)
            for (const auto& b : iv) {
                if (!bruhat_leq(b, a)) continue;
                ++pairs;
                for (const auto& c : iv)
                    if (bruhat_leq(c, b)) ++triples;
            }
        CHECK(count_std_monomials(ctx, 2) == pairs);
        CHECK(count_std_monomials(ctx, 3) == triples);
    }
}

TEST_CASE("word text round trip") {
    CHECK(to_string(Word{3, 6, 9}) == "(3,6,9)");
    CHECK(parse_word("(3,6,9)") == Word{3, 6, 9});
    CHECK(parse_word("3,6,9") == Word{3, 6, 9});
    CHECK(parse_word(" ( 1 , 12 ) ") == Word{1, 12});
    CHECK_THROWS_AS(parse_word("(3,6"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("3,,6"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("abc"), std::invalid_argument);
}

}  // TEST_SUITE
