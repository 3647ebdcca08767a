#include <algorithm>
#include <map>

#include "doctest.h"
#include "schubert/decomposition.hpp"

using namespace schubert;

TEST_SUITE("decomposition") {

TEST_CASE("module data of single heads") {
    SchubertContext ctx(9, 3, {3, 6, 9});
    LeviContext levi(ctx, {1, 2, 4, 5, 7, 8});

    ReportEntry low = module_of_head({{1, 2, 3}}, levi);
    CHECK(low.shapes == std::vector<SkewShape>{{{1, 1, 1}, {}}, {}, {}});
    CHECK(low.tensor_dim == 1);
    REQUIRE(low.constituents.size() == 1);
    CHECK(low.constituents.begin()->first.parts ==
          std::vector<Partition>{{1, 1, 1}, {}, {}});
    CHECK(low.constituents.begin()->first.degree == 1);
    CHECK(low.constituents.begin()->second == 1);

    ReportEntry top = module_of_head({{3, 6, 9}}, levi);
    CHECK(top.shapes ==
          std::vector<SkewShape>{{{1}, {}}, {{1}, {}}, {{1}, {}}});
    CHECK(top.tensor_dim == 27);
    REQUIRE(top.constituents.size() == 1);
    CHECK(top.constituents.begin()->first.parts ==
          std::vector<Partition>{{1}, {1}, {1}});
}

TEST_CASE("degree-1 report of the running example") {
    SchubertContext ctx(9, 3, {3, 6, 9});
    LeviContext levi(ctx, {1, 2, 4, 5, 7, 8});
    DecompositionReport rep = decompose_degree(levi, 1);

    REQUIRE(rep.entries.size() == 5);
    std::vector<Word> order;
    std::vector<BigInt> dims;
    for (const ReportEntry& e : rep.entries) {
        REQUIRE(e.heads.size() == 1);
        order.push_back(e.heads[0]);
        dims.push_back(e.tensor_dim);
    }
    CHECK(order == std::vector<Word>{{3, 6, 9}, {3, 5, 6}, {2, 3, 9}, {2, 3, 6}, {1, 2, 3}});
    CHECK(dims == std::vector<BigInt>{27, 9, 9, 9, 1});
    CHECK(rep.total_dim == 55);
    CHECK(rep.N == 9);
    CHECK(rep.degree == 1);
    CHECK(rep.r_q == std::vector<int>{1, 2, 4, 5, 7, 8});
}

TEST_CASE("degree-2 report of the running example") {
    SchubertContext ctx(9, 3, {3, 6, 9});
    LeviContext levi(ctx, {1, 2, 4, 5, 7, 8});
    DecompositionReport rep = decompose_degree(levi, 2);

    REQUIRE(rep.entries.size() == 14);
    CHECK(rep.total_dim == 1001);

    // canonical order: strictly descending head tuples
    for (size_t i = 0; i + 1 < rep.entries.size(); ++i)
        CHECK(rep.entries[i].heads > rep.entries[i + 1].heads);

    // the head sequences partition the standard monomials
    std::map<std::vector<Word>, long long> sizes;
    for (const Monomial& m : enumerate_standard_monomials(ctx, 2)) {
        std::vector<Word> hs;
        for (const Word& f : m) hs.push_back(head_of(levi, f));
        ++sizes[hs];
    }
    REQUIRE(sizes.size() == 14);
    for (const ReportEntry& e : rep.entries) {
        REQUIRE(sizes.count(e.heads) == 1);
        CHECK(BigInt(sizes.at(e.heads)) == e.tensor_dim);
    }
}

TEST_CASE("character identity") {
    SchubertContext ctx(9, 3, {3, 6, 9});
    LeviContext levi(ctx, {1, 2, 4, 5, 7, 8});
    CHECK(character_check(levi, 1));
    CHECK(character_check(levi, 2));

    SchubertContext small(5, 2, {3, 5});
    for (const std::vector<int>& rq :
         {std::vector<int>{}, {1}, {2}, {4}, {1, 2}, {1, 2, 4}}) {
        LeviContext l(small, rq);
        CHECK(character_check(l, 1));
        CHECK(character_check(l, 2));
        CHECK(character_check(l, 3));
    }
}

TEST_CASE("single block gives the whole rectangle") {
    SchubertContext ctx(4, 2, {3, 4});
    LeviContext levi(ctx, {1, 2, 3});
    DecompositionReport rep = decompose_degree(levi, 2);
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].shapes == std::vector<SkewShape>{{{2, 2}, {}}});
    CHECK(rep.total_dim == 20);
    CHECK(rep.total_dim == count_std_monomials(ctx, 2));
}

TEST_CASE("projective space with a fully split torus") {
    SchubertContext ctx(4, 1, {4});
    LeviContext levi(ctx, {});
    DecompositionReport rep = decompose_degree(levi, 1);
    REQUIRE(rep.entries.size() == 4);
    for (const ReportEntry& e : rep.entries) CHECK(e.tensor_dim == 1);
    CHECK(rep.total_dim == 4);
}

TEST_CASE("branching of the rectangle module") {
    DecompositionReport whole = branching_of_rectangle({4}, 2, 2);
    REQUIRE(whole.entries.size() == 1);
    REQUIRE(whole.entries[0].constituents.size() == 1);
    CHECK(whole.entries[0].constituents.begin()->first.parts ==
          std::vector<Partition>{{2, 2}});
    CHECK(whole.total_dim == 20);

    DecompositionReport torus = branching_of_rectangle({1, 1, 1, 1}, 2, 1);
    REQUIRE(torus.entries.size() == 6);
    for (const ReportEntry& e : torus.entries) CHECK(e.tensor_dim == 1);
    CHECK(torus.total_dim == 6);

    DecompositionReport halves = branching_of_rectangle({2, 2}, 2, 1);
    std::vector<BigInt> dims;
    for (const ReportEntry& e : halves.entries) dims.push_back(e.tensor_dim);
    CHECK(dims == std::vector<BigInt>{1, 4, 1});
    CHECK(halves.total_dim == 6);

    CHECK_THROWS_AS(branching_of_rectangle({}, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(branching_of_rectangle({2, 0}, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(branching_of_rectangle({2, 2}, 4, 1), std::invalid_argument);
}

TEST_CASE("json round trip") {
    SchubertContext ctx(9, 3, {3, 6, 9});
    LeviContext levi(ctx, {1, 2, 4, 5, 7, 8});
    DecompositionReport rep = decompose_degree(levi, 2);

    std::string text = report_to_json(rep);
    CHECK(report_from_json(text) == rep);

    CHECK(text.find("\"total_dim\": \"1001\"") != std::string::npos);
    CHECK(text.find("\"degree\": 2") != std::string::npos);

    CHECK_THROWS_AS(report_from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(report_from_json("{}"), std::invalid_argument);
    CHECK_THROWS_AS(report_from_json(R"({"N":1,"d":1,"w":[1],"r_q":[],"degree":1,
        "entries":[],"total_dim":"abc"})"),
                    std::invalid_argument);
}

TEST_CASE("input validation") {
    SchubertContext ctx(4, 2, {3, 4});
    LeviContext levi(ctx, {1, 2, 3});
    CHECK_THROWS_AS(decompose_degree(levi, 0), std::invalid_argument);
    CHECK_THROWS_AS(character_check(levi, 0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_standard_monomials(ctx, 0), std::invalid_argument);
    CHECK_THROWS_AS(module_of_head({{2, 4}}, levi), std::invalid_argument);
}

}  // TEST_SUITE
