#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <numeric>

#include "ctab/core.hpp"

using namespace ctab;

namespace {

std::vector<std::vector<Entry>> columns_of(const Tableau& t) {
    std::vector<std::vector<Entry>> cols;
    const Diagram& d = t.diagram();
    for (int c = 1; c <= d.columns(); ++c) {
        std::vector<Entry> column;
        for (int r = 1; r <= d.height(c); ++r) column.push_back(t.at(r, c));
        cols.push_back(column);
    }
    return cols;
}

// Every composition of m, as bit splits of m-1 gaps, in ascending mask order.
std::vector<Composition> all_compositions(int m) {
    std::vector<Composition> out;
    const int gaps = m - 1;
    for (unsigned mask = 0; mask < (1u << gaps); ++mask) {
        std::vector<int> parts;
        int run = 1;
        for (int g = 0; g < gaps; ++g) {
            if (mask & (1u << g)) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        out.emplace_back(std::move(parts));
    }
    return out;
}

}  // namespace

TEST_CASE("composition validation", "[core]") {
    CHECK_THROWS_AS(Composition({}), std::invalid_argument);
    CHECK_THROWS_AS(Composition({1, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Composition({-3}), std::invalid_argument);
    CHECK_THROWS_AS(Composition({4096, 1}), std::invalid_argument);
    CHECK_NOTHROW(Composition({4096}));
    CHECK(Composition({1, 2, 4}).n() == 7);
}

TEST_CASE("composition parsing", "[core]") {
    CHECK(Composition::parse("1,2,4,3") == Composition({1, 2, 4, 3}));
    CHECK(Composition::parse("1 2  4\t3") == Composition({1, 2, 4, 3}));
    CHECK(Composition::parse(" 5 ") == Composition({5}));
    CHECK_THROWS_AS(Composition::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("1,x,2"), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("1,2.5"), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("0,3"), std::invalid_argument);
}

TEST_CASE("tableau numbering goes down columns left to right", "[core]") {
    auto t = build_tableau(Composition({1, 2, 1}));
    CHECK(columns_of(t) == std::vector<std::vector<Entry>>{{1}, {2, 3}, {4}});

    auto single = build_tableau(Composition({5}));
    CHECK(columns_of(single) == std::vector<std::vector<Entry>>{{1, 2, 3, 4, 5}});

    auto worked = build_tableau(Composition({1, 2, 4, 3, 2, 3, 4, 1, 1, 2}));
    auto cols = columns_of(worked);
    REQUIRE(cols.size() == 10);
    CHECK(cols[2] == std::vector<Entry>{4, 5, 6, 7});
    CHECK(cols[6] == std::vector<Entry>{16, 17, 18, 19});
    CHECK(cols[9] == std::vector<Entry>{22, 23});
    CHECK(worked.box_of(18) == BoxCoord{3, 7});
    CHECK(worked.at(2, 10) == 23);
}

TEST_CASE("box_of inverts at", "[core]") {
    for (int m = 1; m <= 7; ++m) {
        for (const auto& c : all_compositions(m)) {
            auto t = build_tableau(c);
            const Diagram& d = t.diagram();
            for (int col = 1; col <= d.columns(); ++col)
                for (int row = 1; row <= d.height(col); ++row) {
                    BoxCoord b = t.box_of(t.at(row, col));
                    REQUIRE(b == BoxCoord{row, col});
                }
        }
    }
}

TEST_CASE("precedence order ranks columns right to left", "[core]") {
    auto t = build_tableau(Composition({1, 2, 1}));
    PrecedenceOrder o(t);
    CHECK(o.sequence() == std::vector<Entry>{4, 2, 3, 1});
    CHECK(o.first() == 4);
    CHECK(o.precedes(4, 2));
    CHECK(o.precedes(2, 3));
    CHECK_FALSE(o.precedes(1, 3));

    auto t2 = build_tableau(Composition({2, 2, 1, 1}));
    PrecedenceOrder o2(t2);
    CHECK(o2.sequence() == std::vector<Entry>{6, 5, 3, 4, 1, 2});
    CHECK(o2.first() == 6);
}

TEST_CASE("precedence order is a bijection on entries", "[core]") {
    for (int m = 1; m <= 7; ++m) {
        for (const auto& c : all_compositions(m)) {
            auto t = build_tableau(c);
            PrecedenceOrder o(t);
            REQUIRE(static_cast<int>(o.sequence().size()) == t.n());
            std::vector<bool> seen(static_cast<size_t>(t.n()) + 1, false);
            for (Entry e : o.sequence()) {
                REQUIRE(e >= 1);
                REQUIRE(e <= t.n());
                REQUIRE_FALSE(seen[static_cast<size_t>(e)]);
                seen[static_cast<size_t>(e)] = true;
            }
            for (Entry e = 1; e <= t.n(); ++e) REQUIRE(o.sequence()[static_cast<size_t>(o.rank(e))] == e);
        }
    }
}

TEST_CASE("left neighbour is the rightmost same-height column", "[core]") {
    Diagram d(Composition({2, 1, 1, 2, 1}));
    CHECK_FALSE(left_neighbor(d, 1).has_value());
    CHECK_FALSE(left_neighbor(d, 2).has_value());
    CHECK(left_neighbor(d, 3) == 2);
    CHECK(left_neighbor(d, 4) == 1);
    CHECK(left_neighbor(d, 5) == 3);
    CHECK_THROWS_AS(left_neighbor(d, 0), std::out_of_range);
    CHECK_THROWS_AS(left_neighbor(d, 6), std::out_of_range);
}

TEST_CASE("neighbouring pairs of the worked example", "[core]") {
    Diagram d(Composition({1, 2, 4, 3, 2, 3, 4, 1, 1, 2}));
    auto pairs = neighboring_pairs(d);
    std::vector<NeighborPair> expected{
        {2, 5, 2}, {4, 6, 3}, {3, 7, 4}, {1, 8, 1}, {8, 9, 1}, {5, 10, 2},
    };
    REQUIRE(pairs.size() == expected.size());
    for (const auto& p : expected)
        CHECK(std::find(pairs.begin(), pairs.end(), p) != pairs.end());
    // Sorted by right column.
    for (size_t i = 1; i < pairs.size(); ++i) CHECK(pairs[i - 1].right_col < pairs[i].right_col);
}

TEST_CASE("pair count equals surplus of repeated heights", "[core]") {
    for (int m = 1; m <= 8; ++m) {
        for (const auto& c : all_compositions(m)) {
            Diagram d(c);
            std::map<int, int> by_height;
            for (int h : d.heights()) ++by_height[h];
            int expected = 0;
            for (auto [h, count] : by_height) expected += count - 1;
            REQUIRE(static_cast<int>(neighboring_pairs(d).size()) == expected);
        }
    }
}

TEST_CASE("diagram membership is arithmetic", "[core]") {
    Diagram d(Composition({3, 1, 2}));
    CHECK(d.contains(1, 1));
    CHECK(d.contains(3, 1));
    CHECK_FALSE(d.contains(4, 1));
    CHECK_FALSE(d.contains(2, 2));
    CHECK(d.contains(2, 3));
    CHECK_FALSE(d.contains(1, 4));
    CHECK_FALSE(d.contains(0, 1));
    CHECK(d.max_height() == 3);
    CHECK(d.boxes() == 6);
}

TEST_CASE("composition prefixes", "[core]") {
    Composition c({1, 2, 4, 3});
    CHECK(c.prefix(2) == Composition({1, 2}));
    CHECK(c.prefix(4) == c);
    CHECK_THROWS_AS(c.prefix(0), std::invalid_argument);
    CHECK_THROWS_AS(c.prefix(5), std::invalid_argument);
}
