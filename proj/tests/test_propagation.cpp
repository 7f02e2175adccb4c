#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "ctab/propagation.hpp"
#include "test_util.hpp"

using namespace ctab;
using testutil::all_compositions;
using testutil::worked_example;

namespace {

ExtendedTableau propagate_composition(const Composition& c) {
    Tableau t = build_tableau(c);
    return propagate(t, PrecedenceOrder(t));
}

}  // namespace

TEST_CASE("worked example extended grid", "[propagation]") {
    auto ext = propagate_composition(worked_example());
    REQUIRE(ext.rows() == 5);
    REQUIRE(ext.columns() == 10);
    const std::vector<std::vector<Entry>> expected{
        {1, 2, 4, 8, 11, 13, 16, 20, 21, 22},
        {0, 3, 5, 9, 12, 14, 17, 16, 20, 23},
        {0, 0, 6, 10, 9, 15, 18, 18, 18, 20},
        {0, 0, 7, 7, 7, 9, 19, 19, 19, 19},
        {0, 0, 0, 0, 0, 0, 9, 9, 9, 9},
    };
    for (int row = 1; row <= 5; ++row)
        for (int col = 1; col <= 10; ++col)
            REQUIRE(ext.at(row, col) == expected[static_cast<size_t>(row - 1)][static_cast<size_t>(col - 1)]);
    CHECK(ext.repeats().size() == 16);
    CHECK(ext.is_repeat(2, 8));
    CHECK_FALSE(ext.is_repeat(2, 7));
}

TEST_CASE("worked example trajectories and stops", "[propagation]") {
    auto ext = propagate_composition(worked_example());

    const auto& t9 = ext.trajectory(9);
    CHECK(t9.cells == std::vector<BoxCoord>{{2, 4}, {3, 5}, {4, 6}, {5, 7}, {5, 8}, {5, 9}, {5, 10}});
    CHECK(t9.stop == StopRecord{StopKind::EndOfDiagram, 0});

    const auto& t16 = ext.trajectory(16);
    CHECK(t16.cells == std::vector<BoxCoord>{{1, 7}, {2, 8}});
    CHECK(t16.stop == StopRecord{StopKind::BlockedCell, 9});

    const auto& t18 = ext.trajectory(18);
    CHECK(t18.cells == std::vector<BoxCoord>{{3, 7}, {3, 8}, {3, 9}});
    CHECK(t18.stop == StopRecord{StopKind::BlockedCell, 10});

    const auto& t19 = ext.trajectory(19);
    CHECK(t19.cells == std::vector<BoxCoord>{{4, 7}, {4, 8}, {4, 9}, {4, 10}});
    CHECK(t19.stop == StopRecord{StopKind::EndOfDiagram, 0});

    const auto& t17 = ext.trajectory(17);
    CHECK(t17.cells == std::vector<BoxCoord>{{2, 7}});
    CHECK(t17.stop == StopRecord{StopKind::BlockedCell, 8});

    const auto& t1 = ext.trajectory(1);
    CHECK(t1.stop == StopRecord{StopKind::TallColumn, 2});
}

TEST_CASE("four extra entries of (2,1,1,2,2)", "[propagation]") {
    auto ext = propagate_composition(Composition({2, 1, 1, 2, 2}));
    CHECK(ext.repeats() == std::vector<RepeatCell>{{2, 2, 2}, {3, 2, 3}, {3, 3, 4}, {6, 3, 5}});
}

TEST_CASE("last column of (2,1,1,2,1) reads 7,5,3 downward", "[propagation]") {
    auto ext = propagate_composition(Composition({2, 1, 1, 2, 1}));
    CHECK(ext.at(1, 5) == 7);
    CHECK(ext.at(2, 5) == 5);
    CHECK(ext.at(3, 5) == 3);
}

TEST_CASE("extended tableau of (1,2,1)", "[propagation]") {
    auto ext = propagate_composition(Composition({1, 2, 1}));
    const std::vector<std::vector<Entry>> expected{{1, 2, 4}, {0, 3, 2}, {0, 0, 0}};
    for (int row = 1; row <= 3; ++row)
        for (int col = 1; col <= 3; ++col)
            REQUIRE(ext.at(row, col) == expected[static_cast<size_t>(row - 1)][static_cast<size_t>(col - 1)]);
    CHECK(ext.repeats() == std::vector<RepeatCell>{{2, 2, 3}});
}

TEST_CASE("single column propagates nowhere", "[propagation]") {
    auto ext = propagate_composition(Composition({5}));
    CHECK(ext.repeats().empty());
    for (Entry e = 1; e <= 5; ++e) {
        CHECK(ext.trajectory(e).cells.size() == 1);
        CHECK(ext.trajectory(e).stop == StopRecord{StopKind::EndOfDiagram, 0});
    }
}

TEST_CASE("trajectory invariants over all small compositions", "[propagation]") {
    for (int m = 1; m <= 8; ++m) {
        for (const auto& c : all_compositions(m)) {
            Tableau t = build_tableau(c);
            PrecedenceOrder order(t);
            auto ext = propagate(t, order);
            const Diagram& d = t.diagram();
            for (Entry e = 1; e <= t.n(); ++e) {
                const Trajectory& traj = ext.trajectory(e);
                REQUIRE(traj.entry == e);
                REQUIRE(traj.cells.front() == t.box_of(e));
                // Consecutive columns, rows non-decreasing by single-row descents.
                for (size_t i = 1; i < traj.cells.size(); ++i) {
                    REQUIRE(traj.cells[i].col == traj.cells[i - 1].col + 1);
                    int drop = traj.cells[i].row - traj.cells[i - 1].row;
                    REQUIRE((drop == 0 || drop == 1));
                }
                // Placements beyond the first land strictly outside the diagram.
                for (size_t i = 1; i < traj.cells.size(); ++i)
                    REQUIRE_FALSE(d.contains(traj.cells[i].row, traj.cells[i].col));
                REQUIRE(traj.fin().row <= d.max_height() + 1);
                REQUIRE((traj.stop.blocking_col == 0) == (traj.stop.kind == StopKind::EndOfDiagram));
                if (traj.stop.kind != StopKind::EndOfDiagram)
                    REQUIRE(traj.stop.blocking_col == traj.fin().col + 1);
            }
            // The grid is exactly the union of trajectories.
            int cells = 0;
            for (Entry e = 1; e <= t.n(); ++e) cells += static_cast<int>(ext.trajectory(e).cells.size());
            int filled = 0;
            for (int row = 1; row <= ext.rows(); ++row)
                for (int col = 1; col <= ext.columns(); ++col)
                    if (ext.at(row, col) != 0) ++filled;
            REQUIRE(cells == filled);
        }
    }
}

TEST_CASE("semistandard in the precedence order", "[propagation]") {
    for (int m = 1; m <= 8; ++m) {
        for (const auto& c : all_compositions(m)) {
            Tableau t = build_tableau(c);
            PrecedenceOrder order(t);
            auto ext = propagate(t, order);
            REQUIRE(is_semistandard(ext, order));
            REQUIRE(classical_semistandard(mirror_semistandard(ext, order)));
        }
    }
}

TEST_CASE("row swap breaks semistandardness", "[propagation]") {
    Tableau t = build_tableau(worked_example());
    PrecedenceOrder order(t);
    auto ext = propagate(t, order);
    Grid g = ext.grid();
    Entry a = g.at(1, 9), b = g.at(1, 10);
    g.set(1, 9, b);
    g.set(1, 10, a);
    CHECK_FALSE(is_semistandard(g, order));
}

TEST_CASE("column swap breaks semistandardness", "[propagation]") {
    Tableau t = build_tableau(Composition({1, 2, 1}));
    PrecedenceOrder order(t);
    auto ext = propagate(t, order);
    Grid g = ext.grid();
    Entry a = g.at(1, 2), b = g.at(2, 2);
    g.set(1, 2, b);
    g.set(2, 2, a);
    CHECK_FALSE(is_semistandard(g, order));
}

TEST_CASE("composition map golden values", "[propagation]") {
    CHECK(composition_map(Composition({2, 1})) == std::vector<Entry>{3, 2, 0});
    CHECK(composition_map(Composition({1, 1})) == std::vector<Entry>{2, 1});
    CHECK(composition_map(Composition({1, 2, 4, 3, 2, 3, 4, 1, 1})) == std::vector<Entry>{21, 20, 18, 19, 9});
    CHECK(composition_map(worked_example()) == std::vector<Entry>{22, 23, 20, 19, 9});
    CHECK(composition_map(Composition({2, 1, 1, 2, 1})) == std::vector<Entry>{7, 5, 3});
    CHECK(composition_map(Composition({3})) == std::vector<Entry>{1, 2, 3, 0});
}

TEST_CASE("composition map equals explicit tall probe and stabilises", "[propagation]") {
    for (int m = 1; m <= 8; ++m) {
        for (const auto& c : all_compositions(m)) {
            auto r = composition_map(c);
            Diagram d(c);
            const int s = d.max_height();
            REQUIRE(static_cast<int>(r.size()) == s + 1);
            for (int probe : {s + 2, s + 5}) {
                std::vector<int> parts = c.parts();
                parts.push_back(probe);
                Tableau t = build_tableau(Composition(parts));
                PrecedenceOrder order(t);
                auto ext = propagate(t, order);
                std::vector<Entry> probed(static_cast<size_t>(s) + 1, 0);
                for (Entry e = 1; e <= c.n(); ++e) {
                    const auto& stop = ext.trajectory(e).stop;
                    if (stop.kind == StopKind::TallColumn && stop.blocking_col == c.columns() + 1)
                        probed[static_cast<size_t>(ext.trajectory(e).fin().row) - 1] = e;
                }
                REQUIRE(probed == r);
            }
        }
    }
}

TEST_CASE("nonzero composition map values are pairwise distinct", "[propagation]") {
    for (int m = 1; m <= 8; ++m) {
        for (const auto& c : all_compositions(m)) {
            auto r = composition_map(c);
            std::set<Entry> seen;
            for (Entry v : r)
                if (v != 0) REQUIRE(seen.insert(v).second);
        }
    }
}
