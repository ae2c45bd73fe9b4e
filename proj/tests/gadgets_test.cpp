#include <doctest.h>

#include <random>

#include "kp/gadgets.hpp"
#include "support/brute_force.hpp"

using namespace kp;

namespace {

BlockSet isolated(const Gadget& g, GridHull hull) {
    return BlockSet(hull, gadget_cells(g));
}

std::vector<Face> faces_from(std::initializer_list<GridCoord> anchors) {
    std::vector<Face> out;
    for (GridCoord a : anchors)
        out.push_back(Face{a});
    return out;
}

}  // namespace

TEST_CASE("enumerate_faces") {
    CHECK(enumerate_faces(BlockSet::full({3, 3})) == faces_from({{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
    CHECK(enumerate_faces(BlockSet::full({20, 20})).size() == 361);
    CHECK(enumerate_faces(BlockSet(GridHull(3, 3), {{0, 0}, {0, 1}, {1, 0}})).empty());
    CHECK(enumerate_faces(BlockSet(GridHull(1, 1))).empty());
}

TEST_CASE("property: face count matches brute-force 2x2 windows; full grids give (m-1)(n-1)") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        const BlockSet b = testing::random_instance(rng, testing::random_hull(rng, 8, 8), 0.75);
        CHECK(static_cast<int>(enumerate_faces(b).size()) == testing::count_faces(testing::cells_of(b)));
    }
    for (int m = 1; m <= 9; ++m)
        for (int n = 1; n <= 9; ++n)
            CHECK(enumerate_faces(BlockSet::full({m, n})).size() == static_cast<std::size_t>((m - 1) * (n - 1)));
}

TEST_CASE("gadget_faces") {
    CHECK(gadget_faces({GadgetKind::Square, {2, 3}}) == faces_from({{2, 3}}));
    CHECK(gadget_faces({GadgetKind::Horizontal, {0, 0}}) == faces_from({{0, 0}, {0, 1}}));
    CHECK(gadget_faces({GadgetKind::Vertical, {1, 0}}) == faces_from({{1, 0}, {2, 0}}));
}

TEST_CASE("gadget_cells shapes") {
    CHECK(gadget_cells({GadgetKind::Square, {0, 0}}).size() == 4);
    const auto h = gadget_cells({GadgetKind::Horizontal, {1, 2}});
    CHECK(h == std::vector<GridCoord>{{1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {2, 4}});
    const auto v = gadget_cells({GadgetKind::Vertical, {1, 2}});
    CHECK(v == std::vector<GridCoord>{{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}, {3, 3}});
}

TEST_CASE("candidates") {
    const auto sq = candidates({GadgetKind::Square, {0, 0}});
    CHECK(std::set<GridCoord>(sq.begin(), sq.end()) == std::set<GridCoord>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CHECK(candidates({GadgetKind::Horizontal, {0, 0}}) == std::vector<GridCoord>{{0, 1}, {1, 1}});
    CHECK(candidates({GadgetKind::Vertical, {0, 0}}) == std::vector<GridCoord>{{1, 0}, {1, 1}});
}

TEST_CASE("adjacent face unions are exactly the two-face gadgets") {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            std::set<GridCoord> right;
            std::set<GridCoord> below;
            for (GridCoord c : face_cells(Face{{i, j}})) {
                right.insert(c);
                below.insert(c);
            }
            for (GridCoord c : face_cells(Face{{i, j + 1}}))
                right.insert(c);
            for (GridCoord c : face_cells(Face{{i + 1, j}}))
                below.insert(c);
            const auto h = gadget_cells({GadgetKind::Horizontal, {i, j}});
            const auto v = gadget_cells({GadgetKind::Vertical, {i, j}});
            CHECK(right == std::set<GridCoord>(h.begin(), h.end()));
            CHECK(below == std::set<GridCoord>(v.begin(), v.end()));
        }
}

TEST_CASE("enumerate_gadgets derives two-face gadgets from face pairs") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 200; ++trial) {
        const BlockSet b = testing::random_instance(rng, testing::random_hull(rng, 7, 7), 0.8);
        std::set<Gadget> scanned;
        for (int i = 0; i < b.hull().rows; ++i)
            for (int j = 0; j < b.hull().cols; ++j)
                for (GadgetKind k : {GadgetKind::Square, GadgetKind::Horizontal, GadgetKind::Vertical}) {
                    const Gadget g{k, {i, j}};
                    bool all = true;
                    for (GridCoord c : gadget_cells(g))
                        all = all && b.contains(c);
                    if (all)
                        scanned.insert(g);
                }
        const auto listed = enumerate_gadgets(b);
        CHECK(std::set<Gadget>(listed.begin(), listed.end()) == scanned);
    }
}

TEST_CASE("gadgets in isolation have no pickable cell") {
    for (GadgetKind k : {GadgetKind::Square, GadgetKind::Horizontal, GadgetKind::Vertical}) {
        const Gadget g{k, {1, 1}};
        const BlockSet b = isolated(g, {5, 5});
        for (GridCoord v : b.occupied())
            CHECK_FALSE(is_pickable(b, v));
    }
}

TEST_CASE("knock_then_clean_empties") {
    const GridHull hull(4, 5);
    SUBCASE("isolated square, any cell") {
        const Gadget g{GadgetKind::Square, {1, 1}};
        for (GridCoord v : gadget_cells(g))
            CHECK(knock_then_clean_empties(isolated(g, hull), g, v));
    }
    SUBCASE("two-face gadgets, every candidate") {
        for (GadgetKind k : {GadgetKind::Horizontal, GadgetKind::Vertical}) {
            const Gadget g{k, {0, 0}};
            for (GridCoord v : candidates(g))
                CHECK(knock_then_clean_empties(isolated(g, hull), g, v));
        }
    }
    SUBCASE("corner of a horizontal gadget leaves its other face standing") {
        // Replayed by hand: removing (0,0) leaves the pendant (1,0), whose pick
        // leaves face(0,1) intact.
        const Gadget g{GadgetKind::Horizontal, {0, 0}};
        CHECK_FALSE(knock_then_clean_empties(isolated(g, hull), g, {0, 0}));
        CHECK_FALSE(knock_then_clean_empties(isolated(g, hull), g, {1, 2}));
    }
    SUBCASE("errors") {
        const Gadget g{GadgetKind::Square, {0, 0}};
        CHECK_THROWS_AS(knock_then_clean_empties(isolated(g, hull), g, {3, 3}), std::invalid_argument);
        CHECK_THROWS_AS(knock_then_clean_empties(BlockSet(hull), g, {0, 0}), std::invalid_argument);
    }
}

TEST_CASE("property: deleting a knockable cell destroys at most two faces") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const BlockSet b = testing::random_instance(rng, testing::random_hull(rng, 6, 6), 0.8);
        const auto before = enumerate_faces(b).size();
        const auto gadgets = enumerate_gadgets(b);
        for (GridCoord v : b.occupied()) {
            if (!is_knockable(b, v))
                continue;
            const auto lost = before - enumerate_faces(b.without(v)).size();
            CHECK(lost <= 2);
            bool shared = false;
            for (const Gadget& g : gadgets)
                if (g.kind != GadgetKind::Square) {
                    const auto c = candidates(g);
                    shared = shared || std::find(c.begin(), c.end(), v) != c.end();
                }
            CHECK((lost == 2) == shared);
        }
    }
}
