#include <doctest.h>

#include <random>

#include "kp/gadgets.hpp"
#include "kp/oracle.hpp"
#include "support/brute_force.hpp"

using namespace kp;

TEST_CASE("oracle_min_knocks: reference values") {
    CHECK(oracle_min_knocks(BlockSet::full({2, 2})) == 1);
    CHECK(oracle_min_knocks(BlockSet::full({3, 3})) == 2);
    CHECK(oracle_min_knocks(BlockSet::full({1, 6})) == 0);
    CHECK(oracle_min_knocks(BlockSet(GridHull(3, 3))) == 0);
    CHECK(oracle_min_knocks(BlockSet::full({3, 4})) == 3);
}

TEST_CASE("oracle_min_knocks: cell limit") {
    CHECK_THROWS_AS(oracle_min_knocks(BlockSet::full({4, 4})), std::invalid_argument);
    CHECK(oracle_min_knocks(BlockSet::full({4, 4}), 16) == 5);
}

TEST_CASE("StateKey") {
    const BlockSet a(GridHull(3, 3), {{0, 0}, {2, 2}});
    const BlockSet b(GridHull(3, 3), {{2, 2}, {0, 0}});
    CHECK(StateKey::of(a) == StateKey::of(b));
    CHECK_FALSE(StateKey::of(a) == StateKey::of(a.without({0, 0})));
    CHECK(StateKeyHash{}(StateKey::of(a)) == StateKeyHash{}(StateKey::of(b)));
    CHECK(StateKey::of(BlockSet::full({9, 9})).words.size() == 2);
}

TEST_CASE("property: oracle respects the face bounds") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 300; ++trial) {
        const BlockSet b = testing::random_instance(rng, testing::random_hull(rng, 4, 4), 0.75);
        const std::size_t faces = enumerate_faces(clean(b).cleaned).size();
        const std::size_t k = oracle_min_knocks(b, 16);
        CHECK(k >= (faces + 1) / 2);
        CHECK(k <= faces);
    }
}

TEST_CASE("property: eager cleanup agrees with a free pick/knock search") {
    std::mt19937_64 rng(52);
    int checked = 0;
    while (checked < 300) {
        const BlockSet b = testing::random_instance(rng, testing::random_hull(rng, 3, 4), 0.7);
        if (b.size() > 8)
            continue;
        ++checked;
        CHECK(static_cast<int>(oracle_min_knocks(b)) == testing::non_eager_min_knocks(b));
    }
}

TEST_CASE("enumerate_instances") {
    const auto all = enumerate_instances({3, 3}, EnumerationSpec::exhaustive());
    CHECK(all.size() == 512);
    std::set<std::string> distinct;
    for (const BlockSet& b : all)
        distinct.insert(format_instance(b));
    CHECK(distinct.size() == 512);

    const auto s1 = enumerate_instances({3, 4}, EnumerationSpec::sampled(50, 7));
    const auto s2 = enumerate_instances({3, 4}, EnumerationSpec::sampled(50, 7));
    CHECK(s1 == s2);
    CHECK(s1.size() == 50);
    CHECK_THROWS_AS(enumerate_instances({5, 5}, EnumerationSpec::exhaustive()), std::invalid_argument);
}

TEST_CASE("certify_equivalence") {
    SUBCASE("every subset of the 3x3 hull") {
        const auto r = certify_equivalence({3, 3}, EnumerationSpec::exhaustive());
        CHECK(r.checked == 512);
        CHECK(r.ok());
    }
    SUBCASE("sampled 3x4") {
        const auto r = certify_equivalence({3, 4}, EnumerationSpec::sampled(200, 2024));
        CHECK(r.checked == 200);
        CHECK(r.ok());
    }
    SUBCASE("every subset of the 3x4 and 4x3 hulls") {
        CHECK(certify_equivalence({3, 4}, EnumerationSpec::exhaustive()).ok());
        CHECK(certify_equivalence({4, 3}, EnumerationSpec::exhaustive()).ok());
    }
    SUBCASE("empty hull subset") {
        const auto r = certify_equivalence({1, 1}, EnumerationSpec::exhaustive());
        CHECK(r.checked == 2);
        CHECK(r.ok());
    }
    SUBCASE("oversize instances are reported, not thrown") {
        const auto r = certify_equivalence({4, 4}, EnumerationSpec::sampled(20, 3), 4);
        CHECK_FALSE(r.ok());
        CHECK(r.mismatches.front().detail.find("limit") != std::string::npos);
    }
}
