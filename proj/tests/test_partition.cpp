#include <catch2/catch_amalgamated.hpp>

#include "ferrers/bigint.hpp"
#include "ferrers/partition.hpp"

using namespace ferrers;

namespace {

// Independent route for the dual: count the boxes of each column directly.
Partition dual_by_column_count(const Partition& p) {
    std::vector<int> cols;
    for (int j = 1; j <= p.m(); ++j) {
        int height = 0;
        for (int i = 1; i <= p.n(); ++i)
            if (p.part(i) >= j) ++height;
        cols.push_back(height);
    }
    return Partition{cols};
}

}  // namespace

TEST_CASE("validate_partition accepts and annotates valid input") {
    Partition p = validate_partition({6, 4, 4, 2, 1});
    CHECK(p.n() == 5);
    CHECK(p.m() == 6);
    CHECK(p.weight() == 17);
    CHECK(p.s() == 4);

    Partition one = validate_partition({1});
    CHECK(one.n() == 1);
    CHECK(one.m() == 1);
    CHECK(one.weight() == 1);
    CHECK(one.s() == 0);
}

TEST_CASE("validate_partition reports the first violation") {
    try {
        validate_partition({3, 4});
        FAIL("expected rejection");
    } catch (const invalid_partition& e) {
        CHECK(e.index == 2);
    }
    try {
        validate_partition({});
        FAIL("expected rejection");
    } catch (const invalid_partition& e) {
        CHECK(e.index == 0);
    }
    try {
        validate_partition({2, 0});
        FAIL("expected rejection");
    } catch (const invalid_partition& e) {
        CHECK(e.index == 2);
    }
    CHECK_THROWS_AS(validate_partition({-1}), invalid_partition);
}

TEST_CASE("dual partition") {
    CHECK(dual(validate_partition({6, 4, 4, 2, 1})).parts == std::vector<int>{5, 4, 3, 3, 1, 1});
    CHECK(dual(validate_partition({4, 3, 2, 1})).parts == std::vector<int>{4, 3, 2, 1});
    CHECK(dual(validate_partition({5})).parts == std::vector<int>{1, 1, 1, 1, 1});

    for_each_partition_up_to_weight(10, [](const Partition& p) {
        CHECK(dual(p) == dual_by_column_count(p));
        CHECK(dual(dual(p)) == p);
        CHECK(dual(p).part(1) == p.n());
        if (p.m() >= 2) CHECK(p.s() == dual(p).part(2));
    });
}

TEST_CASE("corner data") {
    CornerData c = corners(validate_partition({6, 4, 4, 2, 1}));
    CHECK(c.t == 4);
    CHECK(c.outer == std::vector<std::pair<int, int>>{{1, 6}, {3, 4}, {4, 2}, {5, 1}});
    CHECK(c.inner == std::vector<std::pair<int, int>>{{1, 4}, {3, 2}, {4, 1}});
    CHECK(c.j == std::vector<int>{0, 1, 3, 4, 5});

    CornerData single = corners(validate_partition({7}));
    CHECK(single.t == 1);
    CHECK(single.outer == std::vector<std::pair<int, int>>{{1, 7}});
    CHECK(single.inner.empty());

    CornerData staircase = corners(validate_partition({4, 3, 2, 1}));
    CHECK(staircase.outer == std::vector<std::pair<int, int>>{{1, 4}, {2, 3}, {3, 2}, {4, 1}});
    CHECK(staircase.inner == std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {3, 1}});

    // the corner rectangles tile the diagram
    for_each_partition_up_to_weight(12, [](const Partition& p) {
        CornerData cd = corners(p);
        long long area = 0;
        for (int i = 1; i <= cd.t; ++i)
            area += static_cast<long long>(cd.j[i] - cd.j[i - 1]) * cd.outer[i - 1].second;
        CHECK(area == p.weight());
    });
}

TEST_CASE("binomial conventions and Pascal recurrence") {
    CHECK(binomial(8, 4) == 70);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(-2, 1) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(0, 0) == 1);

    // Pascal triangle as the oracle, up to row 52
    std::vector<std::vector<Int>> pascal(53);
    for (int a = 0; a <= 52; ++a) {
        pascal[a].assign(a + 1, 1);
        for (int k = 1; k < a; ++k) pascal[a][k] = pascal[a - 1][k - 1] + pascal[a - 1][k];
    }
    CHECK(binomial(52, 26) == pascal[52][26]);
    for (int a = 0; a <= 52; ++a)
        for (int k = 0; k <= a; ++k) REQUIRE(binomial(a, k) == pascal[a][k]);
}

TEST_CASE("partition text format") {
    CHECK(parse_partition_text("6,4,4,2,1") == std::vector<int>{6, 4, 4, 2, 1});
    CHECK(parse_partition_text(" 6 , 4 ,4, 2,1 ") == std::vector<int>{6, 4, 4, 2, 1});
    CHECK(partition_text(validate_partition({6, 4, 4, 2, 1})) == "6,4,4,2,1");
    CHECK_THROWS_AS(parse_partition_text("6,,4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition_text("a,b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition_text(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition_text("3 4"), std::invalid_argument);
}

TEST_CASE("partition enumeration is exhaustive and duplicate-free") {
    std::set<std::vector<int>> seen;
    long long count = 0;
    for_each_partition_up_to_weight(9, [&](const Partition& p) {
        ++count;
        CHECK(p.weight() <= 9);
        CHECK(seen.insert(p.parts).second);
    });
    // p(1) + ... + p(9) = 1+2+3+5+7+11+15+22+30
    CHECK(count == 96);

    long long boxed = 0;
    for_each_partition_in_box(4, 4, [&](const Partition& p) {
        ++boxed;
        CHECK(p.n() <= 4);
        CHECK(p.m() <= 4);
    });
    CHECK(boxed == 69);  // C(8,4) - 1 nonempty partitions in a 4x4 box
}
