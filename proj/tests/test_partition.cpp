#include <doctest.h>

#include <limits>
#include <sstream>

#include "algz/partition.hpp"
#include "support.hpp"

using namespace algz;

TEST_CASE("construction validates shape")
{
    CHECK_NOTHROW(Partition{5, 3, 3, 0});
    CHECK_NOTHROW(Partition{});
    CHECK_THROWS_AS(Partition({1, 2}), InvalidArgument);
    CHECK_THROWS_AS(Partition({3, -1}), InvalidArgument);
    CHECK(Partition::from_multiset({1, 4, 0, 4}) == Partition{4, 4, 1, 0});
}

TEST_CASE("accessors and queries")
{
    const Partition p{5, 3, 2, 2, 0};
    CHECK(p.length() == 5);
    CHECK(p.weight() == 12);
    CHECK(p[0] == 5);
    CHECK(p.at(1) == 5);
    CHECK(p.at(5) == 0);
    CHECK_THROWS_AS(p.at(0), std::out_of_range);
    CHECK_THROWS_AS(p.at(6), std::out_of_range);
    CHECK(p.largest() == 5);
    CHECK(p.smallest() == 0);
    CHECK_FALSE(p.is_distinct());
    CHECK(Partition{4, 2, 0}.is_distinct());
    CHECK(p.count_zeros() == 1);
    CHECK(p.head(2) == Partition{5, 3});
    CHECK(p.head(9) == p);
    CHECK(p.tail(3) == Partition{2, 0});
    CHECK(p.tail(9).empty());
    CHECK(p.without_zeros() == Partition{5, 3, 2, 2});
    CHECK(Partition{2}.padded(3) == Partition{2, 0, 0});
    CHECK_THROWS_AS(p.padded(2), InvalidArgument);
    CHECK(p.shift_prefix(2, 1) == Partition{6, 4, 2, 2, 0});
    CHECK_THROWS_AS(p.shift_prefix(2, -3), InvalidArgument);
    CHECK(p.str() == "(5,3,2,2,0)");
    CHECK(Partition{}.str() == "()");
}

TEST_CASE("ordering and equality")
{
    CHECK(Partition{3, 1} == Partition{3, 1});
    CHECK(Partition{3, 1} != Partition{3, 1, 0});
    CHECK(Partition{2, 2} < Partition{3});
}

TEST_CASE("checked arithmetic")
{
    const Part big = std::numeric_limits<Part>::max();
    CHECK(checked_add(2, 3) == 5);
    CHECK_THROWS_AS(checked_add(big, 1), std::overflow_error);
    CHECK_THROWS_AS(checked_sub(-big, 2), std::overflow_error);
    CHECK_THROWS_AS(checked_mul(big, 2), std::overflow_error);
    CHECK_THROWS_AS(Partition({big, big}).weight(), std::overflow_error);
}

TEST_CASE("conjugate")
{
    CHECK(conjugate(Partition{5, 3, 2, 1}) == Partition{4, 3, 2, 1, 1});
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(conjugate(Partition{0, 0}) == Partition{});
    CHECK(conjugate(Partition{10, 9, 9, 5, 4, 4, 2}) == Partition{7, 7, 6, 6, 4, 3, 3, 3, 3, 1});

    testing::positive_partitions(12, 1, 12, false, [](const std::vector<std::int64_t> &v) {
        const Partition p(v);
        REQUIRE(conjugate(conjugate(p)) == p);
        REQUIRE(conjugate(p).weight() == p.weight());
        REQUIRE(static_cast<Part>(conjugate(p).length()) == p.largest());
    });
}

TEST_CASE("staircases")
{
    CHECK(staircase(3, 4) == Partition{3, 2, 1, 0});
    CHECK(staircase(5, 0).empty());
    CHECK(add_staircase(Partition{2, 2}, 2, 3) == Partition{4, 3, 0});
    CHECK_THROWS_AS(add_staircase(Partition{1, 1, 1}, 3, 2), InvalidArgument);
    CHECK_THROWS_AS(add_staircase(Partition{}, 1, 3), InvalidArgument);
    CHECK(subtract_staircase(Partition{7, 5, 3}, 2, 3) == Partition{5, 4, 3});

    try {
        (void)subtract_staircase(Partition{5, 1, 1}, 3, 3);
        FAIL("expected failure");
    } catch (const StaircaseError &e) {
        CHECK(e.index() == 2);
    }
    CHECK_THROWS_AS(subtract_staircase(Partition{5, 1}, 3, 3), InvalidArgument);
    // Subtracting yields (2, 3): not weakly decreasing.
    CHECK_THROWS_AS(subtract_staircase(Partition{3, 3}, 1, 2), InvalidArgument);

    const Partition p{6, 4, 4, 1};
    CHECK(subtract_staircase(add_staircase(p, 5, 4), 5, 4) == p);
}

TEST_CASE("merge and split")
{
    CHECK(merge(Partition{7, 3}, Partition{5, 3, 0}) == Partition{7, 5, 3, 3, 0});
    CHECK(merge(Partition{}, Partition{2}) == Partition{2});

    const auto [hi, lo] = split_at_threshold(Partition{7, 6, 5, 3, 1}, 4);
    CHECK(hi == Partition{7, 6, 5});
    CHECK(lo == Partition{3, 1});
    const auto [all, none] = split_at_threshold(Partition{2, 1}, 0);
    CHECK(all == Partition{2, 1});
    CHECK(none.empty());
}

TEST_CASE("longest prefix above a shifted staircase")
{
    // p_j >= 1 + j (1-based) holds for j = 1, 2 and fails at j = 3.
    CHECK(longest_prefix_above(Partition{3, 2, 1}, 0) == 2);
    CHECK(longest_prefix_above(Partition{3, 2, 1}, -2) == 3);
    CHECK(longest_prefix_above(Partition{}, 0) == 0);
    CHECK(longest_prefix_above(Partition{4}, 4) == 0);
    CHECK(longest_prefix_above(Partition{13, 11, 10, 9, 9, 5, 4, 4, 2}, 9) == 2);
}

TEST_CASE("predicate matching")
{
    PartitionPredicate pred;
    CHECK(pred.matches(Partition{3, 1}));
    CHECK_FALSE(pred.matches(Partition{3, 0}));
    pred.min_part = 0;
    pred.distinct = true;
    CHECK(pred.matches(Partition{3, 0}));
    CHECK_FALSE(pred.matches(Partition{3, 3}));
    pred.max_part = 2;
    CHECK_FALSE(pred.matches(Partition{3}));
    pred.fixed_length = 2;
    CHECK(pred.matches(Partition{2, 1}));
    CHECK_FALSE(pred.matches(Partition{2}));
    pred.max_length = 1;
    CHECK_FALSE(pred.matches(Partition{2, 1}));

    PartitionPredicate bad;
    bad.min_part = 3;
    bad.max_part = 2;
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);
}

TEST_CASE("stream output")
{
    std::ostringstream os;
    os << Partition{2, 0};
    CHECK(os.str() == "(2,0)");
}
