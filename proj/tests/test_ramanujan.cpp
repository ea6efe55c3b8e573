#include <doctest.h>

#include "algz/ramanujan.hpp"

using namespace algz;

namespace
{

QuintupleA positive_example()
{
    return {9,
            Partition{10, 9, 5, 3, 2},
            Partition{13, 11, 10, 9, 9, 5, 4, 4, 2},
            Partition{9, 6, 4, 2, 1},
            Partition{7, 6, 5, 3, 1},
            Partition{5, 4, 4, 1}};
}

QuintupleB positive_image()
{
    return {Partition{6, 1}, Partition{12, 11, 10, 5, 4, 4, 1}, Partition{10, 7, 6, 2},
            Partition{7, 7, 6, 6, 3, 3, 0}, Partition{12, 11, 7, 5, 4, 3, 1}};
}

QuintupleD negative_example()
{
    return {2,
            Partition{12, 11, 7, 5, 4},
            Partition{15, 13, 12, 11, 11, 7, 6, 6, 4, 2, 1, 1},
            Partition{7, 6, 4, 1, 0},
            Partition{9, 8, 5, 5, 4, 1},
            Partition{22, 19, 18, 17, 15, 12, 11, 10, 8, 7, 6, 3, 1}};
}

QuintupleC negative_image()
{
    return {2,
            10,
            Partition{17, 15, 11, 10, 8, 4, 2, 1},
            Partition{16, 16, 15, 13, 13, 12, 11, 11, 8, 5, 5, 4, 1, 1},
            Partition{17, 16, 12, 11, 9, 6, 5, 4, 3, 2},
            Partition{7, 5, 3, 1, 0},
            Partition{7, 6, 6, 4, 2, 1, 1}};
}

} // namespace

TEST_CASE("statistics of the worked quintuples")
{
    const Statistics s{-5, 9, 4, 154};
    CHECK(statistics(positive_example()) == s);
    CHECK(statistics(positive_image()) == s);

    const Statistics d = statistics(negative_example());
    CHECK(d.a_exp == -13);
    CHECK(d.b_exp == 17);
    CHECK(d.z_exp == -2);
    CHECK(statistics(negative_image()) == d);
}

TEST_CASE("positive map on the worked example")
{
    CHECK(forward_pos(positive_example()) == positive_image());
    CHECK(backward_pos(positive_image()) == positive_example());
}

TEST_CASE("negative map on the worked example")
{
    CHECK(backward_neg(negative_example()) == negative_image());
    CHECK(forward_neg(negative_image()) == negative_example());
}

TEST_CASE("degenerate positive quintuple")
{
    const QuintupleA x{1, Partition{1}, Partition{1}, Partition{0}, Partition{}, Partition{}};
    REQUIRE(x.valid());
    const Statistics s = statistics(x);
    CHECK(s == Statistics{-2, 1, 0, 2});
    const QuintupleB y = forward_pos(x);
    CHECK(y.valid());
    CHECK(statistics(y) == s);
    CHECK(backward_pos(y) == x);
}

TEST_CASE("empty quintuples")
{
    const QuintupleA x{};
    CHECK(x.valid());
    CHECK(statistics(x) == Statistics{});
    CHECK(forward_pos(x) == QuintupleB{});
    CHECK(backward_pos(QuintupleB{}) == x);
}

TEST_CASE("validation")
{
    QuintupleA x = positive_example();
    x.alpha = Partition{3, 3};
    CHECK(x.violation().has_value());
    CHECK_THROWS_AS(forward_pos(x), InvalidArgument);
    CHECK_THROWS_AS(statistics(x), InvalidArgument);

    x = positive_example();
    x.mu = Partition{9};
    CHECK_FALSE(x.valid());

    x = positive_example();
    x.gamma = Partition{9, 6, 4, 2, 1, 0, 0};
    CHECK_FALSE(x.valid());

    QuintupleB y = positive_image();
    y.E = Partition{3, 0};
    CHECK_THROWS_AS(backward_pos(y), InvalidArgument);

    QuintupleD d = negative_example();
    d.A = Partition{12, 11, 7, 5, 1};
    CHECK_THROWS_AS(backward_neg(d), InvalidArgument);

    d = negative_example();
    d.m = 3;
    CHECK_FALSE(d.valid());

    QuintupleC c = negative_image();
    c.alpha = Partition{17, 15, 11, 10, 8, 4, 2};
    CHECK_THROWS_AS(forward_neg(c), InvalidArgument);
}
