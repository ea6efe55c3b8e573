#include <doctest.h>

#include <set>
#include <utility>

#include "algz/algorithm_z.hpp"
#include "support.hpp"

using namespace algz;

namespace
{

// All nonnegative partitions with exactly `len` parts and weight <= w.
std::vector<Partition> with_length(std::int64_t w, std::size_t len, bool distinct = false)
{
    std::vector<Partition> out;
    testing::positive_partitions(w, 1, w, distinct, [&](const std::vector<std::int64_t> &v) {
        if (v.size() == len) {
            out.emplace_back(v);
        } else if (v.size() + 1 == len || (!distinct && v.size() < len)) {
            std::vector<std::int64_t> padded = v;
            padded.resize(len, 0);
            out.emplace_back(padded);
        }
    });
    return out;
}

} // namespace

TEST_CASE("z_insert on the worked example")
{
    const ZResult r = z_insert(Partition{5, 3, 2, 1}, Partition{4, 3, 0});
    CHECK(r.mu == Partition{5, 3, 2, 2, 2, 1, 0});
    CHECK(r.nu == Partition{2, 1, 0});
}

TEST_CASE("z_insert with nothing to insert")
{
    const ZResult r = z_insert(Partition{5, 3, 2, 1}, Partition{});
    CHECK(r.mu == Partition{5, 3, 2, 1});
    CHECK(r.nu.empty());
}

TEST_CASE("single insertion step")
{
    // 4 into (5,3,2,1): d = 2 places 2 after position 2.
    const InsertStep step = z_insert_one(Partition{5, 3, 2, 1}, 4);
    CHECK(step.record == 2);
    CHECK(step.receiver == Partition{5, 3, 2, 2, 1});
    CHECK(z_insert_one(Partition{}, 7).receiver == Partition{7});
    CHECK(z_insert_one(Partition{}, 7).record == 0);
    CHECK(z_insert_one(Partition{1, 1}, 9).record == 2);
    CHECK(z_insert_one(Partition{1, 1}, 0).record == 0);

    for (const auto &receiver : with_length(8, 3)) {
        for (Part v = 0; v <= 10; ++v) {
            const InsertStep s = z_insert_one(receiver, v);
            const auto L = static_cast<Part>(receiver.length());
            REQUIRE(s.record >= 0);
            REQUIRE(s.record <= L);
            REQUIRE(s.receiver.length() == receiver.length() + 1);
            REQUIRE(s.receiver.at(static_cast<std::size_t>(L - s.record + 1)) == v - s.record);
        }
    }
}

TEST_CASE("z_extract reverses the worked example")
{
    const ZPair p = z_extract(Partition{5, 3, 2, 2, 2, 1, 0}, Partition{2, 1, 0});
    CHECK(p.alpha == Partition{5, 3, 2, 1});
    CHECK(p.beta == Partition{4, 3, 0});
    const ZPair t = z_extract(Partition{4, 1}, Partition{});
    CHECK(t.alpha == Partition{4, 1});
    CHECK(t.beta.empty());
}

TEST_CASE("z_extract rejects records outside the partition")
{
    CHECK_THROWS_AS(z_extract(Partition{3, 2}, Partition{1, 1, 1}), InvalidArgument);
    CHECK_THROWS_AS(z_extract(Partition{3, 2, 1}, Partition{3}), InvalidArgument);
}

TEST_CASE("z_insert invariants over all small inputs")
{
    std::size_t n = 0;
    for (std::size_t la = 0; la <= 4; ++la) {
        for (std::size_t lb = 0; lb <= 3; ++lb) {
            for (const auto &alpha : with_length(10, la)) {
                for (const auto &beta : with_length(10 - alpha.weight(), lb)) {
                    const ZResult r = z_insert(alpha, beta);
                    REQUIRE(r.mu.length() == la + lb);
                    REQUIRE(r.nu.length() == lb);
                    REQUIRE(r.mu.weight() + r.nu.weight() == alpha.weight() + beta.weight());
                    if (!r.nu.empty()) {
                        REQUIRE(r.nu.largest() <= static_cast<Part>(la));
                    }
                    REQUIRE(z_extract(r.mu, r.nu) == ZPair{alpha, beta});
                    ++n;
                }
            }
        }
    }
    CHECK(n > 1000);
}

TEST_CASE("phi on worked data")
{
    const ZResult r = phi(Partition{7, 6, 4, 1, 0}, Partition{9, 8, 5, 5, 4, 1});
    CHECK(r.mu == Partition{9, 8, 5, 5, 4, 2, 2, 1, 1, 0, 0});
    CHECK(r.nu == Partition{5, 4, 3, 1, 0});

    const ZPair p = phi_inv(Partition{7, 7, 6, 6, 4, 3, 3, 3, 3, 1, 0}, Partition{6, 4, 3, 1});
    CHECK(p.alpha == Partition{10, 7, 6, 2});
    CHECK(p.beta == Partition{7, 7, 6, 6, 3, 3, 0});

    const ZResult e = phi(Partition{}, Partition{3, 1});
    CHECK(e.mu == Partition{3, 1});
    CHECK(e.nu.empty());
    const ZPair back = phi_inv(Partition{3, 1}, Partition{});
    CHECK(back.alpha.empty());
    CHECK(back.beta == Partition{3, 1});
}

TEST_CASE("phi rejects bad shapes")
{
    CHECK_THROWS_AS(phi(Partition{2, 2}, Partition{1}), InvalidArgument);
    CHECK_THROWS_AS(phi_inv(Partition{3, 2}, Partition{1, 1}), InvalidArgument);
    CHECK_THROWS_AS(phi_inv(Partition{3, 2}, Partition{2}), InvalidArgument);
    CHECK_THROWS_AS(phi_inv(Partition{3}, Partition{1, 0}), InvalidArgument);
}

TEST_CASE("phi image for i = j = 2 is every (mu, nu) with l(mu) = 4 and nu distinct in [0, 3]")
{
    std::set<std::pair<Partition, Partition>> image;
    for (const auto &alpha : with_length(8, 2, true)) {
        for (const auto &beta : with_length(8 - alpha.weight(), 2)) {
            const ZResult r = phi(alpha, beta);
            REQUIRE(r.nu.is_distinct());
            REQUIRE(r.nu.largest() <= 3);
            REQUIRE(phi_inv(r.mu, r.nu) == ZPair{alpha, beta});
            image.insert({r.mu, r.nu});
        }
    }
    std::set<std::pair<Partition, Partition>> codomain;
    for (Part a = 0; a <= 3; ++a) {
        for (Part b = 0; b < a; ++b) {
            for (const auto &mu : with_length(8 - a - b, 4)) {
                codomain.insert({mu, Partition{a, b}});
            }
        }
    }
    CHECK(image == codomain);
}
