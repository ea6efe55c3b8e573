#include <doctest.h>

#include "algz/algorithm_z.hpp"
#include "algz/variant.hpp"
#include "support.hpp"

using namespace algz;

namespace
{

// Every (alpha, beta) in the varphi domain with l(alpha) = s, l(beta) = t and
// |alpha| + |beta| <= w, built from a plain generator.
template <typename F>
void each_domain_pair(std::int64_t w, std::size_t s, std::size_t t, VariantParams p, F f)
{
    const Part floor = p.k + static_cast<Part>(s + t) - 1;
    testing::positive_partitions(w, 1, w, true, [&](const std::vector<std::int64_t> &a) {
        std::vector<std::vector<std::int64_t>> alphas{a};
        if (!a.empty() || s > 0) {
            auto z = a;
            z.push_back(0);
            alphas.push_back(z);
        }
        for (const auto &av : alphas) {
            if (av.size() != s || (!av.empty() && av.back() < p.m)) {
                continue;
            }
            const std::int64_t rest = w - testing::sum(av);
            testing::positive_partitions(rest, 1, rest, false, [&](const std::vector<std::int64_t> &b) {
                for (std::size_t zeros = 0; b.size() + zeros <= t; ++zeros) {
                    auto bv = b;
                    bv.resize(b.size() + zeros, 0);
                    if (bv.size() != t || (!bv.empty() && bv.back() < floor)) {
                        continue;
                    }
                    f(Partition(av), Partition(bv));
                }
            });
        }
    });
}

} // namespace

TEST_CASE("varphi on the worked examples")
{
    const ZResult a = varphi(Partition{8, 7, 5, 3}, Partition{12, 11, 9}, {3, 2});
    CHECK(a.mu == Partition{11, 10, 8, 7, 3, 2, 0});
    CHECK(a.nu == Partition{6, 5, 3});

    const ZResult b = varphi(Partition{12, 11, 7, 5, 4}, Partition{15, 13, 12, 11, 11}, {0, 2});
    CHECK(b.mu == Partition{17, 16, 12, 11, 9, 6, 5, 4, 3, 2});
    CHECK(b.nu == Partition{7, 5, 3, 1, 0});

    const ZResult c = varphi(Partition{10, 9, 5, 3, 2}, Partition{13, 11}, {4, 0});
    CHECK(c.mu == Partition{12, 11, 7, 5, 4, 3, 1});
    CHECK(c.nu == Partition{6, 4});
}

TEST_CASE("varphi_inv on the worked examples")
{
    const ZPair a = varphi_inv(Partition{9, 6, 4, 2, 1}, Partition{7, 6, 5}, {4, 0});
    CHECK(a.alpha == Partition{6, 1});
    CHECK(a.beta == Partition{12, 11, 10});

    const ZPair b = varphi_inv(Partition{22, 20, 16, 15, 13, 10, 6, 4, 3, 1, 0}, Partition{8, 7, 6, 4, 3}, {3, 3});
    CHECK(b.alpha == Partition{17, 15, 11, 10, 8, 4});
    CHECK(b.beta == Partition{16, 16, 15, 13, 13});
}

TEST_CASE("varphi degenerate cases")
{
    const ZResult t0 = varphi(Partition{5, 2}, Partition{}, {1, 2});
    CHECK(t0.mu == Partition{5, 2});
    CHECK(t0.nu.empty());

    // s = 0: mu_j = beta_j - k - j + 1, nu = (k+t-1, ..., k).
    const ZResult s0 = varphi(Partition{}, Partition{7, 6, 6}, {2, 0});
    CHECK(s0.mu == Partition{5, 3, 2});
    CHECK(s0.nu == Partition{4, 3, 2});

    const ZResult both = varphi(Partition{}, Partition{}, {3, 3});
    CHECK(both.mu.empty());
    CHECK(both.nu.empty());
}

TEST_CASE("varphi rejects inputs outside the domain")
{
    CHECK_THROWS_AS(varphi(Partition{3, 3}, Partition{}, {0, 0}), InvalidArgument);
    CHECK_THROWS_AS(varphi(Partition{3, 1}, Partition{}, {0, 2}), InvalidArgument);
    CHECK_THROWS_AS(varphi(Partition{3}, Partition{1}, {1, 0}), InvalidArgument);
    CHECK_THROWS_AS(varphi(Partition{}, Partition{}, {-1, 0}), InvalidArgument);
    CHECK_THROWS_AS(varphi_inv(Partition{3, 1}, Partition{3}, {0, 0}), InvalidArgument);
    // s = 0 demands the exact staircase record.
    CHECK_THROWS_AS(varphi_inv(Partition{3, 1}, Partition{2, 0}, {0, 0}), InvalidArgument);
}

TEST_CASE("strict_image")
{
    CHECK_FALSE(strict_image(Partition{11, 10, 8, 7, 3, 2, 0}));
    CHECK(strict_image(Partition{12, 11, 7, 5, 4, 3, 1}));
    CHECK_THROWS_AS(strict_image(Partition{}), InvalidArgument);

    std::size_t checked = 0;
    for (std::size_t s = 0; s <= 3; ++s) {
        for (std::size_t t = 1; t <= 3; ++t) {
            for (Part k = 0; k <= 2; ++k) {
                for (Part m = 0; m <= 2; ++m) {
                    const VariantParams p{k, m};
                    each_domain_pair(12, s, t, p, [&](const Partition &alpha, const Partition &beta) {
                        const ZResult r = varphi(alpha, beta, p);
                        const bool strict = (s == 0 || alpha.smallest() > m)
                                            && beta.smallest() > k + static_cast<Part>(s + t) - 1;
                        REQUIRE(strict_image(r.mu) == strict);
                        ++checked;
                    });
                }
            }
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("varphi record relates to the original insertion by a staircase")
{
    const ZResult base = z_insert(Partition{3, 3, 2, 1}, Partition{3, 2, 0});
    CHECK(base.mu == Partition{3, 3, 2, 2, 1, 1, 0});
    CHECK(base.nu == Partition{1, 1, 0});
    const ZResult v = varphi(Partition{8, 7, 5, 3}, Partition{12, 11, 9}, {3, 2});
    CHECK(v.nu == add_staircase(base.nu, 5, 3));
}

TEST_CASE("varphi properties on small inputs")
{
    std::size_t n = 0;
    for (std::size_t s = 0; s <= 3; ++s) {
        for (std::size_t t = 0; t <= 3; ++t) {
            for (Part k = 0; k <= 2; ++k) {
                for (Part m = 0; m <= 2; ++m) {
                    const VariantParams p{k, m};
                    each_domain_pair(12, s, t, p, [&](const Partition &alpha, const Partition &beta) {
                        const ZResult r = varphi(alpha, beta, p);
                        REQUIRE(r.mu.length() == s + t);
                        REQUIRE(r.mu.is_distinct());
                        REQUIRE(r.nu.is_distinct());
                        REQUIRE(r.mu.weight() + r.nu.weight() == alpha.weight() + beta.weight());
                        for (std::size_t i = 1; i <= t; ++i) {
                            REQUIRE(r.nu.at(i) >= k + static_cast<Part>(t - i));
                            REQUIRE(r.nu.at(i) <= k + static_cast<Part>(s + t - i));
                        }
                        if (s > 0 && t > 0) {
                            REQUIRE(r.mu.at(s) - r.mu.at(s + 1) >= m + 1);
                        }
                        REQUIRE(in_varphi_image(r.mu, r.nu, p));
                        REQUIRE(varphi_inv(r.mu, r.nu, p) == ZPair{alpha, beta});
                        ++n;
                    });
                }
            }
        }
    }
    CHECK(n > 1000);
}

TEST_CASE("split_insert")
{
    const SplitInsertResult a = split_insert(Partition{}, Partition{3, 2, 1});
    CHECK(a.n == 2);
    CHECK(a.gamma == Partition{1});
    CHECK(a.mu == Partition{3, 1});
    CHECK(a.nu == Partition{1, 0});

    const SplitInsertResult b = split_insert(Partition{2, 0}, Partition{});
    CHECK(b.n == 2);
    CHECK(b.mu == Partition{2, 0});
    CHECK(b.nu.empty());
    CHECK(b.gamma.empty());

    CHECK(split_insert_inv(2, Partition{2, 0}, Partition{}, Partition{}) == ZPair{Partition{2, 0}, Partition{}});
    CHECK(split_insert_inv(2, Partition{3, 1}, Partition{1, 0}, Partition{1})
          == ZPair{Partition{}, Partition{3, 2, 1}});

    CHECK_THROWS_AS(split_insert(Partition{1, 1}, Partition{}), InvalidArgument);
    CHECK_THROWS_AS(split_insert_inv(3, Partition{3, 1}, Partition{1, 0}, Partition{}), InvalidArgument);
    CHECK_THROWS_AS(split_insert_inv(2, Partition{3, 1}, Partition{1, 0}, Partition{2}), InvalidArgument);
}

TEST_CASE("split_insert round trip and branch coverage")
{
    std::size_t with_n = 0;
    std::size_t without = 0;
    testing::positive_partitions(10, 1, 10, true, [&](const std::vector<std::int64_t> &a) {
        for (int zero = 0; zero <= 1; ++zero) {
            auto av = a;
            if (zero) {
                av.push_back(0);
            }
            const Partition alpha(av);
            const std::int64_t rest = 10 - alpha.weight();
            testing::positive_partitions(rest, 1, rest, false, [&](const std::vector<std::int64_t> &b) {
                for (std::size_t zeros = 0; zeros <= 2; ++zeros) {
                    auto bv = b;
                    bv.resize(b.size() + zeros, 0);
                    const Partition beta(bv);
                    const SplitInsertResult r = split_insert(alpha, beta);
                    REQUIRE(r.mu.length() == r.n);
                    REQUIRE(r.mu.weight() + r.nu.weight() + r.gamma.weight() == alpha.weight() + beta.weight());
                    if (!r.gamma.empty()) {
                        REQUIRE(r.gamma.largest() <= static_cast<Part>(r.n) - 1);
                    }
                    REQUIRE(split_insert_inv(r.n, r.mu, r.nu, r.gamma) == ZPair{alpha, beta});
                    (r.nu.empty() ? without : with_n) += 1;
                }
            });
        }
    });
    CHECK(with_n > 0);
    CHECK(without > 0);
}
