#include <doctest.h>

#include <set>

#include "algz/oracle.hpp"
#include "support.hpp"

using namespace algz;

TEST_CASE("partition enumeration counts")
{
    const PartitionPredicate any;
    const std::vector<std::size_t> cumulative{1, 2, 4, 7, 12, 19, 30};
    for (Part w = 0; w < static_cast<Part>(cumulative.size()); ++w) {
        REQUIRE(enum_partitions(w, any).size() == cumulative[static_cast<std::size_t>(w)]);
    }
    CHECK(enum_partitions_exact(10, any).size() == 42);

    PartitionPredicate dz;
    dz.distinct = true;
    dz.min_part = 0;
    const auto zero = enum_partitions(0, dz);
    CHECK(std::set<Partition>(zero.begin(), zero.end()) == std::set<Partition>{Partition{}, Partition{0}});

    PartitionPredicate d3;
    d3.distinct = true;
    d3.max_part = 3;
    CHECK(enum_partitions_exact(4, d3) == std::vector<Partition>{Partition{3, 1}});

    PartitionPredicate none;
    none.max_part = 0;
    CHECK(enum_partitions(5, none) == std::vector<Partition>{Partition{}});

    PartitionPredicate unbounded;
    unbounded.min_part = 0;
    CHECK_THROWS_AS(enum_partitions(3, unbounded), InvalidArgument);
}

TEST_CASE("enumeration matches the reference generator")
{
    for (bool distinct : {false, true}) {
        std::set<Partition> ref;
        testing::positive_partitions(12, 2, 7, distinct, [&](const std::vector<std::int64_t> &v) {
            if (v.size() <= 4) {
                ref.insert(Partition(v));
            }
        });
        PartitionPredicate p;
        p.distinct = distinct;
        p.min_part = 2;
        p.max_part = 7;
        p.max_length = 4;
        const auto got = enum_partitions(12, p);
        CHECK(std::set<Partition>(got.begin(), got.end()) == ref);
        CHECK(got.size() == ref.size());
    }
}

TEST_CASE("bounded partitions against Gaussian binomials")
{
    for (long n = 1; n <= 7; ++n) {
        for (long k = 0; k <= n; ++k) {
            PartitionPredicate p;
            p.max_part = n - k;
            p.max_length = static_cast<std::size_t>(k);
            const QSeries g = gauss_binomial(n, k);
            for (int w = 0; w <= g.qmax(); ++w) {
                REQUIRE(g[w] == static_cast<long>(enum_partitions_exact(w, p).size()));
            }
        }
    }
}

TEST_CASE("family spec validation")
{
    FamilySpec s;
    s.family = Family::B;
    CHECK_THROWS_AS(s.validate(), InvalidArgument);
    s.b_max = 2;
    CHECK_NOTHROW(s.validate());
    s.family = Family::C;
    s.param_min = 0;
    s.param_max = 1;
    CHECK_THROWS_AS(s.validate(), InvalidArgument);
    s.family = Family::A;
    s.b_max.reset();
    s.zero_free_mu = true;
    s.param_min = 0;
    s.param_max = 2;
    CHECK_NOTHROW(s.validate());

    CHECK(parse_family("pair-Z") == Family::pair_z);
    CHECK(parse_family("pair-z") == Family::pair_z);
    CHECK(family_name(Family::image_varphi) == "image-varphi");
    CHECK_THROWS_AS(parse_family("X"), InvalidArgument);
    CHECK(parse_map("split_insert") == MapName::split_insert);
    CHECK(map_name(MapName::split_insert) == "split-insert");
    CHECK(domain_family(MapName::neg) == Family::D);
    CHECK(codomain_family(MapName::neg) == Family::C);
}

TEST_CASE("quintuple families at small weight")
{
    FamilySpec s;
    s.family = Family::A;
    s.max_weight = 0;
    s.b_max = 0;
    const auto members = enum_family(s);
    REQUIRE(members.size() == 1);
    CHECK(std::get<QuintupleA>(members[0].value) == QuintupleA{});

    s.max_weight = 4;
    s.param_max = 2;
    s.b_max = 3;
    auto b = s;
    b.family = Family::B;
    CHECK(gf_count(s) == gf_count(b));

    for (const auto &m : enum_family(s)) {
        const auto &x = std::get<QuintupleA>(m.value);
        REQUIRE(x.valid());
        REQUIRE(m.key == SliceKey{statistics(x).weight, statistics(x).a_exp, statistics(x).b_exp, statistics(x).z_exp});
    }
}

TEST_CASE("serial and parallel enumeration agree")
{
    FamilySpec s;
    s.family = Family::D;
    s.max_weight = 6;
    s.param_min = 1;
    s.param_max = 2;
    s.b_max = 4;
    CHECK(gf_count(s, Execution::serial) == gf_count(s, Execution::parallel));
    const auto a = enum_family(s, Execution::serial);
    const auto b = enum_family(s, Execution::parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        REQUIRE(a[i].key == b[i].key);
        REQUIRE(describe(a[i]) == describe(b[i]));
    }
}

TEST_CASE("varphi pairs and images have equal size")
{
    FamilySpec s;
    s.family = Family::pair_varphi;
    s.max_weight = 6;
    s.max_len_a = 1;
    s.max_len_b = 1;
    s.k_min = s.k_max = 1;
    s.m_min = s.m_max = 1;
    auto img = s;
    img.family = Family::image_varphi;
    CHECK(enum_family(s).size() == enum_family(img).size());
    CHECK(gf_count_by_param(s) == gf_count_by_param(img));
}

TEST_CASE("phi image slices follow the product formula")
{
    FamilySpec s;
    s.family = Family::image_phi;
    s.max_weight = 12;
    s.max_len_a = 3;
    s.max_len_b = 3;
    const auto counts = gf_count(s);
    for (long i = 0; i <= 3; ++i) {
        for (long j = 0; j <= 3; ++j) {
            const int qmax = 12;
            QSeries f = gauss_binomial(i + j, i, qmax).shifted(static_cast<int>(i * (i - 1) / 2)) *
                        invert(q_factorial(i + j, qmax));
            for (int w = 0; w <= qmax; ++w) {
                const auto it = counts.find(SliceKey{w, i, j, 0});
                const long got = it == counts.end() ? 0 : it->second;
                REQUIRE(f[w] == got);
            }
        }
    }
}

TEST_CASE("bijection checks on small bounds")
{
    FamilySpec s;
    s.max_weight = 6;
    s.max_len_a = 3;
    s.max_len_b = 3;
    for (MapName m : {MapName::z, MapName::phi, MapName::split_insert}) {
        const BijectionReport r = check_bijection(m, s);
        INFO(map_name(m));
        CHECK(r.pass());
        CHECK(r.domain_size == r.codomain_size);
        CHECK(r.domain_size > 0);
    }

    auto v = s;
    v.k_max = 2;
    v.m_max = 2;
    const BijectionReport rv = check_bijection(MapName::varphi, v);
    CHECK(rv.pass());
    CHECK(rv.branches.size() == 3);

    FamilySpec q;
    q.max_weight = 5;
    q.param_max = 2;
    q.b_max = 4;
    const BijectionReport rp = check_bijection(MapName::pos, q);
    CHECK(rp.pass());
    CHECK(rp.domain_size == rp.codomain_size);

    q.param_min = 1;
    const BijectionReport rn = check_bijection(MapName::neg, q);
    CHECK(rn.pass());
    CHECK(rn.witness_count > 0);
    CHECK(rn.witnesses.size() <= 20);
}

TEST_CASE("specialization")
{
    const std::map<SliceKey, long> counts{{SliceKey{1, 1, 0, 0}, 2}, {SliceKey{1, -1, 1, 0}, 3}, {SliceKey{2, 0, 0, 1}, 1}};
    const Rational a(2);
    const Rational b(1, 3);
    const auto plain = specialize(counts, a, b, false);
    CHECK(plain.at({0, 1}) == Rational(4) + Rational(1, 2));
    CHECK(plain.at({1, 2}) == 1);
    const auto done = specialize(counts, a, b, true);
    CHECK(done.at({0, 1}) == Rational(4) + Rational(3, 4));
    CHECK(done.at({1, 2}) == Rational(3, 2));
    CHECK_THROWS_AS(specialize(counts, a, Rational(1), true), InvalidArgument);
}

TEST_CASE("left side rebuilt from enumeration")
{
    SeriesParams p;
    p.qmax = 6;
    p.zmax = 2;
    const ZLaurentSeries lhs = expand_side(Side::lhs_1psi1, p);
    const ZLaurentSeries fam = psi1_from_families(6, 2, p.a, p.b);
    CHECK_FALSE(compare(lhs, fam).has_value());
}
