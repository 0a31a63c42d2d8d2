#include <doctest.h>

#include <set>

#include "hookclusters/cluster.hpp"
#include "hookclusters/error.hpp"
#include "support.hpp"

using namespace hc;
using ref::P;

namespace {

Errc code_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::InternalError;
}

std::vector<PeriodicMember> pair_members(const Partition& a, const Partition& b, int period)
{
    const PartitionDatum data[] = {decompose(a, period), decompose(b, period)};
    return as_members(data);
}

/// Every member matches the box-count hooks of the first.
void check_direct(const Cluster& c)
{
    REQUIRE(!c.members.empty());
    const auto h = ref::box_multiset(c.members.front());
    CHECK(c.shared_hooks == h);
    std::set<Partition> seen;
    const BigInt deg = character_degree(c.members.front());
    for (const auto& m : c.members) {
        CHECK(ref::box_multiset(m) == h);
        CHECK(seen.insert(m).second);
        CHECK(m.weight() == c.weight());
        CHECK(character_degree(m) == deg);
    }
}

} // namespace

TEST_CASE("direct verification")
{
    const Partition a[] = {P({6, 3, 3, 2}), P({5, 5, 2, 1, 1})};
    const Cluster c = verify_cluster(a);
    CHECK(c.certificate == Certificate::DirectCheck);
    CHECK(c.size() == 2);
    const Partition b[] = {P({8, 4, 3, 3, 1}), P({7, 6, 2, 2, 1, 1})};
    CHECK(verify_cluster(b).size() == 2);
    const Partition conj[] = {P({2}), P({1, 1})};
    CHECK(verify_cluster(conj).size() == 2);

    const Partition bad[] = {P({2, 1}), P({3})};
    try {
        verify_cluster(bad);
        FAIL("expected NotClustered");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotClustered);
        CHECK(e.detail().find("hook 1") != std::string::npos);
    }
    const Partition dup[] = {P({2, 1}), P({2, 1})};
    CHECK(code_of([&] { verify_cluster(dup); }) == Errc::DuplicateMember);
}

TEST_CASE("extension lemma on the period-3 families")
{
    const auto a = pair_members(ref::A(0), ref::A2(0), 3);
    const Cluster a4 = extend_periodic(a, 4, Verification::Paranoid);
    CHECK(a4.members == std::vector<Partition>{P({9, 6, 6, 2}), P({8, 8, 5, 1, 1})});
    CHECK(a4.certificate == Certificate::ExtensionLemma);
    CHECK(a4.periodicity->periods == std::vector<int>{3});

    const Cluster same = extend_periodic(a, 1);
    CHECK(same.members == std::vector<Partition>{ref::A(0), ref::A2(0)});

    const auto c = pair_members(ref::C(0), ref::C2(0), 3);
    CHECK(extend_periodic(c, 7).members == std::vector<Partition>{ref::C(7), ref::C2(7)});

    struct Fam {
        Partition (*x)(int);
        Partition (*y)(int);
        int period;
    };
    for (const Fam& f : {Fam{ref::A, ref::A2, 3}, Fam{ref::B, ref::B2, 3}, Fam{ref::C, ref::C2, 3},
                         Fam{ref::D, ref::D2, 3}, Fam{ref::E, ref::E2, 7}}) {
        const PartitionDatum data[] = {decompose(f.x(0), f.period), decompose(f.y(0), f.period)};
        const int e = check_extension_hypotheses(data);
        CHECK(e == data[0].extensions[0]);
        const auto base = as_members(data);
        for (int x = 0; x <= 10; ++x) {
            const Cluster cx = extend_periodic(base, x, Verification::Paranoid);
            check_direct(cx);
            // the family at n = x - e, where it exists
            if (x >= e)
                CHECK(cx.members == std::vector<Partition>{f.x(x - e), f.y(x - e)});
        }
    }
}

TEST_CASE("extension hypotheses are checked")
{
    const PartitionDatum mixed[] = {decompose(ref::A(0), 3), decompose(ref::B(0), 3)};
    CHECK(code_of([&] { check_extension_hypotheses(mixed); }) == Errc::HypothesisFailure);
    const PartitionDatum periods[] = {decompose(ref::A(0), 3), decompose(ref::A2(0), 2)};
    CHECK(code_of([&] { check_extension_hypotheses(periods); }) == Errc::HypothesisFailure);
    PartitionDatum chained = decompose(ref::A(0), 3);
    chained.extensions = {1, 1};
    const PartitionDatum deep[] = {chained, decompose(ref::A2(0), 3)};
    CHECK(code_of([&] { check_extension_hypotheses(deep); }) == Errc::HypothesisFailure);
}

TEST_CASE("remainders cluster exactly when characteristics do")
{
    const auto a = distinct_data(pair_members(ref::A(0), ref::A2(0), 3));
    CHECK(eitheror_check(a[0], a[1]));
    // remainders (5,3,2,2,2) and (4,4,3,1,1,1) are not conjugate, yet clustered
    const auto d = distinct_data(pair_members(ref::D(0), ref::D2(0), 3));
    CHECK(d[0].remainder != conjugate(d[1].remainder));
    CHECK(eitheror_check(d[0], d[1]));
    CHECK(eitheror_check(a[0], a[0]));
    const auto b = distinct_data(pair_members(ref::B(0), ref::B2(0), 3));
    CHECK(code_of([&] { eitheror_check(a[0], b[1]); }) == Errc::NotAPeriodicCluster);
}

TEST_CASE("vertical expansion")
{
    const auto a = pair_members(ref::A(0), ref::A2(0), 3);
    const Cluster c = expand_periodic(a, {1, 1}, Verification::Paranoid);
    check_direct(c);
    CHECK(c.certificate == Certificate::VerticalExpansion);
    CHECK(c.periodicity->periods == std::vector<int>{3, 6});
    CHECK(c.members.front().rows() == 2 * 3 + 1);

    const Cluster single = expand_periodic(a, {3});
    CHECK(single.members == extend_periodic(a, 3).members);
    CHECK(single.certificate == Certificate::ExtensionLemma);

    // two-parameter family: at (n, r) = (2, 3) a period-6 pair
    const Partition tp[] = {ref::T(2, 3), ref::T2(2, 3)};
    check_direct(verify_cluster(tp));
    const auto t = pair_members(ref::T(2, 3), ref::T2(2, 3), 6);
    for (const auto& xs : std::vector<std::vector<int>>{{0}, {1, 1}, {0, 2, 1}})
        check_direct(expand_periodic(t, xs, Verification::Paranoid));

    ref::Rng rng(99);
    for (int k = 0; k < 50; ++k) {
        std::vector<int> xs(1 + rng() % 4);
        for (int& x : xs)
            x = static_cast<int>(rng() % 6);
        const Cluster cx = vertical_expand(distinct_data(a)[0], distinct_data(a)[1], xs,
                                           Verification::Paranoid);
        CHECK(cx.weight() == weight_chain(cx.periodicity->base.front().datum));
        if (cx.weight() <= 200)
            check_direct(cx);
    }
}

TEST_CASE("front weights of complementary period-p pairs")
{
    // equal-weight remainders and complementary fronts force 2|front| = 0 mod p
    for (const auto& [x, y] : {std::pair{ref::A(0), ref::A2(0)}, std::pair{ref::B(0), ref::B2(0)},
                               std::pair{ref::C(0), ref::C2(0)}}) {
        const PartitionDatum dx = decompose(x, 3), dy = decompose(y, 3);
        REQUIRE(dx.remainder.weight() == dy.remainder.weight());
        REQUIRE(dy.inf == complementary(dx.inf, dx.inf.first() + 1));
        CHECK(2 * front_from_characteristic(dx.inf).weight() % 3 == 0);
    }
}

TEST_CASE("families with equal weight and different hooks")
{
    const auto a = pair_members(ref::A(0), ref::A2(0), 3);
    const auto two = same_residue_distinct_hooks(a, 2, Verification::Paranoid);
    REQUIRE(two.size() == 2);
    CHECK(two[0].weight() == two[1].weight());
    // fronts (4,1,1) have two 1-hooks each
    CHECK(two[1].shared_hooks.count(1) - two[0].shared_hooks.count(1) == 3 * 2);
    CHECK(two[0].weight() % 3 == ref::A(0).weight() % 3);
    for (const auto& c : two)
        check_direct(c);

    const auto one = same_residue_distinct_hooks(a, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].members == std::vector<Partition>{ref::A(0), ref::A2(0)});

    const auto b = pair_members(ref::B(0), ref::B2(0), 3);
    const auto three = same_residue_distinct_hooks(b, 3, Verification::Paranoid);
    REQUIRE(three.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(three[i].weight() == three[0].weight());
        CHECK(three[i].weight() % 3 == ref::B(0).weight() % 3);
        for (std::size_t j = 0; j < i; ++j)
            CHECK(three[i].shared_hooks.count(1) != three[j].shared_hooks.count(1));
    }
}

TEST_CASE("two clusters with different hook products")
{
    const auto a = pair_members(ref::A(0), ref::A2(0), 3);
    const DistinctProducts dp = distinct_products(a, Verification::Paranoid);
    CHECK(dp.extended.weight() == dp.weight);
    CHECK(dp.chained.weight() == dp.weight);
    CHECK(dp.h >= 1);
    CHECK(dp.h <= 3);
    const BigInt p1 = multiset_product(dp.extended.shared_hooks);
    const BigInt p2 = multiset_product(dp.chained.shared_hooks);
    CHECK(p1 != p2);
    CHECK(p1 == hook_product(dp.extended.members.front()));
    CHECK(is_prime(dp.witness_prime));
    CHECK(mpz_divisible_ui_p(p1.get_mpz_t(), static_cast<unsigned long>(dp.witness_prime)));
    CHECK(!mpz_divisible_ui_p(p2.get_mpz_t(), static_cast<unsigned long>(dp.witness_prime)));
    CHECK(dp.extended.shared_hooks.count(static_cast<int>(dp.witness_prime)) > 0);
    CHECK(*dp.chained.shared_hooks.max() < dp.witness_prime);
    CHECK(dp.extended.witness_prime == dp.witness_prime);
    check_direct(dp.extended);
    check_direct(dp.chained);

    // the same clusters come out of the general construction at that weight
    const auto at = distinct_product_clusters_at(a, 2, dp.weight);
    CHECK(at[0].members == dp.extended.members);
    CHECK(at[1].members == dp.chained.members);
    CHECK(at[0].witness_prime == dp.witness_prime);

    const auto c = pair_members(ref::C(0), ref::C2(0), 3);
    const DistinctProducts dc = distinct_products(c);
    CHECK(multiset_product(dc.extended.shared_hooks) != multiset_product(dc.chained.shared_hooks));
}

TEST_CASE("small periods are rejected")
{
    const PartitionDatum d[] = {decompose(P({3, 2, 1, 1}), 2)};
    CHECK(code_of([&] { distinct_products(as_members(d)); }) == Errc::PeriodTooSmall);
}

TEST_CASE("many clusters with different products")
{
    const auto a = pair_members(ref::A(0), ref::A2(0), 3);
    const auto three = many_distinct_product_clusters(a, 3, Verification::Paranoid);
    REQUIRE(three.size() == 3);
    std::vector<BigInt> products;
    for (const auto& c : three) {
        CHECK(c.weight() == three[0].weight());
        CHECK(c.size() == 2);
        verify_cluster(c.members);
        products.push_back(multiset_product(c.shared_hooks));
    }
    CHECK(products[0] != products[1]);
    CHECK(products[0] != products[2]);
    CHECK(products[1] != products[2]);
    for (std::size_t q = 0; q < 2; ++q) {
        const auto ell = static_cast<unsigned long>(*three[q].witness_prime);
        for (std::size_t j = q; j < 3; ++j)
            CHECK((mpz_divisible_ui_p(products[j].get_mpz_t(), ell) != 0) == (j == q));
    }

    const auto one = many_distinct_product_clusters(a, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].members == std::vector<Partition>{ref::A(0), ref::A2(0)});
}

TEST_CASE("every weight past the threshold works")
{
    const auto a = pair_members(ref::A(0), ref::A2(0), 3);
    for (int k = 1; k <= 3; ++k) {
        const std::int64_t n0 = distinct_product_threshold(a, k);
        CHECK(n0 % 3 == ref::A(0).weight() % 3);
        const std::int64_t span = k == 1 ? 30 : 3 * 27;
        for (std::int64_t w = n0; w <= n0 + span; w += 3) {
            const auto cs = distinct_product_clusters_at(a, k, w);
            CHECK(cs.size() == static_cast<std::size_t>(k));
            CHECK(cs.back().weight() == w);
        }
    }
    CHECK(code_of([&] { distinct_product_clusters_at(a, 2, 301); }) == Errc::WeightOutOfRange);
}

TEST_CASE("certified paths agree with direct checks on random strings")
{
    ref::Rng rng(31337);
    const auto b = pair_members(ref::B(0), ref::B2(0), 3);
    for (int k = 0; k < 100; ++k) {
        std::vector<int> xs(1 + rng() % 3);
        for (int& x : xs)
            x = static_cast<int>(rng() % 5);
        const Cluster fast = expand_periodic(b, xs);
        const Cluster slow = expand_periodic(b, xs, Verification::Paranoid);
        CHECK(fast.members == slow.members);
        CHECK(fast.shared_hooks == slow.shared_hooks);
        if (fast.weight() <= 200)
            check_direct(fast);
    }
}
