#include <doctest.h>

#include <vector>

#include "hookclusters/degrees.hpp"
#include "hookclusters/error.hpp"
#include "support.hpp"

using namespace hc;
using ref::P;

TEST_CASE("hook products and degrees")
{
    CHECK(hook_product(P({4, 2, 2, 1})) == 1680);
    CHECK(hook_product(Partition()) == 1);
    CHECK(hook_product(P({1, 1})) == 2);
    CHECK(character_degree(P({4, 2, 2, 1})) == 216);
    CHECK(character_degree(P({7})) == 1);
    CHECK(character_degree(P({2, 1})) == 2);
}

TEST_CASE("squares of degrees sum to n!")
{
    for (int n = 0; n <= 20; ++n) {
        BigInt sum = 0;
        for (const auto& p : ref::partitions_of(n)) {
            const BigInt d = character_degree(p);
            sum += d * d;
            if (n <= 14)
                CHECK(character_degree(conjugate(p)) == d);
        }
        BigInt fact = 1;
        for (int i = 2; i <= n; ++i)
            fact *= i;
        CHECK(sum == fact);
    }
}

TEST_CASE("large weights stay exact")
{
    // (400): trivial character; staircase of weight 406 divides exactly.
    CHECK(character_degree(Partition(std::vector<int>{400})) == 1);
    std::vector<int> stair;
    for (int i = 28; i >= 1; --i)
        stair.push_back(i);
    CHECK(character_degree(Partition(stair)) > 1);
}

TEST_CASE("primes in windows")
{
    CHECK(prime_in_range(10, 20) == 11);
    CHECK(prime_in_range(1, 3) == 2);
    CHECK(!prime_in_range(24, 25));
    CHECK_THROWS_AS(prime_in_range(5, 5), Error);

    // Sieve oracle for Bertrand's window.
    const int limit = 2'000'000;
    std::vector<bool> composite(limit + 1, false);
    composite[0] = composite[1] = true;
    for (int i = 2; static_cast<long>(i) * i <= limit; ++i)
        if (!composite[i])
            for (int j = i * i; j <= limit; j += i)
                composite[j] = true;
    for (int q = 0; q <= 5000; ++q)
        REQUIRE(is_prime(q) == !composite[q]);
    // next prime after n, scanned downward; (1, 2) holds no integer at all
    CHECK(!prime_in_range(1, 2));
    int next = -1;
    for (int n = limit - 1; n >= 2; --n) {
        if (!composite[n + 1])
            next = n + 1;
        if (n > limit / 2)
            continue;
        if (n <= 1'000'000 && (n % 997 == 0 || n < 2000)) {
            const auto q = prime_in_range(n, 2 * n);
            REQUIRE(q);
            CHECK(*q == next);
        }
        if (n > 1'000'000)
            continue;
        REQUIRE(next < 2 * n);
    }
}
