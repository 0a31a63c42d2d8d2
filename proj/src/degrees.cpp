#include "hookclusters/degrees.hpp"

#include <string>
#include <vector>

#include "hookclusters/error.hpp"

namespace hc {

namespace {

BigInt product_tree(std::vector<BigInt>& xs, std::size_t lo, std::size_t hi)
{
    if (hi - lo == 1)
        return xs[lo];
    std::size_t mid = lo + (hi - lo) / 2;
    return product_tree(xs, lo, mid) * product_tree(xs, mid, hi);
}

} // namespace

BigInt multiset_product(const HookMultiset& m)
{
    if (m.empty())
        return 1;
    std::vector<BigInt> powers;
    powers.reserve(m.entries().size());
    for (const auto& [v, c] : m.entries()) {
        BigInt x;
        mpz_ui_pow_ui(x.get_mpz_t(), static_cast<unsigned long>(v), static_cast<unsigned long>(c));
        powers.push_back(std::move(x));
    }
    return product_tree(powers, 0, powers.size());
}

BigInt hook_product(const Partition& p)
{
    return multiset_product(hook_multiset(p));
}

BigInt character_degree(const Partition& p)
{
    BigInt factorial;
    mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(p.weight()));
    const BigInt product = hook_product(p);
    if (!mpz_divisible_p(factorial.get_mpz_t(), product.get_mpz_t()))
        throw Error(Errc::InexactDivision,
                    "hook product of " + to_string(p) + " does not divide " +
                        std::to_string(p.weight()) + "!");
    BigInt degree;
    mpz_divexact(degree.get_mpz_t(), factorial.get_mpz_t(), product.get_mpz_t());
    return degree;
}

bool is_prime(std::int64_t q) noexcept
{
    if (q < 2)
        return false;
    if (q % 2 == 0)
        return q == 2;
    for (std::int64_t d = 3; d * d <= q; d += 2)
        if (q % d == 0)
            return false;
    return true;
}

std::optional<std::int64_t> prime_in_range(std::int64_t lo, std::int64_t hi)
{
    if (lo >= hi)
        throw Error(Errc::EmptyRange,
                    "(" + std::to_string(lo) + ", " + std::to_string(hi) + ") is empty");
    for (std::int64_t q = lo + 1; q < hi; ++q)
        if (is_prime(q))
            return q;
    return std::nullopt;
}

} // namespace hc
