#pragma once

#include <cstdint>
#include <optional>

#include <gmpxx.h>

#include "hookclusters/partition.hpp"

namespace hc {

using BigInt = mpz_class;

/// Product of all hook numbers; 1 for the empty partition.
BigInt hook_product(const Partition& p);
BigInt multiset_product(const HookMultiset& m);

/// n! / (product of hooks). An inexact division means the hooks are wrong
/// and raises InexactDivision.
BigInt character_degree(const Partition& p);

bool is_prime(std::int64_t q) noexcept;

/// Smallest prime q with lo < q < hi, if one exists. Requires lo < hi.
std::optional<std::int64_t> prime_in_range(std::int64_t lo, std::int64_t hi);

} // namespace hc
