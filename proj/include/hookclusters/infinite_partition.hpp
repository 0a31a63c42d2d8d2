#pragma once

#include <span>
#include <vector>

#include "hookclusters/partition.hpp"

namespace hc {

/// Characteristic of a height-p infinite partition: the first-column hooks
/// of its front section. Strictly decreasing, last entry 1.
///
/// Infinite partitions are only ever handled through their characteristic;
/// the missing-hook multiset is a complete clustering invariant, so the
/// infinite hook multiset itself is never built.
class Characteristic {
public:
    Characteristic() = default;
    explicit Characteristic(std::vector<int> values);

    const std::vector<int>& values() const noexcept { return values_; }
    int height() const noexcept { return static_cast<int>(values_.size()); }
    /// a_1, the largest entry (0 for the empty characteristic).
    int first() const noexcept { return values_.empty() ? 0 : values_.front(); }
    /// a_i, 1-based.
    int at(int i) const { return values_.at(static_cast<std::size_t>(i - 1)); }

    friend bool operator==(const Characteristic&, const Characteristic&) = default;

private:
    std::vector<int> values_;
};

using MissingHooks = IntMultiset;

/// Front section: a partition whose smallest part is 1.
Characteristic characteristic_from_front(const Partition& front);
Partition front_from_characteristic(const Characteristic& c);

/// {a_i - a_j : i < j}
MissingHooks missing_hooks(const Characteristic& c);

/// b_i = t - a_{p+1-i}; t must be a_1 + 1.
Characteristic complementary(const Characteristic& c, int t);

bool inf_clustered(const Characteristic& c1, const Characteristic& c2);

/// (a_1 + x, ..., a_p + x, a_1, ..., a_p); requires x >= a_1.
Characteristic double_characteristic(const Characteristic& c, int x);

/// Row-and-column sum of the front section, a_1 + 1.
inline int front_rc_sum(const Characteristic& c) noexcept { return c.first() + 1; }

} // namespace hc
