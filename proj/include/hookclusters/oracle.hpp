#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "hookclusters/cluster.hpp"
#include "hookclusters/degrees.hpp"
#include "hookclusters/partition.hpp"

namespace hc {

inline constexpr int kCensusCeiling = 60;

/// All partitions of n in lexicographically decreasing order.
std::vector<Partition> enumerate_partitions(int n, int ceiling = kCensusCeiling);

struct HookGroup {
    HookMultiset hooks;
    std::vector<Partition> members; ///< in enumeration order
};

struct DegreeGroup {
    BigInt degree;
    std::vector<Partition> members; ///< in enumeration order
};

/// Every partition of n grouped by hook multiset and by degree. Hook groups
/// are ordered by the canonical multiset key, degree groups by degree.
struct WeightCensus {
    int n = 0;
    std::vector<Partition> partitions;
    std::vector<HookGroup> hook_groups;
    std::vector<DegreeGroup> degree_groups;
    std::size_t m_of_n = 0; ///< size of the largest degree group

    /// Index into hook_groups of the group holding p, or -1.
    long group_of(const Partition& p) const;

    std::map<Partition, std::size_t> group_index;
};

/// Reference implementation: one partition at a time.
WeightCensus census_serial(int n, int ceiling = kCensusCeiling);

/// Hooks and degrees computed in parallel; grouping is identical to
/// census_serial.
WeightCensus census(int n, int ceiling = kCensusCeiling);

std::size_t m_of_n(int n);

/// Whether all members of c lie in one hook group of the census.
bool cross_validate(const Cluster& c, const WeightCensus& census);

} // namespace hc
