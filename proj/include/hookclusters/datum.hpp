#pragma once

#include <cstdint>
#include <vector>

#include "hookclusters/infinite_partition.hpp"
#include "hookclusters/partition.hpp"

namespace hc {

/// [inf, remainder, (x_1, ..., x_d)]_p: d copies of the front section of
/// `inf` stacked on the remainder. x_1 is the overhang of the lowest copy
/// over the remainder, x_d the overhang of the topmost copy over the one
/// below it. The period p is the height of `inf`.
struct PartitionDatum {
    Characteristic inf;
    Partition remainder;
    std::vector<int> extensions;

    int period() const noexcept { return inf.height(); }
    int depth() const noexcept { return static_cast<int>(extensions.size()); }

    friend bool operator==(const PartitionDatum&, const PartitionDatum&) = default;
};

/// Split p into front section, remainder and extension for the given
/// period; requires period < rows.
PartitionDatum decompose(const Partition& p, int period);

/// Stack the copies; throws JunctionViolation when a part would not be
/// positive (empty remainder with zero overhang) or an extension is negative.
Partition assemble(const PartitionDatum& d);

PartitionDatum with_extensions(PartitionDatum d, std::vector<int> extensions);

/// |remainder| + |front| + (c_r + e - 1) p for a single-copy datum.
std::int64_t weight_single(const PartitionDatum& d);

/// Closed form for the weight of a chain datum.
std::int64_t weight_chain(const PartitionDatum& d);

/// Rows, columns and largest hook (h(1,1)) of the assembled partition,
/// without assembling it.
std::int64_t chain_rows(const PartitionDatum& d) noexcept;
std::int64_t chain_columns(const PartitionDatum& d) noexcept;
std::int64_t chain_max_hook(const PartitionDatum& d) noexcept;

} // namespace hc
