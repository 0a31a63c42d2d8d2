#include "hookclusters/datum.hpp"

#include <string>

#include "hookclusters/error.hpp"

namespace hc {

PartitionDatum decompose(const Partition& p, int period)
{
    if (period < 1 || period >= p.rows())
        throw Error(Errc::PeriodTooLarge, "period " + std::to_string(period) +
                                              " is not below the " + std::to_string(p.rows()) +
                                              " rows of " + to_string(p));
    const int base = p.part(period);
    std::vector<int> front;
    front.reserve(static_cast<std::size_t>(period));
    for (int i = 1; i <= period; ++i)
        front.push_back(p.part(i) - base + 1);
    std::vector<int> rest(p.parts().begin() + period, p.parts().end());
    PartitionDatum d{characteristic_from_front(Partition(std::move(front))),
                     Partition(std::move(rest)),
                     {base - p.part(period + 1)}};
    return d;
}

Partition assemble(const PartitionDatum& d)
{
    if (d.extensions.empty())
        throw Error(Errc::JunctionViolation, "datum has no extensions");
    const Partition front = front_from_characteristic(d.inf);
    const int p = d.period();

    // Blocks are produced bottom-up and emitted top-down.
    std::vector<std::vector<int>> blocks;
    blocks.reserve(d.extensions.size());
    int below = d.remainder.columns();
    for (std::size_t k = 0; k < d.extensions.size(); ++k) {
        const int x = d.extensions[k];
        if (x < 0)
            throw Error(Errc::JunctionViolation,
                        "extension x_" + std::to_string(k + 1) + " = " + std::to_string(x));
        const int last = below + x; // length of the bottom row of this copy
        if (last < 1)
            throw Error(Errc::JunctionViolation,
                        "copy " + std::to_string(k + 1) + " would have an empty bottom row");
        std::vector<int> rows;
        rows.reserve(static_cast<std::size_t>(p));
        for (int i = 1; i <= p; ++i)
            rows.push_back(last + front.part(i) - 1);
        below = rows.front();
        blocks.push_back(std::move(rows));
    }
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(p) * blocks.size() + d.remainder.parts().size());
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it)
        parts.insert(parts.end(), it->begin(), it->end());
    parts.insert(parts.end(), d.remainder.parts().begin(), d.remainder.parts().end());
    return Partition(std::move(parts));
}

PartitionDatum with_extensions(PartitionDatum d, std::vector<int> extensions)
{
    d.extensions = std::move(extensions);
    return d;
}

std::int64_t weight_single(const PartitionDatum& d)
{
    if (d.depth() != 1)
        throw Error(Errc::HypothesisFailure,
                    "single-copy weight needs one extension, got " + std::to_string(d.depth()));
    const Partition front = front_from_characteristic(d.inf);
    return d.remainder.weight() + front.weight() +
           static_cast<std::int64_t>(d.remainder.columns() + d.extensions[0] - 1) * d.period();
}

std::int64_t weight_chain(const PartitionDatum& d)
{
    const Partition front = front_from_characteristic(d.inf);
    const std::int64_t depth = d.depth();
    const std::int64_t a = front.columns() - 1;
    std::int64_t stacked = 0;
    for (std::int64_t i = 1; i <= depth; ++i)
        stacked += (depth + 1 - i) * d.extensions[static_cast<std::size_t>(i - 1)];
    const std::int64_t offsets =
        depth * d.remainder.columns() + depth * (depth - 1) / 2 * a + stacked - depth;
    return d.remainder.weight() + depth * front.weight() + offsets * d.period();
}

std::int64_t chain_rows(const PartitionDatum& d) noexcept
{
    return static_cast<std::int64_t>(d.depth()) * d.period() + d.remainder.rows();
}

std::int64_t chain_columns(const PartitionDatum& d) noexcept
{
    // Each copy widens the shape by its overhang plus (front columns - 1).
    const std::int64_t a = d.inf.first() - d.period();
    std::int64_t cols = d.remainder.columns();
    for (int x : d.extensions)
        cols += x + a;
    return cols;
}

std::int64_t chain_max_hook(const PartitionDatum& d) noexcept
{
    return chain_rows(d) + chain_columns(d) - 1;
}

} // namespace hc
