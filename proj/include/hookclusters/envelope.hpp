#pragma once

#include "hookclusters/cluster.hpp"
#include "hookclusters/datum.hpp"
#include "hookclusters/infinite_partition.hpp"
#include "hookclusters/partition.hpp"

namespace hc {

/// Characteristic of the infinite partition enveloping p: with t the
/// row-column sum of p, {a + t + 1 : a in A} together with {a' + 1 : a' in A'}.
/// Its height is t.
Characteristic env_inf(const Partition& p);

/// [env_inf(p), p, (extension)]_t.
PartitionDatum envelope_datum(const Partition& p, int extension);

/// The enveloping partition; extension 0 gives weight t^2 + n.
Partition envelope(const Partition& p, int extension = 0);

/// First-column hooks of envelope(p, 0): A, {a' + t}, {a + 2t}.
FirstColumnHooks envelope_first_column(const Partition& p);

/// Hooks of envelope(p, 0) split by where they come from.
struct EnvelopeDecomposition {
    HookMultiset star;   ///< two copies of H(p)
    HookMultiset bullet; ///< t + h for every missing hook h of env_inf(p)
    HookMultiset cross;  ///< t - h for the missing hooks below t
    HookMultiset dot;    ///< t copies of t
    int t = 0;

    HookMultiset flatten() const { return star + bullet + cross + dot; }
};

EnvelopeDecomposition envelope_hooks_formula(const Partition& p);

/// {E(p)_x, conjugate of E(p)_x : p in c}. Members that coincide raise
/// MemberCollision; nothing is deduplicated.
Cluster envelope_cluster(const Cluster& c, int extension = 1,
                         Verification v = Verification::Certificate);

} // namespace hc
