#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hookclusters/datum.hpp"
#include "hookclusters/degrees.hpp"
#include "hookclusters/partition.hpp"

namespace hc {

enum class Certificate {
    DirectCheck,
    ExtensionLemma,
    VerticalExpansion,
    Enveloping,
    ConjugatePair,
};

std::string_view to_string(Certificate c) noexcept;

/// One member of a periodic cluster, described by its datum. A conjugated
/// member is the conjugate of assemble(datum); this is how clusters that are
/// periodic only up to conjugation are represented.
struct PeriodicMember {
    PartitionDatum datum;
    bool conjugated = false;

    friend bool operator==(const PeriodicMember&, const PeriodicMember&) = default;
};

Partition materialize(const PeriodicMember& m);

struct Periodicity {
    /// Every certified period; front() is the period of the data.
    std::vector<int> periods;
    /// Aligned with Cluster::members.
    std::vector<PeriodicMember> base;
};

struct Cluster {
    std::vector<Partition> members;
    HookMultiset shared_hooks;
    Certificate certificate = Certificate::DirectCheck;
    std::optional<Periodicity> periodicity;
    std::optional<std::int64_t> witness_prime;

    std::int64_t weight() const noexcept { return members.empty() ? 0 : members.front().weight(); }
    std::size_t size() const noexcept { return members.size(); }
};

enum class Verification {
    Certificate, ///< trust the lemma; hooks of one member only
    Paranoid,    ///< recompute every member's hooks
};

/// Direct check: every member has the same hook multiset. Throws
/// NotClustered (naming the first differing hook value) or DuplicateMember.
Cluster verify_cluster(std::span<const Partition> ps);

bool clustered(const Partition& a, const Partition& b);

/// Check the Extension Lemma hypotheses on single-copy data: common
/// period, assembled partitions clustered, remainders clustered,
/// characteristics clustered. The common extension forced by those
/// hypotheses is checked and returned. Throws HypothesisFailure.
int check_extension_hypotheses(std::span<const PartitionDatum> data);

/// Distinct data of a periodic member list, in first-seen order.
std::vector<PartitionDatum> distinct_data(std::span<const PeriodicMember> members);

std::vector<PeriodicMember> as_members(std::span<const PartitionDatum> data);

/// Replace the extension of every member by x.
Cluster extend_periodic(std::span<const PeriodicMember> base, int x,
                        Verification v = Verification::Certificate);
Cluster extension_lemma_extend(const PartitionDatum& d1, const PartitionDatum& d2, int x,
                               Verification v = Verification::Certificate);

/// Whether the remainders are clustered; also checks that this agrees
/// with whether the infinite partitions are clustered.
bool eitheror_check(const PartitionDatum& d1, const PartitionDatum& d2);

/// Replace every member's extension string by xs.
Cluster expand_periodic(std::span<const PeriodicMember> base, const std::vector<int>& xs,
                        Verification v = Verification::Certificate);
Cluster vertical_expand(const PartitionDatum& d1, const PartitionDatum& d2,
                        const std::vector<int>& xs, Verification v = Verification::Certificate);

/// k equal-weight clusters with pairwise different hook multisets, told
/// apart by their number of 1-hooks. Cluster i stacks i*p + 1 copies.
std::vector<Cluster> same_residue_distinct_hooks(std::span<const PeriodicMember> base, int k,
                                                 Verification v = Verification::Certificate);

/// The two-cluster construction: an extension of the base and a
/// (0,...,0,h)-chain extended in its period-p^2 direction, at a common
/// weight where a prime separates their hook products.
struct DistinctProducts {
    Cluster extended;     ///< single copy, carries the witness prime
    Cluster chained;      ///< p + 1 copies
    std::int64_t witness_prime = 0;
    int h = 0;            ///< top overhang of the chain
    std::int64_t x = 0;   ///< balancing extension before growth
    std::int64_t y = 0;   ///< growth steps
    std::int64_t weight = 0;
};

DistinctProducts distinct_products(std::span<const PeriodicMember> base,
                                   Verification v = Verification::Certificate);

/// k clusters of one weight with pairwise different hook products. Family
/// q > 0 stacks p^q + 1 copies and grows in its period-p^(q+1) direction;
/// cluster q carries a prime that divides its product and no hook of any
/// later cluster.
std::vector<Cluster> distinct_product_clusters_at(std::span<const PeriodicMember> base, int k,
                                                  std::int64_t weight,
                                                  Verification v = Verification::Certificate);

/// Smallest weight N such that distinct_product_clusters_at succeeds for
/// every weight >= N congruent to the base weight modulo p.
std::int64_t distinct_product_threshold(std::span<const PeriodicMember> base, int k);

/// The lowest weight at which the k-family construction certifies.
std::vector<Cluster> many_distinct_product_clusters(std::span<const PeriodicMember> base, int k,
                                                    Verification v = Verification::Certificate);

} // namespace hc
