#pragma once

#include <cstdint>
#include <vector>

#include "hookclusters/cluster.hpp"
#include "hookclusters/partition.hpp"

namespace hc {

/// Parameters for producing k sets of ell equal-hook partitions of n.
///
/// Two index conventions are in play. A tower starts from a conjugate pair
/// (size 2) and doubles with every envelope step; after `iterations` steps
/// it has 2^(iterations + 1) members, so in the doubling exponent it is
/// level `level = iterations + 1`. Its period is the row-column sum of the
/// level before, t_sequence[iterations - 1].
struct DriverPlan {
    int ell_target = 0;
    int m = 0;          ///< ceil(log2 ell_target), at least 1
    int iterations = 0; ///< envelope steps, max(1, m - 1); a periodic tower needs one
    int level = 0;      ///< iterations + 1
    int tower_size = 0; ///< 2^level
    int t1 = 0;         ///< odd row-column sum of the seeds
    std::vector<int> t_sequence; ///< t_1 = t1, t_{i+1} = 3 t_i + 1, up to t_level
    int modulus = 0;             ///< period of the final towers
    int seed_rows = 0;
    int seed_columns = 0;
    std::vector<std::int64_t> seed_weights; ///< indexed by residue j
    std::int64_t weight_offset = 0;         ///< tower weight minus seed weight
};

DriverPlan plan(int ell);

/// A partition with exactly r rows, c columns and weight w: a hook of
/// shape (c, 1^(r-1)) filled row by row from the second row.
Partition seed_partition(int r, int c, std::int64_t w);

/// {seed, conjugate(seed)} enveloped `iterations` times with extension 1.
Cluster tower_from_pair(const Partition& seed, int iterations,
                        Verification v = Verification::Certificate);

/// The tower for residue j; its weight is seed_weights[j] + weight_offset.
Cluster build_tower(const DriverPlan& plan, int j, Verification v = Verification::Certificate);

/// Smallest n such that k sets can be produced for every weight >= n.
std::int64_t threshold(const DriverPlan& plan, int k);

struct TheoremTwoResult {
    DriverPlan plan;
    std::int64_t threshold = 0;
    int residue = 0; ///< tower used
    std::vector<Cluster> clusters;
};

/// k clusters of exactly ell partitions of n; clusters are disjoint and
/// have pairwise different hook products. Throws BelowThreshold when
/// n is below the constructive threshold.
TheoremTwoResult theorem_two(std::int64_t n, int k, int ell,
                             Verification v = Verification::Certificate);

} // namespace hc
