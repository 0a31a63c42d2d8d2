#include "hookclusters/driver.hpp"

#include <algorithm>
#include <string>

#include "hookclusters/envelope.hpp"
#include "hookclusters/error.hpp"

namespace hc {

namespace {

std::string num(std::int64_t v) { return std::to_string(v); }

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

int period_after(int t1, int iterations)
{
    int t = t1;
    for (int i = 1; i < iterations; ++i)
        t = 3 * t + 1;
    return t;
}

} // namespace

DriverPlan plan(int ell)
{
    if (ell < 1)
        throw Error(Errc::HypothesisFailure, "ell = " + num(ell) + " is not positive");
    DriverPlan pl;
    pl.ell_target = ell;
    pl.m = 1;
    while ((1 << pl.m) < ell)
        ++pl.m;
    pl.iterations = std::max(1, pl.m - 1);
    pl.level = pl.iterations + 1;
    pl.tower_size = 1 << pl.level;

    // Seeds with r = (t+1)/2 rows and c = (t-1)/2 columns reach every weight
    // in [t - 1, (t^2 - 1)/4]; the inequality makes that range longer than
    // the modulus.
    int t = 3;
    while (static_cast<std::int64_t>(t) * t - 4 * t - 1 <= 4LL * period_after(t, pl.iterations))
        t += 2;
    pl.t1 = t;
    pl.modulus = period_after(t, pl.iterations);
    pl.t_sequence = {t};
    for (int i = 1; i < pl.level; ++i)
        pl.t_sequence.push_back(3 * pl.t_sequence.back() + 1);
    pl.seed_rows = (t + 1) / 2;
    pl.seed_columns = (t - 1) / 2;

    const std::int64_t lo = pl.seed_rows + pl.seed_columns - 1;
    for (int j = 0; j < pl.modulus; ++j)
        pl.seed_weights.push_back(lo + mod(j - lo, pl.modulus));
    for (int i = 0; i < pl.iterations; ++i) {
        const std::int64_t ti = pl.t_sequence[static_cast<std::size_t>(i)];
        pl.weight_offset += ti * ti + ti;
    }
    return pl;
}

Partition seed_partition(int r, int c, std::int64_t w)
{
    if (r < 1 || c < 1)
        throw Error(Errc::WeightOutOfRange, "no partition has " + num(r) + " rows and " + num(c) +
                                                " columns");
    const std::int64_t lo = r + c - 1;
    const std::int64_t hi = static_cast<std::int64_t>(r) * c;
    if (w < lo || w > hi)
        throw Error(Errc::WeightOutOfRange,
                    "weight " + num(w) + " outside [" + num(lo) + ", " + num(hi) + "]");
    std::vector<int> parts(static_cast<std::size_t>(r), 1);
    parts[0] = c;
    std::int64_t left = w - lo;
    for (std::size_t i = 1; i < parts.size() && left > 0; ++i) {
        const int add = static_cast<int>(std::min<std::int64_t>(left, c - 1));
        parts[i] += add;
        left -= add;
    }
    return Partition(std::move(parts));
}

Cluster tower_from_pair(const Partition& seed, int iterations, Verification v)
{
    const Partition pair[] = {seed, conjugate(seed)};
    if (pair[0] == pair[1])
        throw Error(Errc::MemberCollision, to_string(seed) + " is self-conjugate");
    Cluster c = verify_cluster(pair);
    c.certificate = Certificate::ConjugatePair;
    for (int i = 0; i < iterations; ++i)
        c = envelope_cluster(c, 1, v);
    return c;
}

Cluster build_tower(const DriverPlan& plan, int j, Verification v)
{
    if (j < 0 || j >= plan.modulus)
        throw Error(Errc::IndexOutOfRange,
                    "residue " + num(j) + " outside [0, " + num(plan.modulus) + ")");
    return tower_from_pair(
        seed_partition(plan.seed_rows, plan.seed_columns, plan.seed_weights[static_cast<std::size_t>(j)]),
        plan.iterations, v);
}

std::int64_t threshold(const DriverPlan& plan, int k)
{
    std::int64_t n = 0;
    for (int j = 0; j < plan.modulus; ++j) {
        const Cluster tower = build_tower(plan, j);
        n = std::max(n, distinct_product_threshold(tower.periodicity->base, k));
    }
    return n;
}

TheoremTwoResult theorem_two(std::int64_t n, int k, int ell, Verification v)
{
    if (k < 1)
        throw Error(Errc::HypothesisFailure, "k = " + num(k) + " is not positive");
    TheoremTwoResult out;
    out.plan = plan(ell);
    out.threshold = threshold(out.plan, k);
    if (n < out.threshold)
        throw Error(Errc::BelowThreshold, "n = " + num(n) + " is below the threshold " +
                                              num(out.threshold));
    const DriverPlan& pl = out.plan;
    out.residue = static_cast<int>(mod(n - pl.weight_offset, pl.modulus));
    const Cluster tower = build_tower(pl, out.residue, v);
    out.clusters = distinct_product_clusters_at(tower.periodicity->base, k, n, v);

    for (auto& c : out.clusters) {
        c.members.resize(static_cast<std::size_t>(ell));
        c.periodicity->base.resize(static_cast<std::size_t>(ell));
        const HookMultiset h = verify_cluster(c.members).shared_hooks;
        if (h != c.shared_hooks || c.weight() != n)
            throw Error(Errc::InternalError, "emitted cluster fails its direct check");
    }
    std::vector<BigInt> products;
    for (const auto& c : out.clusters)
        products.push_back(multiset_product(c.shared_hooks));
    for (std::size_t i = 0; i < out.clusters.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            if (products[i] == products[j])
                throw Error(Errc::InternalError, "two sets share a hook product");
            for (const auto& p : out.clusters[i].members)
                if (std::find(out.clusters[j].members.begin(), out.clusters[j].members.end(), p) !=
                    out.clusters[j].members.end())
                    throw Error(Errc::InternalError, to_string(p) + " lies in two sets");
        }
    return out;
}

} // namespace hc
