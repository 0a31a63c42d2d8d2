#include "hookclusters/cluster.hpp"

#include <algorithm>
#include <string>

#include "hookclusters/error.hpp"

namespace hc {

std::string_view to_string(Certificate c) noexcept
{
    switch (c) {
    case Certificate::DirectCheck: return "DirectCheck";
    case Certificate::ExtensionLemma: return "ExtensionLemma";
    case Certificate::VerticalExpansion: return "VerticalExpansion";
    case Certificate::Enveloping: return "Enveloping";
    case Certificate::ConjugatePair: return "ConjugatePair";
    }
    return "?";
}

Partition materialize(const PeriodicMember& m)
{
    Partition p = assemble(m.datum);
    return m.conjugated ? conjugate(p) : p;
}

namespace {

std::string num(std::int64_t v) { return std::to_string(v); }

void require_distinct(std::span<const Partition> ps)
{
    std::vector<Partition> sorted(ps.begin(), ps.end());
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end())
        throw Error(Errc::DuplicateMember, to_string(*dup) + " appears more than once");
}

void require_same_hooks(const Partition& a, const HookMultiset& ha, const Partition& b,
                        const HookMultiset& hb)
{
    if (ha == hb)
        return;
    const int v = *ha.first_difference(hb);
    throw Error(Errc::NotClustered, "hook " + num(v) + " occurs " + num(ha.count(v)) + " times in " +
                                        to_string(a) + " but " + num(hb.count(v)) + " times in " +
                                        to_string(b));
}

Cluster build_cluster(std::vector<PeriodicMember> members, Certificate cert,
                      std::vector<int> periods, Verification v)
{
    Cluster c;
    c.members.reserve(members.size());
    for (const auto& m : members)
        c.members.push_back(materialize(m));
    if (v == Verification::Paranoid) {
        c.shared_hooks = verify_cluster(c.members).shared_hooks;
    } else {
        require_distinct(c.members);
        c.shared_hooks = hook_multiset(c.members.front());
    }
    c.certificate = cert;
    c.periodicity = Periodicity{std::move(periods), std::move(members)};
    return c;
}

std::vector<PeriodicMember> with_string(std::span<const PeriodicMember> base,
                                        const std::vector<int>& xs)
{
    std::vector<PeriodicMember> out;
    out.reserve(base.size());
    for (const auto& m : base)
        out.push_back({with_extensions(m.datum, xs), m.conjugated});
    return out;
}

std::vector<int> chain_periods(int p, int depth)
{
    std::vector<int> periods;
    for (int j = 1; j <= depth; ++j)
        periods.push_back(j * p);
    return periods;
}

std::int64_t ipow(std::int64_t b, int e)
{
    std::int64_t r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

} // namespace

Cluster verify_cluster(std::span<const Partition> ps)
{
    if (ps.empty())
        throw Error(Errc::NotClustered, "empty set of partitions");
    require_distinct(ps);
    Cluster c;
    c.members.assign(ps.begin(), ps.end());
    c.shared_hooks = hook_multiset(ps.front());
    for (std::size_t i = 1; i < ps.size(); ++i)
        require_same_hooks(ps.front(), c.shared_hooks, ps[i], hook_multiset(ps[i]));
    c.certificate = Certificate::DirectCheck;
    return c;
}

bool clustered(const Partition& a, const Partition& b)
{
    return hook_multiset(a) == hook_multiset(b);
}

int check_extension_hypotheses(std::span<const PartitionDatum> data)
{
    if (data.empty())
        throw Error(Errc::HypothesisFailure, "no data");
    const PartitionDatum& first = data.front();
    for (std::size_t i = 0; i < data.size(); ++i)
        if (data[i].depth() != 1)
            throw Error(Errc::HypothesisFailure,
                        "datum " + num(i + 1) + " has " + num(data[i].depth()) + " copies, not 1");
    const Partition p0 = assemble(first);
    const HookMultiset h0 = hook_multiset(p0);
    const HookMultiset r0 = hook_multiset(first.remainder);
    const MissingHooks m0 = missing_hooks(first.inf);
    for (std::size_t i = 1; i < data.size(); ++i) {
        const PartitionDatum& d = data[i];
        if (d.period() != first.period())
            throw Error(Errc::HypothesisFailure, "periods " + num(first.period()) + " and " +
                                                     num(d.period()) + " differ");
        const Partition pi = assemble(d);
        const HookMultiset hi = hook_multiset(pi);
        if (hi != h0)
            throw Error(Errc::HypothesisFailure,
                        "partitions " + to_string(p0) + " and " + to_string(pi) +
                            " are not clustered (hook " + num(*h0.first_difference(hi)) + ")");
        const HookMultiset ri = hook_multiset(d.remainder);
        if (ri != r0)
            throw Error(Errc::HypothesisFailure,
                        "remainders " + to_string(first.remainder) + " and " +
                            to_string(d.remainder) + " are not clustered (hook " +
                            num(*r0.first_difference(ri)) + ")");
        const MissingHooks mi = missing_hooks(d.inf);
        if (mi != m0)
            throw Error(Errc::HypothesisFailure,
                        "characteristics are not clustered (missing hook " +
                            num(*m0.first_difference(mi)) + ")");
    }
    // Forced by the hypotheses; a mismatch here would mean the hook
    // computations above are wrong.
    for (std::size_t i = 1; i < data.size(); ++i)
        if (data[i].extensions[0] != first.extensions[0])
            throw Error(Errc::HypothesisFailure, "extensions " + num(first.extensions[0]) +
                                                     " and " + num(data[i].extensions[0]) +
                                                     " differ although all else is clustered");
    return first.extensions[0];
}

std::vector<PartitionDatum> distinct_data(std::span<const PeriodicMember> members)
{
    std::vector<PartitionDatum> out;
    for (const auto& m : members)
        if (std::find(out.begin(), out.end(), m.datum) == out.end())
            out.push_back(m.datum);
    return out;
}

std::vector<PeriodicMember> as_members(std::span<const PartitionDatum> data)
{
    std::vector<PeriodicMember> out;
    out.reserve(data.size());
    for (const auto& d : data)
        out.push_back({d, false});
    return out;
}

Cluster extend_periodic(std::span<const PeriodicMember> base, int x, Verification v)
{
    if (base.empty())
        throw Error(Errc::HypothesisFailure, "no members");
    check_extension_hypotheses(distinct_data(base));
    if (x < 0)
        throw Error(Errc::JunctionViolation, "extension " + num(x) + " is negative");
    const int p = base.front().datum.period();
    return build_cluster(with_string(base, {x}), Certificate::ExtensionLemma, {p}, v);
}

Cluster extension_lemma_extend(const PartitionDatum& d1, const PartitionDatum& d2, int x,
                               Verification v)
{
    const PartitionDatum data[] = {d1, d2};
    return extend_periodic(as_members(data), x, v);
}

bool eitheror_check(const PartitionDatum& d1, const PartitionDatum& d2)
{
    if (d1.period() != d2.period() || d1.depth() != d2.depth() || d1.depth() < 1)
        throw Error(Errc::NotAPeriodicCluster, "data differ in period or number of copies");
    auto bumped = [](PartitionDatum d) {
        d.extensions.back() += 1;
        return d;
    };
    for (const auto& [a, b] : {std::pair{d1, d2}, std::pair{bumped(d1), bumped(d2)}}) {
        const Partition pa = assemble(a);
        const Partition pb = assemble(b);
        const HookMultiset ha = hook_multiset(pa);
        const HookMultiset hb = hook_multiset(pb);
        if (ha != hb)
            throw Error(Errc::NotAPeriodicCluster,
                        to_string(pa) + " and " + to_string(pb) + " differ at hook " +
                            num(*ha.first_difference(hb)));
    }
    const bool rem = hook_multiset(d1.remainder) == hook_multiset(d2.remainder);
    const bool inf = inf_clustered(d1.inf, d2.inf);
    if (rem != inf)
        throw Error(Errc::InternalError,
                    std::string("remainders ") + (rem ? "" : "not ") +
                        "clustered but characteristics " + (inf ? "" : "not ") + "clustered");
    return rem;
}

Cluster expand_periodic(std::span<const PeriodicMember> base, const std::vector<int>& xs,
                        Verification v)
{
    if (base.empty())
        throw Error(Errc::HypothesisFailure, "no members");
    if (xs.empty())
        throw Error(Errc::JunctionViolation, "empty extension string");
    check_extension_hypotheses(distinct_data(base));
    const int p = base.front().datum.period();
    const int depth = static_cast<int>(xs.size());
    return build_cluster(with_string(base, xs),
                         depth == 1 ? Certificate::ExtensionLemma : Certificate::VerticalExpansion,
                         chain_periods(p, depth), v);
}

Cluster vertical_expand(const PartitionDatum& d1, const PartitionDatum& d2,
                        const std::vector<int>& xs, Verification v)
{
    const PartitionDatum data[] = {d1, d2};
    return expand_periodic(as_members(data), xs, v);
}

std::vector<Cluster> same_residue_distinct_hooks(std::span<const PeriodicMember> base, int k,
                                                 Verification v)
{
    if (k < 1)
        throw Error(Errc::HypothesisFailure, "count " + num(k) + " is not positive");
    if (base.empty())
        throw Error(Errc::HypothesisFailure, "no members");
    const int e = check_extension_hypotheses(distinct_data(base));
    const PartitionDatum& rep = base.front().datum;
    const int p = rep.period();
    if (k == 1)
        return {extend_periodic(base, e, v)};

    // Family i stacks i*p + 1 copies: (1, ..., 1, top). With every overhang
    // positive each copy contributes the same number of 1-hooks, so the
    // families differ in H_1. The top overhang balances the weights.
    auto string_for = [&](int i, int top) {
        std::vector<int> xs(static_cast<std::size_t>(i) * p + 1, 1);
        xs.back() = top;
        return xs;
    };
    std::vector<std::int64_t> floor_weight;
    for (int i = 0; i < k; ++i)
        floor_weight.push_back(weight_chain(with_extensions(rep, string_for(i, 0))));
    const std::int64_t w = *std::max_element(floor_weight.begin(), floor_weight.end()) + p;

    std::vector<Cluster> out;
    for (int i = 0; i < k; ++i) {
        const std::int64_t diff = w - floor_weight[static_cast<std::size_t>(i)];
        if (diff % p != 0)
            throw Error(Errc::InternalError, "family weights are not congruent mod " + num(p));
        out.push_back(expand_periodic(base, string_for(i, static_cast<int>(diff / p)), v));
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i].weight() != w)
            throw Error(Errc::InternalError, "family " + num(i) + " has weight " +
                                                 num(out[i].weight()) + ", expected " + num(w));
        for (std::size_t j = 0; j < i; ++j)
            if (out[i].shared_hooks.count(1) == out[j].shared_hooks.count(1))
                throw Error(Errc::InternalError, "families " + num(j) + " and " + num(i) +
                                                     " have equally many 1-hooks");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Distinct hook products.
//
// Family 0 is a single copy with overhang X; every unit of X adds p boxes.
// Family q > 0 stacks p^q + 1 copies with overhangs (0, y, 0, ..., 0, h);
// every unit of y adds p^(q+1) boxes and h in [1, p^q] fixes the weight
// modulo p^(q+1). Growing the knob (X or y) by one adds a box to each row
// of a copy, so the top row of that copy holds the consecutive hooks
// a_1, ..., a_1 + knob - 1. Once that run reaches past twice the largest
// hook of every later family, a prime in between divides this family's
// hook product and no hook of the later ones.

namespace {

struct ProductBase {
    std::vector<PeriodicMember> members; // extensions reset to (0)
    PartitionDatum rep;
    int p = 0;
};

ProductBase product_base(std::span<const PeriodicMember> base)
{
    if (base.empty())
        throw Error(Errc::HypothesisFailure, "no members");
    const int p = base.front().datum.period();
    if (p < 3)
        throw Error(Errc::PeriodTooSmall, "period " + num(p) + " is below 3");
    check_extension_hypotheses(distinct_data(base));
    ProductBase b;
    b.members = with_string(base, {0});
    b.rep = b.members.front().datum;
    b.p = p;
    return b;
}

struct Layout {
    std::vector<int> xs;
    int knob_at = 0; ///< index into xs of the growing copy
    std::int64_t knob = 0;
};

PartitionDatum layout_datum(const ProductBase& b, const Layout& l)
{
    return with_extensions(b.rep, l.xs);
}

std::optional<Layout> layout_at(const ProductBase& b, int q, std::int64_t w)
{
    const std::int64_t p = b.p;
    if (q == 0) {
        const std::int64_t diff = w - weight_chain(with_extensions(b.rep, {0}));
        if (diff < 0 || diff % p != 0)
            return std::nullopt;
        return Layout{{static_cast<int>(diff / p)}, 0, diff / p};
    }
    const std::int64_t span = ipow(p, q);
    std::vector<int> xs(static_cast<std::size_t>(span + 1), 0);
    const std::int64_t diff = w - weight_chain(with_extensions(b.rep, xs));
    if (diff % p != 0)
        return std::nullopt;
    std::int64_t h = (diff / p) % span;
    if (h <= 0)
        h += span;
    const std::int64_t rest = diff / p - h;
    if (rest < 0)
        return std::nullopt;
    const std::int64_t y = rest / span;
    xs[1] = static_cast<int>(y);
    xs.back() = static_cast<int>(h);
    return Layout{std::move(xs), 1, y};
}

std::int64_t run_top(const ProductBase& b, const Layout& l)
{
    return b.rep.inf.first() + l.knob - 1;
}

/// Largest hook among families after q.
std::int64_t later_max_hook(const ProductBase& b, const std::vector<Layout>& ls, std::size_t q)
{
    std::int64_t m = 0;
    for (std::size_t j = q + 1; j < ls.size(); ++j)
        m = std::max(m, chain_max_hook(layout_datum(b, ls[j])));
    return m;
}

std::optional<std::vector<Layout>> layouts_at(const ProductBase& b, int k, std::int64_t w)
{
    std::vector<Layout> ls;
    for (int q = 0; q < k; ++q) {
        auto l = layout_at(b, q, w);
        // Zero overhang on the single copy can make conjugated members collide.
        if (!l || (q == 0 && l->knob < 1) || (q + 1 < k && l->knob < 1))
            return std::nullopt;
        ls.push_back(std::move(*l));
    }
    return ls;
}

/// The sufficient growth condition: run_top >= 2 (M + 1) + 1.
bool growth_condition(const ProductBase& b, const std::vector<Layout>& ls)
{
    for (std::size_t q = 0; q + 1 < ls.size(); ++q)
        if (run_top(b, ls[q]) < 2 * (later_max_hook(b, ls, q) + 1) + 1)
            return false;
    return true;
}

/// Whether every separating window actually holds a prime.
bool windows_have_primes(const ProductBase& b, const std::vector<Layout>& ls)
{
    for (std::size_t q = 0; q + 1 < ls.size(); ++q) {
        const std::int64_t lo = later_max_hook(b, ls, q);
        const std::int64_t hi = run_top(b, ls[q]);
        if (lo + 1 >= hi || !prime_in_range(lo, hi))
            return false;
    }
    return true;
}

std::vector<Cluster> certify_families(const ProductBase& b, const std::vector<Layout>& ls,
                                      Verification v)
{
    std::vector<Cluster> out;
    for (const auto& l : ls) {
        const int depth = static_cast<int>(l.xs.size());
        out.push_back(build_cluster(with_string(b.members, l.xs),
                                    depth == 1 ? Certificate::ExtensionLemma
                                               : Certificate::VerticalExpansion,
                                    chain_periods(b.p, depth), v));
    }
    for (const auto& c : out)
        if (c.weight() != out.front().weight())
            throw Error(Errc::InternalError, "families have weights " +
                                                 num(out.front().weight()) + " and " +
                                                 num(c.weight()));

    std::vector<BigInt> products;
    for (const auto& c : out)
        products.push_back(multiset_product(c.shared_hooks));

    for (std::size_t q = 0; q + 1 < ls.size(); ++q) {
        const std::int64_t lo = later_max_hook(b, ls, q);
        const std::int64_t hi = run_top(b, ls[q]);
        std::optional<std::int64_t> ell;
        if (lo + 1 < hi)
            ell = prime_in_range(lo, hi);
        if (!ell)
            throw Error(Errc::NoPrimeFound,
                        "no prime strictly between " + num(lo) + " and " + num(hi));

        // Locate the prime on the top row of the growing copy.
        const PartitionDatum d = layout_datum(b, ls[q]);
        const Partition shape = assemble(d);
        const int depth = d.depth();
        const int row = (depth - 1 - ls[q].knob_at) * b.p + 1;
        const int col = static_cast<int>(shape.part(row) + b.p - *ell);
        if (col < 1 || col > shape.part(row) || hook(shape, row, col) != *ell)
            throw Error(Errc::InternalError,
                        "prime " + num(*ell) + " is not a hook at row " + num(row));

        for (std::size_t j = q; j < out.size(); ++j) {
            const bool divides = mpz_divisible_ui_p(products[j].get_mpz_t(),
                                                    static_cast<unsigned long>(*ell)) != 0;
            if (divides != (j == q))
                throw Error(Errc::InternalError, "prime " + num(*ell) + " fails to separate family " +
                                                     num(q) + " from family " + num(j));
        }
        out[q].witness_prime = *ell;
    }
    for (std::size_t i = 0; i < products.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (products[i] == products[j])
                throw Error(Errc::InternalError,
                            "families " + num(j) + " and " + num(i) + " share a hook product");
    return out;
}

} // namespace

DistinctProducts distinct_products(std::span<const PeriodicMember> base, Verification v)
{
    const ProductBase b = product_base(base);
    const std::int64_t p = b.p;
    const std::int64_t w_base = weight_chain(b.rep);

    std::vector<int> chain(static_cast<std::size_t>(p + 1), 0);
    int h = 0;
    std::int64_t w_h = 0;
    for (int i = 1; i <= p; ++i) {
        chain.back() = i;
        const std::int64_t w = weight_chain(with_extensions(b.rep, chain));
        if ((w - w_base) % (p * p) == 0) {
            h = i;
            w_h = w;
            break;
        }
    }
    if (h == 0)
        throw Error(Errc::InternalError, "no chain top matches the base weight mod p^2");
    chain.back() = h;
    const std::int64_t x = (w_h - w_base) / p;

    const std::int64_t a = chain_max_hook(with_extensions(b.rep, chain));
    const std::int64_t bb = chain_max_hook(with_extensions(b.rep, {static_cast<int>(x)}));
    const std::int64_t tr = b.rep.remainder.rc_sum();
    // (bb + p y) - tr >= 2 (a + y + 1) + 1
    const std::int64_t need = 2 * a + 3 + tr - bb;
    const std::int64_t y = need <= 0 ? 0 : (need + p - 3) / (p - 2);

    chain[1] = static_cast<int>(y);
    std::vector<Layout> ls{Layout{{static_cast<int>(x + p * y)}, 0, x + p * y},
                           Layout{chain, 1, y}};
    auto clusters = certify_families(b, ls, v);

    DistinctProducts out;
    out.witness_prime = *clusters[0].witness_prime;
    out.extended = std::move(clusters[0]);
    out.chained = std::move(clusters[1]);
    out.h = h;
    out.x = x;
    out.y = y;
    out.weight = w_h + y * p * p;
    return out;
}

std::vector<Cluster> distinct_product_clusters_at(std::span<const PeriodicMember> base, int k,
                                                  std::int64_t weight, Verification v)
{
    if (k < 1)
        throw Error(Errc::HypothesisFailure, "count " + num(k) + " is not positive");
    const ProductBase b = product_base(base);
    auto ls = layouts_at(b, k, weight);
    if (!ls)
        throw Error(Errc::WeightOutOfRange,
                    "weight " + num(weight) + " does not fit " + num(k) + " families");
    return certify_families(b, *ls, v);
}

std::int64_t distinct_product_threshold(std::span<const PeriodicMember> base, int k)
{
    if (k < 1)
        throw Error(Errc::HypothesisFailure, "count " + num(k) + " is not positive");
    const ProductBase b = product_base(base);
    // Over one full cycle of p^k boxes every top overhang repeats and every
    // knob grows, so the growth condition is monotone along each residue
    // class mod p^k; p^(k-1) consecutive successes in steps of p cover all.
    const std::int64_t needed = ipow(b.p, k - 1);
    const std::int64_t start = weight_chain(b.rep) + b.p;
    std::int64_t run_start = start;
    std::int64_t run = 0;
    for (std::int64_t w = start, steps = 0; run < needed; w += b.p, ++steps) {
        if (steps > 100'000'000)
            throw Error(Errc::InternalError, "threshold search did not terminate");
        auto ls = layouts_at(b, k, w);
        if (ls && growth_condition(b, *ls)) {
            if (run++ == 0)
                run_start = w;
        } else {
            run = 0;
        }
    }
    return run_start;
}

std::vector<Cluster> many_distinct_product_clusters(std::span<const PeriodicMember> base, int k,
                                                    Verification v)
{
    if (k < 1)
        throw Error(Errc::HypothesisFailure, "count " + num(k) + " is not positive");
    const ProductBase b = product_base(base);
    const std::int64_t limit = distinct_product_threshold(base, k);
    for (std::int64_t w = weight_chain(b.rep) + b.p; w <= limit; w += b.p) {
        auto ls = layouts_at(b, k, w);
        if (ls && windows_have_primes(b, *ls))
            return certify_families(b, *ls, v);
    }
    throw Error(Errc::NoPrimeFound, "no separating primes up to weight " + num(limit));
}

} // namespace hc
