#include "hookclusters/oracle.hpp"

#include <string>

#include "hookclusters/error.hpp"

namespace hc {

std::vector<Partition> enumerate_partitions(int n, int ceiling)
{
    if (n < 0)
        throw Error(Errc::WeightOutOfRange, "negative weight " + std::to_string(n));
    if (n > ceiling)
        throw Error(Errc::CeilingExceeded,
                    std::to_string(n) + " exceeds the ceiling " + std::to_string(ceiling));
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> a{n};
    for (;;) {
        out.emplace_back(a);
        // Drop the trailing 1s, decrease the last larger part and refill
        // greedily with parts no larger than it.
        int ones = 0;
        while (!a.empty() && a.back() == 1) {
            a.pop_back();
            ++ones;
        }
        if (a.empty())
            break;
        const int k = --a.back();
        int rest = ones + 1;
        while (rest > 0) {
            const int part = std::min(k, rest);
            a.push_back(part);
            rest -= part;
        }
    }
    return out;
}

namespace {

struct Keys {
    std::vector<HookMultiset> hooks;
    std::vector<BigInt> degrees;
};

WeightCensus group(int n, std::vector<Partition> parts, Keys keys)
{
    WeightCensus c;
    c.n = n;
    std::map<std::string, std::size_t> by_hooks;
    std::map<BigInt, std::vector<Partition>> by_degree;
    std::vector<std::vector<std::size_t>> hook_members;
    std::vector<std::string> hook_keys;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const std::string key = keys.hooks[i].key();
        auto [it, fresh] = by_hooks.try_emplace(key, hook_members.size());
        if (fresh) {
            hook_members.emplace_back();
            hook_keys.push_back(key);
        }
        hook_members[it->second].push_back(i);
        by_degree[keys.degrees[i]].push_back(parts[i]);
    }
    for (const auto& [key, slot] : by_hooks) {
        HookGroup g;
        g.hooks = keys.hooks[hook_members[slot].front()];
        for (std::size_t i : hook_members[slot]) {
            c.group_index.emplace(parts[i], c.hook_groups.size());
            g.members.push_back(parts[i]);
        }
        c.hook_groups.push_back(std::move(g));
    }
    for (auto& [deg, members] : by_degree) {
        c.m_of_n = std::max(c.m_of_n, members.size());
        c.degree_groups.push_back({deg, std::move(members)});
    }
    c.partitions = std::move(parts);
    return c;
}

} // namespace

long WeightCensus::group_of(const Partition& p) const
{
    auto it = group_index.find(p);
    return it == group_index.end() ? -1 : static_cast<long>(it->second);
}

WeightCensus census_serial(int n, int ceiling)
{
    std::vector<Partition> parts = enumerate_partitions(n, ceiling);
    Keys keys;
    keys.hooks.reserve(parts.size());
    keys.degrees.reserve(parts.size());
    for (const auto& p : parts) {
        keys.hooks.push_back(hook_multiset(p));
        keys.degrees.push_back(character_degree(p));
    }
    return group(n, std::move(parts), std::move(keys));
}

WeightCensus census(int n, int ceiling)
{
    std::vector<Partition> parts = enumerate_partitions(n, ceiling);
    const long count = static_cast<long>(parts.size());
    Keys keys;
    keys.hooks.resize(parts.size());
    keys.degrees.resize(parts.size());
#pragma omp parallel for schedule(dynamic, 256)
    for (long i = 0; i < count; ++i) {
        const auto u = static_cast<std::size_t>(i);
        keys.hooks[u] = hook_multiset(parts[u]);
        keys.degrees[u] = character_degree(parts[u]);
    }
    return group(n, std::move(parts), std::move(keys));
}

std::size_t m_of_n(int n)
{
    return census(n).m_of_n;
}

bool cross_validate(const Cluster& c, const WeightCensus& census)
{
    if (c.weight() != census.n)
        throw Error(Errc::WeightMismatch, "cluster weight " + std::to_string(c.weight()) +
                                              " but census of " + std::to_string(census.n));
    long g = -2;
    for (const auto& m : c.members) {
        const long mg = census.group_of(m);
        if (mg < 0 || (g != -2 && mg != g))
            return false;
        g = mg;
    }
    return true;
}

} // namespace hc
