// Independent reference computations and generators shared by the tests.
// Nothing here calls the production hook code.
#pragma once

#include <algorithm>
#include <initializer_list>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "hookclusters/cluster.hpp"
#include "hookclusters/datum.hpp"
#include "hookclusters/partition.hpp"

namespace ref {

using hc::Partition;

inline std::vector<int> column_counts(const std::vector<int>& parts)
{
    std::vector<int> cols(parts.empty() ? 0 : static_cast<std::size_t>(parts.front()), 0);
    for (int len : parts)
        for (int j = 0; j < len; ++j)
            ++cols[static_cast<std::size_t>(j)];
    return cols;
}

/// arm + leg + 1 for every box, counted box by box.
inline std::map<int, std::int64_t> box_hooks(const Partition& p)
{
    const auto& parts = p.parts();
    const auto cols = column_counts(parts);
    std::map<int, std::int64_t> h;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int j = 0; j < parts[i]; ++j) {
            const int arm = parts[i] - j - 1;
            const int leg = cols[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            ++h[arm + leg + 1];
        }
    return h;
}

inline hc::HookMultiset box_multiset(const Partition& p)
{
    const auto h = box_hooks(p);
    std::vector<hc::IntMultiset::Entry> e(h.begin(), h.end());
    return hc::IntMultiset::from_counts(std::move(e));
}

inline int box_hook(const Partition& p, int i, int j)
{
    const auto cols = column_counts(p.parts());
    return (p.parts()[static_cast<std::size_t>(i - 1)] - j) +
           (cols[static_cast<std::size_t>(j - 1)] - i) + 1;
}

/// p(n) by the pentagonal number recurrence.
inline std::vector<std::int64_t> partition_counts(int n)
{
    std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > m)
                break;
            const std::int64_t sign = (k % 2) ? 1 : -1;
            p[static_cast<std::size_t>(m)] += sign * p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m)
                p[static_cast<std::size_t>(m)] += sign * p[static_cast<std::size_t>(m - g2)];
        }
    return p;
}

/// All partitions of n by recursion on the largest part (any order).
inline void all_partitions(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        cur.push_back(k);
        all_partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}

inline std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    all_partitions(n, n, cur, out);
    return out;
}

/// Characteristic of a front section read off its parts: a_i = F_i + p - i.
inline std::vector<int> front_characteristic(const std::vector<int>& front)
{
    const int p = static_cast<int>(front.size());
    std::vector<int> a;
    for (int i = 1; i <= p; ++i)
        a.push_back(front[static_cast<std::size_t>(i - 1)] + p - i);
    return a;
}

/// Enveloping infinite partition by cut and paste: a t x (t+1) rectangle,
/// the reflected shape cut from its bottom-right, the shape glued on the
/// top-right; the front section is what remains after removing the full
/// columns.
inline std::vector<int> geometric_env_inf(const Partition& lam)
{
    const int t = lam.rc_sum();
    const auto conj = column_counts(lam.parts());
    std::vector<int> rows(static_cast<std::size_t>(t), t + 1);
    for (std::size_t k = 0; k < conj.size(); ++k)
        rows[static_cast<std::size_t>(t) - 1 - k] -= conj[k];
    for (std::size_t i = 0; i < lam.parts().size(); ++i)
        rows[i] += lam.parts()[i];
    const int low = *std::min_element(rows.begin(), rows.end());
    for (int& r : rows)
        r -= low - 1;
    return front_characteristic(rows);
}

/// Enveloping partition by cut and paste: a t x t square, the reflected
/// shape cut from its bottom-right, copies glued to the top-right and below
/// the bottom-left; the first t rows move right by the extension.
inline Partition geometric_envelope(const Partition& lam, int extension)
{
    const int t = lam.rc_sum();
    const auto conj = column_counts(lam.parts());
    std::vector<int> rows(static_cast<std::size_t>(t), t + extension);
    for (std::size_t k = 0; k < conj.size(); ++k)
        rows[static_cast<std::size_t>(t) - 1 - k] -= conj[k];
    for (std::size_t i = 0; i < lam.parts().size(); ++i)
        rows[i] += lam.parts()[i];
    rows.insert(rows.end(), lam.parts().begin(), lam.parts().end());
    return Partition(rows);
}

/// Stack copies of a front section (given by its parts) on a remainder,
/// row by row, as an independent check of assembly.
inline Partition stack(const std::vector<int>& front, const Partition& rem,
                       const std::vector<int>& xs)
{
    std::vector<int> rows(rem.parts().rbegin(), rem.parts().rend()); // bottom-up
    int below = rem.columns();
    for (int x : xs) {
        const int base = below + x;
        for (auto it = front.rbegin(); it != front.rend(); ++it)
            rows.push_back(base + *it - 1);
        below = rows.back();
    }
    std::reverse(rows.begin(), rows.end());
    return Partition(rows);
}

inline Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

/// Rows repeated: rep(5, 2) = {5, 5}.
inline std::vector<int> rep(int v, int k) { return std::vector<int>(static_cast<std::size_t>(k), v); }

inline Partition cat(std::initializer_list<std::vector<int>> blocks)
{
    std::vector<int> parts;
    for (const auto& b : blocks)
        parts.insert(parts.end(), b.begin(), b.end());
    return Partition(parts);
}

// The period-3 families of equal-hook pairs, n >= 0.
inline Partition A(int n) { return P({n + 6, n + 3, n + 3, 2}); }
inline Partition A2(int n) { return P({n + 5, n + 5, n + 2, 1, 1}); }
inline Partition B(int n) { return P({n + 8, n + 4, n + 3, 3, 1}); }
inline Partition B2(int n) { return P({n + 7, n + 6, n + 2, 2, 1, 1}); }
inline Partition C(int n) { return P({n + 10, n + 4, n + 4, 4, 2}); }
inline Partition C2(int n) { return P({n + 8, n + 8, n + 2, 2, 2, 1, 1}); }

// Pairs whose remainders are not conjugate.
inline Partition D(int n) { return cat({{n + 8}, rep(n + 5, 2), {5, 3}, rep(2, 3)}); }
inline Partition D2(int n) { return cat({rep(n + 7, 2), {n + 4}, rep(4, 2), {3}, rep(1, 3)}); }
inline Partition E(int n) { return cat({{n + 8}, rep(n + 5, 3), {n + 3}, rep(n + 2, 2), {2}}); }
inline Partition E2(int n) { return cat({rep(n + 7, 2), rep(n + 4, 3), {n + 3, n + 1}, rep(1, 2)}); }

// Two-parameter family.
inline Partition T(int n, int r) { return cat({{n + 6}, rep(n + 4, r), rep(n + 3, 2), {2}}); }
inline Partition T2(int n, int r) { return cat({rep(n + 5, 2), rep(n + 4, r), {n + 2}, rep(1, 2)}); }

// --- generators -----------------------------------------------------------

using Rng = std::mt19937_64;

inline Partition random_partition(Rng& rng, int n)
{
    std::vector<int> parts;
    int left = n;
    while (left > 0) {
        std::uniform_int_distribution<int> d(1, left);
        const int k = d(rng);
        parts.push_back(k);
        left -= k;
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
}

/// Strictly decreasing, ending in 1, height p, largest entry <= max_first.
inline std::vector<int> random_characteristic(Rng& rng, int p, int max_first)
{
    std::vector<int> pool;
    for (int v = 2; v <= max_first; ++v)
        pool.push_back(v);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<int> a(pool.begin(), pool.begin() + (p - 1));
    a.push_back(1);
    std::sort(a.rbegin(), a.rend());
    return a;
}

/// Fronts of weight at most max_weight with a final part 1.
inline std::vector<int> random_front(Rng& rng, int p, int max_weight)
{
    std::uniform_int_distribution<int> d(p, std::max(p, max_weight));
    const int w = d(rng);
    std::vector<int> parts(static_cast<std::size_t>(p), 1);
    for (int extra = w - p; extra > 0; --extra) {
        std::uniform_int_distribution<int> row(0, p - 2 < 0 ? 0 : p - 2);
        if (p == 1)
            break;
        const auto r = static_cast<std::size_t>(row(rng));
        // keep the parts weakly decreasing
        if (r == 0 || parts[r - 1] > parts[r])
            ++parts[r];
    }
    return parts;
}

} // namespace ref
