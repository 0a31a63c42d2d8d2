#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hc {

/// A finite multiset of integers stored as a sorted (value, count) list.
/// Equality is entry-wise on the canonical form, so two multisets compare
/// equal exactly when every value has the same multiplicity.
class IntMultiset {
public:
    using Entry = std::pair<int, std::int64_t>;

    IntMultiset() = default;

    static IntMultiset from_values(std::span<const int> values);
    static IntMultiset from_counts(std::vector<Entry> counts);

    void add(int value, std::int64_t count = 1);

    std::int64_t count(int value) const noexcept;
    std::int64_t total() const noexcept { return total_; }
    bool empty() const noexcept { return entries_.empty(); }
    std::optional<int> max() const noexcept;
    std::span<const Entry> entries() const noexcept { return entries_; }

    /// All elements with repetition, largest first.
    std::vector<int> elements() const;

    IntMultiset& operator+=(const IntMultiset& other);
    IntMultiset scaled(std::int64_t factor) const;
    IntMultiset shifted(int delta) const;
    /// {t - v : v in this}
    IntMultiset reflected(int t) const;

    bool contains(const IntMultiset& other) const noexcept;
    /// Multiset difference; `other` must be contained in `*this`.
    IntMultiset minus(const IntMultiset& other) const;

    /// Smallest value whose multiplicity differs, if any.
    std::optional<int> first_difference(const IntMultiset& other) const noexcept;

    /// Canonical text form "v:c,v:c,..." in increasing value order.
    std::string key() const;

    friend bool operator==(const IntMultiset&, const IntMultiset&) = default;

private:
    std::vector<Entry> entries_;
    std::int64_t total_ = 0;
};

using HookMultiset = IntMultiset;

inline IntMultiset operator+(IntMultiset lhs, const IntMultiset& rhs)
{
    lhs += rhs;
    return lhs;
}

/// Weakly decreasing sequence of positive parts. Rows and columns are
/// 1-based in every accessor that takes an index.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    /// Part in row i (1-based); 0 past the last row.
    int part(int i) const noexcept;
    int rows() const noexcept { return static_cast<int>(parts_.size()); }
    int columns() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    int rc_sum() const noexcept { return rows() + columns(); }
    std::int64_t weight() const noexcept { return weight_; }
    bool empty() const noexcept { return parts_.empty(); }

    friend bool operator==(const Partition& a, const Partition& b) noexcept
    {
        return a.parts_ == b.parts_;
    }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept
    {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    std::int64_t weight_ = 0;
};

std::string to_string(const Partition& p);

Partition new_partition(std::vector<int> parts);

Partition conjugate(const Partition& p);

/// Number of boxes in column j (1-based).
int column_length(const Partition& p, int j) noexcept;

/// arm + leg + 1 of box (i, j); throws BoxOutOfRange.
int hook(const Partition& p, int i, int j);

HookMultiset hook_multiset(const Partition& p);

/// First-column hooks A of a nonempty partition together with its bound
/// t = rows + columns. The complement A' is taken in {0, ..., t-1}.
struct FirstColumnHooks {
    std::vector<int> values;
    int bound = 0;

    std::vector<int> complement() const;
};

FirstColumnHooks first_column_hooks(const Partition& p);

/// Hooks in the row whose first-column hook is `a`: {a - a' : a' in A', a > a'}.
HookMultiset row_hooks_from_A(int a, std::span<const int> complement);

/// Hook multiset from first-column hooks: {a - a' : a in A, a' in A', a > a'}.
HookMultiset hooks_from_first_column(const FirstColumnHooks& fc);

/// The partition cut away from the rows x columns bounding rectangle.
Partition remnant(const Partition& p);

/// Complement of p inside an explicit rows x cols frame, rotated to be a
/// partition. Applying it twice with the same frame returns p.
Partition complement_in_rectangle(const Partition& p, int rows, int cols);

/// Hooks of the remnant computed from A and A': {a' - a : a' > a}.
HookMultiset remnant_hooks(const Partition& p);

/// H_i(p) - H_{t-i}(p) with t = rows + columns; requires 1 <= i <= t-1.
std::int64_t comphook_delta(const Partition& p, int i);

/// H_i - H_{t-i} of an arbitrary multiset against an explicit t.
std::int64_t comphook_delta(const HookMultiset& hooks, int t, int i) noexcept;

/// Increment the first `rows` parts by n.
Partition extend_first_rows(const Partition& p, int rows, int n);

} // namespace hc
