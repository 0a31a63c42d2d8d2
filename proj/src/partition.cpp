#include "hookclusters/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hookclusters/error.hpp"

namespace hc {

// ---------------------------------------------------------------- IntMultiset

IntMultiset IntMultiset::from_values(std::span<const int> values)
{
    std::vector<int> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    IntMultiset m;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i])
            ++j;
        m.entries_.emplace_back(sorted[i], static_cast<std::int64_t>(j - i));
        i = j;
    }
    m.total_ = static_cast<std::int64_t>(sorted.size());
    return m;
}

IntMultiset IntMultiset::from_counts(std::vector<Entry> counts)
{
    std::sort(counts.begin(), counts.end());
    IntMultiset m;
    for (const auto& [v, c] : counts) {
        if (c < 0)
            throw Error(Errc::InternalError, "negative multiplicity in multiset");
        if (c == 0)
            continue;
        if (!m.entries_.empty() && m.entries_.back().first == v)
            m.entries_.back().second += c;
        else
            m.entries_.emplace_back(v, c);
        m.total_ += c;
    }
    return m;
}

void IntMultiset::add(int value, std::int64_t count)
{
    if (count == 0)
        return;
    auto it = std::lower_bound(entries_.begin(), entries_.end(), value,
                               [](const Entry& e, int v) { return e.first < v; });
    if (it != entries_.end() && it->first == value)
        it->second += count;
    else
        entries_.insert(it, Entry{value, count});
    total_ += count;
}

std::int64_t IntMultiset::count(int value) const noexcept
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), value,
                               [](const Entry& e, int v) { return e.first < v; });
    return (it != entries_.end() && it->first == value) ? it->second : 0;
}

std::optional<int> IntMultiset::max() const noexcept
{
    if (entries_.empty())
        return std::nullopt;
    return entries_.back().first;
}

std::vector<int> IntMultiset::elements() const
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(total_));
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
        out.insert(out.end(), static_cast<std::size_t>(it->second), it->first);
    return out;
}

IntMultiset& IntMultiset::operator+=(const IntMultiset& other)
{
    std::vector<Entry> merged;
    merged.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first))
            merged.push_back(*a++);
        else if (a == entries_.end() || b->first < a->first)
            merged.push_back(*b++);
        else {
            merged.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    entries_ = std::move(merged);
    total_ += other.total_;
    return *this;
}

IntMultiset IntMultiset::scaled(std::int64_t factor) const
{
    IntMultiset m;
    if (factor <= 0)
        return m;
    m.entries_ = entries_;
    for (auto& e : m.entries_)
        e.second *= factor;
    m.total_ = total_ * factor;
    return m;
}

IntMultiset IntMultiset::shifted(int delta) const
{
    IntMultiset m = *this;
    for (auto& e : m.entries_)
        e.first += delta;
    return m;
}

IntMultiset IntMultiset::reflected(int t) const
{
    IntMultiset m;
    m.entries_.reserve(entries_.size());
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
        m.entries_.emplace_back(t - it->first, it->second);
    m.total_ = total_;
    return m;
}

bool IntMultiset::contains(const IntMultiset& other) const noexcept
{
    auto a = entries_.begin();
    for (const auto& [v, c] : other.entries_) {
        while (a != entries_.end() && a->first < v)
            ++a;
        if (a == entries_.end() || a->first != v || a->second < c)
            return false;
    }
    return true;
}

IntMultiset IntMultiset::minus(const IntMultiset& other) const
{
    if (!contains(other))
        throw Error(Errc::InternalError, "multiset difference of a non-subset");
    std::vector<Entry> out;
    auto b = other.entries_.begin();
    for (const auto& [v, c] : entries_) {
        std::int64_t left = c;
        if (b != other.entries_.end() && b->first == v) {
            left -= b->second;
            ++b;
        }
        if (left > 0)
            out.emplace_back(v, left);
    }
    IntMultiset m;
    m.entries_ = std::move(out);
    m.total_ = total_ - other.total_;
    return m;
}

std::optional<int> IntMultiset::first_difference(const IntMultiset& other) const noexcept
{
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first))
            return a->first;
        if (a == entries_.end() || b->first < a->first)
            return b->first;
        if (a->second != b->second)
            return a->first;
        ++a;
        ++b;
    }
    return std::nullopt;
}

std::string IntMultiset::key() const
{
    std::string out;
    for (const auto& [v, c] : entries_) {
        if (!out.empty())
            out += ',';
        out += std::to_string(v);
        out += ':';
        out += std::to_string(c);
    }
    return out;
}

// ------------------------------------------------------------------ Partition

Partition::Partition(std::vector<int> parts)
    : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw Error(Errc::NonPositivePart,
                        "part " + std::to_string(i + 1) + " is " + std::to_string(parts_[i]));
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw Error(Errc::NonDecreasingParts,
                        "part " + std::to_string(i + 1) + " (" + std::to_string(parts_[i]) +
                            ") exceeds part " + std::to_string(i) + " (" +
                            std::to_string(parts_[i - 1]) + ")");
        weight_ += parts_[i];
    }
}

int Partition::part(int i) const noexcept
{
    if (i < 1 || i > rows())
        return 0;
    return parts_[static_cast<std::size_t>(i - 1)];
}

std::string to_string(const Partition& p)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i)
            os << ',';
        os << p.parts()[i];
    }
    os << ')';
    return os.str();
}

Partition new_partition(std::vector<int> parts)
{
    return Partition(std::move(parts));
}

int column_length(const Partition& p, int j) noexcept
{
    // number of parts >= j; parts are non-increasing
    const auto& v = p.parts();
    auto it = std::partition_point(v.begin(), v.end(), [j](int x) { return x >= j; });
    return static_cast<int>(it - v.begin());
}

Partition conjugate(const Partition& p)
{
    std::vector<int> cols(static_cast<std::size_t>(p.columns()));
    for (int j = 1; j <= p.columns(); ++j)
        cols[static_cast<std::size_t>(j - 1)] = column_length(p, j);
    return Partition(std::move(cols));
}

int hook(const Partition& p, int i, int j)
{
    if (i < 1 || i > p.rows() || j < 1 || j > p.part(i))
        throw Error(Errc::BoxOutOfRange, "box (" + std::to_string(i) + "," + std::to_string(j) +
                                             ") not in " + to_string(p));
    return (p.part(i) - j) + (column_length(p, j) - i) + 1;
}

std::vector<int> FirstColumnHooks::complement() const
{
    std::vector<char> in_a(static_cast<std::size_t>(bound), 0);
    for (int a : values)
        in_a[static_cast<std::size_t>(a)] = 1;
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(bound) - values.size());
    for (int v = bound - 1; v >= 0; --v)
        if (!in_a[static_cast<std::size_t>(v)])
            out.push_back(v);
    return out;
}

FirstColumnHooks first_column_hooks(const Partition& p)
{
    if (p.empty())
        throw Error(Errc::EmptyPartition, "first-column hooks need at least one row");
    FirstColumnHooks fc;
    fc.bound = p.rc_sum();
    const int r = p.rows();
    fc.values.reserve(static_cast<std::size_t>(r));
    for (int i = 1; i <= r; ++i)
        fc.values.push_back(p.part(i) + r - i);
    return fc;
}

HookMultiset row_hooks_from_A(int a, std::span<const int> complement)
{
    std::vector<int> values;
    for (int ap : complement)
        if (a > ap)
            values.push_back(a - ap);
    return IntMultiset::from_values(values);
}

namespace {

// Dense counting of {x - y : x in big, y in small, x > y}.
IntMultiset positive_differences(std::span<const int> big, std::span<const int> small, int bound)
{
    std::vector<std::int64_t> counts(static_cast<std::size_t>(bound) + 1, 0);
    for (int x : big)
        for (int y : small)
            if (x > y)
                ++counts[static_cast<std::size_t>(x - y)];
    std::vector<IntMultiset::Entry> entries;
    for (int v = 1; v <= bound; ++v)
        if (counts[static_cast<std::size_t>(v)])
            entries.emplace_back(v, counts[static_cast<std::size_t>(v)]);
    return IntMultiset::from_counts(std::move(entries));
}

} // namespace

HookMultiset hooks_from_first_column(const FirstColumnHooks& fc)
{
    const auto comp = fc.complement();
    return positive_differences(fc.values, comp, fc.bound);
}

HookMultiset hook_multiset(const Partition& p)
{
    if (p.empty())
        return {};
    return hooks_from_first_column(first_column_hooks(p));
}

Partition remnant(const Partition& p)
{
    return complement_in_rectangle(p, p.rows(), p.columns());
}

Partition complement_in_rectangle(const Partition& p, int rows, int cols)
{
    if (p.rows() > rows || p.columns() > cols)
        throw Error(Errc::IndexOutOfRange, to_string(p) + " does not fit a " +
                                               std::to_string(rows) + "x" + std::to_string(cols) +
                                               " frame");
    std::vector<int> out;
    for (int i = rows; i >= 1; --i) {
        int v = cols - p.part(i);
        if (v > 0)
            out.push_back(v);
    }
    return Partition(std::move(out));
}

HookMultiset remnant_hooks(const Partition& p)
{
    if (p.empty())
        return {};
    const auto fc = first_column_hooks(p);
    const auto comp = fc.complement();
    return positive_differences(comp, fc.values, fc.bound);
}

std::int64_t comphook_delta(const HookMultiset& hooks, int t, int i) noexcept
{
    return hooks.count(i) - hooks.count(t - i);
}

std::int64_t comphook_delta(const Partition& p, int i)
{
    const int t = p.rc_sum();
    if (p.empty() || i < 1 || i > t - 1)
        throw Error(Errc::IndexOutOfRange,
                    "index " + std::to_string(i) + " outside [1, " + std::to_string(t - 1) + "]");
    return comphook_delta(hook_multiset(p), t, i);
}

Partition extend_first_rows(const Partition& p, int rows, int n)
{
    if (rows < 0 || rows > p.rows())
        throw Error(Errc::PeriodExceedsRows, std::to_string(rows) + " rows requested, " +
                                                 to_string(p) + " has " +
                                                 std::to_string(p.rows()));
    std::vector<int> parts = p.parts();
    for (int i = 0; i < rows; ++i)
        parts[static_cast<std::size_t>(i)] += n;
    return Partition(std::move(parts));
}

} // namespace hc
