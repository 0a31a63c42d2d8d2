#include "hookclusters/infinite_partition.hpp"

#include <string>

#include "hookclusters/error.hpp"

namespace hc {

namespace {

std::string list_text(const std::vector<int>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(v[i]);
    }
    return s + ')';
}

} // namespace

Characteristic::Characteristic(std::vector<int> values)
    : values_(std::move(values))
{
    if (values_.empty())
        throw Error(Errc::InvalidCharacteristic, "empty characteristic");
    for (std::size_t i = 1; i < values_.size(); ++i)
        if (values_[i] >= values_[i - 1])
            throw Error(Errc::InvalidCharacteristic,
                        list_text(values_) + " is not strictly decreasing");
    if (values_.back() != 1)
        throw Error(Errc::InvalidCharacteristic, list_text(values_) + " does not end in 1");
}

Characteristic characteristic_from_front(const Partition& front)
{
    if (front.empty() || front.parts().back() != 1)
        throw Error(Errc::NotAFrontSection, to_string(front) + " does not end in a part of 1");
    return Characteristic(first_column_hooks(front).values);
}

Partition front_from_characteristic(const Characteristic& c)
{
    const int p = c.height();
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(p));
    for (int i = 1; i <= p; ++i)
        parts.push_back(c.at(i) - (p - i));
    return Partition(std::move(parts));
}

MissingHooks missing_hooks(const Characteristic& c)
{
    const auto& a = c.values();
    std::vector<int> diffs;
    diffs.reserve(a.size() * (a.size() - 1) / 2);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            diffs.push_back(a[i] - a[j]);
    return IntMultiset::from_values(diffs);
}

Characteristic complementary(const Characteristic& c, int t)
{
    if (t != c.first() + 1)
        throw Error(Errc::InconsistentT, "t = " + std::to_string(t) + " but a_1 + 1 = " +
                                             std::to_string(c.first() + 1));
    const int p = c.height();
    std::vector<int> b;
    b.reserve(static_cast<std::size_t>(p));
    for (int i = 1; i <= p; ++i)
        b.push_back(t - c.at(p + 1 - i));
    return Characteristic(std::move(b));
}

bool inf_clustered(const Characteristic& c1, const Characteristic& c2)
{
    if (c1.height() != c2.height())
        throw Error(Errc::HeightMismatch, "heights " + std::to_string(c1.height()) + " and " +
                                              std::to_string(c2.height()));
    return missing_hooks(c1) == missing_hooks(c2);
}

Characteristic double_characteristic(const Characteristic& c, int x)
{
    if (x < c.first())
        throw Error(Errc::XTooSmall,
                    "x = " + std::to_string(x) + " < a_1 = " + std::to_string(c.first()));
    std::vector<int> out;
    out.reserve(2 * c.values().size());
    for (int a : c.values())
        out.push_back(a + x);
    out.insert(out.end(), c.values().begin(), c.values().end());
    return Characteristic(std::move(out));
}

} // namespace hc
