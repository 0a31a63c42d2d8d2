#include "hookclusters/envelope.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "hookclusters/error.hpp"

namespace hc {

Characteristic env_inf(const Partition& p)
{
    const FirstColumnHooks fc = first_column_hooks(p);
    const int t = fc.bound;
    std::vector<int> values;
    values.reserve(static_cast<std::size_t>(t));
    for (int a : fc.values)
        values.push_back(a + t + 1);
    for (int a : fc.complement())
        values.push_back(a + 1);
    std::sort(values.begin(), values.end(), std::greater<>());
    return Characteristic(std::move(values));
}

PartitionDatum envelope_datum(const Partition& p, int extension)
{
    return PartitionDatum{env_inf(p), p, {extension}};
}

Partition envelope(const Partition& p, int extension)
{
    return assemble(envelope_datum(p, extension));
}

FirstColumnHooks envelope_first_column(const Partition& p)
{
    const FirstColumnHooks fc = first_column_hooks(p);
    const int t = fc.bound;
    FirstColumnHooks out;
    out.bound = 3 * t;
    for (int a : fc.values) {
        out.values.push_back(a);
        out.values.push_back(a + 2 * t);
    }
    for (int a : fc.complement())
        out.values.push_back(a + t);
    std::sort(out.values.begin(), out.values.end(), std::greater<>());
    return out;
}

EnvelopeDecomposition envelope_hooks_formula(const Partition& p)
{
    const HookMultiset h = hook_multiset(p);
    const int t = p.rc_sum();
    const MissingHooks missing = missing_hooks(env_inf(p));

    EnvelopeDecomposition d;
    d.t = t;
    d.star = h.scaled(2);
    d.bullet = missing.shifted(t);
    // The missing hooks of size at least t are exactly t + H(p).
    d.cross = missing.minus(h.shifted(t)).reflected(t);
    d.dot.add(t, t);
    return d;
}

Cluster envelope_cluster(const Cluster& c, int extension, Verification v)
{
    if (c.members.empty())
        throw Error(Errc::HypothesisFailure, "empty cluster");
    const int t = c.members.front().rc_sum();
    for (const auto& m : c.members)
        if (m.rc_sum() != t)
            throw Error(Errc::HypothesisFailure, to_string(m) + " has row-column sum " +
                                                     std::to_string(m.rc_sum()) + ", not " +
                                                     std::to_string(t));

    Cluster out;
    Periodicity per;
    per.periods = {t};
    for (const auto& m : c.members) {
        PartitionDatum d = envelope_datum(m, extension);
        Partition e = assemble(d);
        Partition ec = conjugate(e);
        for (bool conj : {false, true}) {
            const Partition& q = conj ? ec : e;
            if (std::find(out.members.begin(), out.members.end(), q) != out.members.end())
                throw Error(Errc::MemberCollision,
                            to_string(q) + " arises twice (from " + to_string(m) + ")");
            out.members.push_back(q);
            per.base.push_back({d, conj});
        }
    }
    if (v == Verification::Paranoid)
        out.shared_hooks = verify_cluster(out.members).shared_hooks;
    else
        out.shared_hooks = hook_multiset(out.members.front());
    out.certificate = Certificate::Enveloping;
    out.periodicity = std::move(per);
    return out;
}

} // namespace hc
