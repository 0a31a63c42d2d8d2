#include "hookclusters/serialize.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>
#include <string>

#include "hookclusters/error.hpp"

namespace hc {

namespace {

int parse_int(std::string_view s, std::string_view whole)
{
    int v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size() || s.empty())
        throw std::invalid_argument("bad number '" + std::string(s) + "' in '" +
                                    std::string(whole) + "'");
    return v;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

Certificate certificate_from(std::string_view s)
{
    for (auto c : {Certificate::DirectCheck, Certificate::ExtensionLemma,
                   Certificate::VerticalExpansion, Certificate::Enveloping,
                   Certificate::ConjugatePair})
        if (to_string(c) == s)
            return c;
    throw std::invalid_argument("unknown certificate '" + std::string(s) + "'");
}

} // namespace

Partition parse_partition(std::string_view text)
{
    std::string_view s = trim(text);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')')
        s = trim(s.substr(1, s.size() - 2));
    std::vector<int> parts;
    while (!s.empty()) {
        const auto comma = s.find(',');
        std::string_view item = trim(s.substr(0, comma));
        s = comma == std::string_view::npos ? std::string_view{} : s.substr(comma + 1);
        if (comma != std::string_view::npos && trim(s).empty())
            throw std::invalid_argument("trailing comma in '" + std::string(text) + "'");
        int reps = 1;
        if (const auto caret = item.find('^'); caret != std::string_view::npos) {
            reps = parse_int(trim(item.substr(caret + 1)), text);
            item = trim(item.substr(0, caret));
            if (reps < 0)
                throw std::invalid_argument("negative exponent in '" + std::string(text) + "'");
        }
        const int v = parse_int(item, text);
        parts.insert(parts.end(), static_cast<std::size_t>(reps), v);
    }
    return Partition(std::move(parts));
}

void to_json(json& j, const Partition& p) { j = p.parts(); }

void from_json(const json& j, Partition& p) { p = Partition(j.get<std::vector<int>>()); }

void to_json(json& j, const IntMultiset& m)
{
    j = json::object();
    for (const auto& [v, c] : m.entries())
        j[std::to_string(v)] = c;
}

void from_json(const json& j, IntMultiset& m)
{
    std::vector<IntMultiset::Entry> entries;
    for (const auto& [k, c] : j.items())
        entries.emplace_back(parse_int(k, k), c.get<std::int64_t>());
    m = IntMultiset::from_counts(std::move(entries));
}

void to_json(json& j, const Characteristic& c) { j = c.values(); }

void from_json(const json& j, Characteristic& c)
{
    c = Characteristic(j.get<std::vector<int>>());
}

void to_json(json& j, const PartitionDatum& d)
{
    j = json{{"characteristic", d.inf},
             {"remainder", d.remainder},
             {"extensions", d.extensions},
             {"period", d.period()}};
}

void from_json(const json& j, PartitionDatum& d)
{
    d.inf = j.at("characteristic").get<Characteristic>();
    d.remainder = j.at("remainder").get<Partition>();
    d.extensions = j.at("extensions").get<std::vector<int>>();
    if (j.contains("period") && j.at("period").get<int>() != d.period())
        throw Error(Errc::HeightMismatch, "period " + std::to_string(j.at("period").get<int>()) +
                                              " but the characteristic has height " +
                                              std::to_string(d.period()));
}

void to_json(json& j, const Cluster& c)
{
    j = json{{"members", c.members},
             {"hooks", c.shared_hooks},
             {"certificate", std::string(to_string(c.certificate))}};
    if (c.periodicity && !c.periodicity->periods.empty())
        j["period"] = c.periodicity->periods.front();
    if (c.witness_prime)
        j["witness_prime"] = *c.witness_prime;
}

void from_json(const json& j, Cluster& c)
{
    c = Cluster{};
    c.members = j.at("members").get<std::vector<Partition>>();
    c.shared_hooks = j.at("hooks").get<IntMultiset>();
    c.certificate = certificate_from(j.at("certificate").get<std::string>());
    if (j.contains("period"))
        c.periodicity = Periodicity{{j.at("period").get<int>()}, {}};
    if (j.contains("witness_prime"))
        c.witness_prime = j.at("witness_prime").get<std::int64_t>();
}

void to_json(json& j, const EnvelopeDecomposition& d)
{
    j = json{{"t", d.t}, {"star", d.star}, {"bullet", d.bullet}, {"cross", d.cross}, {"dot", d.dot}};
}

void to_json(json& j, const DriverPlan& p)
{
    j = json{{"ell_target", p.ell_target},
             {"m", p.m},
             {"iterations", p.iterations},
             {"level", p.level},
             {"tower_size", p.tower_size},
             {"t1", p.t1},
             {"t_sequence", p.t_sequence},
             {"modulus", p.modulus},
             {"seed_rows", p.seed_rows},
             {"seed_columns", p.seed_columns},
             {"weight_offset", p.weight_offset}};
}

std::string decimal(const BigInt& v) { return v.get_str(10); }

void write_census_jsonl(std::ostream& os, const WeightCensus& c)
{
    for (const auto& g : c.hook_groups)
        os << json{{"n", c.n}, {"hooks", g.hooks}, {"members", g.members}}.dump() << '\n';
}

void write_degree_csv(std::ostream& os, const WeightCensus& c)
{
    os << "n,degree,multiplicity\n";
    for (const auto& g : c.degree_groups)
        os << c.n << ',' << decimal(g.degree) << ',' << g.members.size() << '\n';
}

} // namespace hc
