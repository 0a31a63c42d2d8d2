// hookc: batch front end for the hookclusters library. Every subcommand
// prints one JSON report on stdout.
//
// Exit status: 0 success, 1 a check failed or a construction raised an
// error, 2 bad command line or unreadable input.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hookclusters/error.hpp"
#include "hookclusters/serialize.hpp"

using namespace hc;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Partition partition_arg(const std::string& text)
{
    try {
        return parse_partition(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

std::vector<PeriodicMember> read_members(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
    // Either a list of data or {"data": [...]}; each datum may carry
    // "conjugated": true.
    const json& list = j.is_object() && j.contains("data") ? j.at("data") : j;
    if (!list.is_array() || list.empty())
        throw UsageError(path + ": expected a non-empty array of data");
    std::vector<PeriodicMember> out;
    for (const auto& item : list) {
        try {
            out.push_back({item.get<PartitionDatum>(), item.value("conjugated", false)});
        } catch (const json::exception& e) {
            throw UsageError(path + ": " + e.what());
        }
    }
    return out;
}

json cluster_report(const Cluster& c)
{
    json j = c;
    // Every emitted cluster carries a direct verdict next to its certificate.
    try {
        verify_cluster(c.members);
        j["direct_check"] = "passed";
    } catch (const Error& e) {
        j["direct_check"] = std::string(e.what());
    }
    j["degree"] = decimal(character_degree(c.members.front()));
    return j;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hook-number clusters of partitions"};
    app.require_subcommand(1);
    bool paranoid = false;
    app.add_flag("--paranoid", paranoid, "recompute hooks on every certified construction");

    json inputs = json::object();
    json outputs = json::object();
    std::string status = "ok";
    int code = 0;
    std::function<void()> action;

    std::string part_text;
    auto* hooks_cmd = app.add_subcommand("hooks", "hook multiset of a partition");
    hooks_cmd->add_option("partition", part_text, "e.g. 4,2^2,1")->required();
    hooks_cmd->callback([&] {
        action = [&] {
            const Partition p = partition_arg(part_text);
            inputs["partition"] = p;
            outputs["hooks"] = hook_multiset(p);
            if (!p.empty())
                outputs["first_column"] = first_column_hooks(p).values;
        };
    });

    auto* degree_cmd = app.add_subcommand("degree", "character degree n!/(product of hooks)");
    degree_cmd->add_option("partition", part_text)->required();
    degree_cmd->callback([&] {
        action = [&] {
            const Partition p = partition_arg(part_text);
            inputs["partition"] = p;
            outputs["degree"] = decimal(character_degree(p));
            outputs["hook_product"] = decimal(hook_product(p));
        };
    });

    std::vector<std::string> part_texts;
    auto* verify_cmd = app.add_subcommand("verify", "check that partitions share their hooks");
    verify_cmd->add_option("partitions", part_texts)->required();
    verify_cmd->callback([&] {
        action = [&] {
            std::vector<Partition> ps;
            for (const auto& t : part_texts)
                ps.push_back(partition_arg(t));
            inputs["partitions"] = ps;
            try {
                outputs["cluster"] = cluster_report(verify_cluster(ps));
                status = "clustered";
            } catch (const Error& e) {
                if (e.code() != Errc::NotClustered && e.code() != Errc::DuplicateMember)
                    throw;
                status = "not clustered";
                outputs["error"] = std::string(to_string(e.code()));
                outputs["detail"] = e.detail();
                code = 1;
            }
        };
    });

    int ext = 0;
    auto* env_cmd = app.add_subcommand("envelope", "enveloping partition");
    env_cmd->add_option("partition", part_text)->required();
    env_cmd->add_option("--ext", ext, "extension of the enveloping datum")->check(CLI::NonNegativeNumber);
    env_cmd->callback([&] {
        action = [&] {
            const Partition p = partition_arg(part_text);
            inputs["partition"] = p;
            inputs["ext"] = ext;
            const PartitionDatum d = envelope_datum(p, ext);
            const Partition e = assemble(d);
            outputs["datum"] = d;
            outputs["envelope"] = e;
            outputs["weight"] = e.weight();
            outputs["hooks"] = hook_multiset(e);
            if (ext == 0) {
                const EnvelopeDecomposition dec = envelope_hooks_formula(p);
                outputs["decomposition"] = dec;
                if (dec.flatten() != hook_multiset(e)) {
                    status = "decomposition mismatch";
                    code = 1;
                }
            }
        };
    });

    std::string datum_path;
    std::vector<int> xs;
    auto* expand_cmd = app.add_subcommand("expand", "stack copies of periodic data");
    expand_cmd->add_option("datum", datum_path, "JSON file with a list of data")->required();
    expand_cmd->add_option("--xs", xs, "extension string x_1 ... x_d")->required();
    expand_cmd->callback([&] {
        action = [&] {
            const auto members = read_members(datum_path);
            inputs["datum"] = datum_path;
            inputs["xs"] = xs;
            const Verification v = paranoid ? Verification::Paranoid : Verification::Certificate;
            outputs["cluster"] = cluster_report(expand_periodic(members, xs, v));
        };
    });

    int k = 2;
    auto* dp_cmd = app.add_subcommand("distinct-products",
                                      "equal-weight clusters with different hook products");
    dp_cmd->add_option("datum", datum_path)->required();
    dp_cmd->add_option("--k", k, "number of clusters")->check(CLI::PositiveNumber);
    dp_cmd->callback([&] {
        action = [&] {
            const auto members = read_members(datum_path);
            inputs["datum"] = datum_path;
            inputs["k"] = k;
            const Verification v = paranoid ? Verification::Paranoid : Verification::Certificate;
            json list = json::array();
            if (k == 2) {
                const DistinctProducts dp = distinct_products(members, v);
                outputs["h"] = dp.h;
                outputs["x"] = dp.x;
                outputs["y"] = dp.y;
                outputs["witness_prime"] = dp.witness_prime;
                list.push_back(cluster_report(dp.extended));
                list.push_back(cluster_report(dp.chained));
            } else {
                for (const auto& c : many_distinct_product_clusters(members, k, v))
                    list.push_back(cluster_report(c));
            }
            for (auto& c : list)
                c["hook_product"] = decimal(multiset_product(c["hooks"].get<IntMultiset>()));
            outputs["weight"] = list.front()["members"].front().get<Partition>().weight();
            outputs["clusters"] = list;
        };
    });

    std::int64_t n = 0;
    int ell = 2;
    auto* t2_cmd = app.add_subcommand("theorem2", "k disjoint sets of ell equal-hook partitions of n");
    t2_cmd->add_option("--n", n)->required();
    t2_cmd->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    t2_cmd->add_option("--ell", ell)->required()->check(CLI::PositiveNumber);
    t2_cmd->callback([&] {
        action = [&] {
            inputs["n"] = n;
            inputs["k"] = k;
            inputs["ell"] = ell;
            const Verification v = paranoid ? Verification::Paranoid : Verification::Certificate;
            const TheoremTwoResult r = theorem_two(n, k, ell, v);
            outputs["plan"] = r.plan;
            outputs["threshold"] = r.threshold;
            outputs["residue"] = r.residue;
            json list = json::array();
            for (const auto& c : r.clusters) {
                json cj = cluster_report(c);
                cj["hook_product"] = decimal(multiset_product(c.shared_hooks));
                list.push_back(std::move(cj));
            }
            outputs["clusters"] = list;
        };
    });

    int census_n = 0;
    std::string out_path;
    auto* census_cmd = app.add_subcommand("census", "group all partitions of n by hooks and degree");
    census_cmd->add_option("--n", census_n)->required()->check(CLI::NonNegativeNumber);
    census_cmd->add_option("--out", out_path,
                           "write hook groups as JSON lines; degrees go to <out>.degrees.csv");
    census_cmd->callback([&] {
        action = [&] {
            inputs["n"] = census_n;
            const WeightCensus c = census(census_n);
            outputs["partitions"] = c.partitions.size();
            outputs["hook_groups"] = c.hook_groups.size();
            outputs["degree_groups"] = c.degree_groups.size();
            outputs["m_of_n"] = c.m_of_n;
            json clusters = json::array();
            for (const auto& g : c.hook_groups)
                if (g.members.size() > 1)
                    clusters.push_back(g.members);
            outputs["clusters"] = clusters;
            if (!out_path.empty()) {
                std::ofstream groups(out_path);
                std::ofstream degrees(out_path + ".degrees.csv");
                if (!groups || !degrees)
                    throw UsageError("cannot write " + out_path);
                write_census_jsonl(groups, c);
                write_degree_csv(degrees, c);
                outputs["files"] = {out_path, out_path + ".degrees.csv"};
            }
        };
    });

    int max_n = 0;
    auto* mofn_cmd = app.add_subcommand("m-of-n", "largest number of equal degrees, n = 1..max");
    mofn_cmd->add_option("--max", max_n)->required()->check(CLI::NonNegativeNumber);
    mofn_cmd->callback([&] {
        action = [&] {
            inputs["max"] = max_n;
            json table = json::array();
            for (int i = 1; i <= max_n; ++i)
                table.push_back({{"n", i}, {"m", m_of_n(i)}});
            outputs["table"] = table;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    const auto start = std::chrono::steady_clock::now();
    try {
        action();
    } catch (const UsageError& e) {
        std::cerr << "hookc " << command << ": " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        status = "error";
        outputs["error"] = std::string(to_string(e.code()));
        outputs["detail"] = e.detail();
        code = 1;
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    json report{{"command", command},
                {"inputs", inputs},
                {"outputs", outputs},
                {"status", status},
                {"elapsed", elapsed}};
    std::cout << report.dump(2) << '\n';
    return code;
}
