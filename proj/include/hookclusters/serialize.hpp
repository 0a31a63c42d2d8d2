#pragma once

#include <iosfwd>
#include <string_view>

#include <json.hpp>

#include "hookclusters/cluster.hpp"
#include "hookclusters/datum.hpp"
#include "hookclusters/driver.hpp"
#include "hookclusters/envelope.hpp"
#include "hookclusters/oracle.hpp"

namespace hc {

using json = nlohmann::json;

/// "4,2^2,1" -> (4,2,2,1). "a^k" repeats a k times; "" and "()" are empty.
/// Syntax errors raise std::invalid_argument; invalid parts raise Error.
Partition parse_partition(std::string_view text);

void to_json(json& j, const Partition& p);
void from_json(const json& j, Partition& p);

/// {"value": count} with decimal string keys.
void to_json(json& j, const IntMultiset& m);
void from_json(const json& j, IntMultiset& m);

void to_json(json& j, const Characteristic& c);
void from_json(const json& j, Characteristic& c);

/// {"characteristic", "remainder", "extensions", "period"}; period is
/// optional on input and must match the characteristic's height.
void to_json(json& j, const PartitionDatum& d);
void from_json(const json& j, PartitionDatum& d);

/// {"members", "hooks", "certificate", "period"?, "witness_prime"?}
void to_json(json& j, const Cluster& c);
void from_json(const json& j, Cluster& c);

void to_json(json& j, const EnvelopeDecomposition& d);
void to_json(json& j, const DriverPlan& p);

std::string decimal(const BigInt& v);

/// One line per hook group: {"n", "hooks", "members"}.
void write_census_jsonl(std::ostream& os, const WeightCensus& c);

/// "n,degree,multiplicity" with a header line.
void write_degree_csv(std::ostream& os, const WeightCensus& c);

} // namespace hc
