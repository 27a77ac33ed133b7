#pragma once

// Rendering of analysis results for the command-line front end.  JSON keys
// keep insertion order so identical runs give byte-identical documents.

#include <string>

#include <json.hpp>

#include "ccc/balance.hpp"
#include "ccc/iwe.hpp"
#include "ccc/oracle.hpp"

namespace ccc::report {

using Json = nlohmann::ordered_json;

enum class Format { Table, Json, Csv };

Json partition_json(const WPartition& p, Dimension n);
Json verdict_json(const BalanceVerdict& v);
Json verification_json(const VerificationReport& r);
Json route_json(const PathTrace& path, const Vertex& from, const Vertex& to, Dimension n);

std::string render_verdict(const BalanceVerdict& v, Format format);
std::string render_verification(const VerificationReport& r, Format format);
std::string render_route(const PathTrace& path, const Vertex& from, const Vertex& to,
                         Dimension n, Format format);
std::string render_partition(const WPartition& p, Dimension n, Format format);

std::string csv_field(const std::string& s);

}  // namespace ccc::report
