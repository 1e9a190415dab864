#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "t5census/bounds.hpp"
#include "t5census/census.hpp"
#include "t5census/constructions.hpp"
#include "t5census/detection.hpp"

namespace t5census {

enum class ReportFormat { Json, Csv, Text };

ReportFormat parse_format(const std::string& name);  // json|csv|text

// Flag/value pairs echoed verbatim into every report under "config".
using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

// One run's output. body keys are emitted sorted (JSON object order), CSV
// uses the fixed column list, and the text form appends one line per claim
// string. When csv_rows is set the CSV has one line per row instead of a
// single row drawn from body.
struct Report {
  nlohmann::json body;
  std::vector<std::string> csv_columns;
  std::vector<nlohmann::json> csv_rows;
  std::vector<std::string> claims;
};

// Deterministic: identical Report values serialize byte-identically.
std::string emit_report(const Report& r, ReportFormat f);

nlohmann::json partition_to_json(const OrderedPartition& p);

Report check_report(const TripleSystem& h, int sweep_cap, const ConfigEcho& cfg);
Report partition_report(const TripleSystem& h, const Thresholds& t, std::size_t witness_cap,
                        int sweep_cap, const ConfigEcho& cfg);
Report census_report(const CensusReport& r, bool cached, const ConfigEcho& cfg, bool timings);
Report extremal_report(const ExtremalResult& r, const ConfigEcho& cfg, bool timings);
Report entropy_report(const EntropyFactsResult& r, const ConfigEcho& cfg);
Report chernoff_report(std::uint64_t m, double p, double a, double bound,
                       const std::optional<ChernoffEmpirical>& empirical, const ConfigEcho& cfg);
Report matching_report(int trials, int max_n, std::uint64_t seed, bool all_hold,
                       std::uint64_t worst_edges, std::uint64_t worst_size, const ConfigEcho& cfg);
Report matchcount_report(const MatchCountResult& r, const ConfigEcho& cfg);
Report triangle_report(int m, int l, std::uint64_t seed, std::uint64_t count, double expected,
                       bool within, const ConfigEcho& cfg);
Report lowdense_report(const LowerDensityReport& r, const ConfigEcho& cfg);
Report sbound_report(const SBoundResult& r, const std::optional<u128>& s_n, const ConfigEcho& cfg);
Report hierarchy_report(const Thresholds& t, const HierarchyResult& r, const ConfigEcho& cfg);

}  // namespace t5census
